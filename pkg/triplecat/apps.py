from django.apps import AppConfig


class TriplecatConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'triplecat'
