from django.apps import AppConfig


class QuiverConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'quiver'
