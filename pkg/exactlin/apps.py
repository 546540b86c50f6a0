from django.apps import AppConfig


class ExactlinConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exactlin'
