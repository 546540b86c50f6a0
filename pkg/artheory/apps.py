from django.apps import AppConfig


class ArtheoryConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'artheory'
