from django.apps import AppConfig


class TiltingConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'tilting'
