from django.apps import AppConfig


class CtquiverConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ctquiver'
