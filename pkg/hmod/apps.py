from django.apps import AppConfig


class HmodConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hmod'
