from django.apps import AppConfig


class TwistingConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'twisting'
    verbose_name = 'R-matrices and twists'
