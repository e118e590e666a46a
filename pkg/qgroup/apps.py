from django.apps import AppConfig


class QgroupConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'qgroup'
    verbose_name = 'Quantum group representations'
