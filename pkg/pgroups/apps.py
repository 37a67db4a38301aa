from django.apps import AppConfig


class PgroupsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'pgroups'
    verbose_name = 'Finite p-groups and Schur multipliers'
