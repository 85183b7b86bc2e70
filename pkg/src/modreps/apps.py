from django.apps import AppConfig


class ModrepsConfig(AppConfig):
    name = "modreps"
    verbose_name = "Module representations"
