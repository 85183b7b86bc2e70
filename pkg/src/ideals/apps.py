from django.apps import AppConfig


class IdealsConfig(AppConfig):
    name = "ideals"
    verbose_name = "Monomial ideals"
