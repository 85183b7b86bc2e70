from django.apps import AppConfig


class SimplicialConfig(AppConfig):
    name = "simplicial"
    verbose_name = "Simplicial complexes"
