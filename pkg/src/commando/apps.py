from django.apps import AppConfig


class CommandoConfig(AppConfig):
    name = "commando"
    verbose_name = "Command-line jobs and verification"
