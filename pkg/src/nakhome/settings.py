"""
Django settings for nakhome project.

The project has no database, no URL routing and no web server; Django is used
for its settings layer, its management commands and its test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

from decouple import config
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config("DJANGO_SECRET_KEY", default="nakhome-local-development-key")

DEBUG = config("DJANGO_DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = []


# Computation config

# complex-size guard for the chain-complex oracle: basis vectors summed over all
# homological indices and degrees of one constructed complex
NAK_MAX_CELLS = config("NAK_MAX_CELLS", default=10_000_000, cast=int)
# gf2, q, or gfp:<p>
NAK_DEFAULT_FIELD = config("NAK_DEFAULT_FIELD", default="gf2", cast=str)
NAK_WORKERS = config("NAK_WORKERS", default=4, cast=int)
NAK_LOG_LEVEL = config("NAK_LOG_LEVEL", default="WARNING", cast=str)


# Application definition

INSTALLED_APPS = [
    # my-apps
    "ideals",
    "simplicial",
    "modreps",
    "formulas",
    "commando",
]

DATABASES = {}


# Logging
# https://docs.djangoproject.com/en/5.0/topics/logging/

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "nakayama": {
            "format": "[{levelname}] {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "nakayama",
        },
    },
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": NAK_LOG_LEVEL,
            "propagate": False,
        }
        for app in ["helpers", *INSTALLED_APPS]
    },
}


USE_TZ = True
