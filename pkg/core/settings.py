"""
Django settings for the r-graph imbalance toolkit.

Only the management-command surface is used: no database, no URL routing,
no templates. Every knob is read from the environment through decouple.
"""

from pathlib import Path
from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-rgraphs-local-only')

DEBUG = config('DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'apps.rgraphs',
]

DATABASES = {}

USE_TZ = True


# r-graph services

# Enumerations producing more graphs than this are refused.
RGRAPH_ENUMERATION_HARD_CAP = config('RGRAPH_ENUMERATION_HARD_CAP', default=10_000_000, cast=int)

# 1 keeps the exhaustive oracle in-process.
RGRAPH_ORACLE_WORKERS = config('RGRAPH_ORACLE_WORKERS', default=1, cast=int)

RGRAPH_RANDOM_SEED = config('RGRAPH_RANDOM_SEED', default=20100823, cast=int)


# Logging

LOG_LEVEL = config('LOG_LEVEL', default='WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps.rgraphs': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
