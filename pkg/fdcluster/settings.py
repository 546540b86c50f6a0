from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='fdcluster-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='', cast=Csv())


# Application definition

INSTALLED_APPS = [
    'exactlin',
    'quiver',
    'hmod',
    'triplecat',
    'artheory',
    'tilting',
    'ctquiver',
    'cli',
]

# Everything is computed in memory; nothing is persisted.
DATABASES = {}

USE_I18N = False

USE_TZ = True


# Computation

# Ground field F_p. Every dimension computed here is field independent for the
# algebras involved, so any prime works; 32003 keeps products inside int64.
FIELD_PRIME = config('FIELD_PRIME', default=32003, cast=int)

# Refuse mutation classes larger than this (guards against non-Dynkin input)
MAX_MUTATION_CLASS = config('FD_CLUSTER_MAX_CLASS', default=100000, cast=int)


# Logging

LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

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
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in INSTALLED_APPS
    },
}
