"""
Django settings for the schur project.

The project hosts the pgroups app: a Schur multiplier and p-group invariant
library, its verification commands, and a small read-only JSON API.

Every value that can change between machines is read with python-decouple, so
it can come from the environment or from a ``.env`` file in the project root.
"""
from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='schur-development-only-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='*', cast=Csv())


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',

    # connected apps
    'pgroups',
    'rest_framework',
    'corsheaders'
]

MIDDLEWARE = [
    'corsheaders.middleware.CorsMiddleware',
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'schur.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'schur.wsgi.application'


# Database
# Nothing is persisted: reports are recomputed on demand.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


STATIC_URL = 'static/'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


CORS_ALLOW_ALL_ORIGINS = True


# The API is read-only and anonymous.
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': ['rest_framework.renderers.JSONRenderer'],
}


# Computation limits and campaign defaults
PGROUPS = {
    # full enumeration of G is refused above this many elements
    'CENTER_ENUMERATION_CAP': config('PGROUPS_CENTER_CAP', default=10_000_000, cast=int),
    # explicit multiplication tables (pcp_from_multiplication, coset tables)
    'TABLE_CAP': config('PGROUPS_TABLE_CAP', default=10_000, cast=int),
    # bar-resolution homology oracle
    'ORACLE_CAP': config('PGROUPS_ORACLE_CAP', default=32, cast=int),
    'THREADS': config('PGROUPS_THREADS', default=1, cast=int),
    'FAST_PRIMES': config('PGROUPS_FAST_PRIMES', default='3,5,7', cast=Csv(int)),
    'FULL_PRIMES': config('PGROUPS_FULL_PRIMES', default='3,5,7,11,13,17', cast=Csv(int)),
    # primes at or above this are tagged slow and skipped by --fast
    'SLOW_PRIME': config('PGROUPS_SLOW_PRIME', default=17, cast=int),
}


# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'pgroups': {
            'handlers': ['console'],
            'level': config('PGROUPS_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    },
}
