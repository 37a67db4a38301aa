"""
WSGI entry point for the schur project.

Used by gunicorn: ``gunicorn schur.wsgi``.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'schur.settings')

application = get_wsgi_application()
