"""
ASGI entry point for the schur project.

Serves the read-only group-report API under an ASGI server.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'schur.settings')

application = get_asgi_application()
