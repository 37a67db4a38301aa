"""Configure Django before pytest collects the pgroups test modules."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'schur.settings')
django.setup()
