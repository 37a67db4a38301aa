"""
URL configuration for the schur project.

Only the pgroups API is mounted; there is no admin site because nothing is
persisted.
"""
from django.urls import path, include

urlpatterns = [
    path('', include('pgroups.urls')),
]
