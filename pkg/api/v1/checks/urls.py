"""
API v1 Checks URL patterns.
"""

from django.urls import path, include

urlpatterns = [
    path('', include('verification.urls')),
]
