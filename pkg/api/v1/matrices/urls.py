"""
API v1 Matrices URL patterns.
"""

from django.urls import path, include

urlpatterns = [
    path('', include('twisting.urls')),
]
