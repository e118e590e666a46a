"""
API v1 URL configuration.
"""

from django.urls import path, include

urlpatterns = [
    path('matrices/', include('api.v1.matrices.urls')),

    path('checks/', include('api.v1.checks.urls')),
]
