"""
URL configuration for the esoteric_rmatrix project.

Everything is served under the versioned API prefix.
"""
from django.urls import path, include

urlpatterns = [
    # API routes
    path('api/v1/', include('api.v1.urls')),
]
