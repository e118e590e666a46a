"""
Matrix URL patterns.
"""

from django.urls import path
from .views import StandardRMatrixView, EsotericRMatrixView

urlpatterns = [
    path('rs/', StandardRMatrixView.as_view(), name='matrix-standard'),
    path('rfg/', EsotericRMatrixView.as_view(), name='matrix-esoteric'),
]
