"""
Verification URL patterns.
"""

from django.urls import path
from .views import CheckRunView

urlpatterns = [
    path('', CheckRunView.as_view(), name='check-run'),
]
