"""
Pytest wiring: configure Django from the project settings before collection.
"""

import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'esoteric_rmatrix.settings')
django.setup()
