"""
WSGI entry point serving the matrix and check endpoints.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'esoteric_rmatrix.settings')

application = get_wsgi_application()
