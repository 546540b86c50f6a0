import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'fdcluster.settings')
django.setup()
