# Generated in setup.py

git_revision = None
version = '0.1.0'
