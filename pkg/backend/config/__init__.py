from .settings import settings, get_settings, Settings
