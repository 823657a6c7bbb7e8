import logging
from logging.config import dictConfig


def setup_loghandlers(level=None):
    # Setup logging for django_zeitlin if not already configured
    logger = logging.getLogger('django_zeitlin')
    if not logger.handlers:
        dictConfig({
            "version": 1,
            "disable_existing_loggers": False,

            "formatters": {
                "django_zeitlin": {
                    "format": "[%(levelname)s]%(asctime)s PID %(process)d: %(message)s",
                    "datefmt": "%Y-%m-%d %H:%M:%S",
                },
            },

            "handlers": {
                "django_zeitlin": {
                    "level": "DEBUG",
                    "class": "logging.StreamHandler",
                    "formatter": "django_zeitlin"
                },
            },

            "loggers": {
                "django_zeitlin": {
                    "handlers": ["django_zeitlin"],
                    "level": level or "DEBUG"
                }
            }
        })
    elif level:
        logger.setLevel(level)
    return logger
