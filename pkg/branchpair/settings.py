"""
Django settings for the branchpair project.

The project has no web surface and no database: Django supplies the
management-command CLI, settings and logging configuration.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv("SECRET_KEY", "branchpair-cli-only-no-sessions")

DEBUG = os.getenv("DEBUG", "False") == "True"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "goodpairs",
]

DATABASES = {}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Logging goes to stderr so command output (CLAIM/STATUS/CERT/STAT lines)
# stays machine-parseable on stdout
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        "goodpairs": {
            "handlers": ["console"],
            "level": os.getenv("BRANCHPAIR_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}


# Search budgets
BRANCHPAIR_BUDGET_SECS = float(os.getenv("BRANCHPAIR_BUDGET_SECS", 600))
BRANCHPAIR_BUDGET_INSTANCES = int(os.getenv("BRANCHPAIR_BUDGET_INSTANCES", 1000))

# Oracle limits (soft order limit and enumeration cap)
BRANCHPAIR_ORACLE_MAX_VERTICES = int(os.getenv("BRANCHPAIR_ORACLE_MAX_VERTICES", 14))
BRANCHPAIR_ORACLE_MAX_BRANCHINGS = int(os.getenv("BRANCHPAIR_ORACLE_MAX_BRANCHINGS", 20_000_000))

# Constructive results are cross-checked by the oracle up to this order
BRANCHPAIR_CROSSVAL_ORACLE_MAX_N = int(os.getenv("BRANCHPAIR_CROSSVAL_ORACLE_MAX_N", 10))

# Instance counts of the sampled reproduction claims
BRANCHPAIR_MAINX_SAMPLES = int(os.getenv("BRANCHPAIR_MAINX_SAMPLES", 1000))
BRANCHPAIR_COBIPARTITE_SAMPLES = int(os.getenv("BRANCHPAIR_COBIPARTITE_SAMPLES", 500))
BRANCHPAIR_N6_SAMPLES = int(os.getenv("BRANCHPAIR_N6_SAMPLES", 1_000_000))

# Worker processes for sharded enumeration and sampling
BRANCHPAIR_JOBS = int(os.getenv("BRANCHPAIR_JOBS", 1))
