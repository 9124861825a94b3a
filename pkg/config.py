"""
Application configuration module.
Loads environment variables and provides config classes for different environments.
"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Config:
    """Base configuration with common settings."""

    # Census
    MPS_SEARCH_BUDGET = int(os.getenv('MPS_SEARCH_BUDGET', 10_000_000))
    MPS_REPRESENTATIVE_CAP = int(os.getenv('MPS_REPRESENTATIVE_CAP', 10))
    MPS_CHECKPOINT_INTERVAL = int(os.getenv('MPS_CHECKPOINT_INTERVAL', 10_000))
    MPS_RANDOM_ALGORITHM = os.getenv('MPS_RANDOM_ALGORITHM', 'PCG64')  # PCG64 | MT19937 | Philox | SFC64
    MPS_MAX_WORKERS = int(os.getenv('MPS_MAX_WORKERS', os.cpu_count() or 1))

    # HTTP API limits
    MPS_MAX_API_ORDER = int(os.getenv('MPS_MAX_API_ORDER', 343))
    MAX_CONTENT_LENGTH = int(os.getenv('MAX_CONTENT_LENGTH', 4 * 1024 * 1024))  # 4MB

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FORMAT = os.getenv('LOG_FORMAT', 'json')  # json | text


class DevelopmentConfig(Config):
    """Development environment configuration."""
    DEBUG = True
    TESTING = False


class ProductionConfig(Config):
    """Production environment configuration."""
    DEBUG = False
    TESTING = False


class TestingConfig(Config):
    """Testing environment configuration."""
    TESTING = True
    DEBUG = True
    MPS_SEARCH_BUDGET = 100_000
    MPS_MAX_WORKERS = 1
    LOG_LEVEL = 'WARNING'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
