# File: config/config.py

import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    """Global configuration class"""

    # Decision tolerances
    TOLERANCE = float(os.getenv('FREERAD_TOL', '1e-9'))
    RADIAL_TOLERANCE = float(os.getenv('FREERAD_RADIAL_TOL', '1e-12'))
    CONDITION_LIMIT = float(os.getenv('FREERAD_CONDITION_LIMIT', '1e6'))

    # Cayley ball enumeration
    BALL_CAP = int(os.getenv('FREERAD_BALL_CAP', '200000'))

    # Logging
    LOG_LEVEL = os.getenv('FREERAD_LOG_LEVEL', 'INFO')

class DevelopmentConfig(Config):
    LOG_LEVEL = os.getenv('FREERAD_LOG_LEVEL', 'DEBUG')

class TestingConfig(Config):
    LOG_LEVEL = 'WARNING'

class ProductionConfig(Config):
    LOG_LEVEL = os.getenv('FREERAD_LOG_LEVEL', 'WARNING')

config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': Config
}
