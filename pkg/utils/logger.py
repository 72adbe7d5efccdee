# File: utils/logger.py
import logging
import sys

ROOT = 'freerad'
FORMAT = '[%(levelname)s] %(message)s'

# Between INFO and WARNING; renders as "[OK] ..."
OK = 25
logging.addLevelName(OK, 'OK')


def get_logger(name):
    """Named logger below the project root logger"""
    return logging.getLogger(f"{ROOT}.{name}")


def configure_logging(level='INFO', stream=None):
    """Attach a single tagged handler to the project logger (diagnostics go to stderr)"""
    logger = logging.getLogger(ROOT)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def log_ok(logger, message):
    logger.log(OK, message)
