# file: src/disk_rigidity/logging_utils.py
"""Logging utilities with colour-coded verdicts."""

import logging
import os


class ColorFormatter(logging.Formatter):
    """
    A logging formatter that colours records by level, or by the verdict
    style attached through the ``levelname_custom`` extra.
    """
    grey = "\x1b[90m"
    green = "\x1b[32m"
    yellow = "\x1b[33m"
    red = "\x1b[31m"
    bold_red = "\x1b[31;1m"
    blue = "\x1b[34m"
    white = "\x1b[97m"
    reset = "\x1b[0m"

    FORMATS = {
        logging.DEBUG: grey + "%(message)s" + reset,
        logging.INFO: white + "%(message)s" + reset,
        logging.WARNING: yellow + "Warning: %(message)s" + reset,
        logging.ERROR: red + "Error: %(message)s" + reset,
        logging.CRITICAL: bold_red + "Critical: %(message)s" + reset,
        "STEP": blue + "%(message)s" + reset,
        "PASS": green + "PASS %(message)s" + reset,
        "FAIL": red + "FAIL %(message)s" + reset,
        "NOTE": yellow + "%(message)s" + reset,
    }

    def format(self, record: logging.LogRecord) -> str:
        log_fmt = self.FORMATS.get(
            getattr(record, "levelname_custom", record.levelno),
            self.FORMATS.get(record.levelno),
        )
        return logging.Formatter(log_fmt).format(record)


def get_logger(name: str) -> logging.Logger:
    """
    Configures and returns a logger writing coloured records to stderr.
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        level = os.environ.get("DISKRIG_LOG_LEVEL", "INFO").upper()
        logger.setLevel(getattr(logging, level, logging.INFO))
        handler = logging.StreamHandler()
        handler.setFormatter(ColorFormatter())
        logger.addHandler(handler)
        logger.propagate = False
    return logger


def set_verbosity(logger: logging.Logger, verbose: bool = False, quiet: bool = False) -> None:
    if verbose:
        logger.setLevel(logging.DEBUG)
    elif quiet:
        logger.setLevel(logging.WARNING)


def log_step(logger: logging.Logger, message: str, *args, **kwargs):
    """Logs a pipeline step in blue."""
    logger.info(message, *args, extra={"levelname_custom": "STEP"}, **kwargs)


def log_pass(logger: logging.Logger, message: str, *args, **kwargs):
    """Logs a passing check in green."""
    logger.info(message, *args, extra={"levelname_custom": "PASS"}, **kwargs)


def log_fail(logger: logging.Logger, message: str, *args, **kwargs):
    """Logs a failing check in red (at INFO: a failed condition is a result, not an error)."""
    logger.info(message, *args, extra={"levelname_custom": "FAIL"}, **kwargs)


def log_note(logger: logging.Logger, message: str, *args, **kwargs):
    """Logs an audit note or fallback in yellow."""
    logger.info(message, *args, extra={"levelname_custom": "NOTE"}, **kwargs)


logger = get_logger("disk_rigidity")
