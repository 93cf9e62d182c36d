"""Logging configuration for the Riordan toolkit."""
import logging
import logging.handlers
import os
import sys
from typing import Optional

from .config import settings


def setup_logger(
    name: str,
    log_file: Optional[str] = None,
    level: Optional[str] = None,
) -> logging.Logger:
    """Set up a logger with a stderr console handler and an optional file handler."""

    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, (level or settings.log_level).upper()))

    # Prevent duplicate handlers
    if logger.handlers:
        return logger

    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'
    )
    simple_formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s - %(message)s'
    )

    # stdout carries command output only
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, (level or settings.log_level).upper()))
    console_handler.setFormatter(simple_formatter)
    logger.addHandler(console_handler)

    if log_file or settings.log_file:
        log_path = log_file or settings.log_file

        if os.path.dirname(log_path):
            os.makedirs(os.path.dirname(log_path), exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            log_path, maxBytes=10485760, backupCount=5  # 10MB files, keep 5
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger


# Global logger instances
main_logger = setup_logger("riordan")
algebra_logger = setup_logger("riordan.algebra")
oeis_logger = setup_logger("riordan.oeis")
cli_logger = setup_logger("riordan.cli")
verify_logger = setup_logger("riordan.verify")
