"""Consistent and configurable logging across the project."""

import datetime
import logging
import os
import re
import sys
from typing import Optional

import colorlog


# Constants
LOGGER = None


def set_logging_level(level: int = logging.INFO):
    """Set the level of the shared logger, creating it if necessary."""
    global LOGGER
    if LOGGER is None:
        get_logger(level)
    else:
        LOGGER.setLevel(level)
        for handler in LOGGER.handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(level)


def add_log_file(log_folder: str) -> str:
    """Attach a plain-text file handler writing debug output to `log_folder`.

    Returns:
        Path to the log file.
    """
    logger = get_logger()
    os.makedirs(log_folder, exist_ok=True)
    timestamp = (
        str(datetime.datetime.today())
        .split(".")[0]
        .replace("-", "")
        .replace(":", "")
        .replace(" ", "-")
    )
    log_path = os.path.join(log_folder, f"sasakijoin_{timestamp}.log")

    file_handler = logging.FileHandler(log_path)
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(_basic_formatter())
    logger.addHandler(file_handler)
    logger.setLevel(logging.DEBUG)

    logger.info(f"Writing log to {log_path}")
    return log_path


def get_logger(
    level: Optional[int] = None, log_folder: Optional[str] = None
) -> logging.Logger:
    """Get `logger` instance, to be used in place of `print()`.

    The logger prints the specified level of output to standard error, so
    that artifacts written to standard output stay clean. If `log_folder` is
    given, debug output is also saved to a file in that folder.
    """
    global LOGGER
    if LOGGER:
        if level is not None:
            set_logging_level(level)
        if log_folder is not None:
            add_log_file(log_folder)
        return LOGGER

    if level is None:
        level = logging.INFO

    # Create logger
    logger = colorlog.getLogger("sasakijoin")
    logger.setLevel(level)
    logger.propagate = False

    # Add stream handler
    stream_handler = colorlog.StreamHandler(stream=sys.stderr)
    stream_handler.setLevel(level)
    stream_handler.setFormatter(
        colorlog.ColoredFormatter(_COLORLOG_FORMAT, datefmt=_DATEFMT)
    )
    logger.addHandler(stream_handler)

    # Store as global variable
    LOGGER = logger

    if log_folder is not None:
        add_log_file(log_folder)

    return LOGGER


# Common configuration
_COLORLOG_FORMAT = (
    "\033[1;34m%(name)s\033[0m: "
    "%(log_color)s%(levelname)-8s\033[0m "
    "%(asctime)s - %(funcName)s - %(message)s"
)
_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _basic_formatter() -> logging.Formatter:
    basic_format = re.sub(r"\x1b\[[0-9;,]*m", "", _COLORLOG_FORMAT).replace(
        "%(log_color)s", ""
    )
    return logging.Formatter(basic_format, datefmt=_DATEFMT)
