"""
Logging utilities with ANSI-coloured output for the blocksym command line.

Library modules log through the shared ``blocksym`` logger; only the CLI
prints results. Colours depend on the record level, and a few named accents
are available to ``color_fmt``/``color_print`` for report lines.

Classes:
    ANSILoggerFormatter: Formatter that colours a record by its level.

Functions:
    color_fmt: Wraps message parts in the colour of a level or accent name.
    color_print: Prints a coloured message and flushes stdout.
    set_verbosity: Switches the shared logger between DEBUG, INFO and WARNING.
"""

import sys
import logging

RESET = "\033[0m"
COLORS = {
    "DEBUG": "\033[34m",  # Blue
    "INFO": "\033[32m",  # Green
    "WARNING": "\033[33m",  # Yellow
    "ERROR": "\033[31m",  # Red
    "CRITICAL": "\033[35m",  # Magenta

    "ORANGE": "\033[38;5;214m",
    "CYAN": "\033[36m",
    "DARK_GRAY": "\033[90m",
    "LIGHT_BLUE": "\033[94m",
    "LIGHT_GREEN": "\033[92m",
    "LIGHT_YELLOW": "\033[93m",
    "LIGHT_RED": "\033[91m",
    "RESET": RESET,
}


class ANSILoggerFormatter(logging.Formatter):
    """
    Formats records as ``LEVEL : message`` and colours the whole line by level.
    """

    def format(self, record):
        """
        Args:
            record (logging.LogRecord): The record to format.

        Returns:
            str: The coloured log line.
        """
        log_color = COLORS.get(record.levelname, RESET)
        formatted_message = f"{record.levelname.ljust(10)} : {super().format(record)}"
        return f"{log_color}{formatted_message}{RESET}"


stream_handler = logging.StreamHandler(sys.stdout)
stream_handler.setFormatter(ANSILoggerFormatter())

logger = logging.getLogger("blocksym")
logger.setLevel(logging.INFO)
logger.addHandler(stream_handler)
logger.propagate = False


def set_verbosity(verbose: bool = False, quiet: bool = False) -> None:
    """
    Sets the level of the shared logger.

    Args:
        verbose (bool): Log debug records (instance sizes, cache use, estimates).
        quiet (bool): Only log warnings and errors. Ignored when ``verbose`` is set.
    """
    if verbose:
        logger.setLevel(logging.DEBUG)
    elif quiet:
        logger.setLevel(logging.WARNING)
    else:
        logger.setLevel(logging.INFO)


def color_fmt(*args, levelname: str = "", sep=" "):
    """
    Formats a message with the colour of a level or accent name.

    Args:
        *args: Message parts, joined with ``sep``.
        levelname (str): A key of ``COLORS`` such as 'INFO' or 'LIGHT_BLUE'.
        sep (str): Separator between the parts.

    Returns:
        str: The coloured message.
    """
    return f"{COLORS.get(levelname.upper(), RESET)}{sep.join(str(a) for a in args)}{RESET}"


def color_print(*args, levelname: str = "", sep=" ", end="\n"):
    """Prints ``color_fmt(*args)`` and flushes."""
    print(color_fmt(*args, levelname=levelname, sep=sep), end=end, flush=True)


__all__ = (
    'logger',
    'COLORS',
    'RESET',
    'color_fmt',
    'color_print',
    'set_verbosity',
)
