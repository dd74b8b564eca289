"""Sets up logging for kaucher.

Library modules log to children of the ``kaucher`` logger (``kaucher.linprog``, ``kaucher.division``, ...).
By default only errors are shown; set ``KAUCHER_DEBUG=1`` (or a comma separated list of logger names)
to get debug output.
"""
import logging
import os
from typing import Optional

logger = logging.getLogger("kaucher")
log_handler: Optional[logging.Handler] = None


def set_log_level(loggers=["kaucher"], level=logging.DEBUG):
    """set log level to debug"""
    for logger in loggers:
        logging.getLogger(logger).setLevel(level)


def set_log_level_debug(loggers=["kaucher"]):
    """set log level to debug"""
    set_log_level(loggers, logging.DEBUG)


def set_log_level_info(loggers=["kaucher"]):
    """set log level to info"""
    set_log_level(loggers, logging.INFO)


def set_log_level_warning(loggers=["kaucher"]):
    """set log level to warning"""
    set_log_level(loggers, logging.WARNING)


def set_log_level_error(loggers=["kaucher"]):
    """set log level to exception/error"""
    set_log_level(loggers, logging.ERROR)


def reset():
    """Reset configuration of logging (i.e. remove the default handler)"""
    global log_handler
    if log_handler is not None:
        logging.getLogger("kaucher").removeHandler(log_handler)
        log_handler = None


def _set_log_level(conf, level):
    if conf:
        if conf.startswith("kaucher"):
            set_log_level(conf.split(","), level=level)
        else:
            set_log_level(level=level)


def setup():
    """Setup logging, honouring the ``KAUCHER_DEBUG`` environment variable.

    This function is called when kaucher is imported. Call :func:`reset` and this function again
    to re-apply the settings.
    """
    global log_handler

    log_handler = logging.StreamHandler()
    formatter = logging.Formatter("%(levelname)s:%(threadName)s:%(name)s:%(message)s")
    log_handler.setFormatter(formatter)
    logger.addHandler(log_handler)

    logging.getLogger("kaucher").setLevel(logging.ERROR)
    DEBUG_MODE = os.environ.get("KAUCHER_DEBUG", "")
    if DEBUG_MODE:
        _set_log_level(DEBUG_MODE, logging.DEBUG)


setup()
