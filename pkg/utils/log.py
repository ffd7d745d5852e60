"""Logging setup for the command-line entry point."""
import logging

DEFAULT_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

_configured = False


def setup_logging(level=logging.WARNING, fmt=DEFAULT_FORMAT):
    """Configure the root logger once; later calls only change the level."""
    global _configured
    root = logging.getLogger()
    if not _configured:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(fmt))
        root.addHandler(handler)
        _configured = True
    root.setLevel(level)
    return root


def level_from_verbosity(verbose, quiet=False):
    """Map ``-v`` counts to logging levels (``--quiet`` wins)."""
    if quiet:
        return logging.ERROR
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING
