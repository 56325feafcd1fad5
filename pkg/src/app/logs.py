# Convfix Lab
# Logging setup for the command line
# October 2026

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def setup_logging(verbose: bool = False) -> None:
    """
    Configure the root logger once.

    Library modules only log at DEBUG, so without --verbose the lab is quiet
    apart from warnings. Logs go to stderr; stdout carries the run totals.
    """
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
