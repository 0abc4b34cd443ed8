import logging
import sys

import structlog


def configure_logging(verbose: bool = False) -> None:
    """
    Send our structured logs to stderr as ``key=value`` lines.

    stdout is reserved for reports, so nothing logged here can change a
    report.

    Keyword Args:
        verbose: if ``True`` log at ``DEBUG``, otherwise only ``WARNING`` and up
    """
    level = logging.DEBUG if verbose else logging.WARNING
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.KeyValueRenderer(key_order=['level', 'event'], sort_keys=True),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
