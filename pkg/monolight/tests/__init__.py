from ..logs import configure_logging


configure_logging(verbose=False)
