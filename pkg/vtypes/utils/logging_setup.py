import logging

from rich.console import Console
from rich.logging import RichHandler


def configure_logging(level="WARNING"):
    """Route the vtypes loggers to stderr through rich."""
    root = logging.getLogger("vtypes")
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)
    root.propagate = False
    return root
