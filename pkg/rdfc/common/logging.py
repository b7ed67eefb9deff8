"""Logging setup for the command-line front end."""
import logging

from rich.console import Console
from rich.logging import RichHandler


def configure_logging(debug: bool = False, console: Console | None = None) -> None:
    """Route library logs through rich.

    Args:
        debug: If True, emit DEBUG records (intermediate quantities); otherwise
            only warnings and errors are shown.
        console: Console to render on; defaults to stderr.
    """
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=debug,
        markup=False,
        rich_tracebacks=debug,
    )
    root = logging.getLogger("rdfc")
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if debug else logging.WARNING)
    root.propagate = False
