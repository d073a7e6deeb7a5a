"""FastAPI service wrapping the certification toolkit."""

from .app import app  # noqa: F401
