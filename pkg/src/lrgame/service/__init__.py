"""HTTP service over the engine: `uvicorn lrgame.service:app`."""

from .app import app, create_app

__all__ = ["app", "create_app"]
