"""Monochromatic hedgehogs in coloured complete hypergraphs."""

from ._hedgehog import *  # noqa: F401,F403
from ._hedgehog import HedgehogError, cli

__all__ = [name for name in dir() if not name.startswith("_")]
