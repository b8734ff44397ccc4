"""Experiments on representing odd integers as a prime plus floor-power powers of two."""

__version__ = "0.1.0"

from romanoff.kernels import BACKEND

__all__ = ["BACKEND", "__version__"]
