"""Graded MCM modules over four general points in P^2 and their D4 quiver side."""

from .linalg import DEFAULT_PRIME, prime, set_prime

__all__ = ["DEFAULT_PRIME", "prime", "set_prime"]
__version__ = "0.1.0"
