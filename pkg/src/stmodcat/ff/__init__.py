"""Exact linear algebra over small finite fields GF(p^d)."""

from .field import FF, GF, find_modulus, is_prime
from .kernels import BACKEND
from .matrix import Matrix

__all__ = ["FF", "GF", "Matrix", "BACKEND", "find_modulus", "is_prime"]
