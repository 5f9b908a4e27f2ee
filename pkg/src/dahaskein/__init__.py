"""Exact DAHA representations of Kauffman bracket skein algebras and the knot polynomials built on them."""

from .exact import ONE, ZERO, I, RatFun, substitute, to_json, to_text, var, vpow

__version__ = "0.1.0"

__all__ = ["ONE", "ZERO", "I", "RatFun", "substitute", "to_json", "to_text", "var", "vpow"]
