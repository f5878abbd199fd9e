"""Exact computations for the dilute Temperley-Lieb algebra."""

__version__ = "0.1.0"
