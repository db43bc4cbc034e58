"""Farey neighbours over the rationals, imaginary quadratic fields and the Hurwitz order."""

__version__ = "0.1.0"
