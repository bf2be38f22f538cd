"""Exact A2 skein engine for colored Kauffman-Vogel polynomials."""

__version__ = "0.1.0"
