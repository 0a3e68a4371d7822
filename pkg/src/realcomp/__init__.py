"""Computable-analysis kernel: names, fuel-bounded machines, associates and exact reals."""

__version__ = "0.1.0"
