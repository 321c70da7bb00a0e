"""Kac diagrams, periodic gradings and contractions of simple Lie algebras."""

__version__ = "0.1.0"
