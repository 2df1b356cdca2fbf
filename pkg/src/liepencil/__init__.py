"""Exact computations with periodic gradings, contraction pencils and
symmetric invariants of classical Lie algebras."""

__version__ = "0.1.0"
