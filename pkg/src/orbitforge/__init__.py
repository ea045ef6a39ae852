"""Exact classification of nilpotent adjoint orbits of isotropy algebras of real classical groups."""

__version__ = "0.1.0"
