"""Lorentz-group representations, Clifford/CPT structure and SU(3) mass splitting for hadron octets."""

from lorentz_octets.rep_core import HalfInt, RepLabel, degree, spin

__all__ = ["HalfInt", "RepLabel", "degree", "spin"]
__version__ = "0.1.0"
