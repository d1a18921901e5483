"""monocurve - Toric ideals of monomial curves: minimal systems, indispensable binomials, unique generation."""

__version__ = "0.1.0"
