"""Exact link invariants from framed Hecke-type trace algebras.

Thin wrapper over the compiled core. All values are canonical polynomial
strings in the variables q, s (s**2 = lambda) and, for the general
invariant, E.
"""

from ._framix import canonical_braid, components, esystem, invariant, verify

__all__ = ["canonical_braid", "components", "esystem", "invariant", "verify"]
