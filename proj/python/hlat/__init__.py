"""Exact lattice invariants: coset minima, eta sums, the e invariant, and the
certified h-invariant bounds built on them."""

from ._hlat import (
    Lattice,
    brieskorn_h,
    coset_min,
    detline_check,
    e_invariant,
    eta,
    eta_polynomial,
    h_lower_from_certificate,
    h_lower_from_e,
    is_extremal,
    minimal_m,
    parse_lattice_spec,
    redhn_factor_check,
    surgery_upper,
    __version__,
)

__all__ = [
    "Lattice",
    "brieskorn_h",
    "coset_min",
    "detline_check",
    "e_invariant",
    "eta",
    "eta_polynomial",
    "h_lower_from_certificate",
    "h_lower_from_e",
    "is_extremal",
    "minimal_m",
    "parse_lattice_spec",
    "redhn_factor_check",
    "surgery_upper",
    "__version__",
]
