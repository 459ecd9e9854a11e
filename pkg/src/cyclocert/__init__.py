"""Exact verification that Z[zeta_n] is integrally closed, one maximal ideal at a time."""

__version__ = "0.1.0"

from .cyclo import CycloElt, CycloRing, cyclo_ring, cyclotomic_poly, elt_norm, exact_divide  # noqa: E402
from .fpfactor import factor_fp, is_separable  # noqa: E402
from .ideal import IdealLattice, contains, ideal_from_generators, ideal_product, invert_ideal  # noqa: E402
from .verify import normalize_n, split_prime, verify_all  # noqa: E402
from .zxpoly import FpPoly, ZPoly, bezout_fp, divmod_z, lift, mod_reduce  # noqa: E402

__all__ = [
    "CycloElt",
    "CycloRing",
    "FpPoly",
    "IdealLattice",
    "ZPoly",
    "bezout_fp",
    "contains",
    "cyclo_ring",
    "cyclotomic_poly",
    "divmod_z",
    "elt_norm",
    "exact_divide",
    "factor_fp",
    "ideal_from_generators",
    "ideal_product",
    "invert_ideal",
    "is_separable",
    "lift",
    "mod_reduce",
    "normalize_n",
    "split_prime",
    "verify_all",
]
