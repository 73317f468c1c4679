"""Exact polynomial layer: generating polynomials, factorization, conjecture checks."""
from .conjectures import ConjectureReport, check_conjectures
from .generating import *  # noqa: F401,F403
from .generating import __all__ as _generating_all
from .intpoly import IntPoly, NonzeroRemainderError, product
from .series import distinct_parts, pn_neg1_series
from .sturm import count_roots, isolate_root, real_root_count, sturm_sequence

__all__ = list(_generating_all) + [
    "ConjectureReport",
    "IntPoly",
    "check_conjectures",
    "count_roots",
    "distinct_parts",
    "isolate_root",
    "pn_neg1_series",
    "product",
    "real_root_count",
    "sturm_sequence",
]
