"""Monomino-domino tatami coverings of the n x n grid with n monominoes."""
from .catgen import GenStats, gen_vh, iter_vh
from .core import (
    Covering,
    Diagonal,
    InvalidCodeError,
    TernaryCode,
    decode_code,
    running_bond,
    tile_census,
    validate_code,
    validate_covering,
)
from .gensets import gen_subset_pairs, subset_sum_count
from .oracle import enumerate_tn, vertical_histogram

__version__ = "0.1.0"
