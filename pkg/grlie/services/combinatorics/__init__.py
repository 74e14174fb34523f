"""
Closed-form combinatorial numbers and LCS-rank extraction.
"""

from grlie.services.combinatorics.lcs import (
    RankTable,
    enveloping_series,
    lcs_ranks_mobius,
    lcs_ranks_pbw,
    lcs_ranks_powersum,
    pbw_series,
)
from grlie.services.combinatorics.numbers import bell, lah_closed, mobius, special_number, witt

__all__ = [
    "RankTable",
    "bell",
    "enveloping_series",
    "lah_closed",
    "lcs_ranks_mobius",
    "lcs_ranks_pbw",
    "lcs_ranks_powersum",
    "mobius",
    "pbw_series",
    "special_number",
    "witt",
]
