"""Exact toolkit for generalized third-order recurrences.

Thin re-export of the compiled extension. All rationals cross the
boundary as strings like "22/7" (denominator omitted when 1).
"""

from tribell._core import (
    __version__,
    bell_complete,
    bell_inverse_det,
    bell_via_det,
    binom,
    cameron_forward,
    cameron_inverse,
    det_rep,
    gf_odd_terms,
    gf_terms,
    identity_catalog,
    preset_terms,
    r_sequence,
    seq_terms,
    series_exp,
    series_log,
    series_recip,
    verify_json,
)

__all__ = [
    "__version__",
    "bell_complete",
    "bell_inverse_det",
    "bell_via_det",
    "binom",
    "cameron_forward",
    "cameron_inverse",
    "det_rep",
    "gf_odd_terms",
    "gf_terms",
    "identity_catalog",
    "preset_terms",
    "r_sequence",
    "seq_terms",
    "series_exp",
    "series_log",
    "series_recip",
    "verify_json",
]
