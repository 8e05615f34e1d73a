"""Exact complementarity spectra and spectral redundancy of graphs.

The heavy lifting lives in the compiled extension; every returned number is
either a Python int, a fractions.Fraction, or a dict carrying an exact
defining polynomial with an isolating interval plus a decimal rendering.
"""

from specred._core import (
    GuardError,
    ParseError,
    __version__,
    b_count,
    build_pineapple,
    c_count,
    cubic,
    graph_info,
    integer_radius_pair,
    one_common,
    pineapple_report,
    redundancy,
    spectral_radius,
    spectrum,
    two_common,
)

__all__ = [
    "GuardError",
    "ParseError",
    "__version__",
    "b_count",
    "build_pineapple",
    "c_count",
    "cubic",
    "graph_info",
    "integer_radius_pair",
    "one_common",
    "pineapple_report",
    "redundancy",
    "spectral_radius",
    "spectrum",
    "two_common",
]
