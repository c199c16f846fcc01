"""Exact minimal polynomials of 2cos(2pi/n) and Chebyshev-family sequences."""

try:
    from psicalc._psicalc import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _psicalc import *  # noqa: F401,F403  (build-tree layout)
