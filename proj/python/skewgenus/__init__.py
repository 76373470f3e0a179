"""Exact threshold-genus bounds for fixed-height skew shapes."""

try:
    from skewgenus._skewgenus import *  # noqa: F401,F403  (installed layout)
    from skewgenus._skewgenus import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension on PYTHONPATH directly
    from _skewgenus import *  # noqa: F401,F403
    from _skewgenus import __doc__  # noqa: F401
