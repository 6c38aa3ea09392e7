"""Orthogonal piecewise-polynomial bases and wavelets on irregular knots."""

try:
    from ._knotwave import *  # noqa: F401,F403
    from ._knotwave import __version__  # noqa: F401
except ImportError:  # in-tree builds keep the extension next to the package
    from _knotwave import *  # noqa: F401,F403
    from _knotwave import __version__  # noqa: F401
