"""Residuation operators M and R on finite bounded posets."""

try:
    from ._residua import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # build-tree layout: extension sits next to this package
    from _residua import *  # noqa: F401,F403
