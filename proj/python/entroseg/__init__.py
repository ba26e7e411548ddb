"""Entropy-of-a-curve signal segmentation toolkit."""

try:
    from ._entroseg import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _entroseg import *  # noqa: F401,F403  (build-tree module on sys.path)
