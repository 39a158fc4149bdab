"""Division tree, ordered binary sequences, nilpotent numbers and motion-paradox accounting."""

from ._core import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
