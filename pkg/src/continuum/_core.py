"""Kernel selection: the compiled extension when built, else pure Python."""

try:
    from ._kernels import leaf_audit, lex_compare_bits, stadium_passings

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._kernels_py import leaf_audit, lex_compare_bits, stadium_passings

    BACKEND = "python"

__all__ = ["BACKEND", "leaf_audit", "lex_compare_bits", "stadium_passings"]
