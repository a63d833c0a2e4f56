"""Select the compiled kernels when built, else the Python fallback.

Set ``SP4GTZ_PURE=1`` to force the fallback.
"""
import os

if os.environ.get("SP4GTZ_PURE"):
    from ._pykernels import gamma_terms, layer_sum, poly_mul, support
    BACKEND = "python"
else:
    try:
        from ._kernels import gamma_terms, layer_sum, poly_mul, support
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import gamma_terms, layer_sum, poly_mul, support
        BACKEND = "python"

__all__ = ["BACKEND", "gamma_terms", "layer_sum", "poly_mul", "support"]
