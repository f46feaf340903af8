"""Kernel backend selection.

Prefers the compiled extension when it was built, otherwise falls back
to the pure-Python twin.  ``KERNEL_BACKEND`` names the one in use
("c" or "python"); both modules expose the same four functions with
bit-identical behaviour (``tests/test_backends.py`` pins that, and
``benchmarks/bench_kernels.py`` compares their speed).
"""

try:
    from . import _kernel_c as _impl
except ImportError:  # extension not built -- pure fallback
    from . import _kernel_py as _impl

KERNEL_BACKEND: str = _impl.BACKEND_NAME

snf_inplace = _impl.snf_inplace
rank_mod_inplace = _impl.rank_mod_inplace
det_inplace = _impl.det_inplace
matmul = _impl.matmul
