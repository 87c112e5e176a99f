"""Backend selection for the integer kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Inputs that could overflow int64 always go to the Python side.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_INT64_HEADROOM = 2**62


def survey_fits_int64(n: int, hi: int) -> bool:
    # |W_i| <= n * hi^(n-1) and |D| <= hi^n + 1
    return n * max(hi, 1) ** n < _INT64_HEADROOM


def excluded_fits_int64(bound: int) -> bool:
    return (bound * bound + 1) ** 2 < _INT64_HEADROOM


def survey_counts(n, lo, hi, first_lo, first_hi, backend=None):
    impl = _pick(backend)
    if impl is not _kernels_py and not survey_fits_int64(n, max(hi, first_hi)):
        impl = _kernels_py
    return impl.survey_counts(n, lo, hi, first_lo, first_hi)


def excluded_search(bound, u_lo, u_hi, backend=None):
    impl = _pick(backend)
    if impl is not _kernels_py and not excluded_fits_int64(bound):
        impl = _kernels_py
    return impl.excluded_search(bound, u_lo, u_hi)


def _pick(backend):
    if backend is None:
        return _compiled or _kernels_py
    if backend == "python":
        return _kernels_py
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")


def fan_out(func, arg_list, jobs: int = 1):
    """Map ``func`` over argument tuples, in order, optionally in worker processes."""
    if jobs <= 1 or len(arg_list) <= 1:
        return [func(*args) for args in arg_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(func, *args) for args in arg_list]
        return [f.result() for f in futures]
