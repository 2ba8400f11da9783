"""Backend selection for the enumeration kernels.

Set ``KHOOKS_NO_NUMBA=1`` (or ``KHOOKS_BACKEND=numpy``) to force the
pure-numpy path. If numba cannot be imported the numpy path is used silently.
"""

from __future__ import annotations

import os

_TRUTHY = {"1", "true", "yes", "on"}

try:
    import numba as nb

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the bundled TBB is often too old and numba warns on every parallel launch
        nb.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
except ImportError:  # pragma: no cover - numba is a declared dependency
    nb = None
    HAVE_NUMBA = False


def _env_backend() -> str:
    if os.environ.get("KHOOKS_NO_NUMBA", "").strip().lower() in _TRUTHY:
        return "numpy"
    choice = os.environ.get("KHOOKS_BACKEND", "").strip().lower()
    if choice in ("numpy", "numba"):
        return choice
    return "numba"


def default_backend() -> str:
    choice = _env_backend()
    if choice == "numba" and not HAVE_NUMBA:
        return "numpy"
    return choice


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


def set_threads(n: int | None) -> None:
    """Cap the numba thread pool; no-op on the numpy path."""
    if n is None or not HAVE_NUMBA:
        return
    nb.set_num_threads(max(1, min(int(n), nb.config.NUMBA_NUM_THREADS)))


if HAVE_NUMBA:
    def njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        kwargs.setdefault("nogil", True)
        return nb.njit(*args, **kwargs)

    prange = nb.prange
else:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

    prange = range
