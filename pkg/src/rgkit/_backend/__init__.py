"""Kernel backend selection.

The hot loops (realization enumeration, pairwise 2-switch adjacency,
per-node clique numbers) have two interchangeable implementations:

* ``jit``  — numba ``@njit`` kernels over packed uint64 words (default);
* ``pure`` — plain Python over arbitrary-precision int bitmasks.

Set ``RGKIT_BACKEND=python`` or ``RGKIT_BACKEND=numba`` to force one; the
default ``auto`` uses numba when it imports and falls back otherwise.
``benchmarks/bench_backends.py`` compares the two.
"""

from __future__ import annotations

import os

from . import pure


def load_backend(name: str | None = None):
    """Resolve a backend module by name ("python", "numba", or "auto")."""
    name = (name or os.environ.get("RGKIT_BACKEND") or "auto").lower()
    if name == "python":
        return pure
    if name == "numba":
        from . import jit

        return jit
    if name == "auto":
        try:
            from . import jit

            return jit
        except ImportError:
            return pure
    raise ValueError(f"unknown backend {name!r} (expected python, numba, or auto)")


active = load_backend()


def backend_name() -> str:
    return active.NAME
