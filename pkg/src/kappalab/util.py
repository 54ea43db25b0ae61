"""Small shared helpers: parallel sweeps, deterministic RNG."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

__all__ = ["thread_count", "pmap", "rng_for", "random_unitary"]

THREADS_ENV = "KAPPA_LAB_THREADS"


def thread_count() -> int:
    """Worker bound from KAPPA_LAB_THREADS (0 or unset = automatic)."""
    raw = os.environ.get(THREADS_ENV, "0")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}")
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be non-negative")
    if n == 0:
        n = min(4, os.cpu_count() or 1)
    return n


def pmap(fn, items):
    """Map preserving order; uses a thread pool when more than one worker."""
    items = list(items)
    n = thread_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.PCG64(seed))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish unitary via QR of a complex Gaussian, phases fixed."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
