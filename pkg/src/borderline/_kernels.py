"""Monomial divisibility kernels.

The exact rational arithmetic stays in Python; the integer-only kernels
that test many monomials against a monomial ideal run through numba when
available.  Set ``BORDERLINE_NUMBA=0`` to force the numpy versions.
"""
from __future__ import annotations

import os
from typing import Sequence

import numpy as np

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda f: f


def numba_enabled() -> bool:
    return HAS_NUMBA and os.environ.get("BORDERLINE_NUMBA", "1") != "0"


# below this many monomial/generator comparisons plain Python wins
SMALL = 512


def as_array(monos: Sequence[Sequence[int]], width: int | None = None) -> np.ndarray:
    if len(monos) == 0:
        return np.zeros((0, width or 0), dtype=np.int64)
    return np.asarray(monos, dtype=np.int64)


@njit(cache=True)
def _mask_nb(mons, gens):
    k, n = mons.shape
    g = gens.shape[0]
    out = np.zeros(k, dtype=np.bool_)
    for a in range(k):
        for b in range(g):
            ok = True
            for j in range(n):
                if gens[b, j] > mons[a, j]:
                    ok = False
                    break
            if ok:
                out[a] = True
                break
    return out


def _mask_np(mons: np.ndarray, gens: np.ndarray) -> np.ndarray:
    if gens.shape[0] == 0:
        return np.zeros(mons.shape[0], dtype=bool)
    out = np.zeros(mons.shape[0], dtype=bool)
    step = max(1, 200_000 // max(1, gens.size))
    for s in range(0, mons.shape[0], step):
        block = mons[s:s + step]
        out[s:s + step] = (block[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
    return out


def divisible_mask(mons: np.ndarray, gens: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Boolean mask: row a of mons lies in the monomial ideal generated by gens."""
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if gens.shape[0] == 0 or mons.shape[0] == 0:
        return np.zeros(mons.shape[0], dtype=bool)
    if backend == "numba":
        return _mask_nb(np.ascontiguousarray(mons), np.ascontiguousarray(gens))
    if backend == "numpy":
        return _mask_np(mons, gens)
    raise ValueError(f"unknown backend {backend!r}")


def count_standard(mons: Sequence[tuple], gens: Sequence[tuple]) -> int:
    """Number of monomials not divisible by any generator."""
    if not gens:
        return len(mons)
    if len(mons) * len(gens) < SMALL:
        return sum(1 for m in mons if not any(all(x <= y for x, y in zip(g, m)) for g in gens))
    mask = divisible_mask(as_array(mons), as_array(gens))
    return len(mons) - int(mask.sum())


def standard_mask(mons: Sequence[tuple], gens: Sequence[tuple]) -> list[bool]:
    if not gens:
        return [True] * len(mons)
    if len(mons) * len(gens) < SMALL:
        return [not any(all(x <= y for x, y in zip(g, m)) for g in gens) for m in mons]
    return [not b for b in divisible_mask(as_array(mons), as_array(gens)).tolist()]
