"""Sparse exact linear algebra over the rationals.

Vectors are dicts ``column -> nonzero rational``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .ring import ONE, ZERO, QQ


def axpy(v: dict, a, w: dict) -> None:
    """v += a*w in place."""
    for k, b in w.items():
        s = v.get(k, ZERO) + a * b
        if s:
            v[k] = s
        else:
            v.pop(k, None)


class Echelon:
    """Incrementally built row-echelon basis of a subspace."""

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        rows = self.rows
        while True:
            c = None
            for k in v:
                if k in rows and (c is None or k < c):
                    c = k
            if c is None:
                return v
            f = v[c]
            axpy(v, -f, rows[c])

    def add(self, v: dict) -> bool:
        """Insert v; return True if it was independent."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = ONE / v[p]
        self.rows[p] = {k: a * inv for k, a in v.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduced_rows(self) -> dict[int, dict]:
        """Fully reduced (RREF) rows keyed by pivot."""
        out: dict[int, dict] = {}
        for p in sorted(self.rows, reverse=True):
            r = dict(self.rows[p])
            for q in [k for k in r if k != p and k in out]:
                axpy(r, -r[q], out[q])
            out[p] = r
        return {p: out[p] for p in sorted(out)}


def rank(rows: Iterable[dict]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def rref(rows: Iterable[dict]) -> list[dict]:
    e = Echelon()
    for r in rows:
        e.add(r)
    red = e.reduced_rows()
    return [red[p] for p in sorted(red)]


def kernel(rows: Iterable[dict], ncols: int) -> list[dict]:
    """Basis of {x : M x = 0} for the matrix with the given sparse rows."""
    e = Echelon()
    for r in rows:
        e.add(r)
    red = e.reduced_rows()
    free = [c for c in range(ncols) if c not in red]
    basis = []
    for f in free:
        x = {f: ONE}
        for p, r in red.items():
            a = r.get(f)
            if a:
                x[p] = -a
        basis.append(x)
    return basis


def dense_rank(matrix: Sequence[Sequence]) -> int:
    return rank({j: QQ(a) for j, a in enumerate(row) if a} for row in matrix)


def solve_coordinates(basis: Sequence[dict], v: dict) -> dict | None:
    """Coefficients c with sum c_i basis_i = v, or None if v is outside the span."""
    e = Echelon()
    tag = {}
    # augment each basis vector with a marker column to read off coefficients
    big = 1 + max([max(b) for b in basis if b] + [max(v) if v else 0])
    for i, b in enumerate(basis):
        w = dict(b)
        w[big + i] = ONE
        e.add(w)
        tag[i] = big + i
    r = e.reduce(v)
    if any(k < big for k in r):
        return None
    return {k - big: -a for k, a in r.items()}
