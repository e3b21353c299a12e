"""Hilbert functions, Hilbert series of monomial ideals, Macaulay bounds."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .groebner import buchberger, saturate_irrelevant
from .linalg import Echelon
from .ring import (
    GradedRing,
    Ideal,
    Monomial,
    Multidegree,
    degree_box,
    graded_piece_dimension,
    mdeg_sub,
    monomial_basis,
)


class NonStabilizingError(ValueError):
    """Raised when a Hilbert function does not settle to a constant."""


def hilbert_function(I: Ideal, v) -> int:
    """HF(S/I, v) from the standard monomials of a Gröbner basis."""
    return buchberger(I).hilbert_function(v)


def hilbert_function_la(I: Ideal, v) -> int:
    """HF(S/I, v) by linear algebra on products generator * monomial."""
    ring = I.ring
    v = ring.normalize_degree(v)
    basis = monomial_basis(ring, v)
    col = {m: i for i, m in enumerate(basis)}
    e = Echelon()
    for g in I.gens:
        d = g.degree()
        for u in monomial_basis(ring, mdeg_sub(v, d)):
            e.add({col[tuple(a + b for a, b in zip(m, u))]: c for m, c in g.terms.items()})
    return len(basis) - e.rank


def hilbert_row(I: Ideal, lo: int, hi: int) -> list[int]:
    gb = buchberger(I)
    return [gb.hilbert_function(k) for k in range(lo, hi + 1)]


def generic_hilbert_function(ring: GradedRing, r: int, v) -> int:
    """min(r, dim S_v): the Hilbert function of r general points."""
    return min(r, graded_piece_dimension(ring, v))


@dataclass
class HilbertFunctionTable:
    ideal: Ideal
    values: dict[Multidegree, int] = field(default_factory=dict)

    @classmethod
    def fill(cls, I: Ideal, degrees: Iterable) -> "HilbertFunctionTable":
        gb = buchberger(I)
        vals = {}
        for v in degrees:
            v = I.ring.normalize_degree(v)
            vals[v] = gb.hilbert_function(v)
        return cls(I, vals)

    def row(self) -> list[int]:
        return [self.values[k] for k in sorted(self.values)]

    def format(self) -> str:
        if self.ideal.ring.rank == 1:
            return " ".join(str(self.values[k]) for k in sorted(self.values))
        return "\n".join(f"{k}: {self.values[k]}" for k in sorted(self.values))


def has_generic_hf(I: Ideal, r: int, box) -> tuple[bool, Multidegree | None]:
    """Check HF(S/I, v) = min(r, dim S_v) on all v <= box; report the first failure."""
    ring = I.ring
    gb = buchberger(I)
    if isinstance(box, int):
        degrees = [(k,) for k in range(box + 1)]
    else:
        degrees = degree_box(ring.normalize_degree(box))
    for v in sorted(degrees, key=lambda u: (sum(u), u)):
        if gb.hilbert_function(v) != generic_hilbert_function(ring, r, v):
            return False, v
    return True, None


# ---------------------------------------------------------------------------
# Z-graded Hilbert series of monomial quotients

def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    ms = sorted(set(gens), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in ms:
        if not any(all(x <= y for x, y in zip(a, m)) for a in out):
            out.append(m)
    return tuple(sorted(out))


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    supports = [{i for i, x in enumerate(m) if x} for m in gens]
    pairwise = True
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if supports[i] & supports[j]:
                pairwise = False
                break
        if not pairwise:
            break
    if pairwise:
        out = [1]
        for m in gens:
            f = [0] * (sum(m) + 1)
            f[0] = 1
            f[-1] -= 1
            out = _poly_mul(out, f)
        return tuple(out)
    counts: dict[int, int] = {}
    for s in supports:
        for i in s:
            counts[i] = counts.get(i, 0) + 1
    x = max(sorted(counts), key=lambda i: counts[i])
    n = len(gens[0])
    unit = tuple(1 if j == x else 0 for j in range(n))
    plus = _minimal([m for m in gens if m[x] == 0] + [unit])
    colon = _minimal(tuple(max(a - (1 if j == x else 0), 0) for j, a in enumerate(m)) for m in gens)
    a = list(_numerator(plus))
    b = [0] + list(_numerator(colon))
    return tuple(_poly_add(a, b))


def hilbert_series_numerator(monos: Sequence[Monomial], nvars: int) -> list[int]:
    """K(t) with HS(S/M) = K(t)/(1-t)^nvars for the monomial ideal M."""
    if not monos:
        return [1]
    return list(_numerator(_minimal(tuple(m) for m in monos)))


def _divide_one_minus_t(p: list[int]) -> tuple[list[int], int]:
    """Strip factors (1 - t); return quotient and multiplicity."""
    k = 0
    p = list(p)
    while len(p) > 1 and sum(p) == 0:
        q = []
        acc = 0
        for c in p[:-1]:
            acc += c
            q.append(acc)
        p = q
        k += 1
    if p == [0]:
        return p, 0
    return p, k


@dataclass(frozen=True)
class HilbertSeries:
    """HS(S/I) = numerator / (1-t)^nvars, from the initial ideal."""

    numerator: tuple[int, ...]
    nvars: int

    @classmethod
    def of(cls, I: Ideal) -> "HilbertSeries":
        if I.ring.rank != 1:
            raise ValueError("Hilbert series only implemented for Z-graded rings")
        if any(g[0] != 1 for g in I.ring.grading):
            raise ValueError("Hilbert series needs the standard grading")
        gb = buchberger(I)
        return cls(tuple(hilbert_series_numerator(gb.lts, I.ring.nvars)), I.ring.nvars)

    def value(self, j: int) -> int:
        if j < 0:
            return 0
        n = self.nvars - 1
        return sum(c * comb(j - k + n, n) for k, c in enumerate(self.numerator) if j - k >= 0)

    @property
    def reduced(self) -> tuple[list[int], int]:
        q, k = _divide_one_minus_t(list(self.numerator))
        return q, self.nvars - k

    @property
    def krull_dimension(self) -> int:
        q, d = self.reduced
        if q == [0] or not any(q):
            return -1
        return d

    def polynomial_constant(self) -> int | None:
        """The constant Hilbert polynomial, or None if it is not constant."""
        q, d = self.reduced
        if not any(q):
            return 0
        if d == 0:
            return 0
        if d == 1:
            return sum(q)
        return None

    def regularity_index(self) -> int:
        """Degree from which HF agrees with the Hilbert polynomial."""
        q, d = self.reduced
        return max(len(q) - d, 0)


# ---------------------------------------------------------------------------

def stable_value(I: Ideal, max_steps: int = 60) -> int:
    """Eventual constant of HF(S/Ī, ·) along the diagonal of the nef cone.

    Saturates first, then walks u = k·𝟙 until HF(u) = HF(u + e_j) for every j
    at two consecutive k.
    """
    ring = I.ring
    K = saturate_irrelevant(I)
    gb = buchberger(K)
    if gb.is_unit():
        return 0
    one = ring.one
    s = ring.rank
    hits = 0
    for k in range(max_steps):
        u = tuple(k * x for x in one)
        h = gb.hilbert_function(u)
        if all(gb.hilbert_function(tuple(u[i] + (1 if i == j else 0) for i in range(s))) == h
               for j in range(s)):
            hits += 1
            if hits == 2:
                return h
        else:
            hits = 0
    raise NonStabilizingError("Hilbert function does not stabilise: positive-dimensional input?")


# ---------------------------------------------------------------------------
# Macaulay representations

@dataclass(frozen=True)
class MacaulayRep:
    h: int
    d: int
    tops: tuple[int, ...]  # k_d > k_{d-1} > ... ; binomial(k_i, i)

    @classmethod
    def of(cls, h: int, d: int) -> "MacaulayRep":
        if h < 0 or d < 1:
            raise ValueError("need h >= 0 and d >= 1")
        tops = []
        rest = h
        i = d
        while rest > 0 and i >= 1:
            k = i
            while comb(k + 1, i) <= rest:
                k += 1
            tops.append(k)
            rest -= comb(k, i)
            i -= 1
        return cls(h, d, tuple(tops))

    def terms(self) -> list[tuple[int, int]]:
        return [(k, self.d - j) for j, k in enumerate(self.tops)]

    def upper(self) -> int:
        return sum(comb(k + 1, i + 1) for k, i in self.terms())


def macaulay_upper(h: int, d: int) -> int:
    """h^<d>: the largest possible HF(S/J, d+1) given HF(S/J, d) = h."""
    return MacaulayRep.of(h, d).upper()


def macaulay_ok(row: Sequence[int], start: int = 0) -> bool:
    """Check HF(k+1) <= HF(k)^<k> along a Z-graded Hilbert function row."""
    for k in range(max(start, 1), start + len(row) - 1):
        if row[k - start + 1] > macaulay_upper(row[k - start], k):
            return False
    return True
