"""The dual ring, differentiation action, catalecticants and annihilators.

Forms F in the dual ring T share exponent tuples with S; only the printed
variable names differ (x_i or A1, B1, ... for the duals of y_i or a1, b1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod
from typing import Sequence

from .groebner import buchberger
from .linalg import Echelon, kernel, rank
from .ring import (
    ONE,
    ZERO,
    GradedRing,
    Ideal,
    Monomial,
    Multidegree,
    Polynomial,
    QQ,
    degree_box,
    mdeg_leq,
    mdeg_sub,
    monomial_basis,
    to_qq,
)


class DualForm:
    """Homogeneous element of the dual ring T."""

    __slots__ = ("ring", "poly", "degree")

    def __init__(self, ring: GradedRing, poly: Polynomial | dict, degree=None):
        if isinstance(poly, dict):
            poly = Polynomial(ring, poly)
        if poly.ring != ring:
            raise ValueError("form lives in a different ring")
        self.ring = ring
        self.poly = poly
        if degree is None:
            if poly.is_zero():
                raise ValueError("the zero form needs an explicit degree")
            degree = poly.degree()
        else:
            degree = ring.normalize_degree(degree)
            if not poly.is_zero() and poly.degree() != degree:
                raise ValueError("form is not homogeneous of the stated degree")
        if any(x < 0 for x in degree):
            raise ValueError("form degree must be nonnegative")
        if not poly.is_homogeneous():
            raise ValueError("form must be homogeneous")
        self.degree = degree

    @classmethod
    def parse(cls, text: str, ring: GradedRing) -> "DualForm":
        from .parse import parse_polynomial
        return cls(ring, parse_polynomial(text, ring, dual=True))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def total_degree(self) -> int:
        return sum(self.degree)

    def __add__(self, other: "DualForm") -> "DualForm":
        return DualForm(self.ring, self.poly + other.poly, self.degree)

    def __mul__(self, c) -> "DualForm":
        return DualForm(self.ring, self.poly * to_qq(c), self.degree)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, DualForm) and self.poly == other.poly and self.degree == other.degree

    def __hash__(self):
        return hash((self.poly, self.degree))

    def format(self) -> str:
        return self.poly.format(self.ring.dual_names)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"DualForm({self.format()!r})"


def _falling(b: int, a: int) -> int:
    out = 1
    for k in range(a):
        out *= b - k
    return out


def contract_terms(psi: dict, F: dict) -> dict:
    out: dict = {}
    for a, c in psi.items():
        for b, d in F.items():
            if all(x <= y for x, y in zip(a, b)):
                f = 1
                for x, y in zip(a, b):
                    if x:
                        f *= _falling(y, x)
                e = tuple(y - x for x, y in zip(a, b))
                s = out.get(e, ZERO) + c * d * f
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def contract(psi: Polynomial, F: DualForm) -> DualForm:
    """psi acting on F by differentiation."""
    if psi.ring != F.ring:
        raise ValueError("operator and form live in different rings")
    if not psi.is_homogeneous():
        raise ValueError("operator must be homogeneous")
    if psi.is_zero():
        return DualForm(F.ring, F.ring.zero(), F.degree)
    u = psi.degree()
    w = mdeg_sub(F.degree, u)
    terms = contract_terms(psi.terms, F.poly.terms)
    if any(x < 0 for x in w):
        return DualForm(F.ring, F.ring.zero(), tuple(0 for _ in w))
    return DualForm(F.ring, Polynomial._raw(F.ring, terms), w)


@dataclass
class Catalecticant:
    """Matrix of S_u -> T_{v-u}, psi -> psi o F (sparse rows)."""

    source_degree: Multidegree
    rows: list[Monomial]
    cols: list[Monomial]
    matrix: list[dict]

    def rank(self) -> int:
        return rank(self.matrix)

    def dense(self) -> list[list]:
        return [[r.get(j, ZERO) for j in range(len(self.cols))] for r in self.matrix]

    def kernel_polys(self, ring: GradedRing) -> list[Polynomial]:
        cols: list[dict] = [dict() for _ in self.cols]
        for i, r in enumerate(self.matrix):
            for j, a in r.items():
                cols[j][i] = a
        out = []
        for vec in kernel(cols, len(self.rows)):
            out.append(Polynomial._raw(ring, {self.rows[i]: c for i, c in vec.items()}))
        return out


def catalecticant(F: DualForm, u) -> Catalecticant:
    ring = F.ring
    u = ring.normalize_degree(u)
    if any(x < 0 for x in u):
        raise ValueError("catalecticant degree must be nonnegative")
    rows = monomial_basis(ring, u)
    w = mdeg_sub(F.degree, u)
    cols = monomial_basis(ring, w) if all(x >= 0 for x in w) else []
    col = {m: j for j, m in enumerate(cols)}
    mat = []
    for m in rows:
        r = contract_terms({m: ONE}, F.poly.terms)
        mat.append({col[e]: c for e, c in r.items()})
    return Catalecticant(u, rows, cols, mat)


def annihilator_piece(F: DualForm, u) -> list[Polynomial]:
    """A basis of Ann(F)_u."""
    u = F.ring.normalize_degree(u)
    if not mdeg_leq(u, F.degree):
        return [Polynomial._raw(F.ring, {m: ONE}) for m in monomial_basis(F.ring, u)]
    return catalecticant(F, u).kernel_polys(F.ring)


class AnnihilatorCertificateError(RuntimeError):
    pass


def annihilator(F: DualForm, certify: bool = True) -> Ideal:
    """Minimal homogeneous generators of Ann(F), found degree by degree up to v+1."""
    if F.is_zero():
        raise ValueError("the zero form has no proper annihilator")
    ring = F.ring
    v = F.degree
    top = tuple(x + 1 for x in v)
    gens: list[Polynomial] = []
    for u in sorted(degree_box(top), key=lambda d: (sum(d), d)):
        if sum(u) == 0:
            continue
        basis = monomial_basis(ring, u)
        col = {m: i for i, m in enumerate(basis)}
        e = Echelon()
        for g in gens:
            d = g.degree()
            if not mdeg_leq(d, u):
                continue
            for m in monomial_basis(ring, mdeg_sub(u, d)):
                e.add({col[tuple(a + b for a, b in zip(t, m))]: c for t, c in g.terms.items()})
        if e.rank == len(basis):
            continue
        for p in annihilator_piece(F, u):
            if e.add({col[t]: c for t, c in p.terms.items()}):
                gens.append(p)
    I = Ideal(ring, gens)
    if certify:
        gb = buchberger(I)
        for u in degree_box(top):
            expect = catalecticant(F, u).rank() if mdeg_leq(u, v) else 0
            if gb.hilbert_function(u) != expect:
                raise AnnihilatorCertificateError(f"annihilator generation check failed in degree {u}")
    return I


def ann_hilbert_row(F: DualForm) -> list[int]:
    """HF(S/Ann F, k) for k = 0..d on a single-block ring (catalecticant ranks)."""
    if F.ring.rank != 1:
        raise ValueError("row form needs a Z-graded ring")
    return [catalecticant(F, (k,)).rank() for k in range(F.degree[0] + 1)]


def annihilates(I: Ideal, F: DualForm) -> bool:
    """I ⊆ Ann(F), tested on generators."""
    return all(contract(g, F).is_zero() for g in I.gens)


def is_concise(F: DualForm) -> list[bool]:
    """Per block: no linear form of that block annihilates F."""
    out = []
    for b in range(F.ring.rank):
        e = tuple(1 if j == b else 0 for j in range(F.ring.rank))
        if not mdeg_leq(e, F.degree):
            out.append(False)
            continue
        c = catalecticant(F, e)
        out.append(c.rank() == len(c.rows))
    return out


def hessian(F: DualForm) -> Polynomial:
    """Determinant of the matrix of second partial derivatives (in the dual ring)."""
    ring = F.ring
    if ring.rank != 1:
        raise ValueError("Hessian is defined here for single-block rings")
    if F.degree[0] < 2:
        raise ValueError("Hessian needs degree at least 2")
    n = ring.nvars
    H = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = [0] * n
            e[i] += 1
            e[j] += 1
            d = Polynomial._raw(ring, contract_terms({tuple(e): ONE}, F.poly.terms))
            H[i][j] = H[j][i] = d
    return determinant(H, ring)


def determinant(M: Sequence[Sequence[Polynomial]], ring: GradedRing) -> Polynomial:
    n = len(M)
    total = ring.zero()
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.const(-1 if inv % 2 else 1)
        for i in range(n):
            term = term * M[i][perm[i]]
            if term.is_zero():
                break
        total = total + term
    return total


def is_nondegenerate_even(F: DualForm, p: int) -> bool:
    """Ann(F) has no elements of degree <= p-1 (F of degree 2p-2)."""
    if F.ring.rank != 1:
        raise ValueError("single-block ring required")
    if F.degree[0] != 2 * p - 2:
        raise ValueError(f"form degree {F.degree[0]} is not 2p-2 = {2 * p - 2}")
    for k in range(p):
        c = catalecticant(F, (k,))
        if c.rank() != len(c.rows):
            return False
    return True


def tensor_form(shape: Sequence[int], entries) -> DualForm:
    """Multilinear form on P^{k1-1} x ... from a dense row-major array."""
    shape = [int(k) for k in shape]
    if not 1 <= len(shape) <= 4:
        raise ValueError("tensors of order 1 to 4 are supported")
    flat = list(_flatten(entries))
    if len(flat) != prod(shape):
        raise ValueError(f"expected {prod(shape)} entries, got {len(flat)}")
    ring = GradedRing.product(shape)
    offsets = [sum(shape[:b]) for b in range(len(shape))]
    terms = {}
    for idx, c in zip(itertools.product(*[range(k) for k in shape]), flat):
        c = to_qq(c)
        if not c:
            continue
        e = [0] * ring.nvars
        for b, i in enumerate(idx):
            e[offsets[b] + i] = 1
        terms[tuple(e)] = c
    return DualForm(ring, Polynomial(ring, terms), ring.one)


def _flatten(x):
    if isinstance(x, (list, tuple)):
        for y in x:
            yield from _flatten(y)
    else:
        yield x


def essential_form(F: DualForm) -> tuple[DualForm, int]:
    """Rewrite F in its essential variables; return (form, count).

    The essential linear span is the image of the catalecticant at degree
    d-1.  F is expressed in a basis of that span (completed by coordinate
    vectors) and moved to a ring with that many variables.
    """
    ring = F.ring
    if ring.rank != 1:
        raise ValueError("single-block ring required")
    d = F.degree[0]
    n = ring.nvars
    if d == 0:
        small = GradedRing.product([1])
        return DualForm(small, Polynomial(small, {(0,): F.poly.terms[(0,) * n]})), 0
    cat = catalecticant(F, (d - 1,))
    # image vectors in T_1 coordinates
    e = Echelon()
    for r in cat.matrix:
        e.add(r)
    red = e.reduced_rows()
    col_mono = cat.cols
    span = []
    for p, r in red.items():
        vec = [ZERO] * n
        for j, a in r.items():
            vec[col_mono[j].index(1)] = a
        span.append(vec)
    k = len(span)
    if k == n:
        return F, n
    # complete to a basis and express F in it: x = P z
    pivots = set()
    for vec in span:
        pivots.add(next(i for i, a in enumerate(vec) if a))
    full = list(span) + [[ONE if i == j else ZERO for i in range(n)]
                         for j in range(n) if j not in pivots]
    # w_j = sum_i A[j][i] x_i; writing x = A^{-1} w gives F = G(w)
    inv = matrix_inverse(full)
    big = GradedRing.product([n])
    z = big.gens()
    subs = []
    for i in range(n):
        acc = big.zero()
        for j in range(n):
            if inv[i][j]:
                acc = acc + z[j] * inv[i][j]
        subs.append(acc)
    G = big.zero()
    for ex, c in F.poly.terms.items():
        t = big.const(c)
        for i, a in enumerate(ex):
            if a:
                t = t * subs[i] ** a
        G = G + t
    if any(any(ex[j] for j in range(k, n)) for ex in G.terms):
        raise ArithmeticError("essential-variable rewrite failed")
    small = GradedRing.product([k])
    Gs = Polynomial(small, {ex[:k]: c for ex, c in G.terms.items()})
    return DualForm(small, Gs), k


def matrix_inverse(A: Sequence[Sequence]) -> list[list]:
    """Inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(A)
    M = [[QQ(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[p] = M[p], M[c]
        inv = ONE / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]
