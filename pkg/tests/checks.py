"""Exhaustive and randomized checks shared by the unit and acceptance suites."""
from __future__ import annotations

import random
from math import comb

import numpy as np

from borderline.groebner import buchberger
from borderline.hilbert import macaulay_upper
from borderline.parse import parse_ideal
from borderline.ring import GradedRing

from conftest import points_ideal, random_points
from oracles import eval_hf


def macaulay_table(hmax: int, dmax: int) -> np.ndarray:
    U = np.zeros((hmax + 1, dmax + 1), dtype=np.int64)
    for h in range(hmax + 1):
        for d in range(1, dmax + 1):
            U[h, d] = macaulay_upper(h, d)
    return U


def superadditivity_violations(limit: int = 60) -> int:
    """Count (q, r, l, e) with l >= e > 0, all <= limit, and q^<l> + r^<e> > (q+r)^<e>."""
    U = macaulay_table(2 * limit, limit)
    q = np.arange(limit + 1)
    bad = 0
    for e in range(1, limit + 1):
        # rows q, columns r
        rhs = U[q[:, None] + q[None, :], e]
        re = U[q, e][None, :]
        for ell in range(e, limit + 1):
            lhs = U[q, ell][:, None] + re
            bad += int((lhs > rhs).sum())
    return bad


def split_growth_violations(dmax: int = 8) -> list[tuple[int, int, int]]:
    """s^<d-1> + t^<d-1> < dim S_d for s, t > 0 with s + t = dim S_{d-1} (3 variables)."""
    out = []
    for d in range(2, dmax + 1):
        total = comb(d + 1, 2)
        top = comb(d + 2, 2)
        for s in range(1, total):
            t = total - s
            if macaulay_upper(s, d - 1) + macaulay_upper(t, d - 1) >= top:
                out.append((d, s, t))
    return out


def full_piece_growth_violations(dmax: int = 8, lmax: int = 12) -> list[tuple[int, int]]:
    """(dim S_{d-1})^<l> < (dim S_{d-1})^<d-1> for d-1 < l <= lmax."""
    out = []
    for d in range(2, dmax + 1):
        h = comb(d + 1, 2)
        ref = macaulay_upper(h, d - 1)
        for ell in range(d, lmax + 1):
            if not macaulay_upper(h, ell) < ref:
                out.append((d, ell))
    return out


def ci_symmetry_violations(max_degree: int = 6) -> list:
    """HF(S/J, s) + HF(S/J, d - s) = prod a_i for monomial CIs on P^1, P^2."""
    out = []
    for n in (1, 2):
        ring = GradedRing.parse(f"P{n}")
        ranges = [range(1, max_degree + 1)] * n
        import itertools
        for degs in itertools.product(*ranges):
            if list(degs) != sorted(degs):
                continue
            J = parse_ideal(", ".join(f"y{i}^{a}" for i, a in enumerate(degs)), ring)
            gb = buchberger(J)
            d = sum(degs) - (n + 1)
            r = 1
            for a in degs:
                r *= a
            for s in range(0, d + 1):
                if gb.hilbert_function((s,)) + gb.hilbert_function((d - s,)) != r:
                    out.append((degs, s))
    return out


def point_ideal_property_failures(count: int = 50, seed: int = 0) -> list:
    """HF of random reduced point sets in products of P: agrees with the
    evaluation oracle, is monotone in each e_j, propagates plateaus and is
    bounded by the number of points."""
    rng = random.Random(seed)
    layouts = [[2, 2], [3], [2, 2, 2], [3, 2], [2]]
    failures = []
    for trial in range(count):
        sizes = layouts[trial % len(layouts)]
        ring = GradedRing.product(sizes)
        r = rng.randint(1, 4)
        pts = random_points(rng, sizes, r)
        I = points_ideal(ring, pts)
        gb = buchberger(I)
        s = len(sizes)
        top = 3 if s <= 2 else 2
        import itertools
        box = list(itertools.product(*[range(top + 1)] * s))
        hf = {v: gb.hilbert_function(v) for v in box}
        for v in box:
            if hf[v] != eval_hf(pts, sizes, v):
                failures.append(("oracle", sizes, v))
            if hf[v] > r:
                failures.append(("length", sizes, v))
            for j in range(s):
                w = tuple(x + (1 if k == j else 0) for k, x in enumerate(v))
                w2 = tuple(x + (2 if k == j else 0) for k, x in enumerate(v))
                if w in hf and hf[w] < hf[v]:
                    failures.append(("monotone", sizes, v, j))
                if w2 in hf and hf[v] == hf[w] and hf[w2] != hf[w]:
                    failures.append(("plateau", sizes, v, j))
    return failures
