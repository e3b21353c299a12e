"""Random complete-intersection instances I = (W) + J_{>=d+1} with W ⊆ J_d."""
from __future__ import annotations

import random

from borderline.groebner import graded_piece_basis, truncation
from borderline.ring import QQ, GradedRing, Ideal


def random_form(ring: GradedRing, d: int, rng: random.Random, terms: int = 4):
    from borderline.ring import monomial_basis
    basis = monomial_basis(ring, (d,))
    f = ring.zero()
    for m in rng.sample(basis, min(terms, len(basis))):
        f = f + ring.monomial(m, rng.randint(-4, 4) or 1)
    return f


def random_ci(rng: random.Random):
    from borderline.homological import is_complete_intersection
    n = rng.choice([1, 2])
    ring = GradedRing.parse(f"P{n}")
    while True:
        degs = sorted(rng.randint(1, 4) for _ in range(n))
        if sum(degs) - (n + 1) < 1:
            continue
        J = Ideal(ring, [random_form(ring, a, rng) for a in degs])
        if is_complete_intersection(J):
            return J, sum(degs) - (n + 1)


def random_instance(rng: random.Random):
    J, d = random_ci(rng)
    ring = J.ring
    piece = graded_piece_basis(J, (d,))
    k = max(0, len(piece) - rng.randint(1, 3))
    W = []
    for _ in range(k):
        f = ring.zero()
        for g in piece:
            f = f + g * QQ(rng.randint(-3, 3))
        W.append(f)
    I = Ideal(ring, W + list(truncation(J, d + 1).gens))
    return J, I, d
