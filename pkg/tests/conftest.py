import random

import pytest

from borderline.apolarity import DualForm
from borderline.groebner import intersect
from borderline.ring import GradedRing, Ideal


@pytest.fixture
def P2():
    return GradedRing.parse("P2")


def point_ideal(ring: GradedRing, point: list[list[int]]) -> Ideal:
    """2x2 minors p_i y_j - p_j y_i in every block."""
    gens = []
    for b, coords in enumerate(point):
        vs = ring.block_vars(b)
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                f = ring.var(vs[j]) * coords[i] - ring.var(vs[i]) * coords[j]
                if f.terms:
                    gens.append(f)
    return Ideal(ring, gens)


def points_ideal(ring: GradedRing, points) -> Ideal:
    I = point_ideal(ring, points[0])
    for p in points[1:]:
        I = intersect(I, point_ideal(ring, p))
    return I


def random_points(rng: random.Random, sizes, r: int, lo: int = -3, hi: int = 3):
    pts = []
    while len(pts) < r:
        p = []
        for k in sizes:
            c = [rng.randint(lo, hi) for _ in range(k)]
            if not any(c):
                c[0] = 1
            p.append(c)
        # keep points projectively distinct
        if all(not _same(p, q) for q in pts):
            pts.append(p)
    return pts


def _same(p, q) -> bool:
    for a, b in zip(p, q):
        for i in range(len(a)):
            for j in range(len(a)):
                if a[i] * b[j] != a[j] * b[i]:
                    return False
    return True
