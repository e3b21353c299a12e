"""Multigraded polynomial rings over the rationals.

A ring is a product of projective spaces, possibly with an arbitrary
grading matrix.  Monomials are plain exponent tuples, polynomials map
exponent tuples to exact rationals.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

Monomial = tuple[int, ...]
Multidegree = tuple[int, ...]

ZERO = QQ(0)
ONE = QQ(1)

_LETTERS = "abcdefghijklmnopqrstuvwxz"


def to_qq(c) -> "QQ":
    if isinstance(c, str):
        return QQ(c.strip())
    return QQ(c)


def mdeg_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mdeg_add(u: Sequence[int], v: Sequence[int]) -> Multidegree:
    return tuple(a + b for a, b in zip(u, v))


def mdeg_sub(u: Sequence[int], v: Sequence[int]) -> Multidegree:
    return tuple(a - b for a, b in zip(u, v))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of the given length and degree, first entry largest first."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class GradedRing:
    """Polynomial ring graded by Z^s.

    ``blocks`` lists (name, variable count); ``grading`` gives one degree
    vector per variable.  Products of projective spaces have each block's
    variables in degree e_i.
    """

    blocks: tuple[tuple[str, int], ...]
    grading: tuple[Multidegree, ...]
    names: tuple[str, ...]
    dual_names: tuple[str, ...]
    validated: bool = True
    _block_of: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def product(cls, sizes: Sequence[int], names: Sequence[str] | None = None,
                dual_names: Sequence[str] | None = None) -> "GradedRing":
        sizes = [int(k) for k in sizes]
        if not sizes or any(k < 1 for k in sizes):
            raise ValueError("every block needs at least one variable")
        s = len(sizes)
        if names is None:
            if s == 1:
                names = [f"y{i}" for i in range(sizes[0])]
                dual_names = [f"x{i}" for i in range(sizes[0])]
            else:
                if s > len(_LETTERS):
                    raise ValueError("too many blocks")
                names = [f"{_LETTERS[b]}{i + 1}" for b, k in enumerate(sizes) for i in range(k)]
                dual_names = [f"{_LETTERS[b].upper()}{i + 1}" for b, k in enumerate(sizes) for i in range(k)]
        if dual_names is None:
            dual_names = [f"d_{nm}" for nm in names]
        if len(names) != sum(sizes) or len(set(names) | set(dual_names)) != 2 * sum(sizes):
            raise ValueError("variable names must be distinct and match block sizes")
        grading = []
        block_of = []
        for b, k in enumerate(sizes):
            for _ in range(k):
                grading.append(tuple(1 if j == b else 0 for j in range(s)))
                block_of.append(b)
        bnames = tuple((_LETTERS[b] if s > 1 else "y", k) for b, k in enumerate(sizes))
        return cls(bnames, tuple(grading), tuple(names), tuple(dual_names), True, tuple(block_of))

    @classmethod
    def general(cls, names: Sequence[str], grading: Sequence[Sequence[int]],
                dual_names: Sequence[str] | None = None) -> "GradedRing":
        """Arbitrary positive grading; accepted structurally, flagged unvalidated."""
        grading = tuple(tuple(int(x) for x in g) for g in grading)
        if len(grading) != len(names) or len({len(g) for g in grading}) != 1:
            raise ValueError("grading matrix shape mismatch")
        if any(all(x == 0 for x in g) for g in grading):
            raise ValueError("every variable needs a nonzero degree")
        if any(any(x < 0 for x in g) for g in grading):
            raise ValueError("only nonnegative gradings are supported")
        dn = tuple(dual_names) if dual_names else tuple(f"d_{nm}" for nm in names)
        return cls((("v", len(names)),), grading, tuple(names), dn, False, tuple(0 for _ in names))

    @classmethod
    def parse(cls, text: str) -> "GradedRing":
        """Read ``P2``, ``P1xP1``, ``P2xP2xP2`` or ``blocks=[3,3,3]``."""
        t = text.strip().replace(" ", "")
        m = re.fullmatch(r"blocks=\[(\d+(?:,\d+)*)\]", t)
        if m:
            return cls.product([int(x) for x in m.group(1).split(",")])
        if re.fullmatch(r"P\d+(?:[xX]P\d+)*", t):
            return cls.product([int(p) + 1 for p in re.findall(r"P(\d+)", t)])
        raise ValueError(f"unrecognised ring descriptor {text!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def rank(self) -> int:
        """Length s of multidegrees."""
        return len(self.grading[0])

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.blocks)

    def block_of(self, i: int) -> int:
        return self._block_of[i]

    def block_vars(self, b: int) -> list[int]:
        return [i for i in range(self.nvars) if self._block_of[i] == b]

    @property
    def single_block(self) -> bool:
        return len(self.blocks) == 1 and self.rank == 1

    @property
    def irrelevant_gens(self) -> list[Monomial]:
        out = []
        for pick in itertools.product(*[self.block_vars(b) for b in range(len(self.blocks))]):
            e = [0] * self.nvars
            for i in pick:
                e[i] += 1
            out.append(tuple(e))
        return out

    @property
    def nef_gens(self) -> list[Multidegree]:
        return [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]

    @property
    def one(self) -> Multidegree:
        return tuple(1 for _ in range(self.rank))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def degree(self, e: Monomial) -> Multidegree:
        s = self.rank
        out = [0] * s
        for i, a in enumerate(e):
            if a:
                g = self.grading[i]
                for j in range(s):
                    out[j] += a * g[j]
        return tuple(out)

    def normalize_degree(self, v) -> Multidegree:
        if isinstance(v, int):
            v = (v,)
        v = tuple(int(x) for x in v)
        if len(v) != self.rank:
            raise ValueError(f"degree {v} has wrong length for this ring")
        return v

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): ONE})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, e: Sequence[int], c=1) -> "Polynomial":
        return Polynomial(self, {tuple(e): to_qq(c)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: to_qq(c)})

    def __str__(self) -> str:
        if self.validated:
            return "x".join(f"P{k - 1}" for k in self.block_sizes)
        return f"graded({','.join(self.names)})"


def graded_piece_dimension(ring: GradedRing, v) -> int:
    v = ring.normalize_degree(v)
    if any(x < 0 for x in v):
        return 0
    if ring.validated:
        out = 1
        for k, d in zip(ring.block_sizes, v):
            out *= comb(d + k - 1, k - 1)
        return out
    return len(monomial_basis(ring, v))


_BASIS_CACHE: dict = {}


def monomial_basis(ring: GradedRing, v) -> list[Monomial]:
    """Monomials of degree v, listed from largest to smallest in grevlex."""
    v = ring.normalize_degree(v)
    key = (ring, v)
    hit = _BASIS_CACHE.get(key)
    if hit is not None:
        return list(hit)
    if any(x < 0 for x in v):
        out: list[Monomial] = []
    elif ring.validated:
        per_block = [list(_compositions(d, k)) for k, d in zip(ring.block_sizes, v)]
        out = [sum(p, ()) for p in itertools.product(*per_block)]
    else:
        out = _general_basis(ring, v)
    from .groebner import GREVLEX_KEY
    out.sort(key=GREVLEX_KEY, reverse=True)
    _BASIS_CACHE[key] = tuple(out)
    return list(out)


def _general_basis(ring: GradedRing, v: Multidegree) -> list[Monomial]:
    out = []

    def rec(i: int, rem: list[int], cur: list[int]):
        if i == ring.nvars:
            if all(x == 0 for x in rem):
                out.append(tuple(cur))
            return
        g = ring.grading[i]
        a = 0
        while all(r - a * x >= 0 for r, x in zip(rem, g)):
            cur.append(a)
            rec(i + 1, [r - a * x for r, x in zip(rem, g)], cur)
            cur.pop()
            a += 1

    rec(0, list(v), [])
    return out


def monomials_up_to(ring: GradedRing, v) -> list[Monomial]:
    """All monomials of degree <= v componentwise."""
    v = ring.normalize_degree(v)
    out = []
    for u in itertools.product(*[range(x + 1) for x in v]):
        out.extend(monomial_basis(ring, u))
    return out


def degree_box(v: Sequence[int]) -> list[Multidegree]:
    return [tuple(u) for u in itertools.product(*[range(x + 1) for x in v])]


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: GradedRing, terms: Mapping[Monomial, object] | None = None,
                 _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            n = ring.nvars
            for e, c in (terms or {}).items():
                e = tuple(int(x) for x in e)
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e}")
                c = to_qq(c)
                if c:
                    clean[e] = clean.get(e, ZERO) + c
                    if not clean[e]:
                        del clean[e]
            self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: GradedRing, terms: dict) -> "Polynomial":
        return cls(ring, terms, _trusted=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> list[Monomial]:
        from .groebner import GREVLEX_KEY
        return sorted(self.terms, key=GREVLEX_KEY, reverse=True)

    def coefficient(self, e: Monomial):
        return self.terms.get(tuple(e), ZERO)

    def degrees(self) -> set[Multidegree]:
        return {self.ring.degree(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Multidegree:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return next(iter(ds))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_qq(other)
            if not c:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {e: c * a for e, a in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = to_qq(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * (ONE / c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((e, str(c)) for e, c in self.terms.items()))
        return self._hash

    def monic(self) -> "Polynomial":
        """Scale so the grevlex-leading coefficient is 1."""
        if not self.terms:
            return self
        lead = self.monomials()[0]
        return self / self.terms[lead]

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or self.ring.names
        if not self.terms:
            return "0"
        parts = []
        for e in self.monomials():
            c = self.terms[e]
            mono = "*".join(
                nm if a == 1 else f"{nm}^{a}" for nm, a in zip(names, e) if a
            )
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if mono:
                body = mono if a == 1 else f"{_fmt_q(a)}*{mono}"
            else:
                body = _fmt_q(a)
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r})"


def _fmt_q(c) -> str:
    c = QQ(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def homogeneous_components(p: Polynomial) -> dict[Multidegree, Polynomial]:
    parts: dict[Multidegree, dict] = {}
    for e, c in p.terms.items():
        parts.setdefault(p.ring.degree(e), {})[e] = c
    return {d: Polynomial._raw(p.ring, t) for d, t in sorted(parts.items())}


class Ideal:
    """Finitely generated homogeneous ideal."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: GradedRing, gens: Iterable[Polynomial] = (), check: bool = True):
        self.ring = ring
        seen = set()
        out = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if check and not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            key = g.monic()
            if key in seen:
                continue
            seen.add(key)
            out.append(g)
        self.gens = tuple(out)

    @classmethod
    def monomial(cls, ring: GradedRing, monos: Iterable[Monomial]) -> "Ideal":
        return cls(ring, [Polynomial._raw(ring, {tuple(m): ONE}) for m in monos])

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise ValueError("ideals live in different rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def generator_degrees(self) -> list[Multidegree]:
        return [g.degree() for g in self.gens]

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"
