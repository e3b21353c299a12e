"""Gröbner bases and ideal operations.

The engine works on raw dictionaries ``exponent tuple -> rational``.  The
same code handles ideals and submodules of free modules: a module term is
an exponent tuple whose last entry is the component index.
"""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .ring import (
    ONE,
    ZERO,
    GradedRing,
    Ideal,
    Monomial,
    Polynomial,
    mono_divides,
    mono_lcm,
    monomial_basis,
)


def GREVLEX_KEY(e: Sequence[int]) -> tuple:
    """Grevlex with the first variable largest."""
    return (sum(e), tuple(-x for x in reversed(e)))


class _KeyCache(dict):
    __slots__ = ("fn",)

    def __init__(self, fn: Callable):
        super().__init__()
        self.fn = fn

    def __missing__(self, e):
        k = self.fn(e)
        self[e] = k
        return k


@dataclass(frozen=True)
class MonomialOrder:
    """Global monomial order.

    ``perm`` lists variable indices from largest to smallest.  Weight orders
    compare ``w . e`` first and break ties with grevlex under ``perm``.
    """

    kind: str
    perm: tuple[int, ...]
    weight: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "weight"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("order permutation must list every variable once")
        if self.kind == "weight":
            if self.weight is None or len(self.weight) != len(self.perm):
                raise ValueError("weight vector length must match the variables")
            if any(x < 0 for x in self.weight):
                raise ValueError("weights must be nonnegative for a global order")

    @classmethod
    def grevlex(cls, n: int) -> "MonomialOrder":
        return cls("grevlex", tuple(range(n)))

    @classmethod
    def lex(cls, n: int) -> "MonomialOrder":
        return cls("lex", tuple(range(n)))

    def key_function(self) -> Callable:
        perm = self.perm
        rev = tuple(reversed(perm))
        if self.kind == "lex":
            if perm == tuple(range(len(perm))):
                return tuple
            return lambda e: tuple(e[p] for p in perm)
        if perm == tuple(range(len(perm))):
            grev = GREVLEX_KEY
        else:
            def grev(e):
                return (sum(e), tuple(-e[p] for p in rev))
        if self.kind == "grevlex":
            return grev
        w = self.weight
        return lambda e: (sum(a * b for a, b in zip(w, e)), grev(e))

    def keys(self) -> _KeyCache:
        return _order_cache(self)

    def weight_of(self, e: Monomial) -> int:
        return sum(a * b for a, b in zip(self.weight, e))

    def describe(self, ring: GradedRing) -> str:
        chain = "<".join(ring.names[i] for i in reversed(self.perm))
        if self.kind == "weight":
            return f"weight:[{','.join(map(str, self.weight))}]:{chain}"
        return f"{self.kind}:{chain}"


_ORDER_KEYS: dict = {}


def _order_cache(order: MonomialOrder) -> _KeyCache:
    kc = _ORDER_KEYS.get(order)
    if kc is None:
        kc = _KeyCache(order.key_function())
        _ORDER_KEYS[order] = kc
    elif len(kc) > 2_000_000:
        kc.clear()
    return kc


def parse_order(text: str | None, ring: GradedRing) -> MonomialOrder:
    """Read ``grevlex``, ``grevlex:y0<y1<y2``, ``lex:c3<c2<...<a1``,
    ``weight:[1,2,3,...]`` (optionally followed by ``:chain``).

    A chain lists variables from smallest to largest; ``>`` chains are read
    the other way round.  ``...`` stands for the omitted variables, taken
    in the ring's default order.
    """
    n = ring.nvars
    if text is None or not text.strip():
        return MonomialOrder.grevlex(n)
    t = text.strip().replace(" ", "")
    m = re.fullmatch(r"(lex|grevlex|weight)(?::\[([-\d,]+)\])?(?::(.+))?", t)
    if not m:
        raise ValueError(f"unrecognised order descriptor {text!r}")
    kind, wtxt, chain = m.groups()
    weight = None
    if kind == "weight":
        if wtxt is None:
            raise ValueError("weight order needs a weight vector, e.g. weight:[1,2,3]")
        weight = tuple(int(x) for x in wtxt.split(","))
    elif wtxt is not None:
        raise ValueError(f"{kind} order takes no weight vector")
    perm = tuple(range(n)) if chain is None else _parse_chain(chain, ring)
    return MonomialOrder(kind, perm, weight)


def _parse_chain(chain: str, ring: GradedRing) -> tuple[int, ...]:
    if "<" in chain and ">" in chain:
        raise ValueError("order chain mixes < and >")
    if ">" in chain:
        toks = chain.split(">")
        toks.reverse()
    else:
        toks = chain.split("<")
    idx: list = []
    for tok in toks:
        if tok in ("...", "…"):
            idx.append(None)
            continue
        if tok not in ring.names:
            raise ValueError(f"unknown variable {tok!r} in order descriptor")
        idx.append(ring.index(tok))
    named = [i for i in idx if i is not None]
    if len(set(named)) != len(named):
        raise ValueError("variable repeated in order descriptor")
    missing = [i for i in range(ring.nvars) if i not in named]
    if idx.count(None) > 1:
        raise ValueError("at most one ellipsis allowed in an order chain")
    if None in idx:
        pos = idx.index(None)
        # smallest-to-largest list; default order has index 0 largest
        idx = idx[:pos] + sorted(missing, reverse=True) + idx[pos + 1:]
    elif missing:
        raise ValueError("order chain must list every variable")
    return tuple(reversed(idx))


# ---------------------------------------------------------------------------
# raw engine

def _divides_mod(a: Monomial, b: Monomial) -> bool:
    if a[-1] != b[-1]:
        return False
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _shift(p: dict, u: Monomial, c=ONE) -> dict:
    return {tuple(x + y for x, y in zip(e, u)): a * c for e, a in p.items()}


def _leading(p: dict, keys) -> Monomial:
    return max(p, key=keys.__getitem__)


def _monic(p: dict, keys) -> dict:
    lt = _leading(p, keys)
    c = p[lt]
    if c == 1:
        return p
    inv = ONE / c
    return {e: a * inv for e, a in p.items()}


def _find(m: Monomial, lts: Sequence[Monomial], divides) -> int:
    for i, lt in enumerate(lts):
        if divides(lt, m):
            return i
    return -1


def reduce_raw(p: dict, lts: Sequence[Monomial], polys: Sequence[dict], keys,
               module: bool = False, full: bool = True,
               quotients: dict | None = None) -> dict:
    """Divide p by monic polys with leading terms lts.

    When ``quotients`` is a dict, cofactors are accumulated into it as
    ``index -> {monomial: coeff}``.
    """
    divides = _divides_mod if module else _divides
    p = dict(p)
    rem: dict = {}
    kget = keys.__getitem__
    while p:
        m = max(p, key=kget)
        c = p[m]
        i = _find(m, lts, divides)
        if i < 0:
            if not full:
                rem.update(p)
                break
            rem[m] = c
            del p[m]
            continue
        lt = lts[i]
        u = tuple(y - x for x, y in zip(lt, m))
        if module:
            u = u[:-1] + (0,)
        if quotients is not None:
            q = quotients.setdefault(i, {})
            v = q.get(u, ZERO) + c
            if v:
                q[u] = v
            else:
                del q[u]
        for e, a in polys[i].items():
            t = tuple(x + y for x, y in zip(e, u))
            v = p.get(t, ZERO) - c * a
            if v:
                p[t] = v
            else:
                del p[t]
    return rem


class _PairQueue:
    """Gebauer–Möller bookkeeping with normal (smallest lcm first) selection."""

    def __init__(self, keys, module: bool):
        self.keys = keys
        self.module = module
        self.lts: list[Monomial] = []
        self.active: list[bool] = []
        self.pairs: dict[tuple[int, int], Monomial] = {}
        self.heap: list = []
        self.counter = 0

    def _lcm(self, a, b):
        if self.module:
            if a[-1] != b[-1]:
                return None
            return mono_lcm(a[:-1], b[:-1]) + (a[-1],)
        return mono_lcm(a, b)

    def _coprime(self, a, b) -> bool:
        if self.module:
            return False
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def add_existing(self, lt: Monomial) -> int:
        """Register an element whose pairs are already known to reduce to 0."""
        self.lts.append(lt)
        self.active.append(True)
        return len(self.lts) - 1

    def update(self, lt: Monomial) -> int:
        divides = _divides_mod if self.module else _divides
        h = len(self.lts)
        self.lts.append(lt)
        self.active.append(False)
        cand = []
        for g, glt in enumerate(self.lts[:h]):
            if not self.active[g]:
                continue
            l = self._lcm(glt, lt)
            if l is None:
                continue
            cand.append((g, l, self._coprime(glt, lt)))
        kept = []
        for idx, (g, l, cop) in enumerate(cand):
            if cop:
                kept.append((g, l, cop))
                continue
            redundant = False
            for g2, l2, _ in cand[idx + 1:]:
                if divides(l2, l):
                    redundant = True
                    break
            if not redundant:
                for g2, l2, _ in kept:
                    if divides(l2, l):
                        redundant = True
                        break
            if not redundant:
                kept.append((g, l, cop))
        for (a, b), l in list(self.pairs.items()):
            if divides(lt, l):
                la = self._lcm(self.lts[a], lt)
                lb = self._lcm(self.lts[b], lt)
                if la != l and lb != l:
                    del self.pairs[(a, b)]
        for g, l, cop in kept:
            if cop:
                continue
            self.pairs[(g, h)] = l
            self.counter += 1
            heapq.heappush(self.heap, (self.keys[l], self.counter, (g, h)))
        for g in range(h):
            if self.active[g] and divides(lt, self.lts[g]):
                self.active[g] = False
        self.active[h] = True
        return h

    def pop(self):
        while self.heap:
            _, _, pr = heapq.heappop(self.heap)
            if pr in self.pairs:
                del self.pairs[pr]
                return pr
        return None


def spoly(f: dict, g: dict, lf: Monomial, lg: Monomial, module: bool = False) -> dict:
    """S-polynomial of monic f, g."""
    if module:
        l = mono_lcm(lf[:-1], lg[:-1]) + (0,)
        uf = tuple(a - b for a, b in zip(l[:-1], lf[:-1])) + (0,)
        ug = tuple(a - b for a, b in zip(l[:-1], lg[:-1])) + (0,)
    else:
        l = mono_lcm(lf, lg)
        uf = tuple(a - b for a, b in zip(l, lf))
        ug = tuple(a - b for a, b in zip(l, lg))
    out = _shift(f, uf)
    for e, a in g.items():
        t = tuple(x + y for x, y in zip(e, ug))
        v = out.get(t, ZERO) - a
        if v:
            out[t] = v
        else:
            del out[t]
    return out


def groebner_raw(polys: Iterable[dict], keys, module: bool = False,
                 basis: Sequence[dict] = ()) -> list[dict]:
    """Reduced monic Gröbner basis of ``basis + polys``.

    ``basis`` must already be a Gröbner basis; only pairs involving the new
    polynomials are formed.
    """
    store: list[dict] = []
    lts: list[Monomial] = []
    queue = _PairQueue(keys, module)
    for b in basis:
        b = _monic(b, keys)
        store.append(b)
        lt = _leading(b, keys)
        lts.append(lt)
        queue.add_existing(lt)

    def insert(p: dict):
        p = reduce_raw(p, [lts[i] for i in range(len(lts)) if queue.active[i]],
                       [store[i] for i in range(len(lts)) if queue.active[i]],
                       keys, module)
        if not p:
            return
        p = _monic(p, keys)
        store.append(p)
        lts.append(_leading(p, keys))
        queue.update(lts[-1])

    for p in polys:
        if p:
            insert(dict(p))
    while True:
        pr = queue.pop()
        if pr is None:
            break
        a, b = pr
        s = spoly(store[a], store[b], lts[a], lts[b], module)
        if s:
            insert(s)
    return interreduce_raw([store[i] for i in range(len(store)) if queue.active[i]], keys, module)


def interreduce_raw(polys: Sequence[dict], keys, module: bool = False) -> list[dict]:
    """Reduced basis from a Gröbner basis (minimalise, tail-reduce, sort ascending)."""
    divides = _divides_mod if module else _divides
    items = []
    for p in polys:
        if p:
            p = _monic(p, keys)
            items.append((_leading(p, keys), p))
    items.sort(key=lambda t: keys[t[0]])
    minimal: list[tuple[Monomial, dict]] = []
    for lt, p in items:
        if any(divides(l2, lt) for l2, _ in minimal):
            continue
        minimal.append((lt, p))
    lts = [lt for lt, _ in minimal]
    out = []
    for i, (lt, p) in enumerate(minimal):
        others_l = lts[:i] + lts[i + 1:]
        others_p = [q for j, (_, q) in enumerate(minimal) if j != i]
        tail = dict(p)
        del tail[lt]
        red = reduce_raw(tail, others_l, others_p, keys, module) if tail else {}
        red[lt] = ONE
        out.append(red)
    return out


# ---------------------------------------------------------------------------
# monomial ideal helpers

def minimal_monomials(monos: Iterable[Monomial]) -> list[Monomial]:
    ms = sorted(set(tuple(m) for m in monos), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in ms:
        if not any(_divides(a, m) for a in out):
            out.append(m)
    return out


def monomial_in(m: Monomial, gens: Sequence[Monomial]) -> bool:
    return any(_divides(g, m) for g in gens)


def monomial_intersect(a: Sequence[Monomial], b: Sequence[Monomial]) -> list[Monomial]:
    return minimal_monomials(mono_lcm(x, y) for x in a for y in b)


def monomial_saturate_var(gens: Sequence[Monomial], i: int) -> list[Monomial]:
    return minimal_monomials(tuple(0 if j == i else x for j, x in enumerate(m)) for m in gens)


def monomial_colon(gens: Sequence[Monomial], f: Monomial) -> list[Monomial]:
    return minimal_monomials(tuple(max(x - y, 0) for x, y in zip(m, f)) for m in gens)


# ---------------------------------------------------------------------------
# public objects

class GroebnerBasis:
    """Reduced monic Gröbner basis, sorted by increasing leading monomial."""

    def __init__(self, ring: GradedRing, order: MonomialOrder, raw: list[dict],
                 source: Ideal | None = None):
        self.ring = ring
        self.order = order
        self.keys = order.keys()
        self.raw = raw
        self.lts = [_leading(p, self.keys) for p in raw]
        self.source = source
        self._tables: dict = {}
        self._elements = None

    @property
    def elements(self) -> list[Polynomial]:
        if self._elements is None:
            self._elements = [Polynomial._raw(self.ring, dict(p)) for p in self.raw]
        return self._elements

    def __len__(self) -> int:
        return len(self.raw)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list[Monomial]:
        return list(self.lts)

    def is_unit(self) -> bool:
        return any(sum(lt) == 0 for lt in self.lts)

    def is_monomial(self) -> bool:
        return all(len(p) == 1 for p in self.raw)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements, check=False)

    def initial_ideal(self) -> Ideal:
        return Ideal.monomial(self.ring, self.lts)

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        return Polynomial._raw(self.ring, reduce_raw(p.terms, self.lts, self.raw, self.keys))

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p).terms

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def same_ideal(self, other: "GroebnerBasis") -> bool:
        if self.order == other.order:
            return self.raw == other.raw
        return all(self.contains(g) for g in other.elements) and all(
            other.contains(g) for g in self.elements)

    # degree-wise data

    def is_standard(self, m: Monomial) -> bool:
        return not any(_divides(lt, m) for lt in self.lts)

    def standard_monomials(self, v) -> list[Monomial]:
        return list(self.table(v)[0])

    def hilbert_function(self, v) -> int:
        v = self.ring.normalize_degree(v)
        if any(x < 0 for x in v):
            return 0
        from ._kernels import count_standard
        return count_standard(monomial_basis(self.ring, v), self.lts)

    def table(self, v):
        """(standard monomials, index map, normal-form map) in degree v.

        The normal-form map sends every monomial of degree v to a sparse
        vector ``{standard index: coeff}``.
        """
        v = self.ring.normalize_degree(v)
        hit = self._tables.get(v)
        if hit is not None:
            return hit
        basis = monomial_basis(self.ring, v)
        kget = self.keys.__getitem__
        asc = sorted(basis, key=kget)
        lts = self.lts
        std = [m for m in basis if not any(_divides(lt, m) for lt in lts)]
        std_index = {m: i for i, m in enumerate(std)}
        nf: dict[Monomial, dict[int, object]] = {}
        for m in asc:
            if m in std_index:
                nf[m] = {std_index[m]: ONE}
                continue
            i = _find(m, lts, _divides)
            lt = lts[i]
            u = tuple(y - x for x, y in zip(lt, m))
            vec: dict[int, object] = {}
            for e, a in self.raw[i].items():
                if e == lt:
                    continue
                t = tuple(x + y for x, y in zip(e, u))
                for j, b in nf[t].items():
                    w = vec.get(j, ZERO) - a * b
                    if w:
                        vec[j] = w
                    else:
                        del vec[j]
            nf[m] = vec
        out = (std, std_index, nf)
        self._tables[v] = out
        return out

    def nf_vector(self, p: Polynomial | dict, v=None) -> dict[int, object]:
        """Coordinates of the normal form of homogeneous p in the standard basis."""
        terms = p.terms if isinstance(p, Polynomial) else p
        if not terms:
            return {}
        if v is None:
            v = self.ring.degree(next(iter(terms)))
        nf = self.table(v)[2]
        vec: dict[int, object] = {}
        for m, c in terms.items():
            for j, b in nf[m].items():
                w = vec.get(j, ZERO) + c * b
                if w:
                    vec[j] = w
                else:
                    del vec[j]
        return vec

    def __repr__(self) -> str:
        return f"GroebnerBasis({[str(g) for g in self.elements]})"


_GB_CACHE: dict = {}


def _canon_gens(I: Ideal, order: MonomialOrder):
    return (I.ring, order, frozenset(
        frozenset(g.monic().terms.items()) for g in I.gens))


def buchberger(I: Ideal, order: MonomialOrder | str | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of I (deterministic, cached)."""
    if not isinstance(order, MonomialOrder):
        order = parse_order(order, I.ring)
    key = _canon_gens(I, order)
    hit = _GB_CACHE.get(key)
    if hit is not None:
        return hit
    keys = order.keys()
    if I.is_monomial():
        raw = [{m: ONE} for m in sorted(minimal_monomials(next(iter(g.terms)) for g in I.gens),
                                         key=keys.__getitem__)]
    else:
        raw = groebner_raw([g.terms for g in I.gens], keys)
    gb = GroebnerBasis(I.ring, order, raw, I)
    if len(_GB_CACHE) > 4096:
        _GB_CACHE.clear()
    _GB_CACHE[key] = gb
    return gb


def extend_groebner(gb: GroebnerBasis, new: Iterable[Polynomial]) -> GroebnerBasis:
    """Gröbner basis of gb's ideal plus new generators, reusing gb's pairs."""
    new = [p for p in new if p.terms]
    src = Ideal(gb.ring, list(gb.source.gens if gb.source else gb.elements) + new)
    if not new:
        return gb
    if gb.is_monomial() and all(p.is_monomial() for p in new):
        return buchberger(src, gb.order)
    raw = groebner_raw([p.terms for p in new], gb.keys, basis=gb.raw)
    out = GroebnerBasis(gb.ring, gb.order, raw, src)
    _GB_CACHE[_canon_gens(src, gb.order)] = out
    return out


def is_groebner(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """True iff every S-polynomial of the given elements reduces to zero."""
    keys = order.keys()
    raw = [_monic(dict(p.terms), keys) for p in polys if p.terms]
    lts = [_leading(p, keys) for p in raw]
    for i in range(len(raw)):
        for j in range(i + 1, len(raw)):
            if all(x == 0 or y == 0 for x, y in zip(lts[i], lts[j])):
                continue
            s = spoly(raw[i], raw[j], lts[i], lts[j])
            if reduce_raw(s, lts, raw, keys):
                return False
    return True


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def initial_ideal(I: Ideal, order: MonomialOrder | str | None = None) -> Ideal:
    return buchberger(I, order).initial_ideal()


def weight_initial_ideal(I: Ideal, order: MonomialOrder) -> Ideal:
    """Ideal of w-initial forms (leading forms for the weight alone)."""
    if order.kind != "weight":
        raise ValueError("weight-initial forms need a weight order")
    gb = buchberger(I, order)
    forms = []
    for p in gb.raw:
        top = max(order.weight_of(e) for e in p)
        forms.append(Polynomial._raw(I.ring, {e: c for e, c in p.items()
                                               if order.weight_of(e) == top}))
    return Ideal(I.ring, forms)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return buchberger(I).raw == buchberger(J).raw


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is a subset of I."""
    return buchberger(I).contains_ideal(J)


def canonical_gens(I: Ideal) -> Ideal:
    """The reduced grevlex Gröbner basis as a generator list."""
    return buchberger(I).ideal()


# ---------------------------------------------------------------------------
# intersection, colon, saturation

def _elim_key(n: int):
    def key(e):
        body = e[:n]
        return (e[n], sum(body), tuple(-x for x in reversed(body)))
    return key


_ELIM_KEYS: dict = {}


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of t from t·I + (1−t)·J."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    if I.is_monomial() and J.is_monomial():
        a = [next(iter(g.terms)) for g in I.gens]
        b = [next(iter(g.terms)) for g in J.gens]
        return Ideal.monomial(ring, monomial_intersect(a, b))
    gi, gj = buchberger(I), buchberger(J)
    if gi.raw == gj.raw:
        return gi.ideal()
    n = ring.nvars
    keys = _ELIM_KEYS.get(n)
    if keys is None:
        keys = _ELIM_KEYS[n] = _KeyCache(_elim_key(n))
    polys = []
    for g in gi.raw:
        polys.append({e + (1,): c for e, c in g.items()})
    for g in gj.raw:
        p = {e + (0,): c for e, c in g.items()}
        for e, c in g.items():
            p[e + (1,)] = -c
        polys.append(p)
    raw = groebner_raw(polys, keys)
    gens = [Polynomial._raw(ring, {e[:n]: c for e, c in p.items()})
            for p in raw if all(e[n] == 0 for e in p)]
    return buchberger(Ideal(ring, gens)).ideal()


def _exact_divide(p: dict, f: dict, keys) -> dict:
    fm = _monic(f, keys)
    lf = _leading(f, keys)
    scale = f[lf]
    q: dict = {}
    rem = reduce_raw(p, [lf], [fm], keys, quotients=q)
    if rem:
        raise ArithmeticError("division is not exact")
    out = q.get(0, {})
    return {e: c / scale for e, c in out.items()}


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) for a nonzero homogeneous f."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("colon needs a homogeneous polynomial")
    ring = I.ring
    if f.degree() == (0,) * ring.rank:
        return Ideal(ring, I.gens)
    if I.is_monomial() and f.is_monomial():
        fm = next(iter(f.terms))
        return Ideal.monomial(ring, monomial_colon([next(iter(g.terms)) for g in I.gens], fm))
    inter = intersect(I, Ideal(ring, [f]))
    keys = MonomialOrder.grevlex(ring.nvars).keys()
    gens = [Polynomial._raw(ring, _exact_divide(g.terms, f.terms, keys)) for g in inter.gens]
    return buchberger(Ideal(ring, gens)).ideal()


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection of (I : g) over generators g of J."""
    if not J.gens:
        return Ideal(I.ring, [I.ring.const(1)])
    out = None
    for g in J.gens:
        c = colon(I, g)
        out = c if out is None else intersect(out, c)
    return out


def _variable_index(f: Polynomial) -> int:
    if len(f.terms) != 1:
        return -1
    e, c = next(iter(f.terms.items()))
    if sum(e) == 1:
        return e.index(1)
    return -1


def saturate_variable(I: Ideal, i: int) -> Ideal:
    """(I : y_i^∞) by grevlex with y_i smallest, dividing out powers of y_i."""
    ring = I.ring
    if I.is_monomial():
        return Ideal.monomial(ring, monomial_saturate_var([next(iter(g.terms)) for g in I.gens], i))
    if not ring.validated:
        return _saturate_iterated(I, ring.var(i))
    perm = tuple(j for j in range(ring.nvars) if j != i) + (i,)
    order = MonomialOrder("grevlex", perm)
    gb = buchberger(I, order)
    gens = []
    for p in gb.raw:
        k = min(e[i] for e in p)
        if k:
            p = {e[:i] + (e[i] - k,) + e[i + 1:]: c for e, c in p.items()}
        gens.append(Polynomial._raw(ring, p))
    return buchberger(Ideal(ring, gens)).ideal()


def _saturate_iterated(I: Ideal, f: Polynomial) -> Ideal:
    cur = buchberger(I)
    while True:
        nxt = buchberger(colon(cur.ideal(), f))
        if nxt.raw == cur.raw:
            return cur.ideal()
        cur = nxt


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^∞), iterating colons until the Gröbner basis stops changing."""
    if f.is_zero():
        raise ValueError("saturation by the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("saturation needs a homogeneous polynomial")
    ring = I.ring
    if len(f.terms) == 1 and ring.validated:
        e = next(iter(f.terms))
        out = I
        for i, a in enumerate(e):
            if a:
                out = saturate_variable(out, i)
        return buchberger(out).ideal()
    return _saturate_iterated(I, f)


def _truncation_monomial(I: Ideal) -> list[Monomial] | None:
    """If I agrees in high degree with a monomial ideal, return its generators.

    Uses the degree u = componentwise maximum of generator degrees: the
    truncation at u generates I in all degrees >= u, and saturation only
    depends on such a truncation.
    """
    ring = I.ring
    degs = I.generator_degrees()
    u = tuple(max(d[j] for d in degs) for j in range(ring.rank))
    gb = buchberger(I)
    std, std_index, nf = gb.table(u)
    basis = monomial_basis(ring, u)
    if len(basis) - len(std) > 4000:
        return None
    # I_u is spanned by monomials iff every nonstandard monomial has NF 0
    # or the NF map is a coordinate projection with monomial kernel.
    inside = []
    for m in basis:
        vec = nf[m]
        if not vec:
            inside.append(m)
        elif m not in std_index:
            return None
    if len(inside) != len(basis) - len(std):
        return None
    return inside


def saturate_irrelevant(I: Ideal) -> Ideal:
    """(I : B^∞), block by block; each block is the intersection over its
    variables of the variable saturations."""
    ring = I.ring
    if not I.gens:
        return Ideal(ring, [])
    gb = buchberger(I)
    if gb.is_unit():
        return Ideal(ring, [ring.const(1)])
    monos = None
    if gb.is_monomial():
        monos = list(gb.lts)
    elif ring.validated:
        monos = _truncation_monomial(I)
    if monos is not None:
        for b in range(len(ring.blocks)):
            acc = None
            for i in ring.block_vars(b):
                s = monomial_saturate_var(monos, i)
                acc = s if acc is None else monomial_intersect(acc, s)
            monos = acc
        return buchberger(Ideal.monomial(ring, monos)).ideal()
    cur = gb.ideal()
    for b in range(len(ring.blocks)):
        acc = None
        for i in ring.block_vars(b):
            s = saturate_variable(cur, i)
            acc = s if acc is None else intersect(acc, s)
        cur = acc
    return buchberger(cur).ideal()


def is_saturated(I: Ideal) -> bool:
    return buchberger(saturate_irrelevant(I)).raw == buchberger(I).raw


def graded_piece_basis(I: Ideal, v) -> list[Polynomial]:
    """A basis of I_v: m - NF(m) for the nonstandard monomials m of degree v."""
    gb = buchberger(I)
    ring = I.ring
    std, idx, nf = gb.table(v)
    out = []
    for m in monomial_basis(ring, v):
        if m in idx:
            continue
        p = {m: ONE}
        for j, c in nf[m].items():
            p[std[j]] = -c
        out.append(Polynomial._raw(ring, p))
    return out


def truncation(I: Ideal, d: int) -> Ideal:
    """I_{>=d} on a Z-graded ring: spanned by the pieces I_d, ..., I_D with D the
    largest generator degree."""
    ring = I.ring
    if ring.rank != 1:
        raise ValueError("truncation at an integer degree needs a Z-graded ring")
    top = max([g.degree()[0] for g in I.gens] + [d])
    gens = []
    for k in range(d, top + 1):
        gens.extend(graded_piece_basis(I, (k,)))
    return Ideal(ring, gens)
