"""Commutative polynomials with an involution and Buchberger Groebner bases.

Polynomials are dicts from exponent tuples to raw field values.  The
involution is a permutation of the variables (x <-> xs, y <-> ys); ideals
built through :class:`StarIdeal` are closed under it.
"""
from __future__ import annotations

import re
import time
from dataclasses import dataclass

import sympy

from .exactmath import Field, FieldElement, parse_field


class ResourceLimit(RuntimeError):
    """A Groebner computation exceeded its configured budget."""


@dataclass(frozen=True)
class GBConfig:
    max_basis: int = 400
    max_degree: int = 40
    max_steps: int = 20000
    max_seconds: float | None = None


DEFAULT_CONFIG = GBConfig()


# monomial orders ------------------------------------------------------------

def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """degrevlex, lex, or a block order eliminating the first ``block`` variables."""

    kind: str = "degrevlex"
    block: int = 0

    def key(self, e):
        if self.kind == "degrevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        if self.kind == "block":
            return (_grevlex_key(e[:self.block]), _grevlex_key(e[self.block:]))
        raise ValueError(f"unknown order {self.kind}")


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(n_front: int) -> MonomialOrder:
    return MonomialOrder("block", n_front)


# rings and polynomials ------------------------------------------------------

_ALIASES = {"x*": "xs", "y*": "ys", "z": "xs", "t": "ys"}


class PolyRing:
    """K[v_1..v_n] with a monomial order and an optional variable involution."""

    def __init__(self, field: Field, names, order: MonomialOrder = DEGREVLEX, star=None):
        if isinstance(field, str):
            field = parse_field(field)
        self.field = field
        self.names = tuple(names)
        self.n = len(self.names)
        self.order = order
        if star is None:
            star = _default_star(self.names)
        self.star_perm = tuple(star)
        self._symbols = [sympy.Symbol(nm) for nm in self.names]

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"PolyRing({self.field}, {self.names}, {self.order.kind})"

    def with_order(self, order: MonomialOrder, names=None) -> "PolyRing":
        names = self.names if names is None else tuple(names)
        perm = {self.names[i]: self.names[j] for i, j in enumerate(self.star_perm)}
        star = [names.index(perm[nm]) for nm in names]
        return PolyRing(self.field, names, order, star)

    def key(self, e):
        return self.order.key(e)

    # constructors
    def zero(self) -> "Poly":
        return Poly(self, {})

    def const(self, c) -> "Poly":
        c = self.field.convert(c)
        return Poly(self, {} if self.field.is_zero(c) else {(0,) * self.n: c})

    def one(self) -> "Poly":
        return self.const(1)

    def resolve(self, name: str) -> str:
        """Variable name, reading x*, y*, z, t as xs, ys unless the ring has them."""
        return name if name in self.names else _ALIASES.get(name, name)

    def var(self, name: str) -> "Poly":
        i = self.names.index(self.resolve(name))
        e = [0] * self.n
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(nm) for nm in self.names]

    def monomial(self, e, c=1) -> "Poly":
        c = self.field.convert(c)
        return Poly(self, {} if self.field.is_zero(c) else {tuple(e): c})

    def parse(self, text: str) -> "Poly":
        """Parse text in the ring variables; ``x*`` may be written ``xs``."""
        t = text.replace("^", "**")
        t = re.sub(r"\b([xy])\*(?![*\w(])", r"\1s", t)
        local = {nm: s for nm, s in zip(self.names, self._symbols)}
        params = getattr(self.field, "params", ())
        for p in params:
            local[p] = sympy.Symbol(p)
        expr = sympy.sympify(t, locals=local)
        return self.from_sympy(expr)

    def from_sympy(self, expr) -> "Poly":
        expr = sympy.expand(expr)
        if expr == 0:
            return self.zero()
        poly = sympy.Poly(expr, *self._symbols)
        terms = {}
        for mon, coeff in poly.terms():
            c = self.field.convert(sympy.Rational(coeff)) if coeff.is_Rational else \
                self.field.parse(str(coeff))
            if not self.field.is_zero(c):
                terms[tuple(mon)] = c
        return Poly(self, terms)

    def __call__(self, text) -> "Poly":
        return self.parse(text)


def _default_star(names):
    perm = []
    for nm in names:
        if nm.endswith("s") and nm[:-1] in names:
            perm.append(names.index(nm[:-1]))
        elif nm + "s" in names:
            perm.append(names.index(nm + "s"))
        else:
            perm.append(names.index(nm))
    return perm


class Poly:
    __slots__ = ("ring", "terms")
    absorbs_scalars = True   # field elements defer mixed arithmetic to us

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lm(self):
        return max(self.terms, key=self.ring.key)

    def lc(self):
        return self.terms[self.lm()]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> set:
        return {self.ring.names[i] for e in self.terms for i, x in enumerate(e) if x}

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    # arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring.field != self.ring.field or other.ring.names != self.ring.names:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = F.add(out[e], c)
                if F.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        F = self.ring.field
        c = F.convert(c)
        if F.is_zero(c):
            return self.ring.zero()
        return Poly(self.ring, {e: F.mul(c, v) for e, v in self.terms.items()})

    def mul_term(self, mono, c) -> "Poly":
        F = self.ring.field
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, mono)): F.mul(c, v)
                                for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        F = self.ring.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = F.mul(c1, c2)
                if e in out:
                    v = F.add(out[e], v)
                    if F.is_zero(v):
                        del out[e]
                        continue
                out[e] = v
        return Poly(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def star(self) -> "Poly":
        perm = self.ring.star_perm
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(e)
            for i, x in enumerate(e):
                new[perm[i]] = x
            out[tuple(new)] = c
        return Poly(self.ring, out)

    def subs(self, values: dict) -> "Poly":
        """Substitute polynomials (or scalars) for named variables."""
        R = self.ring
        images = []
        for nm in R.names:
            v = values.get(nm, values.get(_ALIASES.get(nm, nm)))
            images.append(R.var(nm) if v is None else (v if isinstance(v, Poly) else R.const(v)))
        out = R.zero()
        for e, c in self.terms.items():
            t = R.const(FieldElement(R.field, c))
            for img, k in zip(images, e):
                if k:
                    t = t * img ** k
            out = out + t
        return out

    def evaluate(self, values) -> FieldElement:
        """Evaluate at a point given as a list of scalars in variable order."""
        F = self.ring.field
        vals = [F.convert(v) for v in values]
        acc = F.zero
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = F.mul(t, F.pow(v, k))
            acc = F.add(acc, t)
        return FieldElement(F, acc)

    def to_ring(self, ring: PolyRing) -> "Poly":
        """Reinterpret in a ring with the same variables in another order."""
        idx = [self.ring.names.index(nm) for nm in ring.names]
        return Poly(ring, {tuple(e[i] for i in idx): c for e, c in self.terms.items()})

    def to_sympy(self):
        F = self.ring.field
        syms = self.ring._symbols
        expr = sympy.Integer(0)
        for e, c in self.terms.items():
            if hasattr(F, "params"):
                coeff = sympy.sympify(F.format(c).replace("^", "**"))
            elif F.characteristic:
                coeff = sympy.Integer(int(c))
            else:
                coeff = sympy.Rational(int(c.numerator), int(c.denominator))
            expr += coeff * sympy.Mul(*[s ** k for s, k in zip(syms, e)])
        return expr

    # comparison and text
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(nm if k == 1 else f"{nm}^{k}" for nm, k in zip(self.ring.names, e) if k)
            ctext = _coef_text(F, c)
            neg = ctext.startswith("-")
            mag = ctext[1:] if neg else ctext
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            parts.append(("- " if neg else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+") else "-" + out[2:]

    __repr__ = __str__


def _coef_text(F: Field, c) -> str:
    if F.characteristic == 0 and not hasattr(F, "params"):
        num, den = int(c.numerator), int(c.denominator)
        return str(num) if den == 1 else f"{num}/{den}"
    if hasattr(F, "params"):
        txt = F.format(c)
        return txt if not txt.startswith("-") else txt
    return str(int(c))


# division and Groebner bases ----------------------------------------------------

def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _quot(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _reduce(p: Poly, basis: list, full: bool = True) -> Poly:
    """Remainder of p on division by basis (each given with precomputed LM/LC)."""
    R = p.ring
    F = R.field
    key = R.key
    work = dict(p.terms)
    rem = {}
    lead = [(g.lm(), g.lc(), g) for g in basis if g.terms]
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, g in lead:
            if _divides(lm, m):
                q = _quot(m, lm)
                f = F.div(c, lc)
                for e, v in g.terms.items():
                    t = tuple(a + b for a, b in zip(e, q))
                    s = F.sub(work.get(t, F.zero), F.mul(f, v))
                    if F.is_zero(s):
                        work.pop(t, None)
                    else:
                        work[t] = s
                break
        else:
            rem[m] = c
            del work[m]
            if not full:
                rem.update(work)
                break
    return Poly(R, rem)


def normal_form(f: Poly, gb) -> Poly:
    return _reduce(f, list(gb))


def spoly(f: Poly, g: Poly) -> Poly:
    F = f.ring.field
    lf, lg = f.lm(), g.lm()
    L = _lcm(lf, lg)
    a = f.mul_term(_quot(L, lf), F.inv(f.lc()))
    b = g.mul_term(_quot(L, lg), F.inv(g.lc()))
    return a - b


def _update(pairs, basis, k, key):
    """Gebauer-Moeller update when basis[k] is added."""
    h = basis[k].lm()
    new = []
    for i in range(k):
        if basis[i] is None:
            continue
        new.append((i, k, _lcm(basis[i].lm(), h)))
    # chain criterion on new pairs
    kept = []
    for idx, (i, j, L) in enumerate(new):
        coprime = all(min(a, b) == 0 for a, b in zip(basis[i].lm(), h))
        dominated = any(_divides(L2, L) and L2 != L for (_, _, L2) in new)
        same_earlier = any(L2 == L for (_, _, L2) in new[:idx])
        if coprime or dominated or same_earlier:
            continue
        kept.append((i, j, L))
    old = []
    for (i, j, L) in pairs:
        if (_divides(h, L) and _lcm(basis[i].lm(), h) != L and _lcm(basis[j].lm(), h) != L):
            continue
        old.append((i, j, L))
    return old + kept


def groebner(polys, order: MonomialOrder | None = None, config: GBConfig = DEFAULT_CONFIG) -> list:
    """Reduced Groebner basis (monic, sorted by increasing leading monomial)."""
    polys = [p for p in polys if p.terms]
    if not polys:
        return []
    R = polys[0].ring
    if order is not None and order != R.order:
        R2 = R.with_order(order)
        polys = [p.to_ring(R2) for p in polys]
        R = R2
    key = R.key
    basis = []
    pairs = []
    for p in polys:
        p = _reduce(p, [b for b in basis if b is not None]).monic()
        if p.terms:
            basis.append(p)
            pairs = _update(pairs, basis, len(basis) - 1, key)
    steps = 0
    start = time.monotonic()
    while pairs:
        steps += 1
        if steps > config.max_steps:
            raise ResourceLimit(f"more than {config.max_steps} S-pair reductions")
        if config.max_seconds is not None and time.monotonic() - start > config.max_seconds:
            raise ResourceLimit(f"Groebner basis exceeded {config.max_seconds} seconds")
        # normal selection: smallest lcm first
        best = min(range(len(pairs)), key=lambda t: key(pairs[t][2]))
        i, j, L = pairs.pop(best)
        s = spoly(basis[i], basis[j])
        h = _reduce(s, [b for b in basis if b is not None])
        if not h.terms:
            continue
        h = h.monic()
        if h.total_degree() > config.max_degree:
            raise ResourceLimit(f"basis element of degree {h.total_degree()} exceeds {config.max_degree}")
        if h.is_constant():
            return [R.one()]
        basis.append(h)
        if sum(b is not None for b in basis) > config.max_basis:
            raise ResourceLimit(f"basis size exceeds {config.max_basis}")
        pairs = _update(pairs, basis, len(basis) - 1, key)
    return reduce_basis([b for b in basis if b is not None])


def reduce_basis(gb: list) -> list:
    """Minimal, interreduced, monic, sorted by leading monomial."""
    gb = [g.monic() for g in gb if g.terms]
    minimal = []
    for g in sorted(gb, key=lambda g: g.ring.key(g.lm())):
        if not any(_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(_reduce(g, others).monic())
    return sorted(out, key=lambda g: g.ring.key(g.lm()))


def is_groebner(gb: list) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            if _reduce(spoly(gb[i], gb[j]), gb).terms:
                return False
    return True


# ideals ------------------------------------------------------------------------

class StarIdeal:
    """Ideal generated by polynomials, closed under the ring involution."""

    def __init__(self, generators, ring: PolyRing | None = None, close: bool = True):
        gens = [g for g in generators if g.terms]
        if ring is None:
            if not gens:
                raise ValueError("need a ring for an empty ideal")
            ring = gens[0].ring
        self.ring = ring
        out = []
        for g in gens:
            for h in ((g, g.star()) if close else (g,)):
                if h not in out:
                    out.append(h)
        self.generators = out
        self._gb = None

    def groebner(self, config: GBConfig = DEFAULT_CONFIG) -> list:
        if self._gb is None:
            self._gb = groebner(self.generators, config=config) if self.generators else []
        return self._gb

    def contains(self, f: Poly) -> bool:
        return not normal_form(f, self.groebner()).terms

    def is_star_closed(self) -> bool:
        gb = self.groebner()
        return all(not normal_form(g.star(), gb).terms for g in self.generators)


Ideal = StarIdeal


def is_whole_ring(I, config: GBConfig = DEFAULT_CONFIG) -> bool:
    gens = I.generators if isinstance(I, StarIdeal) else list(I)
    gb = groebner(gens, config=config)
    return len(gb) == 1 and gb[0].is_constant()


def eliminate(I, drop_vars, config: GBConfig = DEFAULT_CONFIG) -> list:
    """Reduced basis of I intersected with the subring without drop_vars."""
    gens = I.generators if isinstance(I, StarIdeal) else list(I)
    if not gens:
        return []
    R = gens[0].ring
    drop = [R.resolve(v) for v in drop_vars]
    names = tuple(drop) + tuple(nm for nm in R.names if nm not in drop)
    R2 = R.with_order(block_order(len(drop)), names)
    gb = groebner([g.to_ring(R2) for g in gens], config=config)
    keep = [g for g in gb if not (g.variables() & set(drop))]
    # present the result in the original variable order with degrevlex
    R3 = R.with_order(DEGREVLEX)
    return reduce_basis([g.to_ring(R3) for g in keep])


def verify_factorization(f: Poly, factors) -> bool:
    prod = f.ring.one()
    for g in factors:
        prod = prod * g
    return prod == f


def standard_monomials(gb: list, max_degree: int = 12, include_one: bool = False):
    """Monomials not divisible by any leading monomial, or None if infinitely many."""
    if not gb:
        return None
    R = gb[0].ring
    leads = [g.lm() for g in gb]
    # zero-dimensional iff every variable has a pure power among the leads
    for i in range(R.n):
        if not any(all((k == 0) == (j != i) for j, k in enumerate(e)) for e in leads):
            return None
    out = []
    frontier = [(0,) * R.n]
    seen = set(frontier)
    while frontier:
        nxt = []
        for e in frontier:
            if any(_divides(l, e) for l in leads):
                continue
            out.append(e)
            for i in range(R.n):
                f = list(e)
                f[i] += 1
                f = tuple(f)
                if f not in seen and sum(f) <= max_degree:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    if not include_one:
        out = [e for e in out if sum(e)]
    return sorted(out, key=R.key)


def quotient_dimension(gb: list, include_one: bool = False):
    mons = standard_monomials(gb, include_one=include_one)
    return None if mons is None else len(mons)
