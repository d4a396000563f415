"""Free associative algebra K<x, y, x*, y*> and truncated two-sided Groebner bases.

Letters are indexed 0..3 as x, y, z, t with z = x* and t = y*; a word is a
tuple of letter indices.  Words are ordered degree-lexicographically with
x < y < z < t.  The involution reverses a word and swaps x<->z, y<->t.

Completion is truncated at a degree bound, so a computed basis need not be
a full Groebner basis; but every reduction to 0 is an honest membership
proof, since each basis element is built from the generators.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field

import sympy

from .exactmath import Field, FunctionField, QQ_FIELD, parse_field
from .polyring import ResourceLimit, _coef_text

LETTERS = ("x", "y", "z", "t")
RREF_METHOD = "GJ"
_STAR_LETTER = (2, 3, 0, 1)
_TEXT_ALIASES = {"xs": "z", "ys": "t"}


def word_key(w):
    return (len(w), w)


def star_word(w):
    return tuple(_STAR_LETTER[c] for c in reversed(w))


def word_str(w) -> str:
    return "*".join(LETTERS[c] for c in w) if w else "1"


class FreeAlgebra:
    """The free algebra over a coefficient field, in the letters x, y, z, t."""

    def __init__(self, field: Field | str = QQ_FIELD):
        if isinstance(field, str):
            field = parse_field(field)
        self.field = field
        self._symbols = {nm: sympy.Symbol(nm, commutative=False) for nm in LETTERS}

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and other.field == self.field

    def __hash__(self):
        return hash(("free", self.field))

    def zero(self) -> "FreePoly":
        return FreePoly(self, {})

    def const(self, c) -> "FreePoly":
        c = self.field.convert(c)
        return FreePoly(self, {} if self.field.is_zero(c) else {(): c})

    def one(self) -> "FreePoly":
        return self.const(1)

    def letter(self, name: str) -> "FreePoly":
        name = _TEXT_ALIASES.get(name, name)
        return FreePoly(self, {(LETTERS.index(name),): self.field.one})

    def gens(self):
        return [self.letter(nm) for nm in LETTERS]

    def word(self, w, c=1) -> "FreePoly":
        c = self.field.convert(c)
        return FreePoly(self, {} if self.field.is_zero(c) else {tuple(w): c})

    def parse(self, text: str) -> "FreePoly":
        """Parse text such as ``2*l1*x*x + l2*(x*t + y*z) - a*y``.

        ``*`` is the product; x*, y* are written ``z``/``xs`` and ``t``/``ys``.
        Parameter names of a rational-function field are commutative scalars.
        """
        local = dict(self._symbols)
        local["xs"], local["ys"] = local["z"], local["t"]
        for p in getattr(self.field, "params", ()):
            local[p] = sympy.Symbol(p)
        expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals=local))
        out = self.zero()
        for term in sympy.Add.make_args(expr):
            if term == 0:
                continue
            comm, nc = term.args_cnc()
            coeff = sympy.Mul(*comm)
            w = []
            for factor in nc:
                base, exp = factor.as_base_exp()
                w.extend([LETTERS.index(str(base))] * int(exp))
            if coeff.is_Rational:
                c = self.field.convert(sympy.Rational(coeff))
            else:
                c = self.field.parse(str(coeff))
            out = out + FreePoly(self, {tuple(w): c})
        return out

    def __call__(self, text: str) -> "FreePoly":
        return self.parse(text)


class FreePoly:
    __slots__ = ("alg", "terms")
    absorbs_scalars = True   # field elements defer mixed arithmetic to us

    def __init__(self, alg: FreeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lw(self):
        """Leading word."""
        return max(self.terms, key=word_key)

    def lc(self):
        return self.terms[self.lw()]

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, FreePoly):
            return other
        return self.alg.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.alg.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = F.add(out[w], c) if w in out else c
            if F.is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
        return FreePoly(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.alg.field
        return FreePoly(self.alg, {w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "FreePoly":
        F = self.alg.field
        c = F.convert(c)
        if F.is_zero(c):
            return self.alg.zero()
        return FreePoly(self.alg, {w: F.mul(c, v) for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FreePoly):
            return self.scale(other)
        F = self.alg.field
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = F.mul(c1, c2)
                if w in out:
                    v = F.add(out[w], v)
                    if F.is_zero(v):
                        del out[w]
                        continue
                out[w] = v
        return FreePoly(self.alg, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def sandwich(self, left, right, c) -> "FreePoly":
        """c * left * self * right for words left, right."""
        F = self.alg.field
        return FreePoly(self.alg, {left + w + right: F.mul(c, v) for w, v in self.terms.items()})

    def monic(self) -> "FreePoly":
        if not self.terms:
            return self
        return self.scale(self.alg.field.inv(self.lc()))

    def star(self) -> "FreePoly":
        return FreePoly(self.alg, {star_word(w): c for w, c in self.terms.items()})

    def specialize(self, alg: "FreeAlgebra", values: dict) -> "FreePoly":
        """Substitute values for the parameters of a rational-function field."""
        F = self.alg.field
        out = {}
        for w, c in self.terms.items():
            expr = sympy.sympify(F.format(c).replace("^", "**")).subs(values)
            v = alg.field.convert(sympy.Rational(expr))
            if not alg.field.is_zero(v):
                out[w] = v
        return FreePoly(alg, out)

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.alg.field
        parts = []
        for w, c in self.sorted_terms():
            ctext = _coef_text(F, c)
            if isinstance(F, FunctionField) and any(op in ctext.lstrip("-") for op in "+-/"):
                ctext = f"({ctext})"
            neg = ctext.startswith("-")
            mag = ctext[1:] if neg else ctext
            if w:
                body = word_str(w) if mag == "1" else f"{mag}*{word_str(w)}"
            else:
                body = mag
            parts.append(("- " if neg else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+") else "-" + out[2:]

    __repr__ = __str__


# rewriting and completion -------------------------------------------------------

def _find(sub, w):
    n = len(sub)
    for i in range(len(w) - n + 1):
        if w[i:i + n] == sub:
            return i
    return -1


def _reduce(f: FreePoly, rules: list) -> FreePoly:
    """Full reduction of f by monic rules; rules are (leading word, poly)."""
    F = f.alg.field
    work = dict(f.terms)
    rem = {}
    while work:
        w = max(work, key=word_key)
        c = work[w]
        for lw, g in rules:
            i = _find(lw, w)
            if i >= 0:
                left, right = w[:i], w[i + len(lw):]
                for gw, gc in g.terms.items():
                    t = left + gw + right
                    s = F.sub(work.get(t, F.zero), F.mul(c, gc))
                    if F.is_zero(s):
                        work.pop(t, None)
                    else:
                        work[t] = s
                break
        else:
            rem[w] = c
            del work[w]
    return FreePoly(f.alg, rem)


def _overlaps(u, v):
    """Lengths k with a proper overlap: the last k letters of u begin v."""
    return [k for k in range(1, min(len(u), len(v))) if u[-k:] == v[:k]]


@dataclass
class TruncatedGB:
    """Elements found by overlap completion up to ``degree_bound``.

    ``complete_below`` is the degree up to which every overlap was resolved;
    it equals ``degree_bound`` when nothing was skipped.
    """

    elements: list
    degree_bound: int
    complete_below: int
    alg: FreeAlgebra = dc_field(repr=False, default=None)

    @property
    def rules(self):
        return [(g.lw(), g) for g in self.elements]

    def linear_part(self) -> list:
        return [g for g in self.elements if g.degree() <= 1]

    def is_whole(self) -> bool:
        return any(g.degree() == 0 for g in self.elements)

    def contains_letters(self) -> list:
        """Letters whose normal form is 0."""
        if self.alg is None:
            return []
        return [nm for nm in LETTERS if not nc_normal_form(self.alg.letter(nm), self)]


def _interreduce(elements: list) -> list:
    out = []
    for g in sorted(elements, key=lambda g: word_key(g.lw())):
        h = _reduce(g, [(x.lw(), x) for x in out]).monic()
        if h.terms:
            out = [x for x in out if _find(h.lw(), x.lw()) < 0]
            out.append(h)
    # a final pass so no element has reducible tails
    final = []
    for i, g in enumerate(out):
        others = [(x.lw(), x) for j, x in enumerate(out) if j != i]
        final.append(_reduce(g, others).monic())
    return sorted((g for g in final if g.terms), key=lambda g: word_key(g.lw()))


def nc_groebner(gens, degree_bound: int = 6, method: str = "linear", max_steps: int = 5000,
                max_basis: int = 500, max_rows: int = 60000,
                max_seconds: float | None = None) -> TruncatedGB:
    """Two-sided Groebner basis elements, truncated at ``degree_bound``.

    ``method="overlap"`` is plain overlap (S-polynomial) completion.
    ``method="linear"`` does the same completion a degree at a time with
    linear algebra: every S-polynomial and reduction step of degree <= d is a
    combination of products u*g*v of degree <= d, so the row space of all such
    products, closed under re-multiplication, contains everything the overlap
    loop would find.  Reduced echelon forms keep rational coefficients small,
    where the pairwise loop suffers from coefficient swell.
    """
    gens = [g for g in gens if g.terms]
    if not gens:
        return TruncatedGB([], degree_bound, degree_bound, None)
    if max(g.degree() for g in gens) > degree_bound:
        raise ValueError("degree bound below the generator degree")
    if method == "overlap":
        return _overlap_completion(gens, degree_bound, max_steps, max_basis)
    if method == "linear":
        return _linear_completion(gens, degree_bound, max_rows, max_seconds)
    raise ValueError(f"unknown method {method!r}")


def _overlap_completion(gens, degree_bound, max_steps, max_basis) -> TruncatedGB:
    alg = gens[0].alg
    basis = []          # list of monic FreePoly, None when retired
    pairs = []          # (overlap degree, i, j, k)
    skipped = None
    todo = list(gens)
    steps = 0

    def add(h):
        idx = len(basis)
        basis.append(h)
        hw = h.lw()
        # retire elements whose leading word contains the new one
        for i, g in enumerate(basis[:-1]):
            if g is not None and _find(hw, g.lw()) >= 0:
                basis[i] = None
                todo.append(g)
        # keep tails reduced; this is what keeps rational coefficients small
        live = [(g.lw(), g) for g in basis if g is not None]
        for i, g in enumerate(basis[:-1]):
            if g is not None and any(_find(hw, w) >= 0 for w in g.terms):
                others = [(w, r) for w, r in live if r is not g]
                basis[i] = _reduce(g, others).monic()
        for i, g in enumerate(basis):
            if g is None:
                continue
            gw = g.lw()
            for k in _overlaps(gw, hw):
                pairs.append((len(gw) + len(hw) - k, i, idx, k))
            if i != idx:
                for k in _overlaps(hw, gw):
                    pairs.append((len(gw) + len(hw) - k, idx, i, k))

    while todo or pairs:
        steps += 1
        if steps > max_steps:
            raise ResourceLimit(f"more than {max_steps} completion steps")
        if todo:
            todo.sort(key=lambda g: word_key(g.lw()) if g.terms else (0, ()))
            f = todo.pop(0)
        else:
            pairs.sort()
            d, i, j, k = pairs.pop(0)
            if basis[i] is None or basis[j] is None:
                continue
            if d > degree_bound:
                skipped = d if skipped is None else min(skipped, d)
                continue
            gi, gj = basis[i], basis[j]
            u, v = gi.lw(), gj.lw()
            f = gi.sandwich((), v[k:], alg.field.one) - gj.sandwich(u[:-k], (), alg.field.one)
        live = [(g.lw(), g) for g in basis if g is not None]
        h = _reduce(f, live)
        if not h.terms:
            continue
        h = h.monic()
        if h.degree() == 0:
            one = alg.one()
            return TruncatedGB([one], degree_bound, degree_bound, alg)
        add(h)
        if sum(g is not None for g in basis) > max_basis:
            raise ResourceLimit(f"basis size exceeds {max_basis}")
    elements = _interreduce([g for g in basis if g is not None])
    complete = degree_bound if skipped is None else skipped - 1
    return TruncatedGB(elements, degree_bound, complete, alg)


def _overlap_defect(elements: list, degree_bound: int):
    """Smallest degree <= bound of an overlap that does not reduce to 0, or None."""
    rules = [(g.lw(), g) for g in elements]
    worst = None
    for gi in elements:
        for gj in elements:
            u, v = gi.lw(), gj.lw()
            for k in _overlaps(u, v):
                d = len(u) + len(v) - k
                if d > degree_bound or (worst is not None and d >= worst):
                    continue
                one = gi.alg.field.one
                f = gi.sandwich((), v[k:], one) - gj.sandwich(u[:-k], (), one)
                if _reduce(f, rules).terms:
                    worst = d
    return worst


def _sympy_domain(F: Field):
    """A sympy domain for sparse row reduction, with converters."""
    from sympy import GF, QQ
    if isinstance(F, FunctionField):
        dom = F._sympy_field.to_domain()
        return dom, (lambda c: c), F._canon
    if F.characteristic:
        dom = GF(F.p)
        return dom, (lambda c: dom(int(c))), (lambda c: int(c) % F.p)
    return QQ, (lambda c: QQ(int(c.numerator), int(c.denominator))), F.convert


def _words_upto(n: int):
    out = [()]
    layer = [()]
    for _ in range(n):
        layer = [w + (c,) for w in layer for c in range(4)]
        out.extend(layer)
    return out


def _linear_completion(gens, degree_bound, max_rows, max_seconds=None) -> TruncatedGB:
    from sympy.polys.matrices import DomainMatrix

    t0 = time.monotonic()

    def check_time():
        if max_seconds is not None and time.monotonic() - t0 > max_seconds:
            raise ResourceLimit(f"linear completion exceeded {max_seconds} seconds")

    alg = gens[0].alg
    F = alg.field
    dom, to_dom, from_dom = _sympy_domain(F)
    rows_polys = _interreduce(gens)
    elements = rows_polys
    start = max(g.degree() for g in gens)
    for d in range(start, degree_bound + 1):
        words = sorted(_words_upto(d), key=word_key, reverse=True)
        col = {w: i for i, w in enumerate(words)}
        pivots_seen = None
        while True:
            rows = []
            for g in rows_polys:
                room = d - g.degree()
                for L in _words_upto(room):
                    for R in _words_upto(room - len(L)):
                        rows.append({col[L + w + R]: to_dom(c) for w, c in g.terms.items()})
                if len(rows) > max_rows:
                    raise ResourceLimit(f"more than {max_rows} rows at degree {d}")
            check_time()
            M = DomainMatrix({i: r for i, r in enumerate(rows)}, (len(rows), len(words)), dom)
            R, pivots = M.rref(method=RREF_METHOD)
            check_time()
            dok = R.to_dok()
            found = [dict() for _ in pivots]
            for (i, j), v in dok.items():
                if i < len(pivots):
                    found[i][words[j]] = from_dom(v)
            rows_polys = [FreePoly(alg, t) for t in found if t]
            if any(p.degree() == 0 for p in rows_polys):
                return TruncatedGB([alg.one()], degree_bound, degree_bound, alg)
            if pivots == pivots_seen:
                break
            pivots_seen = pivots
        # the row space is now closed under products up to degree d, so the
        # rows with minimal leading words are already a reduced basis
        leads = [g.lw() for g in rows_polys]
        elements = sorted((g for g in rows_polys
                           if not any(l != g.lw() and _find(l, g.lw()) >= 0 for l in leads)),
                          key=lambda g: word_key(g.lw()))
        if {g.lw() for g in elements} >= {(i,) for i in range(4)}:
            break
        if _overlap_defect(elements, degree_bound) is None:
            break
    defect = _overlap_defect(elements, degree_bound)
    complete = degree_bound if defect is None else defect - 1
    return TruncatedGB(elements, degree_bound, complete, alg)


def nc_normal_form(f: FreePoly, basis) -> FreePoly:
    rules = basis.rules if isinstance(basis, TruncatedGB) else [(g.lw(), g.monic()) for g in basis]
    return _reduce(f, rules)


def nc_dimension_probe(basis, degree: int) -> int:
    """Number of words of the given degree containing no leading word."""
    elements = basis.elements if isinstance(basis, TruncatedGB) else list(basis)
    leads = [g.lw() for g in elements]
    count = 0
    words = [()]
    for _ in range(degree):
        words = [w + (c,) for w in words for c in range(4)
                 if not any(_find(l, w + (c,)) >= 0 for l in leads)]
    for w in words:
        count += 1
    return count


def star_close(gens) -> list:
    out = []
    for g in gens:
        for h in (g, g.star()):
            if h.terms and h not in out:
                out.append(h)
    return out


# appendix systems ---------------------------------------------------------------

_P_XX = "2*l1*x*x+2*l2*x*z+2*l3*z*x+2*l4*z*z"
_P_ZZ = "2*l1*z*z+2*l2*x*z+2*l3*z*x+2*l4*x*x"
_P_YY = "2*l1*y*y+2*l2*y*t+2*l3*t*y+2*l4*t*t"
_P_TT = "2*l1*t*t+2*l2*y*t+2*l3*t*y+2*l4*y*y"
_P_XY = "l1*(x*y+y*x)+l2*(x*t+y*z)+l3*(t*x+z*y)+l4*(z*t+t*z)"
_P_ZT = "l1*(z*t+t*z)+l2*(x*t+y*z)+l3*(t*x+z*y)+l4*(x*y+y*x)"

APPENDIX_SYSTEMS = {
    "appendix-A3": {
        "params": ("a", "l1", "l2", "l3", "l4"),
        "gens": [f"{_P_XX}-x", f"{_P_ZZ}-z", f"{_P_YY}-a*x-y", f"{_P_TT}-a*z-t",
                 _P_XY, _P_ZT, "x*z-z*x", "y*t-t*y"],
        "expect": ("x", "z"),
    },
    "appendix-A4": {
        "params": ("a", "l1", "l2", "l3", "l4"),
        "gens": [f"{_P_XX}-a*y", f"{_P_ZZ}-a*t", f"{_P_YY}-x-y", f"{_P_TT}-z-t", _P_XY, _P_ZT],
        "expect": ("x", "y", "z", "t"),
    },
    "appendix-A5ab": {
        "params": ("a", "b", "l1", "l2", "l3", "l4"),
        "gens": [f"{_P_XX}-x-b*y", f"{_P_ZZ}-z-b*t", f"{_P_YY}-a*x-y", f"{_P_TT}-a*z-t",
                 _P_XY, _P_ZT],
        "expect": ("x", "y", "z", "t"),
    },
}


def appendix_system(name: str, field: Field | None = None) -> list:
    """Generators of a named appendix system over Q(params) or a given field."""
    spec = APPENDIX_SYSTEMS[name]
    if field is None:
        field = FunctionField(QQ_FIELD, spec["params"])
    alg = FreeAlgebra(field)
    return [alg.parse(g) for g in spec["gens"]]


@dataclass
class AppendixResult:
    name: str
    mode: str                       # "parametric" or "specialized"
    members: dict                   # letter -> normal form is zero
    points: list = dc_field(default_factory=list)
    rejected: int = 0

    @property
    def certified(self) -> bool:
        return all(self.members[nm] for nm in APPENDIX_SYSTEMS[self.name]["expect"])

    def to_json(self) -> dict:
        return {"system": self.name, "mode": self.mode, "certified": self.certified,
                "in_ideal": {k: v for k, v in self.members.items()},
                "points": [{k: str(v) for k, v in p.items()} for p in self.points],
                "rejected": self.rejected}


def _leading_words_kept(param_gens, spec_gens) -> bool:
    return all(g.terms and g.lw() == p.lw() for p, g in zip(param_gens, spec_gens))


def verify_appendix(name: str, mode: str = "specialized", samples: int = 5, seed: int = 0,
                    degree_bound: int = 6, max_tries: int = 50,
                    max_seconds: float | None = None) -> AppendixResult:
    """Certify the appendix memberships by reduction to zero.

    Parametric mode works over Q(params).  Specialized mode substitutes random
    nonzero rationals and requires every sample to certify; a sample is
    rejected (and redrawn) when it changes a generator's leading word or makes
    two parameters collide where the system is stated for distinct ones.
    """
    spec = APPENDIX_SYSTEMS[name]
    if mode == "parametric":
        gens = appendix_system(name)
        gb = nc_groebner(gens, degree_bound, max_seconds=max_seconds)
        members = {nm: not nc_normal_form(gb.alg.letter(nm), gb) for nm in LETTERS}
        return AppendixResult(name, mode, members)
    rng = random.Random(seed)
    param_gens = appendix_system(name)
    alg = FreeAlgebra(QQ_FIELD)
    members = {nm: True for nm in LETTERS}
    points, rejected, tries = [], 0, 0
    while len(points) < samples:
        tries += 1
        if tries > max_tries:
            raise ResourceLimit("too many rejected specializations")
        values = {p: sympy.Rational(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 9))
                  for p in spec["params"]}
        if "b" in values and values["a"] == values["b"]:
            rejected += 1
            continue
        gens = [g.specialize(alg, {sympy.Symbol(k): v for k, v in values.items()})
                for g in param_gens]
        if not _leading_words_kept(param_gens, gens):
            rejected += 1
            continue
        gb = nc_groebner(gens, degree_bound)
        for nm in LETTERS:
            members[nm] = members[nm] and not nc_normal_form(alg.letter(nm), gb)
        points.append(values)
    return AppendixResult(name, mode, members, points, rejected)


# the A8 relation ------------------------------------------------------------------

def a8_system(alpha, field: Field = QQ_FIELD) -> list:
    """The three A8 generators with p built from k = (1-16a)/8, h = (1+16a)/8."""
    alg = FreeAlgebra(field)
    a = field(alpha)
    k = (1 - 16 * a) / 8
    h = (1 + 16 * a) / 8
    x, y, z, t = alg.gens()
    g1 = (x * x + z * z).scale((2 * k).value) + (x * z + z * x).scale((2 * h).value) - x
    g2 = (y * y + t * t).scale((2 * k).value) + (y * t + t * y).scale((2 * h).value) - x.scale(a.value)
    g3 = (x * y + y * x + z * t + t * z).scale(k.value) + (x * t + t * x + y * z + z * y).scale(h.value)
    return star_close([g1, g2, g3])


def a8_bracket(alpha, field: Field = QQ_FIELD) -> FreePoly:
    """(1/(4a) - 4)(y^2 + t^2) + (1/(4a) + 4)(y t + t y): the image of e1."""
    alg = FreeAlgebra(field)
    a = field(alpha)
    y, t = alg.letter("y"), alg.letter("t")
    c1 = 1 / (4 * a) - 4
    c2 = 1 / (4 * a) + 4
    return (y * y + t * t).scale(c1.value) + (y * t + t * y).scale(c2.value)


def a8_relation(alpha, field: Field = QQ_FIELD) -> FreePoly:
    """(y + t) o W read as the anticommutator (y+t)W + W(y+t)."""
    W = a8_bracket(alpha, field)
    alg = W.alg
    s = alg.letter("y") + alg.letter("t")
    return s * W + W * s
