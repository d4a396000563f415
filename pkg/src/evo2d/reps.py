"""Associative representations of two-dimensional evolution algebras.

A representation of A = (K^2, M) into an associative algebra B with
involution, relative to a bilinear *-polynomial p, is a linear map mu with
mu(ab) = p(mu(a), mu(b)).  On a natural basis this means

    p(mu e1, mu e1) = w11 mu e1 + w21 mu e2,
    p(mu e2, mu e2) = w12 mu e1 + w22 mu e2,
    p(mu e1, mu e2) = p(mu e2, mu e1) = 0.

The universal algebra is the free *-algebra on x = mu e1, y = mu e2 modulo
the *-ideal of those four relations (commutative version in polyring).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any

import sympy

from .classify import canonical_matrix
from .evoalg import StructureMatrix
from .exactmath import Field, FieldElement, Matrix, PrimeField, nth_root
from .freealg import FreeAlgebra, star_close
from .polyring import (DEFAULT_CONFIG, GBConfig, PolyRing, Poly, StarIdeal, eliminate, groebner,
                       normal_form, standard_monomials)


class CharacteristicError(ValueError):
    """The representation framework needs characteristic other than 2 and 3."""


def _check_char(F: Field):
    if F.characteristic in (2, 3):
        raise CharacteristicError(
            f"characteristic {F.characteristic} is excluded: universal representations "
            "are only set up for characteristic different from 2 and 3")


# bilinear *-polynomials -------------------------------------------------------------

TERM_NAMES = ("xy", "yx", "xy*", "y*x", "x*y", "yx*", "y*x*", "x*y*")


@dataclass(frozen=True)
class BilinearForm:
    """p(x,y) = sum of lambda_k times the eight degree-(1,1) *-monomials.

    Order: xy, yx, xy*, y*x, x*y, yx*, y*x*, x*y*.
    """

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 8:
            raise ValueError("a bilinear form has 8 coefficients")

    @classmethod
    def from_dict(cls, terms: dict) -> "BilinearForm":
        bad = set(terms) - set(TERM_NAMES)
        if bad:
            raise ValueError(f"unknown terms {sorted(bad)}")
        return cls(tuple(terms.get(nm, 0) for nm in TERM_NAMES))

    @classmethod
    def symmetric4(cls, l1, l2, l3, l4) -> "BilinearForm":
        """l1(xy+yx) + l2(xy*+yx*) + l3(y*x+x*y) + l4(x*y*+y*x*)."""
        return cls((l1, l1, l2, l3, l3, l2, l4, l4))

    @classmethod
    def commutative3(cls, l1, l2, l4) -> "BilinearForm":
        """l1 xy + l2(x*y + xy*) + l4 x*y*."""
        return cls((l1, 0, l2, 0, l2, 0, 0, l4))

    def nonzero_terms(self):
        return [(nm, c) for nm, c in zip(TERM_NAMES, self.coeffs) if not _is_zero_scalar(c)]

    def __call__(self, alg, a, b):
        """Evaluate p(a, b) in a *-algebra object (see StarAlgebra)."""
        sa, sb = alg.star(a), alg.star(b)
        pairs = {"xy": (a, b), "yx": (b, a), "xy*": (a, sb), "y*x": (sb, a),
                 "x*y": (sa, b), "yx*": (b, sa), "y*x*": (sb, sa), "x*y*": (sa, sb)}
        out = alg.zero()
        for nm, c in self.nonzero_terms():
            u, v = pairs[nm]
            out = alg.add(out, alg.scale(alg.mul(u, v), c))
        return out

    def __str__(self):
        parts = [f"{c}*{nm}" for nm, c in self.nonzero_terms()]
        return " + ".join(parts) if parts else "0"


def _is_zero_scalar(c) -> bool:
    if isinstance(c, (int, float)):
        return c == 0
    if isinstance(c, (FieldElement, Poly)):
        return c.is_zero()
    return c == 0


def a8_form(alpha, F: Field) -> BilinearForm:
    """k(xy+yx+x*y*+y*x*) + h(xy*+y*x+yx*+x*y), k = (1-16a)/8, h = (1+16a)/8."""
    a = F(alpha)
    k = (1 - 16 * a) / 8
    h = (1 + 16 * a) / 8
    return BilinearForm((k, k, h, h, h, h, k, k))


# *-algebras --------------------------------------------------------------------------

class StarAlgebra:
    """Interface: zero, add, sub, scale, mul, star, is_zero, coordinates."""

    field: Field

    def sub(self, a, b):
        return self.add(a, self.scale(b, -1))

    def equal(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))


TARGET_KINDS = ("zero", "left-kill", "right-kill", "split", "dual", "quad")
INVOLUTIONS = {
    "zero": ("id",),
    "left-kill": ("id", "neg"),
    "right-kill": ("id",),
    "split": ("id", "exchange"),
    "dual": ("id", "neg"),
    "quad": ("id", "conj"),
}


class InvolutiveAlgebra2(StarAlgebra):
    """The two-dimensional associative algebras with involution.

    Elements are pairs (u, v) of scalars.  Kinds:

      zero        all products 0
      left-kill   (x,y)(z,t) = (xz, 0); involution id or (x,-y)
      right-kill  (x,y)(z,t) = (0, xz); involution id
      split       (x,y)(z,t) = (xz, yt); involution id or exchange
      dual        u + v e with e^2 = 0; involution id or e* = -e
      quad        u + v s with s^2 = -b s - c; involution id or s* = -s - b

    Scalars may be field elements or polynomials (the search uses polynomial
    unknowns); so may the quad constants b, c.
    """

    def __init__(self, kind: str, field: Field, involution: str = "id", b=None, c=None,
                 check: bool = True):
        if kind not in TARGET_KINDS:
            raise ValueError(f"unknown target {kind!r}")
        if involution not in INVOLUTIONS[kind]:
            raise ValueError(f"involution {involution!r} not admissible for {kind}")
        if kind == "dual" and involution == "neg" and field.characteristic == 2:
            raise ValueError("the dual numbers only have the identity involution in characteristic 2")
        self.kind = kind
        self.field = field
        self.involution = involution
        if kind == "quad":
            self.b = field(0) if b is None else _lift(field, b)
            self.c = field(1) if c is None else _lift(field, c)
        else:
            self.b = self.c = None
        if check and all(isinstance(v, FieldElement) for v in (self.b, self.c) if v is not None):
            self._check_axioms()

    @classmethod
    def parse(cls, spec: str, field: Field, involution: str = "id") -> "InvolutiveAlgebra2":
        """Target specifier: zero, left-kill, right-kill, split, dual, quad(b,c)."""
        spec = spec.strip()
        if spec.startswith("quad"):
            inner = spec[4:].strip()
            b, c = ("0", "1")
            if inner:
                if not (inner.startswith("(") and inner.endswith(")")):
                    raise ValueError(f"bad target {spec!r}")
                b, c = [s.strip() for s in inner[1:-1].split(",")]
            return cls("quad", field, involution, field.parse(b) if isinstance(b, str) else b,
                       field.parse(c) if isinstance(c, str) else c)
        return cls(spec, field, involution)

    def __repr__(self):
        extra = f"({self.b},{self.c})" if self.kind == "quad" else ""
        return f"{self.kind}{extra}[{self.involution}]"

    def name(self) -> str:
        return repr(self)

    def element(self, u, v):
        return (_lift(self.field, u), _lift(self.field, v))

    def zero(self):
        return (self.field(0), self.field(0))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def scale(self, a, c):
        return (a[0] * c, a[1] * c)

    def mul(self, a, b):
        (x, y), (z, t) = a, b
        k = self.kind
        if k == "zero":
            return (x * 0, y * 0)
        if k == "left-kill":
            return (x * z, y * 0)
        if k == "right-kill":
            return (y * 0, x * z)
        if k == "split":
            return (x * z, y * t)
        if k == "dual":
            return (x * z, x * t + y * z)
        # quad: (x + y s)(z + t s) = xz - c yt + (xt + yz - b yt) s
        return (x * z - y * t * self.c, x * t + y * z - y * t * self.b)

    def star(self, a):
        x, y = a
        inv = self.involution
        if inv == "id":
            return a
        if inv == "neg":
            return (x, -y)
        if inv == "exchange":
            return (y, x)
        # conj: (x + y s)* = x + y(-s - b)
        return (x - y * self.b, -y)

    def is_zero(self, a) -> bool:
        return all(_is_zero_scalar(v) for v in a)

    def coordinates(self, a) -> list:
        return list(a)

    def is_commutative(self) -> bool:
        return True

    def basis(self):
        return [self.element(1, 0), self.element(0, 1)]

    def _check_axioms(self):
        B = self.basis()
        for a in B:
            if not self.equal(self.star(self.star(a)), a):
                raise ValueError(f"{self!r}: involution is not of order 2")
            for b in B:
                if not self.equal(self.star(self.mul(a, b)), self.mul(self.star(b), self.star(a))):
                    raise ValueError(f"{self!r}: involution is not an anti-automorphism")
                for c in B:
                    if not self.equal(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c))):
                        raise ValueError(f"{self!r}: product is not associative")

    def is_field_extension(self) -> bool:
        """For quad targets over Q or F_p: s^2 + b s + c irreducible."""
        if self.kind != "quad":
            return False
        disc = self.b * self.b - 4 * self.c
        return not disc.is_zero() and nth_root(disc, 2) is None


def complex_like(field: Field) -> InvolutiveAlgebra2:
    """K x K with (xz - yt, xt + yz) and (x, y)* = (x, -y)."""
    return InvolutiveAlgebra2("quad", field, "conj", 0, 1)


class MatrixStarAlgebra(StarAlgebra):
    """2x2 matrices with transpose or the involution [[a,b],[c,d]] -> [[d,-b],[-c,a]]."""

    def __init__(self, field: Field, involution: str = "transpose"):
        if involution not in ("transpose", "symplectic"):
            raise ValueError(f"unknown matrix involution {involution!r}")
        self.field = field
        self.involution = involution

    def __repr__(self):
        return f"M2[{self.involution}]"

    name = __repr__

    def zero(self):
        return Matrix.zeros(self.field, 2, 2)

    def add(self, a, b):
        return a + b

    def scale(self, a, c):
        return a.scale(c)

    def mul(self, a, b):
        return a @ b

    def star(self, a):
        if self.involution == "transpose":
            return a.transpose()
        return Matrix(self.field, [[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]])

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def coordinates(self, a) -> list:
        return [a[i, j] for i in range(2) for j in range(2)]

    def is_commutative(self) -> bool:
        return False


class QuotientStarAlgebra(StarAlgebra):
    """K[vars]/I for a *-ideal I, elements kept as normal forms."""

    def __init__(self, ideal: StarIdeal, config: GBConfig = DEFAULT_CONFIG):
        self.ideal = ideal
        self.ring = ideal.ring
        self.field = self.ring.field
        self.gb = ideal.groebner(config)

    def __repr__(self):
        return "K[" + ",".join(self.ring.names) + "]/(" + ", ".join(map(str, self.gb)) + ")"

    name = __repr__

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self.gb)

    def element(self, text_or_poly):
        if isinstance(text_or_poly, Poly):
            return self.reduce(text_or_poly)
        return self.reduce(self.ring.parse(str(text_or_poly)))

    def zero(self):
        return self.ring.zero()

    def add(self, a, b):
        return a + b

    def scale(self, a, c):
        return self.reduce(a * c)

    def mul(self, a, b):
        return self.reduce(a * b)

    def star(self, a):
        return self.reduce(a.star())

    def is_zero(self, a) -> bool:
        return self.reduce(a).is_zero()

    def coordinates(self, a):
        return self.reduce(a).terms

    def is_commutative(self) -> bool:
        return True


def _lift(F: Field, v):
    if isinstance(v, (FieldElement, Poly)):
        return v
    return F(v)


# representations -------------------------------------------------------------------

@dataclass
class Representation:
    algebra: StructureMatrix
    target: Any
    images: tuple
    p: BilinearForm

    def relations(self) -> dict:
        """Residuals of the four defining relations (all zero for a representation)."""
        M, B, p = self.algebra, self.target, self.p
        m1, m2 = self.images
        w = lambda i, j: M.w(i, j)
        return {
            "e1e1": B.sub(p(B, m1, m1), B.add(B.scale(m1, w(1, 1)), B.scale(m2, w(2, 1)))),
            "e2e2": B.sub(p(B, m2, m2), B.add(B.scale(m1, w(1, 2)), B.scale(m2, w(2, 2)))),
            "e1e2": p(B, m1, m2),
            "e2e1": p(B, m2, m1),
        }

    def is_valid(self) -> bool:
        return all(self.target.is_zero(v) for v in self.relations().values())

    def is_faithful(self) -> bool:
        return _independent(self.target, self.images)

    def to_json(self) -> dict:
        return {"target": self.target.name(), "p": str(self.p),
                "images": [_elem_text(v) for v in self.images],
                "valid": self.is_valid(), "faithful": self.is_faithful()}


def _elem_text(v) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(str(x) for x in v) + ")"
    return str(v)


def _independent(B, images) -> bool:
    coords = [B.coordinates(v) for v in images]
    if isinstance(coords[0], dict):
        keys = sorted(set(coords[0]) | set(coords[1]))
        F = B.field
        rows = [[FieldElement(F, c.get(k, F.zero)) for k in keys] for c in coords]
        if not keys:
            return False
    else:
        rows = coords
    return Matrix(B.field, [[x.value if isinstance(x, FieldElement) else x for x in r]
                            for r in rows]).rank() == 2


def check_representation(r: Representation) -> bool:
    """All four defining equations hold exactly."""
    return r.is_valid()


# universal presentations ---------------------------------------------------------------

def universal_presentation(M: StructureMatrix, p: BilinearForm, commutative: bool = False,
                           names=("x", "y", "xs", "ys")):
    """Generators of the *-ideal defining the universal algebra.

    Noncommutative: a *-closed list of FreePoly over K<x, y, x*, y*>.
    Commutative: a StarIdeal in K[names] (x* written xs).
    """
    F = M.field
    _check_char(F)
    if commutative:
        R = PolyRing(F, names)
        alg = _PolyStar(R)
        x, y = R.var("x"), R.var("y")
    else:
        A = FreeAlgebra(F)
        alg = _FreeStar(A)
        x, y = A.letter("x"), A.letter("y")
    w = lambda i, j: M.w(i, j).value
    gens = [
        p(alg, x, x) - x.scale(w(1, 1)) - y.scale(w(2, 1)),
        p(alg, y, y) - x.scale(w(1, 2)) - y.scale(w(2, 2)),
        p(alg, x, y),
        p(alg, y, x),
    ]
    if commutative:
        return StarIdeal(gens, ring=R)
    return star_close(gens)


class _PolyStar:
    def __init__(self, R):
        self.R = R

    def zero(self):
        return self.R.zero()

    def add(self, a, b):
        return a + b

    def scale(self, a, c):
        return a * c

    def mul(self, a, b):
        return a * b

    def star(self, a):
        return a.star()


class _FreeStar(_PolyStar):
    pass


# commutative universal algebras ----------------------------------------------------------

@dataclass
class CommutativeUniversal:
    ideal: StarIdeal
    gb: list
    basis: list | None           # standard monomials (degree >= 1) when finite-dimensional

    @property
    def dimension(self):
        return None if self.basis is None else len(self.basis)

    def mu(self):
        """Images of e1, e2 in the quotient (normal forms of x and y)."""
        R = self.ideal.ring
        return normal_form(R.var("x"), self.gb), normal_form(R.var("y"), self.gb)

    def is_faithful(self) -> bool:
        Q = QuotientStarAlgebra(self.ideal)
        return _independent(Q, self.mu())

    def to_json(self) -> dict:
        R = self.ideal.ring
        out = {"gb": [str(g) for g in self.gb], "dim": self.dimension,
               "faithful": self.is_faithful()}
        if self.basis is not None:
            out["basis"] = [str(R.monomial(e)) for e in self.basis]
        return out


def commutative_universal(M: StructureMatrix, p: BilinearForm, names=("x", "y", "xs", "ys"),
                          config: GBConfig = DEFAULT_CONFIG) -> CommutativeUniversal:
    I = universal_presentation(M, p, commutative=True, names=names)
    gb = I.groebner(config)
    return CommutativeUniversal(I, gb, standard_monomials(gb))


# nonexistence for A3, A4, A5ab -----------------------------------------------------------

@dataclass
class NonexistenceCertificate:
    label: str
    mode: str = "specialized"
    strata: list = dc_field(default_factory=list)   # dicts per lambda stratum

    @property
    def not_faithful(self) -> bool:
        return all(s["not_faithful"] for s in self.strata)

    def to_json(self) -> dict:
        return {"label": self.label, "mode": self.mode, "not_faithful": self.not_faithful,
                "strata": self.strata,
                "scope": "generic lambda and each lambda_i = 0; fully free lambda is not "
                         "claimed for the noncommutative algebra"}


def nonexistence_commutative(label: str, mode: str = "specialized", samples: int = 5,
                             seed: int = 0, config: GBConfig = DEFAULT_CONFIG) -> NonexistenceCertificate:
    """Certify that the commutative universal representation is not faithful.

    p is the symmetric four-parameter form.  Each stratum (generic lambda,
    then each lambda_i = 0) is certified when x reduces to 0 (mu(e1) = 0) or
    the ideal is the whole ring.  ``mode="parametric"`` works over
    Q(a[, b], l1..l4) and usually hits the resource guard; ``"specialized"``
    draws random nonzero rationals for the free parameters (a != b for A5ab).
    """
    import random
    from .exactmath import FunctionField, QQ_FIELD

    if label not in ("A3", "A4", "A5ab"):
        raise ValueError("nonexistence is certified for A3, A4 and A5ab")
    lam = ("l1", "l2", "l3", "l4")
    alg_params = ("a", "b") if label == "A5ab" else ("a",)
    cert = NonexistenceCertificate(label, mode)
    strata = [("generic", None)] + [(f"{nm}=0", i) for i, nm in enumerate(lam)]
    rng = random.Random(seed)

    def run(F, values, stratum, zero_idx):
        ps = [values[nm] for nm in alg_params]
        M = canonical_matrix(label, F, *ps)
        ls = [F(0) if i == zero_idx else values[nm] for i, nm in enumerate(lam)]
        I = universal_presentation(M, BilinearForm.symmetric4(*ls), commutative=True)
        gb = I.groebner(config)
        R = I.ring
        whole = len(gb) == 1 and gb[0].is_constant()
        nf = {v: str(normal_form(R.var(v), gb)) for v in R.names}
        return {"stratum": stratum, "whole_ring": whole, "normal_forms": nf,
                "not_faithful": whole or nf["x"] == "0" or nf["y"] == "0",
                "point": None if mode == "parametric" else
                {**{k: str(values[k]) for k in alg_params},
                 **{nm: str(c) for nm, c in zip(lam, ls)}}}

    if mode == "parametric":
        F = FunctionField(QQ_FIELD, alg_params + lam)
        values = {nm: F.parse(nm) for nm in alg_params + lam}
        for name, idx in strata:
            cert.strata.append(run(F, values, name, idx))
        return cert
    if mode != "specialized":
        raise ValueError(f"unknown mode {mode!r}")
    F = QQ_FIELD
    for name, idx in strata:
        for _ in range(samples):
            while True:
                values = {nm: F(sympy.Rational(rng.choice([-1, 1]) * rng.randint(1, 30),
                                               rng.randint(1, 7)))
                          for nm in alg_params + lam}
                if label == "A5ab" and (values["a"] == values["b"]
                                        or (values["a"] * values["b"] - 1).is_zero()):
                    continue
                break
            cert.strata.append(run(F, values, name, idx))
    return cert


# searching for representations into 2-dimensional targets -----------------------------

@dataclass
class SearchResult:
    found: Representation | None
    certificates: list

    @property
    def status(self) -> str:
        return "FOUND" if self.found is not None else "NONE"

    def to_json(self) -> dict:
        out = {"status": self.status, "targets": self.certificates}
        if self.found is not None:
            out["representation"] = self.found.to_json()
        return out


def _targets(F: Field):
    for kind in TARGET_KINDS:
        for inv in INVOLUTIONS[kind]:
            yield kind, inv


def constraint_system(M: StructureMatrix, kind: str, involution: str):
    """Polynomial constraints for a faithful representation into a target family.

    Unknowns: l1, l2, l4 (p = l1 xy + l2(x*y + xy*) + l4 x*y*, enough since
    every target is commutative), the images (a1, a2), (b1, b2) of e1, e2,
    the square class d of a quadratic target s^2 = d, and u with
    u * det(images) = 1.
    """
    F = M.field
    names = ["l1", "l2", "l4", "a1", "a2", "b1", "b2"]
    if kind == "quad":
        names.append("d")
    names.append("u")
    R = PolyRing(F, names, star=list(range(len(names))))
    v = {nm: R.var(nm) for nm in names}
    if kind == "quad":
        B = InvolutiveAlgebra2("quad", F, involution, R.zero(), -v["d"], check=False)
    else:
        B = InvolutiveAlgebra2(kind, F, involution, check=False)
    p = BilinearForm.commutative3(v["l1"], v["l2"], v["l4"])
    m1 = (v["a1"], v["a2"])
    m2 = (v["b1"], v["b2"])
    rep = Representation(M, B, (m1, m2), p)
    eqs = [c for res in rep.relations().values() for c in res]
    det = v["a1"] * v["b2"] - v["a2"] * v["b1"]
    eqs.append(v["u"] * det - 1)
    return R, [e for e in eqs if not e.is_zero()]


def search_rep_2dim(M: StructureMatrix, config: GBConfig = DEFAULT_CONFIG,
                    stop_at_first: bool = True) -> SearchResult:
    """Look for a faithful representation into each two-dimensional target."""
    F = M.field
    _check_char(F)
    certs = []
    found = None
    for kind, inv in _targets(F):
        R, eqs = constraint_system(M, kind, inv)
        gb = groebner(eqs, config=config)
        if len(gb) == 1 and gb[0].is_constant():
            certs.append({"target": kind, "involution": inv, "status": "inconsistent"})
            continue
        point = _rational_point(R, gb, kind, config)
        if point is None:
            certs.append({"target": kind, "involution": inv, "status": "consistent, no point found"})
            continue
        rep = _instantiate(M, kind, inv, point)
        certs.append({"target": kind, "involution": inv, "status": "found",
                      "solution": {k: str(val) for k, val in point.items()}})
        if found is None:
            found = rep
        if stop_at_first:
            break
    return SearchResult(found, certs)


def _instantiate(M, kind, inv, point) -> Representation:
    F = M.field
    if kind == "quad":
        B = InvolutiveAlgebra2("quad", F, inv, F(0), -point["d"])
    else:
        B = InvolutiveAlgebra2(kind, F, inv)
    p = BilinearForm.commutative3(point["l1"], point["l2"], point["l4"])
    images = (B.element(point["a1"], point["a2"]), B.element(point["b1"], point["b2"]))
    rep = Representation(M, B, images, p)
    if not (rep.is_valid() and rep.is_faithful()):
        raise AssertionError("internal error: search produced an invalid representation")
    return rep


_CANDIDATES = (0, 1, -1, 2, -2, 3, sympy.Rational(1, 2), -3, 4)
_NONSQUARES = (-1, 2, -2, 3, -3, 5, 6, 7, -5, 10, 11)


def _univariate_roots(g: Poly, var: str, F: Field) -> list:
    if isinstance(F, PrimeField):
        return [c for c in F.elements()
                if g.subs({var: c}).is_zero()]
    expr = g.to_sympy()
    sym = sympy.Symbol(var)
    roots = sympy.Poly(expr, sym).ground_roots()
    return [F(sympy.Rational(r)) for r in sorted(roots, key=lambda r: (abs(r), r)) if r.is_Rational]


def _acceptable(var: str, value: FieldElement, kind: str) -> bool:
    if var == "d" and kind == "quad":
        return not value.is_zero() and nth_root(value, 2) is None
    return True


def _rational_point(R: PolyRing, gb: list, kind: str, config: GBConfig, depth: int = 0):
    """A point of the variety with coordinates in the base field, if one is found.

    Variables are fixed one at a time in ring order.  A variable constrained by
    its elimination ideal takes one of the rational roots of the generator;
    an unconstrained one takes small trial values (nonsquares for d).
    """
    F = R.field
    free = [nm for nm in R.names if any(nm in g.variables() for g in gb)]
    if not gb:
        return {}
    if len(gb) == 1 and gb[0].is_constant():
        return None
    if not free:
        return {}
    var = free[0]
    others = [nm for nm in R.names if nm != var]
    elim = eliminate(gb, others, config=config)
    if elim:
        cands = _univariate_roots(elim[0], var, F)
    else:
        pool = _NONSQUARES if (var == "d" and kind == "quad") else _CANDIDATES
        cands = [F(sympy.Rational(c)) if not isinstance(c, int) else F(c) for c in pool]
        if isinstance(F, PrimeField):
            cands = list(dict.fromkeys(cands))
    for c in cands:
        if not _acceptable(var, c, kind):
            continue
        sub = [g.subs({var: c}) for g in gb]
        sub_gb = groebner(sub, config=config)
        if len(sub_gb) == 1 and sub_gb[0].is_constant():
            continue
        rest = _rational_point(R, sub_gb, kind, config, depth + 1)
        if rest is not None:
            rest[var] = c
            return _complete(R, rest, kind)
    return None


def _complete(R: PolyRing, point: dict, kind: str) -> dict:
    """Give every unconstrained variable a value (0, or a nonsquare for d)."""
    F = R.field
    for nm in R.names:
        if nm not in point:
            point[nm] = F(-1) if (nm == "d" and kind == "quad") else F(0)
    return point


# the concrete representations printed for each algebra ----------------------------------

def explicit_representations(F: Field, t=1, z=0, alpha=2) -> dict:
    """The explicit faithful representations of A2,1, A5aa, A5, A6, A7 and A8.

    t (nonzero), z and alpha are the free parameters of those families.
    """
    _check_char(F)
    t, z, alpha = F(t), F(z), F(alpha)
    M2T = MatrixStarAlgebra(F, "transpose")
    M2S = MatrixStarAlgebra(F, "symplectic")
    split_ex = InvolutiveAlgebra2("split", F, "exchange")
    cpx = complex_like(F)
    mat = lambda rows: Matrix(F, rows)
    reps = {}

    A21 = canonical_matrix("A2", F, 1)
    p = BilinearForm.from_dict({"x*y*": 1})
    reps["A2,1 in M2"] = Representation(A21, M2S, (mat([[1, 0], [0, 0]]), mat([[0, 0], [0, 1]])), p)
    reps["A2,1 in KxK"] = Representation(A21, split_ex, (split_ex.element(1, 0), split_ex.element(0, 1)), p)

    A5aa = canonical_matrix("A5ab", F, alpha, alpha)
    p = BilinearForm.from_dict({"xy": 1, "x*y*": alpha})
    reps["A5aa in KxK"] = Representation(A5aa, split_ex, (split_ex.element(0, 1), split_ex.element(1, 0)), p)

    A5 = canonical_matrix("A5", F)
    p = BilinearForm.from_dict({"xy": -1, "yx": -1, "x*y*": 1, "y*x*": 1})
    q = F(-1) / 4
    reps["A5 in M2"] = Representation(A5, M2T, (mat([[q, t], [-t, q]]), mat([[q, -t], [t, q]])), p)
    reps["A5 in KxK"] = Representation(A5, cpx, (cpx.element(q, t), cpx.element(q, -t)), p)

    A6 = canonical_matrix("A6", F)
    p = BilinearForm.from_dict({"xy": -1, "yx": -1, "xy*": 1, "y*x": 1, "yx*": 1, "x*y": 1,
                                "x*y*": -1, "y*x*": -1})
    e = 8 * t * t
    reps["A6 in M2"] = Representation(A6, M2T, (mat([[e, 0], [0, e]]), mat([[z, t], [-t, z]])), p)
    reps["A6 in KxK"] = Representation(A6, cpx, (cpx.element(e, 0), cpx.element(z, t)), p)

    A7 = canonical_matrix("A7", F)
    p = BilinearForm((1,) * 8)
    eighth = F(1) / 8
    reps["A7 in M2"] = Representation(A7, M2T, (mat([[eighth, 0], [0, eighth]]), mat([[0, t], [-t, 0]])), p)
    reps["A7 in KxK"] = Representation(A7, cpx, (cpx.element(eighth, 0), cpx.element(0, t)), p)
    R = PolyRing(F, ("x", "xs"))
    laurent = QuotientStarAlgebra(StarIdeal([R.parse("x*xs - 1")]))
    quarter = F(1) / 4
    p = BilinearForm.from_dict({"xy": quarter, "x*y": quarter, "xy*": quarter, "x*y*": quarter})
    reps["A7 in K[x,1/x]"] = Representation(A7, laurent, (laurent.element("1"), laurent.element("xs - x")), p)

    A8 = canonical_matrix("A8", F, alpha)
    p = a8_form(alpha, F)
    reps["A8 in M2"] = Representation(A8, M2T, (mat([[1, 0], [0, 1]]), mat([[0, quarter], [-quarter, 0]])), p)
    reps["A8 in KxK"] = Representation(A8, cpx, (cpx.element(1, 0), cpx.element(0, quarter)), p)
    return reps
