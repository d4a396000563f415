"""Multilinear identities of degree 3 and 4 for commutative algebras.

Monomials are commutative bracketings.  A tree is a letter or a sorted pair
of trees, so ``(xy)z`` and ``z(yx)`` are the same monomial.  Identities are
written as text, e.g. ``"(x y)(z t) = (x t)(y z)"`` or with associators
``(a,b,c) = (ab)c - a(bc)``, and are stored as coefficient vectors on the
fixed monomial lists below.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .exactmath import Field, FieldElement, Matrix


# trees ---------------------------------------------------------------------

def _key(t):
    return (0, t) if isinstance(t, str) else (1, _key(t[0]), _key(t[1]))


def mul_tree(a, b):
    return (a, b) if _key(a) <= _key(b) else (b, a)


def tree_str(t) -> str:
    if isinstance(t, str):
        return t
    a, b = t
    sa = tree_str(a) if isinstance(a, str) else f"({tree_str(a)})"
    sb = tree_str(b) if isinstance(b, str) else f"({tree_str(b)})"
    return sa + sb


# parser --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z])|(.))")


class IdentitySyntaxError(ValueError):
    pass


class _Parser:
    """Linear combinations of trees as dicts tree -> int coefficient."""

    def __init__(self, text: str):
        self.tokens = []
        for num, letter, other in _TOKEN.findall(text.strip()):
            if num:
                self.tokens.append(("num", int(num)))
            elif letter:
                self.tokens.append(("var", letter))
            elif other.strip():
                self.tokens.append(("op", other))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise IdentitySyntaxError(f"unexpected {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self):
        left = self.expr()
        if self.peek() == ("op", "="):
            self.take()
            right = self.expr()
            left = _add(left, _scale(right, -1))
        if self.peek()[0] != "end":
            raise IdentitySyntaxError(f"trailing input at {self.peek()[1]!r}")
        return left

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = _scale(self.term(), sign)
        while self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
            acc = _add(acc, _scale(self.term(), sign))
        return acc

    def term(self):
        coef = 1
        if self.peek()[0] == "num":
            coef = self.take()[1]
            if self.peek() == ("op", "*"):
                self.take()
        acc = self.factor()
        while self.peek()[0] == "var" or self.peek() == ("op", "("):
            acc = _mul(acc, self.factor())
        return _scale(acc, coef)

    def factor(self):
        kind, val = self.peek()
        if kind == "var":
            self.take()
            return {val: 1}
        self.take("op", "(")
        first = self.expr()
        if self.peek() == ("op", ","):
            self.take()
            second = self.expr()
            self.take("op", ",")
            third = self.expr()
            self.take("op", ")")
            return _add(_mul(_mul(first, second), third),
                        _scale(_mul(first, _mul(second, third)), -1))
        self.take("op", ")")
        return first


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _scale(a, c):
    return {k: v * c for k, v in a.items()} if c else {}


def _mul(a, b):
    out = {}
    for (ka, va), (kb, vb) in itertools.product(a.items(), b.items()):
        out = _add(out, {mul_tree(ka, kb): va * vb})
    return out


def parse_combination(text: str) -> dict:
    return _Parser(text).parse()


# monomial bases --------------------------------------------------------------

def _monos(texts):
    return tuple(next(iter(parse_combination(t))) for t in texts)


MONOMIALS_3 = _monos(["(xy)z", "(yz)x", "(zx)y"])
MONOMIALS_4 = _monos([
    "(xy)(zt)", "(xz)(yt)", "(xt)(yz)",
    "(x(yz))t", "(y(xz))t", "(z(yx))t",
    "(t(xy))z", "(x(ty))z", "(y(xt))z",
    "(y(tz))x", "(t(yz))x", "(z(ty))x",
    "(x(tz))y", "(z(tx))y", "(t(xz))y",
])
LETTERS = {3: ("x", "y", "z"), 4: ("x", "y", "z", "t")}


def monomials(degree: int) -> tuple:
    if degree == 3:
        return MONOMIALS_3
    if degree == 4:
        return MONOMIALS_4
    raise ValueError("only degrees 3 and 4 are supported")


def to_lambda(text: str, degree: int) -> tuple:
    """Coefficient vector of a multilinear identity on the monomial list."""
    combo = parse_combination(text)
    monos = monomials(degree)
    index = {m: i for i, m in enumerate(monos)}
    vec = [0] * len(monos)
    for tree, c in combo.items():
        if tree not in index:
            raise IdentitySyntaxError(f"{tree_str(tree)} is not a multilinear degree-{degree} monomial")
        vec[index[tree]] += c
    return tuple(vec)


def lambda_str(vec) -> str:
    """Readable form such as ``l1 - l3 + 2*l5``."""
    parts = []
    for i, c in enumerate(vec):
        if (c.is_zero() if isinstance(c, FieldElement) else c == 0):
            continue
        if isinstance(c, FieldElement) and c.field.characteristic == 0:
            num, den = int(c.value.numerator), int(c.value.denominator)
            txt = str(num) if den == 1 else f"{num}/{den}"
        else:
            txt = str(c)
        sign = "-" if txt.startswith("-") else "+"
        mag = txt.lstrip("-")
        parts.append(f"{sign} {'' if mag == '1' else mag + '*'}l{i + 1}")
    if not parts:
        return "0"
    out = " ".join(parts)
    return out[2:] if out.startswith("+") else "-" + out[2:]


@dataclass(frozen=True)
class NamedIdentity:
    name: str
    degree: int
    text: str

    @property
    def vector(self) -> tuple:
        return to_lambda(self.text, self.degree)


_NAMED = [
    ("ASSOC3", 3, "(x,y,z)"),
    ("ANIS1", 4, "(x y)(z t) = (x t)(y z)"),
    ("ANIS2", 4, "(y (x z)) t = (y (t z)) x"),
    ("DELMONO1", 4, "(x z)(y t) + (y,z,x) t + (x,t,y) z = (x t)(y z)"),
    ("DELMONO2", 4, "(x y)(z t) + (y,z,t) x + (x,z,y) t + (t,y,x) z = (x z)(y t)"),
    ("CASTAN1", 4, "(x y)(z t)"),
    ("CASTAN1_2", 4, "(x z)(y t)"),
    ("CASTAN1_3", 4, "(x t)(y z)"),
    ("CASTAN2_1", 4, "(t (x y)) z = (z (y x)) t"),
    ("CASTAN2_2", 4, "(x (y z)) t + (z (t x)) y = (t (x z)) y + (z (t y)) x"),
    ("CASTAN2_3", 4, "(x (t z)) y + (z (y x)) t = (t (x z)) y + (z (t y)) x"),
    ("CASTAN2_4", 4, "(t (x y)) z + (x (t z)) y = (t (x z)) y + (z (t y)) x"),
    ("CASTAN2_5", 4, "(t (y z)) x + (z (t x)) y = (t (x z)) y + (z (t y)) x"),
    ("CASTAN3_1", 4, "(x (y z)) t = (t (y z)) x"),
    ("CASTAN3_2", 4, "(t (y z)) x + (x y)(z t) + (z (t x)) y = (t (x y)) z + (x t)(y z) + (x (t z)) y"),
]
NAMED_IDENTITIES = {name: NamedIdentity(name, d, t) for name, d, t in _NAMED}
GROUPS = {
    "ASSOC": ["ASSOC3"],
    "ANIS": ["ANIS1", "ANIS2"],
    "DELMONO": ["DELMONO1", "DELMONO2"],
    "CASTAN1": ["CASTAN1", "CASTAN1_2", "CASTAN1_3"],
    "CASTAN2": [f"CASTAN2_{i}" for i in range(1, 6)],
    "CASTAN3": ["CASTAN3_1", "CASTAN3_2"],
}


# evaluation ----------------------------------------------------------------

def _field_of(alg) -> Field:
    return alg.field


def evaluate_tree(alg, tree, assignment: dict):
    if isinstance(tree, str):
        return assignment[tree]
    return alg.multiply(evaluate_tree(alg, tree[0], assignment),
                        evaluate_tree(alg, tree[1], assignment))


def evaluate(alg, vec, degree: int, values) -> tuple:
    """Value of sum_i vec_i m_i at the given element tuple."""
    F = _field_of(alg)
    assignment = dict(zip(LETTERS[degree], values))
    dim = len(values[0])
    acc = [F(0)] * dim
    for c, mono in zip(vec, monomials(degree)):
        c = F(c) if not isinstance(c, FieldElement) else c
        if c.is_zero():
            continue
        val = evaluate_tree(alg, mono, assignment)
        acc = [a + c * v for a, v in zip(acc, val)]
    return tuple(acc)


def _basis_vectors(F: Field, dim: int):
    return [tuple(F(1) if i == j else F(0) for j in range(dim)) for i in range(dim)]


def identity_system(alg, degree: int) -> Matrix:
    """Rows: coordinates of each monomial evaluated at each basis tuple."""
    F = _field_of(alg)
    dim = getattr(alg, "dim", 2)
    basis = _basis_vectors(F, dim)
    monos = monomials(degree)
    rows = []
    for combo in itertools.product(basis, repeat=degree):
        assignment = dict(zip(LETTERS[degree], combo))
        values = [evaluate_tree(alg, m, assignment) for m in monos]
        for c in range(dim):
            rows.append([v[c] for v in values])
    return Matrix(F, rows)


def identity_space(alg, degree: int) -> list:
    """Kernel basis of the multilinear identity system."""
    return identity_system(alg, degree).kernel_basis()


def check_identity(alg, identity) -> bool:
    """True iff the identity (name, NamedIdentity or (vector, degree)) holds."""
    if isinstance(identity, str):
        identity = NAMED_IDENTITIES[identity]
    if isinstance(identity, NamedIdentity):
        vec, degree = identity.vector, identity.degree
    else:
        vec, degree = identity
    F = _field_of(alg)
    dim = getattr(alg, "dim", 2)
    for combo in itertools.product(_basis_vectors(F, dim), repeat=degree):
        if any(not x.is_zero() for x in evaluate(alg, vec, degree, combo)):
            return False
    return True


def associator(alg, u, v, w) -> tuple:
    left = alg.multiply(alg.multiply(u, v), w)
    right = alg.multiply(u, alg.multiply(v, w))
    return tuple(a - b for a, b in zip(left, right))


class CommutativeAlgebra:
    """Commutative algebra from structure constants: e_i e_j = sum_k c[i][j][k] e_k."""

    def __init__(self, field: Field, constants):
        self.field = field
        self.dim = len(constants)
        self.c = [[[field(x) for x in constants[i][j]] for j in range(self.dim)]
                  for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                if self.c[i][j] != self.c[j][i]:
                    raise ValueError("structure constants are not symmetric")

    def multiply(self, u, v) -> tuple:
        F = self.field
        out = [F(0)] * self.dim
        for i in range(self.dim):
            if u[i].is_zero():
                continue
            for j in range(self.dim):
                if v[j].is_zero():
                    continue
                s = u[i] * v[j]
                out = [o + s * c for o, c in zip(out, self.c[i][j])]
        return tuple(out)

    @classmethod
    def random(cls, field: Field, rng, dim: int = 2):
        elems = field.elements()
        consts = [[None] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(i, dim):
                vec = [rng.choice(elems) for _ in range(dim)]
                consts[i][j] = consts[j][i] = vec
        return cls(field, consts)
