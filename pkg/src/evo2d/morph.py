"""Automorphism groups and derivation algebras.

A matrix P acts as the linear map whose j-th column is the image of e_j.
Automorphism groups are computed on the canonical form and conjugated back
through the classification witness: Aut(M) = W Aut(C) W^-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .classify import classify
from .evoalg import StructureMatrix
from .exactmath import Field, Matrix, PrimeField, Singular, general_linear, roots_of_binomial
from .squares import FieldTooLarge

TAGS = ("Trivial", "Z2", "Z3", "S3", "KPlus", "KTimes", "Aff1", "FiniteList", "GL2")


def is_automorphism(M: StructureMatrix, P: Matrix) -> bool:
    if P.det().is_zero():
        raise Singular("automorphism candidate is singular")
    f = [P.column(0), P.column(1)]
    if any(not x.is_zero() for x in M.multiply(f[0], f[1])):
        return False
    for j in range(2):
        if list(M.multiply(f[j], f[j])) != P.apply(M.square_of_basis(j)):
            return False
    return True


@dataclass
class GroupDescription:
    tag: str
    elements: list | None = None
    family: str | None = None
    sampler: Callable | None = dc_field(default=None, repr=False, compare=False)

    @property
    def order(self):
        return None if self.elements is None else len(self.elements)

    def sample(self, *params) -> Matrix:
        """Evaluate the parametric family (infinite groups)."""
        if self.sampler is None:
            raise ValueError(f"{self.tag} group has no parametric family")
        return self.sampler(*params)

    def to_json(self) -> dict:
        out = {"tag": self.tag}
        if self.elements is not None:
            out["order"] = len(self.elements)
            out["elements"] = [m.to_strings() for m in self.elements]
        if self.family is not None:
            out["family"] = self.family
        return out


def _conj(W: Matrix, Winv: Matrix, P: Matrix) -> Matrix:
    return W @ P @ Winv


def _sorted(mats):
    uniq = {m: None for m in mats}
    return sorted(uniq, key=lambda m: [m.field.sort_key(m.raw(i, j)) for i in range(2) for j in range(2)])


def _canonical_group(label: str, params: tuple, F: Field):
    """(tag, elements or None, family text, sampler) for the canonical matrix."""
    I = Matrix.identity(F)
    finite = F.is_finite
    char = F.characteristic
    if label == "A0":
        elems = general_linear(F) if finite else None
        return "GL2", elems, "all invertible matrices", lambda a, b, c, d: Matrix(F, [[a, b], [c, d]])
    if label == "A1":
        return "Z2", [I, Matrix(F, [[0, 1], [1, 0]])], None, None
    if label == "A2":
        alpha = params[0]
        s1 = roots_of_binomial(F(1), 3)
        sa = roots_of_binomial(alpha, 3)
        elems = [Matrix.diag(F, w, w * w) for w in s1]
        elems += [Matrix(F, [[0, s], [s.inverse(), 0]]) for s in sa]
        tag = {(1, 0): "Trivial", (1, 1): "Z2", (3, 0): "Z3", (3, 3): "S3"}[(len(s1), len(sa))]
        return tag, elems, None, None
    if label in ("A3", "A4"):
        return "Trivial", [I], None, None
    if label == "A5ab":
        if params[0] == params[1]:
            return "Z2", [I, Matrix(F, [[0, 1], [1, 0]])], None, None
        return "Trivial", [I], None, None
    if label == "A5":
        fam = lambda a: Matrix(F, [[a, 1 - F(a)], [1 - F(a), a]])
        if char == 2:
            elems = [fam(a) for a in F.elements()] if finite else None
            return "KPlus", elems, "[[a,1-a],[1-a,a]], a in K", fam
        half = F(1) / 2
        elems = [fam(a) for a in F.elements() if a != half] if finite else None
        return "KTimes", elems, "[[a,1-a],[1-a,a]], a != 1/2", fam
    if label == "A6":
        fam = lambda a, b: Matrix(F, [[F(a) * a, b], [0, a]])
        elems = ([fam(a, b) for a in F.elements() if not a.is_zero() for b in F.elements()]
                 if finite else None)
        return "Aff1", elems, "[[a^2,b],[0,a]], a != 0", fam
    if label == "A7":
        fam = lambda a: Matrix.diag(F, 1, a)
        elems = [fam(a) for a in F.elements() if not a.is_zero()] if finite else None
        return "KTimes", elems, "diag(1,a), a != 0", fam
    if label == "A8":
        if char == 2:
            return "Trivial", [I], None, None
        return "Z2", [I, Matrix.diag(F, 1, -1)], None, None
    raise ValueError(f"unknown label {label}")


def automorphism_group(M: StructureMatrix) -> GroupDescription:
    cf = classify(M)
    F = M.field
    tag, elems, family, sampler = _canonical_group(cf.label, cf.params, F)
    W = cf.witness
    Winv = W.inverse()
    if elems is not None:
        elems = _sorted(_conj(W, Winv, P) for P in elems)
    if sampler is not None:
        base = sampler
        sampler = lambda *a: _conj(W, Winv, base(*a))
        if W != Matrix.identity(F):
            family = f"W ({family}) W^-1 with W = {W}"
    return GroupDescription(tag, elems, family, sampler)


def brute_force_automorphisms(M: StructureMatrix, max_p: int = 7) -> list:
    F = M.field
    if not isinstance(F, PrimeField) or F.p > max_p:
        raise FieldTooLarge(f"brute force needs a prime field with p <= {max_p}")
    return _sorted(P for P in general_linear(F) if is_automorphism(M, P))


def is_group(elements) -> bool:
    """Closure under product and inverse for a finite list of matrices."""
    s = set(elements)
    if not s:
        return False
    F = next(iter(s)).field
    if Matrix.identity(F) not in s:
        return False
    return all(a @ b in s for a in s for b in s) and all(a.inverse() in s for a in s)


def is_abelian(elements) -> bool:
    return all(a @ b == b @ a for a in elements for b in elements)


# derivations ---------------------------------------------------------------

@dataclass(frozen=True)
class DerivationSpace:
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {"dim": self.dimension, "basis": [m.to_strings() for m in self.basis]}


def apply_linear(D: Matrix, v) -> tuple:
    return tuple(D.apply(v))


def derivation_system(M: StructureMatrix) -> Matrix:
    """The 6x4 linear system in (a, b, x, y) for D = [[a,x],[b,y]].

    Rows are the two coordinates of D(e_i e_j) - D(e_i) e_j - e_i D(e_j)
    for (i, j) = (1,1), (1,2), (2,2).
    """
    F = M.field
    e = M.basis()
    rows = []
    units = []
    for k in range(4):
        vec = [0, 0, 0, 0]
        vec[k] = 1
        a, b, x, y = vec
        units.append(Matrix(F, [[a, x], [b, y]]))
    for i, j in ((0, 0), (0, 1), (1, 1)):
        cols = []
        for D in units:
            lhs = apply_linear(D, M.multiply(e[i], e[j]))
            r1 = M.multiply(apply_linear(D, e[i]), e[j])
            r2 = M.multiply(e[i], apply_linear(D, e[j]))
            cols.append([lhs[c] - r1[c] - r2[c] for c in range(2)])
        for c in range(2):
            rows.append([cols[k][c] for k in range(4)])
    return Matrix(F, rows)


def derivation_space(M: StructureMatrix) -> DerivationSpace:
    F = M.field
    basis = []
    for a, b, x, y in derivation_system(M).kernel_basis():
        basis.append(Matrix(F, [[a, x], [b, y]]))
    return DerivationSpace(tuple(basis))


def is_derivation(M: StructureMatrix, D: Matrix, u, v) -> bool:
    lhs = apply_linear(D, M.multiply(u, v))
    r1 = M.multiply(apply_linear(D, u), v)
    r2 = M.multiply(u, apply_linear(D, v))
    return all((lhs[c] - r1[c] - r2[c]).is_zero() for c in range(2))


def in_span(basis, D: Matrix) -> bool:
    F = D.field
    flat = lambda m: [m[i, j] for i in range(2) for j in range(2)]
    if not basis:
        return D.is_zero()
    rank = Matrix(F, [flat(m) for m in basis]).rank()
    return Matrix(F, [flat(m) for m in basis] + [flat(D)]).rank() == rank
