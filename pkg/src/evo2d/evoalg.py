"""Two-dimensional evolution algebras given by a structure matrix.

The matrix is column based: ``e_j^2 = omega[0][j] e_1 + omega[1][j] e_2``.
Vectors are lists of two scalars in the natural basis.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactmath import Field, FieldElement, Matrix, Singular, parse_field


class NotNatural(ValueError):
    """The proposed basis vectors do not multiply to zero."""


def _vec(field: Field, v) -> tuple:
    return tuple(FieldElement(field, field.convert(x)) for x in v)


@dataclass(frozen=True)
class Subspace2:
    """Subspace of K^2 stored as reduced echelon rows (structural equality)."""

    field: Field
    basis: tuple

    @classmethod
    def span(cls, field: Field, vectors) -> "Subspace2":
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(field, ())
        red, pivots = Matrix(field, vectors).rref()
        rows = tuple(tuple(red.row(i)) for i in range(len(pivots)))
        return cls(field, rows)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        v = list(v)
        if all(x == 0 for x in v):
            return True
        return Subspace2.span(self.field, list(self.basis) + [v]).dimension == self.dimension

    def __le__(self, other: "Subspace2") -> bool:
        return all(other.contains(b) for b in self.basis)

    def to_strings(self):
        return [[str(x) for x in b] for b in self.basis]

    def __str__(self):
        if not self.basis:
            return "0"
        return "<" + ", ".join("(" + ",".join(str(x) for x in b) + ")" for b in self.basis) + ">"


ALL_LINES = "all lines"


@dataclass(frozen=True)
class StructureMatrix:
    """A 2-dimensional evolution algebra in a fixed natural basis."""

    omega: Matrix

    def __post_init__(self):
        if (self.omega.rows, self.omega.cols) != (2, 2):
            raise ValueError("structure matrix must be 2x2")

    @classmethod
    def from_entries(cls, field: Field, rows) -> "StructureMatrix":
        return cls(Matrix(field, rows))

    @classmethod
    def parse(cls, field, text: str) -> "StructureMatrix":
        if isinstance(field, str):
            field = parse_field(field)
        return cls(Matrix.parse(field, text))

    @property
    def field(self) -> Field:
        return self.omega.field

    def w(self, i: int, j: int) -> FieldElement:
        """1-based access to omega_ij."""
        return self.omega[i - 1, j - 1]

    def square_of_basis(self, j: int) -> tuple:
        """e_j^2 as a vector (j is 0 or 1)."""
        return tuple(self.omega.column(j))

    def multiply(self, u, v) -> tuple:
        F = self.field
        u = _vec(F, u)
        v = _vec(F, v)
        c0 = u[0] * v[0]
        c1 = u[1] * v[1]
        return (c0 * self.omega[0, 0] + c1 * self.omega[0, 1],
                c0 * self.omega[1, 0] + c1 * self.omega[1, 1])

    def basis(self):
        F = self.field
        return [(F(1), F(0)), (F(0), F(1))]

    def __str__(self):
        return str(self.omega)


def change_basis(M: StructureMatrix, P: Matrix) -> StructureMatrix:
    """Structure matrix in the basis whose vectors are the columns of P."""
    if P.det().is_zero():
        raise Singular("change of basis matrix is singular")
    f1, f2 = P.column(0), P.column(1)
    if any(not x.is_zero() for x in M.multiply(f1, f2)):
        raise NotNatural("new basis is not natural: f1 f2 != 0")
    return StructureMatrix(P.inverse() @ M.omega @ P.hadamard_square())


def is_natural_basis(M: StructureMatrix, P: Matrix) -> bool:
    if P.det().is_zero():
        return False
    return all(x.is_zero() for x in M.multiply(P.column(0), P.column(1)))


def swap_matrix(field: Field) -> Matrix:
    return Matrix(field, [[0, 1], [1, 0]])


@dataclass(frozen=True)
class PowerReport:
    A2: Subspace2
    A3: Subspace2
    A2sq: Subspace2
    ann: Subspace2
    left_chain_limit: Subspace2

    def dims(self) -> dict:
        return {"A2dim": self.A2.dimension, "A3dim": self.A3.dimension,
                "A2sqDim": self.A2sq.dimension, "annDim": self.ann.dimension,
                "chainDim": self.left_chain_limit.dimension}


def _product_span(M: StructureMatrix, left: Subspace2, right: Subspace2) -> Subspace2:
    return Subspace2.span(M.field, [M.multiply(u, v) for u in left.basis for v in right.basis])


def power_report(M: StructureMatrix) -> PowerReport:
    F = M.field
    full = Subspace2.span(F, M.basis())
    A2 = Subspace2.span(F, [M.square_of_basis(0), M.square_of_basis(1)])
    A3 = _product_span(M, full, A2)
    A2sq = _product_span(M, A2, A2)
    # v.e_i = v_i e_i^2, so v annihilates A iff v_i e_i^2 = 0 for both i
    ann_vectors = [b for i, b in enumerate(M.basis()) if all(x.is_zero() for x in M.square_of_basis(i))]
    ann = Subspace2.span(F, ann_vectors)
    chain = A2
    for _ in range(4):
        nxt = _product_span(M, chain, full)
        if nxt == chain:
            break
        chain = nxt
    return PowerReport(A2, A3, A2sq, ann, chain)


def is_perfect(M: StructureMatrix) -> bool:
    return not M.omega.det().is_zero()


def is_nondegenerate(M: StructureMatrix) -> bool:
    return all(any(not x.is_zero() for x in M.square_of_basis(j)) for j in range(2))


def is_simple(M: StructureMatrix) -> bool:
    """Perfect with both off-diagonal entries nonzero."""
    return is_perfect(M) and not M.w(1, 2).is_zero() and not M.w(2, 1).is_zero()


def is_ideal(M: StructureMatrix, S: Subspace2) -> bool:
    return all(S.contains(M.multiply(e, v)) for e in M.basis() for v in S.basis)


def one_dim_ideals(M: StructureMatrix):
    """All one-dimensional ideals, or ``ALL_LINES`` for the zero algebra.

    A line <v> is an ideal iff e_1 v and e_2 v lie in <v>.  Since
    e_i v = v_i e_i^2, the candidates are <e_1>, <e_2> and lines through
    products e_i^2 with v_1 v_2 != 0, which are checked directly.
    """
    F = M.field
    if M.omega.is_zero():
        return ALL_LINES
    candidates = [(F(1), F(0)), (F(0), F(1))]
    for j in range(2):
        sq = M.square_of_basis(j)
        if any(not x.is_zero() for x in sq):
            candidates.append(sq)
    # a line <v> with both coordinates nonzero must contain every nonzero e_i v
    found = []
    for v in candidates:
        S = Subspace2.span(F, [v])
        if S not in found and is_ideal(M, S):
            found.append(S)
    return sorted(found, key=lambda S: [x.sort_key() for x in S.basis[0]])


def all_subspaces(field: Field):
    """Every subspace of K^2 over a finite field."""
    F = field
    out = [Subspace2.span(F, []), Subspace2.span(F, M_basis(F))]
    seen = set()
    for a in F.elements():
        for v in ([F(1), a], [F(0), F(1)]):
            S = Subspace2.span(F, [v])
            if S not in seen:
                seen.add(S)
                out.append(S)
    return out


def M_basis(F: Field):
    return [[F(1), F(0)], [F(0), F(1)]]


def is_simple_brute_force(M: StructureMatrix) -> bool:
    """Simple = nonzero product and no proper nonzero ideal (finite fields)."""
    if M.omega.is_zero():
        return False
    return not any(is_ideal(M, S) for S in all_subspaces(M.field) if S.dimension == 1)


def report(M: StructureMatrix) -> dict:
    pr = power_report(M)
    ideals = one_dim_ideals(M)
    out = {"A2dim": pr.A2.dimension, "A3dim": pr.A3.dimension, "A2sqDim": pr.A2sq.dimension,
           "annDim": pr.ann.dimension, "simple": is_simple(M)}
    out["ideals"] = ideals if ideals == ALL_LINES else [str(S) for S in ideals]
    return out
