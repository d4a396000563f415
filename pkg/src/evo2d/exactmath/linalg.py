"""Small dense exact matrices over a :class:`Field`."""
from __future__ import annotations

import itertools

from .fields import Field, FieldElement, FieldError


class Singular(ValueError):
    """Raised when an inverse of a singular matrix is requested."""


class Matrix:
    """Immutable row-major matrix of raw field values."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows):
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", n_cols)
        object.__setattr__(self, "_data", tuple(tuple(field.convert(x) for x in r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, field, data):
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", len(data))
        object.__setattr__(m, "cols", len(data[0]) if data else 0)
        object.__setattr__(m, "_data", tuple(tuple(r) for r in data))
        return m

    @classmethod
    def identity(cls, field: Field, n: int = 2) -> "Matrix":
        return cls._raw(field, [[field.one if i == j else field.zero for j in range(n)]
                                for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls._raw(field, [[field.zero] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, field: Field, *entries) -> "Matrix":
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, columns) -> "Matrix":
        columns = [list(c) for c in columns]
        return cls(field, [list(r) for r in zip(*columns)])

    @classmethod
    def parse(cls, field: Field, text: str) -> "Matrix":
        """Parse ``"a,b;c,d"`` (rows separated by ``;``)."""
        rows = [r for r in text.strip().split(";")]
        try:
            parsed = [[field.parse(x) for x in r.split(",")] for r in rows]
        except FieldError:
            raise
        if not parsed or any(len(r) != len(parsed[0]) for r in parsed):
            raise FieldError(f"malformed matrix {text!r}")
        return cls._raw(field, parsed)

    # access -----------------------------------------------------------------
    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self._data[i][j])

    def raw(self, i: int, j: int):
        return self._data[i][j]

    def row(self, i: int) -> list:
        return [FieldElement(self.field, x) for x in self._data[i]]

    def column(self, j: int) -> list:
        return [FieldElement(self.field, self._data[i][j]) for i in range(self.rows)]

    def tolist(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def to_strings(self) -> list:
        return [[self.field.format(x) for x in r] for r in self._data]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self._data == other._data)

    def __hash__(self):
        return hash((self.field.spec, self._data))

    def __repr__(self):
        body = "; ".join(", ".join(r) for r in self.to_strings())
        return f"Matrix[{self.field}]({body})"

    def __str__(self):
        return ";".join(",".join(r) for r in self.to_strings())

    # arithmetic -------------------------------------------------------------
    def _same(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldError(f"mixed fields {self.field} and {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        F = self.field
        return Matrix._raw(F, [[F.add(a, b) for a, b in zip(r, s)]
                               for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        F = self.field
        return Matrix._raw(F, [[F.sub(a, b) for a, b in zip(r, s)]
                               for r, s in zip(self._data, other._data)])

    def __neg__(self) -> "Matrix":
        F = self.field
        return Matrix._raw(F, [[F.neg(a) for a in r] for r in self._data])

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F.convert(c)
        return Matrix._raw(F, [[F.mul(c, a) for a in r] for r in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        F = self.field
        out = []
        for r in self._data:
            row = []
            for j in range(other.cols):
                acc = F.zero
                for k, a in enumerate(r):
                    if not F.is_zero(a):
                        acc = F.add(acc, F.mul(a, other._data[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix._raw(F, out)

    def apply(self, vec) -> list:
        """Matrix times a column vector given as a list of scalars."""
        F = self.field
        v = [F.convert(x) for x in vec]
        out = []
        for r in self._data:
            acc = F.zero
            for a, b in zip(r, v):
                acc = F.add(acc, F.mul(a, b))
            out.append(FieldElement(F, acc))
        return out

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, [list(c) for c in zip(*self._data)])

    def hadamard_square(self) -> "Matrix":
        F = self.field
        return Matrix._raw(F, [[F.mul(a, a) for a in r] for r in self._data])

    def is_zero(self) -> bool:
        return all(self.field.is_zero(a) for r in self._data for a in r)

    # elimination ------------------------------------------------------------
    def rref(self):
        """Reduced row echelon form and pivot columns."""
        F = self.field
        data = [list(r) for r in self._data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if not F.is_zero(data[i][c])), None)
            if pivot is None:
                continue
            data[r], data[pivot] = data[pivot], data[r]
            inv = F.inv(data[r][c])
            data[r] = [F.mul(inv, a) for a in data[r]]
            for i in range(self.rows):
                if i != r and not F.is_zero(data[i][c]):
                    f = data[i][c]
                    data[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(data[i], data[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix._raw(F, data), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list:
        """Right null space; one vector per free column, that entry set to 1."""
        F = self.field
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [F.zero] * self.cols
            vec[f] = F.one
            for i, pc in enumerate(pivots):
                vec[pc] = F.neg(red._data[i][f])
            basis.append([FieldElement(F, x) for x in vec])
        return basis

    def det(self) -> FieldElement:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        F = self.field
        n = self.rows
        if n == 2:
            (a, b), (c, d) = self._data
            return FieldElement(F, F.sub(F.mul(a, d), F.mul(b, c)))
        data = [list(r) for r in self._data]
        det = F.one
        for c in range(n):
            pivot = next((i for i in range(c, n) if not F.is_zero(data[i][c])), None)
            if pivot is None:
                return FieldElement(F, F.zero)
            if pivot != c:
                data[c], data[pivot] = data[pivot], data[c]
                det = F.neg(det)
            det = F.mul(det, data[c][c])
            inv = F.inv(data[c][c])
            for i in range(c + 1, n):
                f = F.mul(data[i][c], inv)
                if not F.is_zero(f):
                    data[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(data[i], data[c])]
        return FieldElement(F, det)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        F = self.field
        n = self.rows
        aug = Matrix._raw(F, [list(r) + [F.one if i == j else F.zero for j in range(n)]
                              for i, r in enumerate(self._data)])
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise Singular("matrix is singular")
        return Matrix._raw(F, [r[n:] for r in red._data])

    def is_invertible(self) -> bool:
        return not self.det().is_zero()


def solve(A: Matrix, b) -> list | None:
    """One solution of A x = b (free variables set to 0), or None."""
    F = A.field
    aug = Matrix._raw(F, [list(r) + [F.convert(x)] for r, x in zip(A._data, b)])
    red, pivots = aug.rref()
    if A.cols in pivots:
        return None
    sol = [F.zero] * A.cols
    for i, pc in enumerate(pivots):
        sol[pc] = red._data[i][A.cols]
    return [FieldElement(F, x) for x in sol]


def hadamard_square(P: Matrix) -> Matrix:
    return P.hadamard_square()


def kernel_basis(A: Matrix) -> list:
    return A.kernel_basis()


def all_matrices(field: Field, rows: int = 2, cols: int = 2):
    """Every matrix over a finite field, in lexicographic order of entries."""
    elems = [e.value for e in field.elements()]
    for entries in itertools.product(elems, repeat=rows * cols):
        yield Matrix._raw(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)])


def general_linear(field: Field, n: int = 2):
    return [m for m in all_matrices(field, n, n) if m.is_invertible()]
