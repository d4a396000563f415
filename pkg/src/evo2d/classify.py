"""Canonical forms of two-dimensional evolution algebras and isomorphism tests.

Every structure matrix is carried to one of the labels

    A0, A1, A2(a), A3(a), A4(a), A5ab(a, b), A5, A6, A7, A8(a)

together with a witness P (columns = canonical basis in input coordinates)
such that ``change_basis(M, P)`` is exactly the canonical matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .evoalg import StructureMatrix, change_basis, swap_matrix
from .exactmath import (Field, FieldElement, Matrix, class_representative,
                        folded_cube_representative, nth_root, solve)
from .squares import d_class, pseudo_square

LABELS = ("A0", "A1", "A2", "A3", "A4", "A5ab", "A5", "A6", "A7", "A8")
PARAM_COUNT = {"A2": 1, "A3": 1, "A4": 1, "A5ab": 2, "A8": 1}
PERFECT_LABELS = ("A1", "A2", "A3", "A4", "A5ab")


class ClassificationError(ValueError):
    pass


def canonical_matrix(label: str, field: Field, *params) -> StructureMatrix:
    """The canonical structure matrix of a label."""
    expected = PARAM_COUNT.get(label, 0)
    if label not in LABELS:
        raise ClassificationError(f"unknown label {label!r}")
    if len(params) != expected:
        raise ClassificationError(f"{label} takes {expected} parameter(s)")
    p = [field(x) if not isinstance(x, FieldElement) else x for x in params]
    if label in ("A2", "A3", "A4", "A8") and p[0].is_zero():
        raise ClassificationError(f"{label} needs a nonzero parameter")
    if label == "A5ab" and (p[0].is_zero() or p[1].is_zero()):
        raise ClassificationError("A5ab needs nonzero parameters")
    if label == "A5ab" and (p[0] * p[1] - 1).is_zero():
        raise ClassificationError("A5ab needs alpha*beta != 1")
    rows = {
        "A0": lambda: [[0, 0], [0, 0]],
        "A1": lambda: [[1, 0], [0, 1]],
        "A2": lambda: [[0, p[0]], [1, 0]],
        "A3": lambda: [[1, p[0]], [0, 1]],
        "A4": lambda: [[0, 1], [p[0], 1]],
        "A5ab": lambda: [[1, p[0]], [p[1], 1]],
        "A5": lambda: [[1, -1], [-1, 1]],
        "A6": lambda: [[0, 1], [0, 0]],
        "A7": lambda: [[1, 0], [0, 0]],
        "A8": lambda: [[1, p[0]], [0, 0]],
    }[label]()
    return StructureMatrix(Matrix(field, rows))


@dataclass(frozen=True)
class CanonicalForm:
    label: str
    params: tuple
    witness: Matrix
    matrix: StructureMatrix = dc_field(compare=False)

    def key(self) -> tuple:
        """Label and parameters; equal keys mean isomorphic algebras."""
        return (self.label,) + tuple(self.params)

    def name(self) -> str:
        if not self.params:
            return self.label
        return f"{self.label}({', '.join(str(p) for p in self.params)})"

    def to_json(self) -> dict:
        out = {"label": self.label}
        if self.params:
            out["alpha"] = str(self.params[0])
        if len(self.params) > 1:
            out["beta"] = str(self.params[1])
        out["witness"] = self.witness.to_strings()
        return out


def _sort_key(x: FieldElement):
    return x.sort_key()


def normalize_param(label: str, alpha: FieldElement, beta: FieldElement | None = None):
    """Canonical parameters for A2 (G3 mod squaring), A5ab (ordered pair), A8 (G2)."""
    if label == "A2":
        return (folded_cube_representative(alpha),)
    if label == "A8":
        return (class_representative(alpha, 2),)
    if label == "A5ab":
        if beta is None:
            raise ClassificationError("A5ab needs two parameters")
        return tuple(sorted((alpha, beta), key=_sort_key))
    if label in ("A3", "A4"):
        return (alpha,)
    raise ClassificationError(f"{label} has no parameters")


def _normalizing_basis(label: str, F: Field, params: tuple, target: tuple) -> Matrix:
    """Change of basis from canonical(label, params) to canonical(label, target)."""
    if params == target:
        return Matrix.identity(F)
    if label == "A2":
        a, a0 = params[0], target[0]
        r = nth_root(a0 / a, 3)
        if r is not None:
            return Matrix.diag(F, r, r * r)
        r = nth_root(a0 / (a * a), 3)
        if r is None:
            raise ClassificationError("A2 parameter not in the expected class")
        s = r * r * a
        return Matrix(F, [[0, s], [r, 0]])
    if label == "A5ab":
        return swap_matrix(F)
    if label == "A8":
        c = nth_root(params[0] / target[0], 2)
        return Matrix.diag(F, 1, c.inverse())
    raise ClassificationError(f"no normalization for {label}")


def _perfect(M: StructureMatrix):
    F = M.field
    W = Matrix.identity(F)
    ps = pseudo_square(M)
    cls = d_class(ps).label
    target = {"D3": "LTR", "D4": "TBR"}.get(cls)
    if target is not None and ps.letters() != target:
        W = swap_matrix(F)
        M = change_basis(M, W)
    w11, w12, w21, w22 = M.w(1, 1), M.w(1, 2), M.w(2, 1), M.w(2, 2)
    one = F(1)
    if cls == "D1":
        label, r, s, params = "A1", w11.inverse(), w22.inverse(), ()
    elif cls == "D2":
        label, r, s, params = "A2", one, w21, (w12 * w21 * w21,)
    elif cls == "D3":
        label, r, s = "A3", w11.inverse(), w22.inverse()
        params = (w11 * w12 / (w22 * w22),)
    elif cls == "D4":
        label, r, s = "A4", w12 / (w22 * w22), w22.inverse()
        params = (w21 * w12 * w12 / (w22 * w22 * w22),)
    elif cls == "D5":
        label, r, s = "A5ab", w11.inverse(), w22.inverse()
        params = (w12 * w11 / (w22 * w22), w21 * w22 / (w11 * w11))
    else:
        raise ClassificationError(f"perfect matrix with impossible pattern {ps}")
    return label, params, W @ Matrix.diag(F, r, s)


def _rank_one(M: StructureMatrix):
    F = M.field
    cols = [M.square_of_basis(0), M.square_of_basis(1)]
    u = next(c for c in cols if any(not x.is_zero() for x in c))
    au = [M.multiply(e, u) for e in M.basis()]
    if all(x.is_zero() for v in au for x in v):
        # u annihilates A; any v outside <u> has v^2 = alpha u with alpha != 0
        v = (F(0), F(1)) if not u[0].is_zero() else (F(1), F(0))
        sq = M.multiply(v, v)
        k = next(i for i in range(2) if not u[i].is_zero())
        alpha = sq[k] / u[k]
        return "A6", (), Matrix.from_columns(F, [[alpha * x for x in u], v])
    usq = M.multiply(u, u)
    # L_u as a matrix: v -> u v = u1 v1 e1^2 + u2 v2 e2^2
    L = Matrix.from_columns(F, [[u[0] * x for x in cols[0]], [u[1] * x for x in cols[1]]])
    k_idx = next(i for i in range(2) if not u[i].is_zero())
    if all(x.is_zero() for x in usq):
        v = solve(L, list(u))
        vsq = M.multiply(v, v)
        k = vsq[k_idx] / u[k_idx]
        if k.is_zero():
            v = [a + b / 2 for a, b in zip(v, u)]
            k = F(1)
        f = [a - k * b for a, b in zip(v, u)]
        return "A5", (), Matrix.from_columns(F, [v, f])
    c = usq[k_idx] / u[k_idx]
    u1 = [x / c for x in u]
    v = L.kernel_basis()[0]
    vsq = M.multiply(v, v)
    beta = vsq[k_idx] / u1[k_idx]
    W = Matrix.from_columns(F, [u1, v])
    if beta.is_zero():
        return "A7", (), W
    return "A8", (beta,), W


def classify(M: StructureMatrix) -> CanonicalForm:
    F = M.field
    rank = M.omega.rank()
    if rank == 0:
        label, params, W = "A0", (), Matrix.identity(F)
    elif rank == 2:
        label, params, W = _perfect(M)
    else:
        label, params, W = _rank_one(M)
    if label in ("A2", "A5ab", "A8"):
        target = normalize_param(label, *params)
        W = W @ _normalizing_basis(label, F, tuple(params), target)
        params = target
    params = tuple(params)
    canon = canonical_matrix(label, F, *params)
    if change_basis(M, W) != canon:
        raise ClassificationError(f"internal error: witness does not produce {label}")
    return CanonicalForm(label, params, W, canon)


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: Matrix | None = None

    def __bool__(self):
        return self.isomorphic


def isomorphic(M1: StructureMatrix, M2: StructureMatrix) -> IsoResult:
    """Decide isomorphism; the witness W satisfies change_basis(M1, W) == M2."""
    if M1.field != M2.field:
        raise ClassificationError("algebras over different fields")
    c1, c2 = classify(M1), classify(M2)
    if c1.key() != c2.key():
        return IsoResult(False)
    W = c1.witness @ c2.witness.inverse()
    if change_basis(M1, W) != M2:
        raise ClassificationError("internal error: isomorphism witness failed")
    return IsoResult(True, W)
