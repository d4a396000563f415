"""Pseudo-squares, the rotation action, the classes D0-D9 and squares S0-S8."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet

from .evoalg import StructureMatrix, change_basis, is_natural_basis
from .exactmath import PrimeField, general_linear

EDGES = ("left", "top", "bottom", "right")
_LETTER = {"left": "L", "top": "T", "bottom": "B", "right": "R"}


@dataclass(frozen=True)
class PseudoSquare:
    left: bool = False
    top: bool = False
    bottom: bool = False
    right: bool = False

    @classmethod
    def from_letters(cls, letters: str) -> "PseudoSquare":
        letters = set(letters.upper())
        bad = letters - set("LTBR")
        if bad:
            raise ValueError(f"unknown edge letters {sorted(bad)}")
        return cls(*(_LETTER[e] in letters for e in EDGES))

    @property
    def edges(self) -> tuple:
        return tuple(e for e in EDGES if getattr(self, e))

    def letters(self) -> str:
        return "".join(_LETTER[e] for e in self.edges)

    def edge_count(self) -> int:
        return len(self.edges)

    def __str__(self):
        return "{" + ",".join(self.letters()) + "}"


ALL_PATTERNS = tuple(PseudoSquare(l, t, b, r) for l in (False, True) for t in (False, True)
                     for b in (False, True) for r in (False, True))


def pseudo_square(M: StructureMatrix) -> PseudoSquare:
    return PseudoSquare(left=not M.w(1, 1).is_zero(), top=not M.w(1, 2).is_zero(),
                        bottom=not M.w(2, 1).is_zero(), right=not M.w(2, 2).is_zero())


def rotate(ps: PseudoSquare) -> PseudoSquare:
    return PseudoSquare(left=ps.right, top=ps.bottom, bottom=ps.top, right=ps.left)


# members of each class as edge letters; the first member has the fewest edges
# or is the one displayed first in the table
_CLASS_MEMBERS = {
    "D0": ("",),
    "D1": ("LR",),
    "D2": ("TB",),
    "D3": ("LTR", "LBR"),
    "D4": ("LTB", "TBR"),
    "D5": ("LTBR",),
    "D6": ("B", "T"),
    "D7": ("L", "R"),
    "D8": ("BR", "LT"),
    "D9": ("LB", "TR"),
}


@dataclass(frozen=True)
class DClass:
    label: str
    members: tuple

    def __str__(self):
        return self.label


D_CLASSES = {label: DClass(label, tuple(PseudoSquare.from_letters(m) for m in members))
             for label, members in _CLASS_MEMBERS.items()}
_PATTERN_TO_CLASS = {ps: c for c in D_CLASSES.values() for ps in c.members}


def d_class(ps: PseudoSquare) -> DClass:
    return _PATTERN_TO_CLASS[ps]


@dataclass(frozen=True)
class Square:
    """A square, recorded by the labels of its D-classes."""

    classes: FrozenSet[str]

    @classmethod
    def of(cls, *labels) -> "Square":
        return cls(frozenset(labels))

    def sorted_labels(self) -> list:
        return sorted(self.classes, key=lambda s: int(s[1:]))

    @property
    def name(self) -> str:
        return SQUARE_NAMES.get(self.classes, "?")

    def __str__(self):
        return "{" + ",".join(self.sorted_labels()) + "}"


SQUARE_NAMES = {frozenset({f"D{i}"}): f"S{i}" for i in range(7)}
SQUARE_NAMES[frozenset({"D7", "D9"})] = "S7"
SQUARE_NAMES[frozenset({"D5", "D8"})] = "S8"

_LABEL_SQUARE = {
    "A0": Square.of("D0"), "A1": Square.of("D1"), "A2": Square.of("D2"),
    "A3": Square.of("D3"), "A4": Square.of("D4"), "A5ab": Square.of("D5"),
    "A5": Square.of("D5"), "A6": Square.of("D6"), "A7": Square.of("D7", "D9"),
    "A8": Square.of("D5", "D8"),
}


def square_of(M: StructureMatrix) -> Square:
    """The square, read off the classification label."""
    from .classify import classify

    cf = classify(M)
    if cf.label == "A8" and not _a8_has_full_pattern(cf.params[0]):
        return Square.of("D8")
    return _LABEL_SQUARE[cf.label]


def _a8_has_full_pattern(alpha) -> bool:
    """Whether A8(alpha) has a natural basis with all four edges.

    Such a basis exists iff some t != 0 has t^2 != -alpha.  This fails only
    when every nonzero square equals -alpha, which happens over F2 and over
    F3 with alpha = 2.
    """
    F = alpha.field
    if not F.is_finite:
        return True
    return any(not (t * t + alpha).is_zero() for t in F.elements() if not t.is_zero())


def square_for_label(label: str) -> Square:
    return _LABEL_SQUARE[label]


class FieldTooLarge(ValueError):
    pass


def brute_force_square(M: StructureMatrix, max_p: int = 7) -> Square:
    """Collect D-classes over every natural basis (prime fields p <= max_p)."""
    F = M.field
    if not isinstance(F, PrimeField) or F.p > max_p:
        raise FieldTooLarge(f"brute force needs a prime field with p <= {max_p}")
    labels = set()
    for P in general_linear(F, 2):
        if is_natural_basis(M, P):
            labels.add(d_class(pseudo_square(change_basis(M, P))).label)
    return Square(frozenset(labels))


# rendering -----------------------------------------------------------------

def _ascii(ps: PseudoSquare) -> str:
    top = "o-----o" if ps.top else "o     o"
    bottom = "o-----o" if ps.bottom else "o     o"
    side = ("|" if ps.left else " ") + "     " + ("|" if ps.right else " ")
    return "\n".join([top, side, side, bottom])


def _dot(ps: PseudoSquare, name: str = "S") -> str:
    # v1, v2 on the top row; v1', v2' on the bottom row
    pairs = {"top": ("v1", "v2"), "bottom": ("v1'", "v2'"),
             "left": ("v1", "v1'"), "right": ("v2", "v2'")}
    lines = [f"graph {name} {{"]
    for node in ("v1", "v2", "v1'", "v2'"):
        lines.append(f'  "{node}";')
    for edge in ps.edges:
        a, b = pairs[edge]
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines)


def _representatives(obj) -> list:
    if isinstance(obj, PseudoSquare):
        return [obj]
    if isinstance(obj, DClass):
        return [obj.members[0]]
    if isinstance(obj, Square):
        reps = [D_CLASSES[label].members[0] for label in obj.classes]
        return sorted(reps, key=lambda ps: (ps.edge_count(), ps.letters()))
    raise TypeError(f"cannot render {type(obj).__name__}")


def render(obj, fmt: str = "ascii") -> str:
    """Diagram of a pseudo-square, D-class or square.

    Squares show one pseudo-square per class, fewer edges first, separated
    by a blank line.
    """
    reps = _representatives(obj)
    if fmt == "ascii":
        return "\n\n".join(_ascii(ps) for ps in reps)
    if fmt == "dot":
        return "\n\n".join(_dot(ps, f"S{i}") for i, ps in enumerate(reps))
    raise ValueError(f"unknown format {fmt!r}")
