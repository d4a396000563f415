"""Shared fixtures-as-functions for the test suites."""
import itertools
import random
from fractions import Fraction

from evo2d.classify import canonical_matrix, normalize_param
from evo2d.evoalg import StructureMatrix, is_natural_basis
from evo2d.exactmath import Matrix, parse_field

Q = parse_field("Q")
F3 = parse_field("F3")
F5 = parse_field("F5")
F7 = parse_field("F7")

LABELS = ("A0", "A1", "A2", "A3", "A4", "A5ab", "A5", "A6", "A7", "A8")
PERFECT = ("A1", "A2", "A3", "A4", "A5ab")
NONPERFECT = ("A0", "A5", "A6", "A7", "A8")
N_PARAMS = {"A2": 1, "A3": 1, "A4": 1, "A5ab": 2, "A8": 1}

# parameters that are already their own normalized representatives over Q
Q_PARAMS = {"A2": (2,), "A3": (5,), "A4": (3,), "A5ab": (2, 3), "A8": (2,)}


def mat(F, rows):
    return StructureMatrix.from_entries(F, rows)


def canonical(label, F=Q, params=None):
    if params is None:
        params = Q_PARAMS.get(label, ())
    return canonical_matrix(label, F, *params)


def nonzero(F, rng):
    if F.is_finite:
        return F(rng.randint(1, F.characteristic - 1))
    return F(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5)))


def element(F, rng):
    if F.is_finite:
        return F(rng.randint(0, F.characteristic - 1))
    return F(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))


def valid_params(label, params):
    if label == "A5ab":
        return not (params[0] * params[1] - 1).is_zero()
    return True


def random_params(label, F, rng):
    while True:
        params = tuple(nonzero(F, rng) for _ in range(N_PARAMS.get(label, 0)))
        if valid_params(label, params):
            return params


def normalized(label, params):
    if label in ("A2", "A5ab", "A8"):
        return tuple(normalize_param(label, *params))
    return tuple(params)


def all_canonical(F):
    """Every (label, normalized params) over a finite field, without repeats."""
    nz = [x for x in F.elements() if not x.is_zero()]
    out = []
    for label in LABELS:
        k = N_PARAMS.get(label, 0)
        seen = set()
        for params in itertools.product(nz, repeat=k):
            if not valid_params(label, params):
                continue
            key = normalized(label, params)
            if key not in seen:
                seen.add(key)
                out.append((label, key))
    return out


def random_natural_basis(M, rng, tries=200):
    """An invertible P whose columns form a natural basis of M."""
    F = M.field
    u, v = M.square_of_basis(0), M.square_of_basis(1)
    for _ in range(tries):
        a, b = nonzero(F, rng), nonzero(F, rng)
        r = rng.random()
        if r < 0.4:
            P = Matrix(F, [[a, 0], [0, b]])
        elif r < 0.7:
            P = Matrix(F, [[0, a], [b, 0]])
        else:
            # general natural basis: p11 p12 u + p21 p22 v = 0
            p11, p12, p21 = element(F, rng), element(F, rng), nonzero(F, rng)
            w = [p11 * p12 * x for x in u]
            if all(x.is_zero() for x in v):
                if any(not x.is_zero() for x in w):
                    continue
                p22 = element(F, rng)
            else:
                i = 0 if not v[0].is_zero() else 1
                p22 = -w[i] / (p21 * v[i])
            P = Matrix(F, [[p11, p12], [p21, p22]])
        if P.is_invertible() and is_natural_basis(M, P):
            return P
    raise RuntimeError("no natural basis found")


def seeded(seed=0):
    return random.Random(seed)
