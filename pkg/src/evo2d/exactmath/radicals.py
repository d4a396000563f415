"""n-th roots, binomial roots and canonical representatives of K^x/(K^x)^n.

Over Q roots are exact integer roots of numerator and denominator.  Over F_p
they come from sympy's modular root finder.  Rational-function fields are
handled by factoring numerator and denominator when the polynomial ring
supports it (Q base) and otherwise only for monomials, with a degree
obstruction that can still prove non-existence.
"""
from __future__ import annotations

from dataclasses import dataclass

import gmpy2
import sympy
from sympy.ntheory import nthroot_mod

from .fields import FieldElement, FieldError, FunctionField, PrimeField, Rationals


class UnsupportedRoot(FieldError):
    """The field/value combination is outside what root finding can decide."""


def _check(x: FieldElement, n: int):
    if n < 1:
        raise ValueError("exponent must be positive")
    if x.is_zero():
        raise ValueError("x must be nonzero")


def _int_root(k: int, n: int):
    if k < 0:
        if n % 2 == 0:
            return None
        r = _int_root(-k, n)
        return None if r is None else -r
    r, exact = gmpy2.iroot(gmpy2.mpz(k), n)
    return int(r) if exact else None


def _rational_root(q, n: int):
    num = _int_root(int(q.numerator), n)
    den = _int_root(int(q.denominator), n)
    if num is None or den is None:
        return None
    return gmpy2.mpq(num, den)


def _prime_roots(c: int, n: int, p: int):
    return sorted(set(int(r) for r in nthroot_mod(c % p, n, p, all_roots=True) or []))


def _poly_factor_data(poly):
    """(constant, [(factor, multiplicity)]) or None when the ring cannot factor."""
    try:
        return poly.factor_list()
    except NotImplementedError:
        return None


def _function_root(F: FunctionField, value, n: int):
    """Root in a rational-function field, or None; raises if undecidable."""
    ring = F._sympy_field.ring
    num, den = value.numer, value.denom
    # per-variable degree obstruction: num and den are coprime, so both must
    # be constants times n-th powers
    for poly in (num, den):
        if any(d % n for d in poly.degrees()):
            return None
    parts = [_poly_factor_data(num), _poly_factor_data(den)]
    if parts[0] is not None and parts[1] is not None:
        roots = []
        for const, factors in parts:
            if any(m % n for _, m in factors):
                return None
            root = ring(1)
            for fac, m in factors:
                root *= fac ** (m // n)
            roots.append((const, root))
        (c1, g), (c2, h) = roots
        base_c = F.base.div(_domain_to_base(F, c1), _domain_to_base(F, c2))
        r0 = nth_root(F.base.elem(base_c), n)
        if r0 is None:
            return None
        return F.div(F.mul(F.convert(r0), F._canon(F._sympy_field.new(g, ring(1)))),
                     F._canon(F._sympy_field.new(h, ring(1))))
    if len(num.terms()) == 1 and len(den.terms()) == 1:
        (mon_n, c1), = num.terms()
        (mon_d, c2), = den.terms()
        base_c = F.base.div(_domain_to_base(F, c1), _domain_to_base(F, c2))
        r0 = nth_root(F.base.elem(base_c), n)
        if r0 is None:
            return None
        g = ring({tuple(e // n for e in mon_n): 1})
        h = ring({tuple(e // n for e in mon_d): 1})
        return F.div(F.mul(F.convert(r0), F._sympy_field.new(g, ring(1))),
                     F._sympy_field.new(h, ring(1)))
    raise UnsupportedRoot(f"cannot decide {n}-th roots of {F.format(value)} in {F}")


def _domain_to_base(F: FunctionField, c):
    if isinstance(F.base, PrimeField):
        return int(c) % F.base.p
    return gmpy2.mpq(int(c.numerator), int(c.denominator))


def nth_root(x: FieldElement, n: int):
    """Some r with r**n == x, or None.  x must be nonzero."""
    _check(x, n)
    F = x.field
    if isinstance(F, Rationals):
        r = _rational_root(x.value, n)
    elif isinstance(F, PrimeField):
        roots = _prime_roots(x.value, n, F.p)
        r = roots[0] if roots else None
    elif isinstance(F, FunctionField):
        r = _function_root(F, x.value, n)
    else:
        raise UnsupportedRoot(f"no root finder for {F}")
    return None if r is None else F.elem(r)


has_nth_root = nth_root


def radical_equivalent(x: FieldElement, y: FieldElement, n: int) -> bool:
    """True iff x/y is an n-th power, i.e. x and y agree in G_n."""
    _check(x, n)
    _check(y, n)
    return nth_root(x / y, n) is not None


def roots_of_binomial(c: FieldElement, n: int) -> list:
    """All solutions of X**n = c in the field, sorted and deduplicated."""
    if n < 1:
        raise ValueError("exponent must be positive")
    F = c.field
    if c.is_zero():
        return [F(0)]
    if isinstance(F, PrimeField):
        return [F.elem(r) for r in _prime_roots(c.value, n, F.p)]
    r = nth_root(c, n)
    if r is None:
        return []
    if isinstance(F, FunctionField):
        unity = [F(u) for u in roots_of_binomial(F.base(1), n)]
    else:
        unity = [F(1), F(-1)] if n % 2 == 0 else [F(1)]
    out = {r * u for u in unity}
    return sorted(out, key=lambda e: e.sort_key())


# canonical representatives -------------------------------------------------

def _free_part(k: int, n: int) -> int:
    """n-th-power-free part of a positive integer."""
    out = 1
    for prime, e in sympy.factorint(k).items():
        out *= prime ** (e % n)
    return out


def _rational_rep(q, n: int):
    num, den = int(q.numerator), int(q.denominator)
    # q ~ num * den^(n-1) since den^n is an n-th power
    k = num * den ** (n - 1)
    sign = -1 if k < 0 else 1
    if n % 2 == 1:
        sign = 1  # -1 is an n-th power
    return gmpy2.mpq(sign * _free_part(abs(k), n))


def _function_rep(F: FunctionField, value, n: int):
    ring = F._sympy_field.ring
    parts = [_poly_factor_data(value.numer), _poly_factor_data(value.denom)]
    if parts[0] is None or parts[1] is None:
        num, den = value.numer, value.denom
        if len(num.terms()) == 1 and len(den.terms()) == 1:
            (mon_n, c1), = num.terms()
            (mon_d, c2), = den.terms()
            exps = [(a - b) % n for a, b in zip(mon_n, mon_d)]
            const = class_representative(
                F.base.elem(F.base.div(_domain_to_base(F, c1), _domain_to_base(F, c2))), n)
            return F.mul(F.convert(const), F._sympy_field.new(ring({tuple(exps): 1}), ring(1)))
        raise UnsupportedRoot(f"cannot normalize {F.format(value)} in G_{n}")
    (c1, f1), (c2, f2) = parts
    const = class_representative(
        F.base.elem(F.base.div(_domain_to_base(F, c1), _domain_to_base(F, c2))), n)
    poly = ring(1)
    for fac, m in f1:
        poly *= fac ** (m % n)
    for fac, m in f2:
        poly *= fac ** ((-m) % n)
    return F.mul(F.convert(const), F._canon(F._sympy_field.new(poly, ring(1))))


def class_representative(x: FieldElement, n: int) -> FieldElement:
    """Deterministic representative of the class of x in G_n."""
    _check(x, n)
    F = x.field
    if isinstance(F, Rationals):
        return F.elem(_rational_rep(x.value, n))
    if isinstance(F, PrimeField):
        for k in range(1, F.p):
            if radical_equivalent(x, F(k), n):
                return F(k)
    if isinstance(F, FunctionField):
        return F.elem(_function_rep(F, x.value, n))
    raise UnsupportedRoot(f"no class representatives for {F}")


def folded_cube_representative(x: FieldElement) -> FieldElement:
    """Representative of the class of x in G_3 modulo the identification a ~ a^2."""
    a = class_representative(x, 3)
    b = class_representative(x * x, 3)
    F = x.field
    if isinstance(F, Rationals):
        return min(a, b, key=lambda e: (abs(e.value), e.value < 0))
    return min(a, b, key=lambda e: e.sort_key())


@dataclass(frozen=True, eq=False)
class RadicalClass:
    """The class of a nonzero scalar in G_n = K^x/(K^x)^n."""

    n: int
    representative: FieldElement

    def __post_init__(self):
        _check(self.representative, self.n)

    def __eq__(self, other):
        if not isinstance(other, RadicalClass) or other.n != self.n:
            return NotImplemented
        if other.representative.field != self.representative.field:
            return False
        return radical_equivalent(self.representative, other.representative, self.n)

    def __hash__(self):
        rep = class_representative(self.representative, self.n)
        return hash((self.n, rep))

    def canonical(self) -> FieldElement:
        return class_representative(self.representative, self.n)
