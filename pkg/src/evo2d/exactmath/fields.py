"""Exact scalar fields: the rationals, prime fields and rational-function fields.

A :class:`Field` knows how to operate on *raw* values (``gmpy2.mpq`` for Q,
``int`` residues for F_p, normalized sympy fractions for function fields).
Polynomial code works on raw values for speed; everything else goes through
the immutable :class:`FieldElement` wrapper.
"""
from __future__ import annotations

import re
from fractions import Fraction

import gmpy2
import sympy
from sympy.polys.domains import GF, QQ
from sympy.polys.fields import field as _sympy_field


class FieldError(ValueError):
    """Malformed field spec, bad element text or mixed-field arithmetic."""


class Field:
    characteristic: int = 0
    is_finite = False

    # raw arithmetic; subclasses override where the raw type lacks operators
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_one(self, a) -> bool:
        return a == self.one

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.convert(value))

    def elem(self, raw) -> "FieldElement":
        return FieldElement(self, raw)

    def elements(self):
        raise FieldError(f"{self} is not finite")

    def __repr__(self):
        return self.spec

    def __str__(self):
        return self.spec

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


class Rationals(Field):
    spec = "Q"

    def __init__(self):
        self.zero = gmpy2.mpq(0)
        self.one = gmpy2.mpq(1)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"cannot coerce {value.field} element into Q")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)) or type(value) is type(self.zero):
            return gmpy2.mpq(value)
        if isinstance(value, sympy.Rational):
            return gmpy2.mpq(int(value.p), int(value.q))
        raise FieldError(f"cannot coerce {value!r} into Q")

    def parse(self, text: str):
        text = text.strip()
        m = re.fullmatch(r"([+-]?\d+)(?:\s*/\s*(\d+))?", text)
        if not m:
            raise FieldError(f"bad rational {text!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise FieldError("zero denominator")
        return gmpy2.mpq(int(m.group(1)), den)

    def format(self, a) -> str:
        return f"{a.numerator}/{a.denominator}"

    def sort_key(self, a):
        return (a,)

    def from_int(self, n: int):
        return gmpy2.mpq(n)


class PrimeField(Field):
    is_finite = True

    def __init__(self, p: int):
        if p < 2 or not sympy.isprime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.spec = f"F{p}"
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"cannot coerce {value.field} element into {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, sympy.Rational):
            value = Fraction(int(value.p), int(value.q))
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction) or type(value) is type(gmpy2.mpq(0)):
            return self.div(int(value.numerator) % self.p, int(value.denominator) % self.p)
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str):
        text = text.strip()
        m = re.fullmatch(r"([+-]?\d+)(?:\s*/\s*(\d+))?(?:\s*mod\s*(\d+))?", text)
        if not m:
            raise FieldError(f"bad residue {text!r}")
        if m.group(3) and int(m.group(3)) != self.p:
            raise FieldError(f"residue {text!r} is not in {self}")
        num = int(m.group(1)) % self.p
        den = int(m.group(2)) % self.p if m.group(2) else 1
        return self.div(num, den)

    def format(self, a) -> str:
        return f"{a} mod {self.p}"

    def sort_key(self, a):
        return (a,)

    def from_int(self, n: int):
        return n % self.p

    def elements(self):
        return [FieldElement(self, k) for k in range(self.p)]


class FunctionField(Field):
    """Rational functions in named parameters over Q or F_p.

    Values are sympy fractions with gcd-cancelled numerator and a denominator
    made monic in sympy's lex order, so equality is structural.
    """

    def __init__(self, base: Field, params):
        params = tuple(params)
        if isinstance(base, FunctionField):
            raise FieldError("nested function fields are not supported")
        if not params:
            raise FieldError("function field needs at least one parameter")
        if len(set(params)) != len(params):
            raise FieldError(f"duplicate parameter names in {params}")
        for name in params:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise FieldError(f"bad parameter name {name!r}")
        self.base = base
        self.params = params
        self.characteristic = base.characteristic
        self.spec = f"{base.spec}({','.join(params)})"
        domain = QQ if isinstance(base, Rationals) else GF(base.p)
        self._sympy_field, *gens = _sympy_field(",".join(params), domain)
        self.gens = tuple(self._canon(g) for g in gens)
        self.zero = self._sympy_field.zero
        self.one = self._sympy_field.one
        self._symbols = {name: sympy.Symbol(name) for name in params}

    def _canon(self, f):
        lc = f.denom.LC
        if lc == 1:
            return f
        return f.raw_new(f.numer.quo_ground(lc), f.denom.quo_ground(lc))

    def add(self, a, b):
        return self._canon(a + b)

    def sub(self, a, b):
        return self._canon(a - b)

    def mul(self, a, b):
        return self._canon(a * b)

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._canon(1 / a)

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return self._canon(a / b)

    def is_zero(self, a) -> bool:
        return not a

    def from_int(self, n: int):
        return self._sympy_field(n)

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.value
            if value.field == self.base:
                value = value.value
                if isinstance(self.base, PrimeField):
                    return self._sympy_field(int(value))
                return self._canon(self._sympy_field(self._sympy_field.domain.convert(value)))
            raise FieldError(f"cannot coerce {value.field} element into {self}")
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, sympy.Rational):
            value = Fraction(int(value.p), int(value.q))
        if isinstance(value, int):
            return self._sympy_field(value)
        if isinstance(value, Fraction) or type(value) is type(gmpy2.mpq(0)):
            if isinstance(self.base, PrimeField):
                return self._canon(self._sympy_field(int(value.numerator)) / int(value.denominator))
            return self._canon(self._sympy_field(self._sympy_field.domain.convert(value)))
        if type(value) is type(self.zero) and value.field == self._sympy_field:
            return self._canon(value)
        raise FieldError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str):
        try:
            expr = sympy.sympify(text.replace("^", "**"), locals=dict(self._symbols))
        except (sympy.SympifyError, SyntaxError, TypeError) as exc:
            raise FieldError(f"bad rational function {text!r}") from exc
        extra = {str(s) for s in expr.free_symbols} - set(self.params)
        if extra:
            raise FieldError(f"unknown parameters {sorted(extra)} in {text!r}")
        if isinstance(self.base, PrimeField):
            num, den = sympy.fraction(sympy.together(expr))
            ring = self._sympy_field.ring
            n = ring.from_expr(num) if num.free_symbols else ring(int(num) % self.base.p)
            d = ring.from_expr(den) if den.free_symbols else ring(int(den) % self.base.p)
            if not d:
                raise FieldError("zero denominator")
            return self._canon(self._sympy_field.new(n, d))
        return self._canon(self._sympy_field.from_expr(expr))

    def format(self, a) -> str:
        num = str(a.numer.as_expr()).replace("**", "^")
        den = str(a.denom.as_expr()).replace("**", "^")
        return f"({num})/({den})"

    def sort_key(self, a):
        degree = sum(a.numer.degrees()) + sum(a.denom.degrees())
        return (degree, self.format(a))

    def pow(self, a, n: int):
        if n < 0:
            return self._canon(self.inv(a) ** (-n))
        return self._canon(a**n)


def parse_field(spec: str) -> Field:
    """Parse ``Q``, ``F<p>``, ``Q(a,b)`` or ``F<p>(a,b)``."""
    m = re.fullmatch(r"\s*(Q|F(\d+))\s*(?:\(([^()]*)\))?\s*", spec)
    if not m:
        raise FieldError(f"malformed field spec {spec!r}")
    base: Field = Rationals() if m.group(1) == "Q" else PrimeField(int(m.group(2)))
    if m.group(3) is None:
        return base
    names = [n.strip() for n in m.group(3).split(",")]
    if any(not n for n in names):
        raise FieldError(f"malformed parameter list in {spec!r}")
    return FunctionField(base, names)


QQ_FIELD = Rationals()


class FieldElement:
    """Immutable exact scalar tied to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field} and {other.field}")
            return other.value
        return self.field.convert(other)

    def __add__(self, other):
        if getattr(other, "absorbs_scalars", False):
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        if getattr(other, "absorbs_scalars", False):
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        if getattr(other, "absorbs_scalars", False):
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        if getattr(other, "absorbs_scalars", False):
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if getattr(other, "absorbs_scalars", False):
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        if getattr(other, "absorbs_scalars", False):
            return NotImplemented
        return FieldElement(self.field, self.field.div(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.convert(other)
        except FieldError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field.spec, self.value))

    def sort_key(self):
        return self.field.sort_key(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field.spec}:{self.field.format(self.value)}"
