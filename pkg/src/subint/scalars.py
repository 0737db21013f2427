"""Exact scalars over the rationals and prime fields.

Internally every other module works with *raw* values (``Fraction`` for QQ,
``int`` in ``[0, p)`` for GF(p)) together with the :class:`Field` object
that knows how to combine them.  :class:`Scalar` is the boxed public form.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DivisionByZero, FieldMismatch

MAX_PRIME = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """A ground field: ``QQ`` or ``GF(p)``."""

    p: int = 0  # characteristic; 0 for QQ

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    # overridden
    def coerce(self, x):
        raise NotImplementedError

    zero: object
    one: object

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self) -> Iterator:
        raise NotImplementedError

    def order(self) -> int | None:
        return self.p if self.p else None

    def render(self, a) -> str:
        raise NotImplementedError

    def sort_key(self, a):
        return a


class Rationals(Field):
    p = 0
    zero = Fraction(0)
    one = Fraction(1)
    name = "Q"

    def coerce(self, x) -> Fraction:
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x.value
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in Q")
        return 1 / a

    def elements(self):
        raise TypeError("Q is infinite; enumeration is unsupported")

    def render(self, a) -> str:
        return str(a)

    def small_elements(self, bound: int = 2):
        """Integers in [-bound, bound]; used for sampling over Q."""
        return [Fraction(i) for i in range(-bound, bound + 1)]

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not (2 <= p <= MAX_PRIME) or not _is_prime(p):
            raise ValueError(f"GF({p}): modulus must be a prime <= 2^31")
        self.p = p
        self.zero = 0
        self.one = 1 % p
        self.name = f"F{p}"

    def coerce(self, x) -> int:
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x.value
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"division by zero in F{self.p}")
        return pow(a, -1, self.p)

    def elements(self):
        return range(self.p)

    def small_elements(self, bound: int = 2):
        return list(range(min(self.p, 2 * bound + 1)))

    def render(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()
_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def field_from_name(name: str) -> Field:
    """``'Q'``, ``'F2'``, ``'F5'`` ... -> field."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"F_?(\d+)", name)
    if not m:
        raise ValueError(f"unknown field {name!r}")
    return GF(int(m.group(1)))


def vectors(field: Field, dim: int) -> Iterator[tuple]:
    """All coordinate vectors of length ``dim`` (finite fields only)."""
    return itertools.product(field.elements(), repeat=dim)


@dataclass(frozen=True)
class Scalar:
    field: Field
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other) -> object:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    __radd__ = __add__
    __rmul__ = __mul__

    def __bool__(self):
        return self.value != self.field.zero

    def render(self) -> str:
        if self.field.is_finite:
            return f"{self.value} (mod {self.field.p})"
        return str(self.value)

    def __str__(self):
        return self.render()


_OPS = {"+": "add", "-": "sub", "−": "sub", "*": "mul", "×": "mul", "/": "div", "÷": "div"}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    try:
        meth = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    return Scalar(a.field, getattr(a.field, meth)(a.value, b.value))


_MOD_RE = re.compile(r"\s*(-?\d+)\s*\(mod\s+(\d+)\)\s*")


def parse_scalar(text: str, field: Field | None = None) -> Scalar:
    """Inverse of :meth:`Scalar.render`."""
    m = _MOD_RE.fullmatch(text)
    if m:
        f = GF(int(m.group(2)))
        if field is not None and field != f:
            raise FieldMismatch(f"{f} vs {field}")
        return Scalar(f, int(m.group(1)))
    return Scalar(field or QQ, Fraction(text.strip()))
