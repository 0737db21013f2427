"""Dense univariate polynomials in ``t`` over QQ or GF(p)."""
from __future__ import annotations

import re
from fractions import Fraction

from .kernels import poly_mul_mod
from .scalars import Field


def _trim(field, coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == field.zero:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: Field, coeffs=()):
        self.field = field
        self.coeffs = _trim(field, (field.coerce(c) for c in coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, field, coeffs) -> "Poly":
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = _trim(field, coeffs)
        p._hash = None
        return p

    @classmethod
    def monomial(cls, field, n: int, c=None) -> "Poly":
        c = field.one if c is None else field.coerce(c)
        return cls._raw(field, [field.zero] * n + [c])

    @classmethod
    def const(cls, field, c) -> "Poly":
        return cls._raw(field, [field.coerce(c)])

    @classmethod
    def t(cls, field) -> "Poly":
        return cls.monomial(field, 1)

    # -- basic queries ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def vector(self, length: int) -> tuple:
        """Coefficient vector padded to ``length`` (degree < length required)."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return self.coeffs + (self.field.zero,) * (length - len(self.coeffs))

    @classmethod
    def from_vector(cls, field, vec) -> "Poly":
        return cls._raw(field, vec)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim(self.field, [self.field.coerce(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(self.field, other)

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly._raw(f, [f.add(a[i] if i < len(a) else f.zero, b[i] if i < len(b) else f.zero)
                             for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        if f.is_finite:
            return Poly._raw(f, poly_mul_mod(self.coeffs, other.coeffs, f.p))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(f, ())
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(f, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        f = self.field
        return Poly._raw(f, [f.mul(c, x) for x in self.coeffs])

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other: "Poly"):
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return Poly._raw(f, ()), self
        q = [f.zero] * (dq + 1)
        inv_lead = f.inv(other.lead)
        db = other.degree
        for k in range(dq, -1, -1):
            c = r[k + db]
            if c != f.zero:
                c = f.mul(c, inv_lead)
                q[k] = c
                for i, b in enumerate(other.coeffs):
                    r[k + i] = f.sub(r[k + i], f.mul(c, b))
        return Poly._raw(f, q), Poly._raw(f, r[:db] if db > 0 else [])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, x):
        f = self.field
        acc = f.zero
        x = f.coerce(x)
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def derivative(self) -> "Poly":
        f = self.field
        return Poly._raw(f, [f.mul(f.coerce(i), c) for i, c in enumerate(self.coeffs)][1:])

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly._raw(self.field, ())
        for c in reversed(self.coeffs):
            acc = acc * other + Poly.const(self.field, c)
        return acc

    def gcdex(self, other: "Poly"):
        """``(g, s, u)`` with ``s*self + u*other = g`` monic gcd."""
        f = self.field
        r0, r1 = self, other
        s0, s1 = Poly.const(f, 1), Poly._raw(f, ())
        u0, u1 = Poly._raw(f, ()), Poly.const(f, 1)
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            u0, u1 = u1, u0 - q * u1
        if r0:
            inv = f.inv(r0.lead)
            return r0.scale(inv), s0.scale(inv), u0.scale(inv)
        return r0, s0, u0

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    # -- text --------------------------------------------------------------
    def render(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        f = self.field
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == f.zero:
                continue
            neg = (not f.is_finite) and c < 0
            mag = -c if neg else c
            mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mon and mag == 1:
                body = mon
            elif mon:
                body = f"{mag}*{mon}"
            else:
                body = str(mag)
            terms.append(("-" if neg else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self.render()})"

    __str__ = render


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:([a-zA-Z])\s*(?:\^\s*(\d+))?)?")


def parse_poly(field: Field, text: str, var: str = "t") -> Poly:
    """Parse sums of terms like ``3*t^2 - t + 1/2``; products/parentheses via ``(`` are
    not handled here (the DSL parser expands them)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    acc = Poly(field, ())
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        sign, num, v, exp = m.groups()
        if v is not None and v != var:
            raise ValueError(f"unknown variable {v!r} in {text!r}")
        if num is None and v is None:
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        n = 0 if v is None else int(exp) if exp else 1
        acc = acc + Poly.monomial(field, n, field.coerce(c))
        pos = m.end()
    return acc
