"""Laurent and truncated polynomial extensions of finite-dimensional algebras.

A :class:`LaurentPoly` over an algebra ``R`` is a finite map ``exponent ->
coefficient`` (coefficients are coordinate tuples of ``R``).  It is exact and
unbounded; :class:`TruncatedExtension` restricts to a degree window and refuses
products that leave it.

Units of ``R[X, X^-1]`` for a finite-dimensional ``R`` are decided exactly: on
each connected component ``R e`` (a local algebra) a Laurent polynomial is a
unit iff exactly one coefficient is a unit there and the rest are nilpotent.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .algebra import FinDimAlgebra, check_size, poly_extension, units
from .errors import NotAUnit, TruncationOverflow
from .linalg import solve


class LaurentPoly:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: FinDimAlgebra, coeffs: dict[int, tuple] | None = None):
        self.algebra = algebra
        self.coeffs = {k: tuple(v) for k, v in (coeffs or {}).items() if not algebra.is_zero(v)}

    @classmethod
    def const(cls, algebra, c) -> "LaurentPoly":
        return cls(algebra, {0: tuple(c)})

    @classmethod
    def one(cls, algebra) -> "LaurentPoly":
        return cls(algebra, {0: algebra.unity})

    @classmethod
    def monomial(cls, algebra, k: int, c=None) -> "LaurentPoly":
        return cls(algebra, {k: algebra.unity if c is None else tuple(c)})

    @classmethod
    def from_list(cls, algebra, coeffs, low: int = 0) -> "LaurentPoly":
        return cls(algebra, {low + i: c for i, c in enumerate(coeffs)})

    def coeff(self, k: int) -> tuple:
        return self.coeffs.get(k, self.algebra.zero)

    @property
    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        R = self.algebra
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = R.add(out[k], v) if k in out else v
        return LaurentPoly(R, out)

    def __neg__(self):
        return LaurentPoly(self.algebra, {k: self.algebra.neg(v) for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        R = self.algebra
        out: dict[int, tuple] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                p = R.mul(a, b)
                out[i + j] = R.add(out[i + j], p) if i + j in out else p
        return LaurentPoly(R, out)

    def scale(self, c: tuple) -> "LaurentPoly":
        R = self.algebra
        return LaurentPoly(R, {k: R.mul(c, v) for k, v in self.coeffs.items()})

    def positive_part(self) -> "LaurentPoly":
        return LaurentPoly(self.algebra, {k: v for k, v in self.coeffs.items() if k > 0})

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly(self.algebra, {k: v for k, v in self.coeffs.items() if k < 0})

    def render(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        R = self.algebra
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = R.render(self.coeffs[k])
            c = f"({c})" if "+" in c else c
            mon = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            parts.append(c if not mon else (mon if c == "1" else f"{c}*{mon}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


def _geometric_inverse(w: LaurentPoly) -> LaurentPoly:
    one = LaurentPoly.one(w.algebra)
    m = one - w  # w = 1 - m, w^-1 = sum m^k
    acc, term = one, one
    for _ in range(w.algebra.dim + 2):
        term = term * m
        if term.is_zero():
            return acc
        acc = acc + term
    raise NotAUnit("element is not 1 + nilpotent")


# ---------------------------------------------------------------------------
# exact unit criterion and decomposition

def component_exponents(u: LaurentPoly) -> list[int] | None:
    """Per primitive idempotent ``e``: the unique exponent whose coefficient is a unit
    of ``R e``, provided all other coefficients are nilpotent there; else ``None``."""
    R = u.algebra
    N = R.nilradical_space
    out = []
    for e in R.primitive_idempotents:
        unit_at = []
        for k, c in u.coeffs.items():
            ce = R.mul(c, e)
            if ce in N:
                continue
            unit_at.append(k)
        if len(unit_at) != 1:
            return None
        out.append(unit_at[0])
    return out


def is_laurent_unit(u: LaurentPoly) -> bool:
    return component_exponents(u) is not None


def idempotent_monomial(R: FinDimAlgebra, exps: list[int]) -> LaurentPoly:
    """``sum_i e_i X^{exps[i]}``: the H^0-part of a unit."""
    out = LaurentPoly(R)
    for e, k in zip(R.primitive_idempotents, exps):
        out = out + LaurentPoly.monomial(R, k, e)
    return out


@dataclass
class LaurentDecomposition:
    """``u = a * X^e * p_plus * p_minus`` with ``a`` in U(R), ``e`` in H^0(R),
    ``p_plus`` in 1 + X N[X] and ``p_minus`` in 1 + X^-1 N[X^-1]."""

    a: tuple
    exponents: list[int]
    monomial: LaurentPoly
    p_plus: LaurentPoly
    p_minus: LaurentPoly

    @property
    def m(self) -> int | None:
        """The common X-degree when all components agree (connected case)."""
        return self.exponents[0] if len(set(self.exponents)) == 1 else None

    def product(self) -> LaurentPoly:
        R = self.monomial.algebra
        return LaurentPoly.const(R, self.a) * self.monomial * self.p_plus * self.p_minus


def laurent_unit_decompose(u: LaurentPoly) -> LaurentDecomposition:
    R = u.algebra
    exps = component_exponents(u)
    if exps is None:
        raise NotAUnit(f"{u.render()} is not a unit of the Laurent ring")
    mono = idempotent_monomial(R, exps)
    w = u * idempotent_monomial(R, [-k for k in exps])
    a = w.coeff(0)
    a_inv = R.inverse(a)
    w = w.scale(a_inv)
    one = LaurentPoly.one(R)
    plus, minus = one, one
    # w = 1 + n with n nilpotent; peel off factors, the error drops one step of the
    # nilpotent filtration each round
    for _ in range(R.dim + 2):
        n = w - one
        if n.is_zero():
            break
        fp = one + n.positive_part()
        fm = one + n.negative_part()
        f0 = one + LaurentPoly.const(R, n.coeff(0))
        plus = plus * fp
        minus = minus * fm
        a = R.mul(a, f0.coeff(0))
        w = w * _geometric_inverse(fp) * _geometric_inverse(fm) * _geometric_inverse(f0)
    else:
        raise NotAUnit("decomposition did not terminate")
    return LaurentDecomposition(a, exps, mono, plus, minus)


def laurent_inverse_solve(u: LaurentPoly, window: int) -> LaurentPoly | None:
    """Oracle: solve ``u * v = 1`` linearly for ``v`` supported in ``[-window, window]``."""
    R = u.algebra
    f = R.field
    lo, hi = -window, window
    if u.coeffs:
        lo_out = lo + min(u.coeffs)
        hi_out = hi + max(u.coeffs)
    else:
        return None
    n = R.dim
    out_len = (hi_out - lo_out + 1) * n
    cols = []
    for k in range(lo, hi + 1):
        for i in range(n):
            prod = u * LaurentPoly.monomial(R, k, R.basis_vector(i))
            vec = [f.zero] * out_len
            for e, c in prod.coeffs.items():
                base = (e - lo_out) * n
                vec[base:base + n] = list(c)
            cols.append(vec)
    target = [f.zero] * out_len
    if not lo_out <= 0 <= hi_out:
        return None
    target[(0 - lo_out) * n:(0 - lo_out) * n + n] = list(R.unity)
    sol = solve(f, cols, target)
    if sol is None:
        return None
    coeffs = {}
    for idx, k in enumerate(range(lo, hi + 1)):
        coeffs[k] = tuple(sol[idx * n:(idx + 1) * n])
    return LaurentPoly(R, coeffs)


# ---------------------------------------------------------------------------
# truncation windows

class TruncatedExtension:
    """``R[X]`` (window ``[0, d]``) or ``R[X, X^-1]`` (window ``[-d, d]``) at degree ``d``."""

    def __init__(self, base: FinDimAlgebra, d: int, laurent: bool = True, var: str = "X"):
        if d < 1:
            raise ValueError("truncation d must be at least 1")
        self.base, self.d, self.laurent, self.var = base, d, laurent, var
        self.low = -d if laurent else 0
        self.high = d

    @property
    def width(self) -> int:
        return self.high - self.low + 1

    def contains(self, u: LaurentPoly) -> bool:
        return all(self.low <= k <= self.high for k in u.coeffs)

    def element(self, coeffs) -> LaurentPoly:
        u = LaurentPoly.from_list(self.base, coeffs, self.low)
        return u

    def mul(self, u: LaurentPoly, v: LaurentPoly) -> LaurentPoly:
        w = u * v
        if not self.contains(w):
            raise TruncationOverflow(
                f"product leaves the window [{self.low}, {self.high}] (support {w.support})")
        return w

    def elements(self, cutoff: int | None = None) -> Iterator[LaurentPoly]:
        R = self.base
        check_size(R.field, R.dim * self.width, "enumerating the truncation window", cutoff)
        elems = list(R.elements(cutoff))
        for combo in itertools.product(elems, repeat=self.width):
            yield self.element(combo)

    def units(self, cutoff: int | None = None) -> list[LaurentPoly]:
        return [u for u in self.elements(cutoff) if is_laurent_unit(u)]

    def unit_count_formula(self) -> int:
        """Size of the unit set in the window predicted by the U x NU x NU x H^0
        decomposition (laurent case)."""
        R = self.base
        p = R.field.p
        c = len(R.primitive_idempotents)
        nil = R.nilradical_space.dim
        count = p**(nil * (self.width - 1)) * len(units(R))
        if self.laurent:
            count *= self.width**c
        return count

    def __repr__(self):
        kind = f"{self.var}, {self.var}^-1" if self.laurent else self.var
        return f"({self.base.name})[{kind}] truncated at {self.d}"


# ---------------------------------------------------------------------------
# truncated NU groups as explicit sets

def nu_algebra(R: FinDimAlgebra, d: int, var: str = "X") -> FinDimAlgebra:
    return poly_extension(R, d, var)


def nu_elements(R: FinDimAlgebra, d: int, cutoff: int | None = None, var: str = "X"
                ) -> tuple[FinDimAlgebra, list[tuple]]:
    """``NU<=d(R) = 1 + X N[X] mod X^(d+1)`` enumerated inside ``R[X]/(X^(d+1))``."""
    P = nu_algebra(R, d, var)
    N = R.nilradical_space.basis()
    nd = len(N)
    n = R.dim
    check_size(R.field, nd * d, f"NU<={d}({R.name})", cutoff)
    f = R.field
    nil_elems = []
    for coeffs in itertools.product(f.elements(), repeat=nd):
        v = [f.zero] * n
        for c, b in zip(coeffs, N):
            if c:
                v = [f.add(x, f.mul(c, y)) for x, y in zip(v, b)]
        nil_elems.append(tuple(v))
    out = []
    for combo in itertools.product(nil_elems, repeat=d):
        vec = list(R.unity)
        for part in combo:
            vec.extend(part)
        out.append(tuple(vec))
    return P, out
