"""Finite-dimensional commutative algebras over QQ or GF(p).

An algebra is a basis plus structure constants; elements are coordinate
tuples of raw field values.  This module also provides the unit group,
nilradical and idempotent machinery, and the truncated polynomial
extensions ``R[X]/(X^(d+1))`` used for the N-groups.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

import sympy

from .errors import AlgebraError, CutoffExceeded, InexpressibleCokernel, NotAUnit
from .groups import GroupExpr, finite_quotient, lattice_cokernel, subgroup_product
from .kernels import AlgebraKernel
from .linalg import Subspace, nullspace, rank, solve, transpose
from .poly import Poly
from .scalars import Field, vectors

DEFAULT_CUTOFF = 10**6


def enumeration_cutoff() -> int:
    return int(os.environ.get("SUBINT_CUTOFF", DEFAULT_CUTOFF))


def check_size(field: Field, dim: int, what: str, cutoff: int | None = None) -> int:
    cutoff = cutoff or enumeration_cutoff()
    if not field.is_finite:
        raise CutoffExceeded(f"{what}: enumeration over Q is impossible")
    size = field.p**dim
    if size > cutoff:
        raise CutoffExceeded(f"{what}: {field.p}^{dim} = {size} elements exceeds cutoff {cutoff}")
    return size


class FinDimAlgebra:
    """Commutative unital algebra with basis ``e_0..e_{n-1}``.

    ``table[i][j]`` is the coordinate tuple of ``e_i * e_j``.
    """

    def __init__(self, field: Field, table, unity, labels=None, name: str = "",
                 check: bool = True, nil_basis=None):
        self.field = field
        self.dim = len(table)
        self.table = [[tuple(field.coerce(c) for c in table[i][j]) for j in range(self.dim)]
                      for i in range(self.dim)]
        self.unity = tuple(field.coerce(c) for c in unity)
        self.labels = list(labels) if labels else [f"e{i}" for i in range(self.dim)]
        self.name = name
        # override for the "true" nilradical when the algebra models a truncation of an
        # infinite ring such as R[T]/(T^(d+1)) standing for R[T]
        self._nil_override = [tuple(v) for v in nil_basis] if nil_basis is not None else None
        if field.is_finite:
            flat = [c for i in range(self.dim) for j in range(self.dim) for c in self.table[i][j]]
            self._kernel = AlgebraKernel(flat, self.dim, field.p)
        else:
            self._kernel = None
        if check:
            self.verify()

    # -- construction checks ---------------------------------------------------
    def verify(self):
        n, f = self.dim, self.field
        if len(self.unity) != n:
            raise AlgebraError("unity has the wrong length")
        basis = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            if len(self.table[i]) != n or any(len(v) != n for v in self.table[i]):
                raise AlgebraError("structure constants have the wrong shape")
            if self.mul(self.unity, basis[i]) != basis[i]:
                raise AlgebraError(f"unity does not act as identity on {self.labels[i]}")
            for j in range(i + 1, n):
                if self.table[i][j] != self.table[j][i]:
                    raise AlgebraError(f"not commutative on ({self.labels[i]}, {self.labels[j]})")
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.mul(self.table[i][j], basis[k]) != self.mul(basis[i], self.table[j][k]):
                raise AlgebraError(f"not associative on ({i}, {j}, {k})")
        return True

    # -- raw arithmetic --------------------------------------------------------
    def basis_vector(self, i: int) -> tuple:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim))

    @property
    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def add(self, x, y) -> tuple:
        f = self.field
        return tuple(f.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y) -> tuple:
        f = self.field
        return tuple(f.sub(a, b) for a, b in zip(x, y))

    def neg(self, x) -> tuple:
        return tuple(self.field.neg(a) for a in x)

    def scale(self, c, x) -> tuple:
        f = self.field
        return tuple(f.mul(c, a) for a in x)

    def mul(self, x, y) -> tuple:
        if self._kernel is not None:
            return self._kernel.mul(x, y)
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        ab = a * b
                        for k, c in enumerate(self.table[i][j]):
                            if c:
                                out[k] += ab * c
        return tuple(out)

    def power(self, x, e: int) -> tuple:
        r, b = self.unity, x
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def is_zero(self, x) -> bool:
        return all(v == self.field.zero for v in x)

    def const(self, c) -> tuple:
        return self.scale(self.field.coerce(c), self.unity)

    def mult_matrix(self, x) -> list[list]:
        """Matrix of ``y -> x*y`` (columns are images of basis vectors)."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return transpose(cols)

    def is_unit(self, x) -> bool:
        return rank(self.field, self.mult_matrix(x)) == self.dim

    def inverse(self, x) -> tuple:
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        sol = solve(self.field, cols, self.unity)
        if sol is None:
            raise NotAUnit(f"{self.render(x)} is not a unit")
        return tuple(sol)

    def is_nilpotent(self, x) -> bool:
        return self.is_zero(self.power(x, max(self.dim, 1)))

    def elements(self, cutoff: int | None = None) -> Iterator[tuple]:
        check_size(self.field, self.dim, f"enumerating {self.name or 'algebra'}", cutoff)
        return vectors(self.field, self.dim)

    def render(self, x) -> str:
        f = self.field
        terms = []
        for c, lab in zip(x, self.labels):
            if c != f.zero:
                terms.append(lab if c == f.one else f"{c}*{lab}")
        return " + ".join(terms) if terms else "0"

    def element(self, vec) -> "AlgElement":
        return AlgElement(self, tuple(self.field.coerce(c) for c in vec))

    def span(self, vecs) -> Subspace:
        return Subspace(self.field, self.dim, vecs)

    def __repr__(self):
        return f"FinDimAlgebra({self.name or '?'}, dim={self.dim}, {self.field!r})"

    # -- structure (cached) ------------------------------------------------------
    @cached_property
    def nilradical_space(self) -> Subspace:
        if self._nil_override is not None:
            return self.span(self._nil_override)
        return nilradical(self)

    @cached_property
    def primitive_idempotents(self) -> list[tuple]:
        return idempotent_decomposition(self)

    @property
    def is_reduced(self) -> bool:
        return self.nilradical_space.dim == 0

    def to_table_text(self) -> str:
        lines = [f"dim {self.dim}", "unity " + " ".join(map(str, self.unity))]
        for i in range(self.dim):
            for j in range(i, self.dim):
                if any(self.table[i][j]):
                    lines.append(f"{i} {j} : " + " ".join(map(str, self.table[i][j])))
        return "\n".join(lines)


@dataclass(frozen=True)
class AlgElement:
    algebra: FinDimAlgebra
    vec: tuple

    def __post_init__(self):
        if len(self.vec) != self.algebra.dim:
            raise ValueError("coordinate vector has the wrong length")

    def __add__(self, o):
        return AlgElement(self.algebra, self.algebra.add(self.vec, o.vec))

    def __sub__(self, o):
        return AlgElement(self.algebra, self.algebra.sub(self.vec, o.vec))

    def __neg__(self):
        return AlgElement(self.algebra, self.algebra.neg(self.vec))

    def __mul__(self, o):
        if isinstance(o, AlgElement):
            return AlgElement(self.algebra, self.algebra.mul(self.vec, o.vec))
        return AlgElement(self.algebra, self.algebra.scale(self.algebra.field.coerce(o), self.vec))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return AlgElement(self.algebra, self.algebra.power(self.vec, e))

    def is_unit(self) -> bool:
        return self.algebra.is_unit(self.vec)

    def inverse(self) -> "AlgElement":
        return AlgElement(self.algebra, self.algebra.inverse(self.vec))

    def is_zero(self) -> bool:
        return self.algebra.is_zero(self.vec)

    def __hash__(self):
        return hash(self.vec)

    def __eq__(self, o):
        return isinstance(o, AlgElement) and o.algebra is self.algebra and o.vec == self.vec

    def __repr__(self):
        return f"<{self.algebra.render(self.vec)}>"


class AlgebraMap:
    """Unital algebra homomorphism given by a ``target.dim x source.dim`` matrix."""

    def __init__(self, source: FinDimAlgebra, target: FinDimAlgebra, matrix=None, images=None,
                 check: bool = True):
        self.source, self.target = source, target
        if images is not None:
            matrix = transpose([tuple(v) for v in images], target.dim) if images else \
                [[] for _ in range(target.dim)]
        self.matrix = [list(r) for r in matrix]
        self.images = [tuple(self.matrix[i][j] for i in range(target.dim))
                       for j in range(source.dim)]
        if check:
            self.verify()

    def apply(self, x) -> tuple:
        f = self.target.field
        out = [f.zero] * self.target.dim
        for c, img in zip(x, self.images):
            if c != f.zero:
                out = [f.add(o, f.mul(c, v)) for o, v in zip(out, img)]
        return tuple(out)

    __call__ = apply

    def verify(self):
        s, t = self.source, self.target
        if self.apply(s.unity) != t.unity:
            raise AlgebraError("map does not send 1 to 1")
        for i in range(s.dim):
            for j in range(i, s.dim):
                if self.apply(s.table[i][j]) != t.mul(self.images[i], self.images[j]):
                    raise AlgebraError(f"map is not multiplicative on ({i}, {j})")
        return True

    def is_injective(self) -> bool:
        return rank(self.target.field, self.matrix) == self.source.dim if self.source.dim else True

    def image_space(self) -> Subspace:
        return self.target.span(self.images)

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """``self o other``."""
        return AlgebraMap(other.source, self.target,
                          images=[self.apply(v) for v in other.images], check=False)


# ---------------------------------------------------------------------------
# constructors

def base_algebra(field: Field) -> FinDimAlgebra:
    return FinDimAlgebra(field, [[(field.one,)]], (field.one,), labels=["1"], name=f"{field.name}")


def zero_algebra(field: Field) -> FinDimAlgebra:
    return FinDimAlgebra(field, [], (), labels=[], name="0", check=False)


def split_algebra(field: Field, n: int) -> FinDimAlgebra:
    """``k x ... x k`` (n copies)."""
    table = [[tuple(field.one if (i == j == k) else field.zero for k in range(n))
              for j in range(n)] for i in range(n)]
    return FinDimAlgebra(field, table, (field.one,) * n, labels=[f"u{i}" for i in range(n)],
                         name=f"{field.name}^{n}")


def poly_quotient(field: Field, modulus: Poly, var: str = "t") -> FinDimAlgebra:
    """``k[var]/(modulus)`` with monomial basis ``1, var, ..., var^(n-1)``."""
    m = modulus.monic()
    n = m.degree
    if n <= 0:
        return zero_algebra(field)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            r = Poly.monomial(field, i + j) % m
            row.append(r.vector(n))
        table.append(row)
    labels = ["1"] + [var if k == 1 else f"{var}^{k}" for k in range(1, n)]
    return FinDimAlgebra(field, table, Poly.const(field, 1).vector(n), labels=labels,
                         name=f"{field.name}[{var}]/({m.render(var)})", check=(n <= 8))


def product_algebra(A: FinDimAlgebra, B: FinDimAlgebra) -> FinDimAlgebra:
    f = A.field
    n, m = A.dim, B.dim
    z = f.zero
    table = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(A.table[i][j] + (z,) * m)
            elif i >= n and j >= n:
                row.append((z,) * n + B.table[i - n][j - n])
            else:
                row.append((z,) * (n + m))
        table.append(row)
    return FinDimAlgebra(f, table, A.unity + B.unity,
                         labels=[f"({l},0)" for l in A.labels] + [f"(0,{l})" for l in B.labels],
                         name=f"{A.name} x {B.name}", check=False)


def algebra_from_table_text(field: Field, text: str, name: str = "") -> FinDimAlgebra:
    """Plain-text structure constants::

        dim 2
        unity 1 0
        0 0 : 1 0
        0 1 : 0 1
        1 1 : 0 0

    Missing products are zero; ``i j`` also defines ``j i``.
    """
    dim = None
    unity = None
    entries = {}
    for raw in text.strip().splitlines():
        line = raw.split("#")[0].strip()
        if not line:
            continue
        if line.startswith("dim"):
            dim = int(line.split()[1])
        elif line.startswith("unity"):
            unity = [Fraction(x) for x in line.split()[1:]]
        else:
            lhs, rhs = line.split(":")
            i, j = map(int, lhs.split())
            entries[(i, j)] = [Fraction(x) for x in rhs.split()]
    if dim is None or unity is None:
        raise AlgebraError("table needs 'dim' and 'unity' lines")
    zero = [0] * dim
    table = [[entries.get((i, j), entries.get((j, i), zero)) for j in range(dim)] for i in range(dim)]
    return FinDimAlgebra(field, table, unity, name=name)


def poly_extension(A: FinDimAlgebra, d: int, var: str = "X", nil_from_base: bool = False
                   ) -> FinDimAlgebra:
    """``A[var]/(var^(d+1))``; basis index ``k*dim + i`` for ``e_i var^k``.

    With ``nil_from_base`` the algebra stands in for the untruncated ``A[var]``: its
    recorded nilradical is ``N(A)[var]`` rather than the truncation's own radical.
    """
    f = A.field
    n = A.dim
    N = (d + 1) * n
    z = f.zero
    table = [[None] * N for _ in range(N)]
    for k1 in range(d + 1):
        for k2 in range(d + 1):
            for i in range(n):
                for j in range(n):
                    vec = [z] * N
                    if k1 + k2 <= d:
                        base = (k1 + k2) * n
                        for t, c in enumerate(A.table[i][j]):
                            vec[base + t] = c
                    table[k1 * n + i][k2 * n + j] = tuple(vec)
    unity = A.unity + (z,) * (N - n)
    labels = [(l if k == 0 else (f"{l}*{var}" if k == 1 else f"{l}*{var}^{k}"))
              for k in range(d + 1) for l in A.labels]
    nil = None
    if nil_from_base:
        nbase = A.nilradical_space.basis()
        nil = [tuple([z] * (k * n)) + v + tuple([z] * ((d - k) * n)) for k in range(d + 1) for v in nbase]
    return FinDimAlgebra(f, table, unity, labels=labels, name=f"({A.name})[{var}]/({var}^{d + 1})",
                         check=False, nil_basis=nil)


def extend_map(phi: AlgebraMap, S: FinDimAlgebra, T: FinDimAlgebra, d: int) -> AlgebraMap:
    """Coefficientwise extension of ``phi`` to ``S = A[X]/X^(d+1) -> T = B[X]/X^(d+1)``."""
    n, m = phi.source.dim, phi.target.dim
    z = phi.target.field.zero
    images = []
    for k in range(d + 1):
        for i in range(n):
            img = phi.images[i]
            images.append(tuple([z] * (k * m)) + img + tuple([z] * ((d - k) * m)))
    return AlgebraMap(S, T, images=images, check=False)


def subquotient_algebra(T: FinDimAlgebra, sub: Subspace, ideal: Subspace | None = None,
                        name: str = "", labels_from=None) -> tuple[FinDimAlgebra, list, list]:
    """The algebra ``sub/ideal`` for a subalgebra ``sub`` of ``T`` and an ideal of it.

    Returns ``(algebra, lift, ideal_basis)`` where ``lift[i]`` is a representative in
    ``T`` of the i-th basis vector.
    """
    f = T.field
    ideal = ideal or T.span([])
    if not sub.contains_space(ideal):
        raise AlgebraError("ideal is not contained in the subalgebra")
    reps = ideal.complement_basis(sub)
    # always represent 1 first when it is nonzero in the quotient
    one = T.unity
    if one not in ideal:
        reps = [one] + [r for r in reps]
        acc = ideal.extend([one])
        keep = []
        for r in reps[1:]:
            if r not in acc:
                keep.append(r)
                acc = acc.extend([r])
        reps = [one] + keep
    n = len(reps)

    def coords(v):
        red = ideal.reduce(v)
        sol = solve(f, [ideal.reduce(r) for r in reps], red)
        if sol is None:
            raise AlgebraError("product leaves the subalgebra")
        return tuple(sol)

    table = [[coords(T.mul(reps[i], reps[j])) for j in range(n)] for i in range(n)]
    unity = coords(one) if n else ()
    labels = labels_from(reps) if labels_from else [f"r{i}" for i in range(n)]
    alg = FinDimAlgebra(f, table, unity, labels=labels, name=name, check=(n <= 8)) if n \
        else zero_algebra(f)
    return alg, reps, ideal.basis()


# ---------------------------------------------------------------------------
# nilradical, idempotents

def nilradical_bruteforce(A: FinDimAlgebra, cutoff: int | None = None) -> Subspace:
    nil = [x for x in A.elements(cutoff) if A.is_nilpotent(x)]
    S = A.span(nil)
    if A.field.p**S.dim != len(nil):
        raise AlgebraError("nilpotent elements do not form a subspace (noncommutative?)")
    return S


def nilradical_linear(A: FinDimAlgebra) -> Subspace:
    f = A.field
    n = A.dim
    if n == 0:
        return A.span([])
    if f.is_finite:
        # x -> x^p is F_p-linear; N = ker of a high enough iterate
        k = 1
        while f.p**k < n:
            k += 1
        cols = [A.power(A.basis_vector(j), f.p**k) for j in range(n)]
        return A.span(nullspace(f, transpose(cols), n))
    # characteristic 0: radical of the trace form
    rows = []
    for j in range(n):
        row = []
        for i in range(n):
            M = A.mult_matrix(A.mul(A.basis_vector(i), A.basis_vector(j)))
            row.append(sum(M[k][k] for k in range(n)))
        rows.append(row)
    return A.span(nullspace(f, rows, n))


def nilradical(A: FinDimAlgebra) -> Subspace:
    f = A.field
    if f.is_finite and f.p**A.dim <= min(enumeration_cutoff(), 10**6) and A.dim <= 6:
        return nilradical_bruteforce(A)
    return nilradical_linear(A)


def _to_sympy(p: Poly):
    x = sympy.Symbol("x")
    if p.field.is_finite:
        return sympy.Poly(list(reversed([int(c) for c in p.coeffs])), x, modulus=p.field.p)
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])),
                      x, domain=sympy.QQ)


def _from_sympy(field: Field, sp) -> Poly:
    coeffs = [c for c in reversed(sp.all_coeffs())]
    if field.is_finite:
        return Poly(field, [int(c) % field.p for c in coeffs])
    return Poly(field, [Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in coeffs])


def factor_poly(p: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factorisation over the ground field."""
    if p.degree <= 0:
        return []
    _, facs = _to_sympy(p).factor_list()
    return [(_from_sympy(p.field, g).monic(), e) for g, e in facs]


def minimal_polynomial(A: FinDimAlgebra, y, unity=None) -> Poly:
    """Minimal polynomial of ``y`` in the algebra with identity ``unity`` (a block ``eA``)."""
    f = A.field
    one = unity if unity is not None else A.unity
    powers = [one]
    while True:
        nxt = A.mul(powers[-1], y)
        sol = solve(f, powers, nxt)
        if sol is not None:
            return Poly(f, [f.neg(c) for c in sol] + [f.one])
        powers.append(nxt)


def eval_poly(A: FinDimAlgebra, p: Poly, y, unity=None) -> tuple:
    one = unity if unity is not None else A.unity
    acc = A.zero
    for c in reversed(p.coeffs):
        acc = A.add(A.mul(acc, y), A.scale(c, one))
    return acc


def _split_block(A: FinDimAlgebra, e, y) -> list[tuple]:
    """Split idempotent ``e`` using the primary decomposition of ``y*e``."""
    ye = A.mul(y, e)
    mu = minimal_polynomial(A, ye, unity=e)
    facs = factor_poly(mu)
    if len(facs) <= 1:
        return [e]
    parts = [g**k for g, k in facs]
    out = []
    for j, g in enumerate(parts):
        h = Poly.const(A.field, 1)
        for i, other in enumerate(parts):
            if i != j:
                h = h * other
        _, s, _ = h.gcdex(g)
        ej = eval_poly(A, s * h, ye, unity=e)
        out.append(ej)
    return out


def separating_elements(A: FinDimAlgebra) -> list[tuple]:
    f = A.field
    n = A.dim
    if f.is_finite:
        # fixed points of Frobenius = span of the primitive idempotents
        cols = [A.sub(A.power(A.basis_vector(j), f.p), A.basis_vector(j)) for j in range(n)]
        return nullspace(f, transpose(cols), n)
    return [A.basis_vector(j) for j in range(n)]


def idempotent_decomposition(A: FinDimAlgebra) -> list[tuple]:
    """Primitive orthogonal idempotents summing to 1 (one per connected component)."""
    if A.dim == 0:
        return []
    idems = [A.unity]
    for y in separating_elements(A):
        nxt = []
        for e in idems:
            nxt.extend(_split_block(A, e, y))
        idems = nxt
    if not A.field.is_finite:
        # pairwise products catch most non-split situations over Q
        basis = [A.basis_vector(j) for j in range(A.dim)]
        for a, b in itertools.combinations(basis, 2):
            y = A.add(a, A.mul(a, b))
            nxt = []
            for e in idems:
                nxt.extend(_split_block(A, e, y))
            idems = nxt
    return sorted(idems, key=lambda v: tuple(A.field.sort_key(c) for c in v), reverse=True)


def idempotents_bruteforce(A: FinDimAlgebra, cutoff: int | None = None) -> list[tuple]:
    """All idempotents by enumeration; returns the primitive ones."""
    ids = [x for x in A.elements(cutoff) if A.mul(x, x) == x and not A.is_zero(x)]
    prim = []
    for e in ids:
        if not any(A.mul(e, g) == g and g != e for g in ids):
            prim.append(e)
    return prim


def component_data(A: FinDimAlgebra):
    """``[(e, block_dim, residue_degree)]`` per primitive idempotent."""
    out = []
    N = A.nilradical_space
    for e in A.primitive_idempotents:
        block = A.span([A.mul(e, A.basis_vector(j)) for j in range(A.dim)])
        nil_block = A.span([A.mul(e, v) for v in N.basis()])
        out.append((e, block.dim, block.dim - nil_block.dim))
    return out


def component_matrix(phi: AlgebraMap) -> list[list[int]]:
    """H^0 map ``Z^{#comp(source)} -> Z^{#comp(target)}`` as a target x source 0/1 matrix."""
    S, T = phi.source, phi.target
    src = S.primitive_idempotents
    tgt = T.primitive_idempotents
    M = [[0] * len(src) for _ in tgt]
    for i, e in enumerate(src):
        fe = phi.apply(e)
        for j, g in enumerate(tgt):
            if not T.is_zero(T.mul(fe, g)):
                M[j][i] = 1
    return M


# ---------------------------------------------------------------------------
# unit groups

def units(A: FinDimAlgebra, cutoff: int | None = None) -> list[tuple]:
    return [x for x in A.elements(cutoff) if A.is_unit(x)]


def _rational_split(A: FinDimAlgebra):
    comps = component_data(A)
    if any(r != 1 for _, _, r in comps):
        raise InexpressibleCokernel(
            f"{A.name}: residue field larger than Q; Gm of a number field is not a GroupExpr")
    return comps


@dataclass
class UnitGroup:
    group: GroupExpr
    elements: list | None  # enumeration witness over GF(p)
    log_coordinates: int | None = None  # dim of nilradical over Q


def unit_group(A: FinDimAlgebra, cutoff: int | None = None) -> UnitGroup:
    f = A.field
    if f.is_finite:
        U = units(A, cutoff)
        return UnitGroup(finite_quotient(U, {A.unity}, A.mul, A.unity, field=f), U)
    comps = _rational_split(A)
    n = A.nilradical_space.dim
    return UnitGroup(GroupExpr(gm_rank=len(comps), ga_rank=n, field=f), None, n)


def exp_nilpotent(A: FinDimAlgebra, n) -> tuple:
    """Truncated exponential of a nilpotent element (characteristic 0)."""
    if A.field.is_finite:
        raise InexpressibleCokernel("exp needs characteristic 0")
    acc = A.unity
    term = A.unity
    k = 1
    while True:
        term = A.scale(Fraction(1, k), A.mul(term, n))
        if A.is_zero(term):
            return acc
        acc = A.add(acc, term)
        k += 1


def log_unipotent(A: FinDimAlgebra, u) -> tuple:
    """``log(u)`` for ``u = 1 + n`` with ``n`` nilpotent (characteristic 0)."""
    if A.field.is_finite:
        raise InexpressibleCokernel("log needs characteristic 0")
    n = A.sub(u, A.unity)
    if not A.is_nilpotent(n):
        raise NotAUnit("log is only defined on 1 + nilpotent")
    acc = A.zero
    power = A.unity
    k = 1
    while True:
        power = A.mul(power, n)
        if A.is_zero(power):
            return acc
        c = Fraction((-1) ** (k + 1), k)
        acc = A.add(acc, A.scale(c, power))
        k += 1


def unit_map_cokernel(target: FinDimAlgebra, maps: Sequence[AlgebraMap],
                      cutoff: int | None = None) -> GroupExpr:
    """Cokernel of ``prod U(source_i) -> U(target)``."""
    f = target.field
    if f.is_finite:
        U = units(target, cutoff)
        images = [{phi.apply(u) for u in units(phi.source, cutoff)} for phi in maps]
        H = subgroup_product(*images, mul=target.mul, one=target.unity)
        return finite_quotient(U, H, target.mul, target.unity, field=f)
    # Q: split algebras only; toric part via component matrices, unipotent part linear
    _rational_split(target)
    for phi in maps:
        _rational_split(phi.source)
    ncomp = len(target.primitive_idempotents)
    cols = []
    for phi in maps:
        M = component_matrix(phi)
        cols += [[M[j][i] for j in range(ncomp)] for i in range(len(M[0]) if M else 0)]
    gm = lattice_cokernel(transpose(cols, ncomp) if cols else [], ncomp, atom="Gm", field=f)
    N = target.nilradical_space
    img = target.span([phi.apply(v) for phi in maps for v in phi.source.nilradical_space.basis()])
    return gm + GroupExpr(ga_rank=N.dim - img.dim, field=f)


def identity_map(A: FinDimAlgebra) -> AlgebraMap:
    return AlgebraMap(A, A, images=[A.basis_vector(i) for i in range(A.dim)], check=False)


def unit_map_from_base(A: FinDimAlgebra) -> AlgebraMap:
    """The structure map ``k -> A``."""
    return AlgebraMap(base_algebra(A.field), A, images=[A.unity], check=False)


def smallest(field: Field, vecs):
    """Deterministic choice: lowest 'degree' (last nonzero coordinate) then lexicographic."""
    def key(v):
        last = max((i for i, c in enumerate(v) if c != field.zero), default=-1)
        return (last, tuple(field.sort_key(c) for c in reversed(v)))
    return min(vecs, key=key)

