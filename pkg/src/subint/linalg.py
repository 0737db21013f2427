"""Exact linear algebra over a :class:`~subint.scalars.Field`.

Vectors are tuples of raw field values.  Over GF(p) the elimination runs in
the compiled kernel when available.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .kernels import rref_mod
from .scalars import Field


def rref(field: Field, rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    if field.is_finite:
        return rref_mod(rows, field.p)
    m = rows
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(field: Field, rows) -> int:
    return len(rref(field, rows)[1])


def nullspace(field: Field, rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(field, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, pc in zip(red, pivots):
            x[pc] = field.neg(row[f])
        basis.append(tuple(x))
    return basis


def transpose(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*rows)]


def solve(field: Field, columns: Sequence[Sequence], target: Sequence):
    """Coefficients ``c`` with ``sum c_i columns[i] == target``, or ``None``."""
    n = len(columns)
    m = len(target)
    if n == 0:
        return [] if all(v == field.zero for v in target) else None
    aug = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    red, pivots = rref(field, aug)
    if n in pivots:
        return None
    sol = [field.zero] * n
    for row, pc in zip(red, pivots):
        sol[pc] = row[n]
    return sol


class Subspace:
    """Echelonised subspace of ``field^n`` with reduction and membership."""

    def __init__(self, field: Field, n: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.n = n
        vecs = [list(v) for v in vectors]
        self.rows, self.pivots = rref(field, vecs) if vecs else ([], [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[tuple]:
        return [tuple(r) for r in self.rows]

    def reduce(self, v: Sequence) -> tuple:
        f = self.field
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c != f.zero:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v) -> bool:
        return all(x == self.field.zero for x in self.reduce(v))

    def coordinates(self, v: Sequence) -> list | None:
        """Coordinates of ``v`` in the echelon basis, or ``None`` if outside."""
        if v not in self:
            return None
        return [v[pc] for pc in self.pivots]

    def extend(self, vectors: Iterable[Sequence]) -> "Subspace":
        return Subspace(self.field, self.n, self.basis() + [tuple(v) for v in vectors])

    def contains_space(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis())

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.dim == other.dim
                and self.contains_space(other))

    def intersection(self, other: "Subspace") -> "Subspace":
        f = self.field
        a, b = self.basis(), other.basis()
        if not a or not b:
            return Subspace(f, self.n)
        # sum x_i a_i - sum y_j b_j = 0
        cols = a + [tuple(f.neg(x) for x in v) for v in b]
        rows = transpose(cols)
        ker = nullspace(f, rows, len(cols))
        out = []
        for k in ker:
            vec = [f.zero] * self.n
            for c, v in zip(k[: len(a)], a):
                if c != f.zero:
                    vec = [f.add(s, f.mul(c, t)) for s, t in zip(vec, v)]
            out.append(vec)
        return Subspace(f, self.n, out)

    def complement_basis(self, ambient: "Subspace") -> list[tuple]:
        """Vectors of ``ambient`` extending ``self`` to a basis (greedy, in order)."""
        acc = Subspace(self.field, self.n, self.basis())
        out = []
        for v in ambient.basis():
            if v not in acc:
                out.append(v)
                acc = acc.extend([v])
        return out
