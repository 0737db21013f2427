"""Finitely generated abelian group values and the integer linear algebra behind them.

:class:`GroupExpr` is the single value type for every group the library
computes: ``Z^r x Z/m1 x ... x Ga(k)^a x Gm(k)^b``.  Over a finite field the
Ga/Gm atoms are folded into the torsion part so that isomorphic groups
compare equal.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from sympy import factorint

from .errors import InexpressibleCokernel
from .scalars import Field, field_from_name


def _prime_powers(torsion: Iterable[int]) -> Counter:
    c: Counter = Counter()
    for m in torsion:
        for q, e in factorint(m).items():
            c[(q, e)] += 1
    return c


def _chain_from_prime_powers(pp: Counter) -> tuple[int, ...]:
    by_prime: dict[int, list[int]] = {}
    for (q, e), n in pp.items():
        by_prime.setdefault(q, []).extend([e] * n)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for q, exps in by_prime.items():
        exps = sorted(exps, reverse=True)
        for i, e in enumerate(exps):
            factors[i] *= q**e
    return tuple(sorted(f for f in factors if f > 1))


def invariant_factors(torsion: Iterable[int]) -> tuple[int, ...]:
    return _chain_from_prime_powers(_prime_powers(m for m in torsion if m > 1))


@dataclass(frozen=True)
class GroupExpr:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    ga_rank: int = 0
    gm_rank: int = 0
    field: Field | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        tors = list(self.torsion)
        ga, gm = self.ga_rank, self.gm_rank
        if self.field is not None and self.field.is_finite:
            p = self.field.p
            tors += [p] * ga + [p - 1] * gm
            ga = gm = 0
        elif (ga or gm) and self.field is None:
            raise ValueError("Ga/Gm atoms need a field label")
        object.__setattr__(self, "torsion", invariant_factors(tors))
        object.__setattr__(self, "ga_rank", ga)
        object.__setattr__(self, "gm_rank", gm)

    @classmethod
    def trivial(cls, field: Field | None = None) -> "GroupExpr":
        return cls(field=field)

    @classmethod
    def Z(cls, r: int = 1, field=None) -> "GroupExpr":
        return cls(free_rank=r, field=field)

    @classmethod
    def cyclic(cls, m: int, field=None) -> "GroupExpr":
        return cls(torsion=(m,), field=field)

    # -- predicates --------------------------------------------------------
    def is_trivial(self) -> bool:
        return not (self.free_rank or self.torsion or self.ga_rank or self.gm_rank)

    def is_finite(self) -> bool:
        return self.free_rank == 0 and self.ga_rank == 0 and self.gm_rank == 0

    def is_torsion_free(self) -> bool:
        # Gm(Q) contains -1
        return not self.torsion and self.gm_rank == 0

    def is_free(self) -> bool:
        return self.is_torsion_free() and self.ga_rank == 0

    def order(self) -> int | None:
        if not self.is_finite():
            return None
        return math.prod(self.torsion)

    # -- algebra -------------------------------------------------------------
    def _label(self, other: "GroupExpr") -> Field | None:
        return self.field if self.field is not None else other.field

    def __add__(self, other: "GroupExpr") -> "GroupExpr":
        return GroupExpr(self.free_rank + other.free_rank, self.torsion + other.torsion,
                         self.ga_rank + other.ga_rank, self.gm_rank + other.gm_rank,
                         field=self._label(other))

    def __mul__(self, n: int) -> "GroupExpr":
        return GroupExpr(self.free_rank * n, self.torsion * n, self.ga_rank * n,
                         self.gm_rank * n, field=self.field)

    __rmul__ = __mul__

    def cancel(self, summand: "GroupExpr") -> "GroupExpr":
        """``C`` with ``self = summand + C``; raises if ``summand`` is not a summand."""
        pp = _prime_powers(self.torsion)
        pp.subtract(_prime_powers(summand.torsion))
        ranks = (self.free_rank - summand.free_rank, self.ga_rank - summand.ga_rank,
                 self.gm_rank - summand.gm_rank)
        if min(ranks) < 0 or any(v < 0 for v in pp.values()):
            raise InexpressibleCokernel(f"{summand.render()} is not a summand of {self.render()}")
        return GroupExpr(ranks[0], _chain_from_prime_powers(+pp), ranks[1], ranks[2],
                         field=self._label(summand))

    # -- text ----------------------------------------------------------------
    def render(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{m}" for m in self.torsion]
        fname = getattr(self.field, "name", "?")
        fname = fname if fname == "Q" else fname.replace("F", "F_")
        if self.ga_rank:
            parts.append(f"Ga({fname})^{self.ga_rank}")
        if self.gm_rank:
            parts.append(f"Gm({fname})^{self.gm_rank}")
        return " x ".join(parts) if parts else "0"

    __str__ = render

    def __repr__(self):
        return f"GroupExpr({self.render()})"

    def to_dict(self) -> dict:
        return {"render": self.render(), "free_rank": self.free_rank,
                "torsion": list(self.torsion), "ga_rank": self.ga_rank,
                "gm_rank": self.gm_rank, "order": self.order()}


_ATOM = re.compile(r"Z\^(\d+)|Z/(\d+)|Ga\(([^)]*)\)\^(\d+)|Gm\(([^)]*)\)\^(\d+)")


def parse_group(text: str) -> GroupExpr:
    text = text.strip()
    if text == "0":
        return GroupExpr()
    free, tors, ga, gm, fld = 0, [], 0, 0, None
    for atom in (a.strip() for a in text.split(" x ")):
        m = _ATOM.fullmatch(atom)
        if not m:
            raise ValueError(f"bad group atom {atom!r}")
        if m.group(1):
            free += int(m.group(1))
        elif m.group(2):
            tors.append(int(m.group(2)))
        elif m.group(3) is not None:
            fld = field_from_name(m.group(3).replace("_", ""))
            ga += int(m.group(4))
        else:
            fld = field_from_name(m.group(5).replace("_", ""))
            gm += int(m.group(6))
    return GroupExpr(free, tuple(tors), ga, gm, field=fld)


def extension(sub: GroupExpr, quot: GroupExpr) -> GroupExpr:
    """The middle term of ``0 -> sub -> G -> quot -> 0`` when it is determined."""
    if sub.is_trivial():
        return quot
    if quot.is_trivial():
        return sub
    if quot.is_free():
        return sub + quot
    if sub.is_finite() and quot.is_finite() and math.gcd(sub.order(), quot.order()) == 1:
        return sub + quot
    raise InexpressibleCokernel(
        f"extension of {quot.render()} by {sub.render()} is not determined by the pieces")


# ---------------------------------------------------------------------------
# Smith normal form and lattice quotients

def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Sequence[Sequence[int]]):
    """Return ``(D, U, V)`` with ``U*M*V = D`` diagonal, ``d_i | d_{i+1}``, U, V unimodular."""
    A = [list(map(int, r)) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        # pick the smallest nonzero entry in the remaining block
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish(A, U, V)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // piv
                if q:
                    add_row(t, i, -q)
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // piv
                if q:
                    add_col(t, j, -q)
                if A[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: fold an offending row into row t
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % piv), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return _finish(A, U, V)


def _finish(A, U, V):
    return A, U, V


def snf_diagonal(M) -> list[int]:
    if not M or not M[0]:
        return []
    D, _, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]


def lattice_cokernel(M: Sequence[Sequence[int]], nrows: int, atom: str = "Z",
                     field: Field | None = None) -> GroupExpr:
    """``Z^nrows / column span of M`` (``atom='Gm'`` reads each Z as a copy of Gm(k))."""
    if not M or not M[0]:
        diag = []
    else:
        diag = snf_diagonal(M)
    free = nrows - len(diag)
    tors = [d for d in diag if d > 1]
    if atom == "Z":
        return GroupExpr(free_rank=free, torsion=tuple(tors), field=field)
    if tors and not (field is not None and field.is_finite):
        raise InexpressibleCokernel(f"Gm(k)/Gm(k)^{tors[0]} is not a GroupExpr")
    return GroupExpr(gm_rank=free, field=field)


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def integer_kernel(N: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Z-basis (as columns, returned as list of vectors) of ``{x in Z^ncols : N x = 0}``."""
    if not N:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    D, U, V = smith_normal_form(N)
    r = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return [[V[i][j] for i in range(ncols)] for j in range(r, ncols)]


def lattice_map_kernel(pi, MA, MB, a: int, b: int, atom: str = "Z", field=None) -> GroupExpr:
    """Kernel of ``Z^a/im(MA) -> Z^b/im(MB)`` induced by ``pi`` (b x a).

    Matrices are row lists; ``MA`` is a x ka, ``MB`` is b x kb.
    """
    ka = len(MA[0]) if MA and MA[0] else 0
    kb = len(MB[0]) if MB and MB[0] else 0
    # x in Z^a with pi x = MB y  <=>  [pi | -MB] (x, y) = 0
    big = [list(pi[i]) + [-MB[i][j] for j in range(kb)] for i in range(b)] if b else []
    gens = [v[:a] for v in integer_kernel(big, a + kb)] if b else \
        [[int(i == j) for i in range(a)] for j in range(a)]
    gens = [g for g in gens if any(g)]
    if not gens:
        return GroupExpr(field=field)
    L = [list(col) for col in zip(*gens)]  # a x l
    D, U, V = smith_normal_form(L)
    diag = [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]
    # basis of K = columns of U^{-1} scaled; U L V = D  =>  L = U^{-1} D V^{-1}
    Uinv = _inverse_unimodular(U)
    B = [[Uinv[i][j] * diag[j] for j in range(len(diag))] for i in range(a)]
    s = len(diag)
    if ka == 0:
        C = [[] for _ in range(s)]
    else:
        C = _solve_integer(B, MA, s, ka)
    return lattice_cokernel(C, s, atom=atom, field=field) if ka else \
        (GroupExpr(free_rank=s, field=field) if atom == "Z" else GroupExpr(gm_rank=s, field=field))


def _inverse_unimodular(U):
    n = len(U)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(U)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = [[row[n + j] for j in range(n)] for row in aug]
    if any(v.denominator != 1 for row in out for v in row):
        raise ValueError("matrix is not unimodular")
    return [[int(v) for v in row] for row in out]


def _solve_integer(B, M, s, k):
    """Integer C (s x k) with B C = M, B full column rank."""
    from .linalg import solve
    from .scalars import QQ

    cols = [[Fraction(B[i][j]) for i in range(len(B))] for j in range(s)]
    C = [[0] * k for _ in range(s)]
    for c in range(k):
        sol = solve(QQ, cols, [Fraction(M[i][c]) for i in range(len(M))])
        if sol is None or any(x.denominator != 1 for x in sol):
            raise ValueError("sublattice is not contained in the lattice")
        for r in range(s):
            C[r][c] = int(sol[r])
    return C


# ---------------------------------------------------------------------------
# finite abelian groups given by enumeration

def finite_quotient(G: Sequence[Hashable], H: set, mul: Callable, one: Hashable,
                    field: Field | None = None) -> GroupExpr:
    """Structure of ``G/H`` for a finite abelian group ``G`` (given as the full list of
    its elements) and a subgroup ``H`` (given as a set)."""
    order_G, order_H = len(G), len(H)
    if order_G % order_H:
        raise ValueError(f"|H|={order_H} does not divide |G|={order_G}")
    q_order = order_G // order_H
    if q_order == 1:
        return GroupExpr(field=field)

    def power(x, e):
        r, b = one, x
        while e:
            if e & 1:
                r = mul(r, b)
            b = mul(b, b)
            e >>= 1
        return r

    pp: Counter = Counter()
    for q, e_total in factorint(q_order).items():
        cur = list(G)
        prev = 1
        j = 0
        got = 0
        while got < e_total:
            j += 1
            cur = [power(x, q) for x in cur]
            cnt = sum(1 for x in cur if x in H) // order_H
            parts_ge_j = round(math.log(cnt // prev, q))
            if cnt // prev != q**parts_ge_j:
                raise ValueError("counting inconsistency: group is not abelian?")
            got += parts_ge_j
            prev = cnt
            pp[(q, j)] += parts_ge_j
            pp[(q, j - 1)] -= parts_ge_j if j > 1 else 0
    pp = +Counter({k: v for k, v in pp.items() if k[1] > 0})
    return GroupExpr(torsion=_chain_from_prime_powers(pp), field=field)


def subgroup_product(*subgroups: Iterable[Hashable], mul: Callable, one: Hashable) -> set:
    """The product set of several subgroups (itself a subgroup in an abelian group)."""
    acc = {one}
    for S in subgroups:
        S = set(S)
        acc = {mul(a, s) for a in acc for s in S}
    return acc
