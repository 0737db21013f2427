"""Curve orders: finitely generated subalgebras of ``k[t]`` with fraction field ``k(t)``.

The central computation is a certified closure.  For a degree bound ``D`` we
close the span of the generators under products of degree ``<= D`` and look
for a monic ``g`` in that span with ``g t^i`` in the span for ``i < deg g``.
Such a ``g`` lies in the conductor (write any ``h`` ``g``-adically), and once
``2 deg g <= D`` the closed span is exactly ``A`` in degrees ``<= D``:
``A = (span in degrees < deg g) + g k[t]``.  Everything else (membership,
SAGBI basis, degree semigroup, frames modulo the conductor) is read off.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property, lru_cache

from .algebra import (AlgebraMap, FinDimAlgebra, poly_quotient, subquotient_algebra,
                      zero_algebra)
from .errors import AlgebraError, NonBirational
from .linalg import Subspace, nullspace, solve, transpose
from .poly import Poly
from .scalars import Field

CLOSURE_LIMIT = 512


def _vec(p: Poly, n: int) -> tuple:
    return p.vector(n)


class _Echelon:
    """Polynomials with pairwise distinct lead degrees (one per degree)."""

    def __init__(self, field: Field):
        self.field = field
        self.by_deg: dict[int, Poly] = {}

    def reduce(self, f: Poly) -> Poly:
        while f and f.degree in self.by_deg:
            f = f - self.by_deg[f.degree].scale(f.lead)
        return f

    def insert(self, f: Poly) -> Poly | None:
        r = self.reduce(f)
        if r:
            r = r.monic()
            self.by_deg[r.degree] = r
            return r
        return None


@dataclass
class Membership:
    """Result of :meth:`CurveOrder.member`.

    ``steps`` is the subduction expression ``f = sum c * prod s_i^alpha_i`` over the
    SAGBI basis; ``failed_degree`` is where subduction stopped when ``f`` is not in A.
    """

    value: bool
    steps: list = dc_field(default_factory=list)
    failed_degree: int | None = None

    def __bool__(self):
        return self.value


class DegreeSemigroup:
    """A numerical semigroup given by its elements below the conductor ``c``."""

    def __init__(self, elements_below: set[int], conductor: int):
        self.conductor = conductor
        self.below = frozenset(e for e in elements_below if e < conductor)

    def __contains__(self, n: int) -> bool:
        return n >= self.conductor or n in self.below

    @property
    def gaps(self) -> list[int]:
        return [n for n in range(self.conductor) if n not in self]

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def generators(self) -> list[int]:
        out: list[int] = []
        for n in range(1, 2 * self.conductor + 2):
            if n in self and not _representable(n, tuple(out), self):
                out.append(n)
        return out or [1]

    def table(self, upto: int) -> list[bool]:
        return [n in self for n in range(upto + 1)]

    def __repr__(self):
        return f"DegreeSemigroup(gaps={self.gaps}, conductor={self.conductor})"


def _representable(n: int, gens: tuple[int, ...], S: DegreeSemigroup) -> bool:
    return _decompose(n, gens) is not None


@lru_cache(maxsize=None)
def _decompose(n: int, gens: tuple[int, ...]):
    """Exponent vector with ``sum a_i g_i = n``; the first generator (in order) that
    works is taken at each step, giving a deterministic choice."""
    if n == 0:
        return (0,) * len(gens)
    for i, g in enumerate(gens):
        if g <= n:
            rest = _decompose(n - g, gens)
            if rest is not None:
                out = list(rest)
                out[i] += 1
                return tuple(out)
    return None


class CurveOrder:
    """The subalgebra of ``k[t]`` generated by ``generators``."""

    def __init__(self, field: Field, generators, name: str = ""):
        self.field = field
        gens = []
        for g in generators:
            g = g if isinstance(g, Poly) else Poly(field, g)
            if g.field != field:
                raise ValueError("generator over the wrong field")
            if g.degree >= 1:
                gens.append(g)
        self.generators = gens
        self.name = name
        if gens:
            self._close()
        else:
            self._conductor = None

    # -- construction --------------------------------------------------------
    @property
    def is_base_field(self) -> bool:
        return not self.generators

    def _close(self):
        f = self.field
        maxdeg = max(g.degree for g in self.generators)
        D = max(8, 2 * maxdeg + 2)
        while True:
            ech = self._closure_upto(D)
            found = self._find_conductor(ech, D)
            if found is not None:
                g, c = found
                self._conductor = g
                self._c = c
                self._ech = ech
                self._D = D
                self._low = [ech.by_deg[k] for k in sorted(ech.by_deg) if k < c]
                return
            degs = [k for k in ech.by_deg if k > 0]
            stuck = degs and math.gcd(*degs) > 1 and D >= max(64, 8 * maxdeg)
            if D >= CLOSURE_LIMIT or stuck:
                raise NonBirational(
                    f"{self.name or 'order'}: no conductor up to degree {D}; "
                    f"gcd of lead degrees {math.gcd(*degs) if degs else 0}")
            D *= 2

    def _closure_upto(self, D: int) -> _Echelon:
        ech = _Echelon(self.field)
        queue = [ech.insert(Poly.const(self.field, 1))]
        for g in self.generators:
            if g.degree <= D:
                r = ech.insert(g)
                if r is not None:
                    queue.append(r)
        while queue:
            g = queue.pop()
            for h in list(ech.by_deg.values()):
                if g.degree + h.degree <= D:
                    r = ech.insert(g * h)
                    if r is not None:
                        queue.append(r)
        return ech

    def _find_conductor(self, ech: _Echelon, D: int):
        f = self.field
        n = D + 1
        W = Subspace(f, n, [_vec(p, n) for p in ech.by_deg.values()])
        if 1 in ech.by_deg or _vec(Poly.t(f), n) in W:
            return Poly.const(f, 1), 0
        t = Poly.t(f)
        present = set(ech.by_deg)
        # a conductor in degree c puts every degree from c to D into A
        full_from = D + 1
        while full_from - 1 in present:
            full_from -= 1
        for c in range(max(1, full_from), D // 2 + 1):
            if c not in present:
                continue
            cand = [ech.by_deg[k] for k in sorted(ech.by_deg) if k <= c]
            rows = []
            for i in range(c):
                red = [W.reduce(_vec(p * Poly.monomial(f, i), n)) for p in cand]
                for k in range(n):
                    rows.append([red[j][k] for j in range(len(cand))])
            ker = nullspace(f, [r for r in rows if any(x != f.zero for x in r)], len(cand))
            for sol in ker:
                g = Poly(f, ())
                for coef, p in zip(sol, cand):
                    g = g + p.scale(coef)
                if g.degree == c:
                    return g.monic(), c
        return None

    # -- queries -------------------------------------------------------------
    def _need_birational(self):
        if self._conductor is None:
            raise NonBirational("the base field is not birational to k[t]")

    @property
    def conductor(self) -> Poly:
        """Monic generator of the conductor of ``k[t]`` into ``A``."""
        self._need_birational()
        return self._conductor

    @property
    def conductor_degree(self) -> int:
        self._need_birational()
        return self._c

    def space(self, d: int) -> Subspace:
        """``A`` intersected with polynomials of degree ``<= d`` (coefficient vectors)."""
        n = d + 1
        if self.is_base_field:
            return Subspace(self.field, n, [Poly.const(self.field, 1).vector(n)])
        vecs = [p.vector(n) for p in self._low if p.degree <= d]
        g = self._conductor
        for i in range(0, d - self._c + 1):
            vecs.append((g * Poly.monomial(self.field, i)).vector(n))
        return Subspace(self.field, n, vecs)

    def basis(self, d: int) -> list[Poly]:
        """Echelon basis of ``A`` in degrees ``<= d`` (lowest degree first)."""
        polys = [Poly.from_vector(self.field, v) for v in self.space(d).basis()]
        return sorted(polys, key=lambda p: p.sort_key())

    def dimension(self, d: int) -> int:
        return self.space(d).dim

    @cached_property
    def degree_semigroup(self) -> DegreeSemigroup:
        self._need_birational()
        return DegreeSemigroup({p.degree for p in self._low}, self._c)

    @cached_property
    def sagbi_basis(self) -> list[Poly]:
        """Elements of ``A`` whose lead degrees are the minimal generators of the
        degree semigroup."""
        self._need_birational()
        gens = self.degree_semigroup.generators
        out = []
        for d in gens:
            if d in self._ech.by_deg:
                out.append(self._ech.by_deg[d])
            else:
                out.append(self._conductor * Poly.monomial(self.field, d - self._c))
        return out

    def member(self, f: Poly) -> Membership:
        """Subduction against the SAGBI basis."""
        if not isinstance(f, Poly):
            f = Poly(self.field, f)
        if self.is_base_field:
            return Membership(f.degree <= 0, [(f.coeff(0), ())] if f else [],
                              None if f.degree <= 0 else f.degree)
        S = self.sagbi_basis
        degs = tuple(s.degree for s in S)
        steps = []
        r = f
        while r:
            n = r.degree
            alpha = _decompose(n, degs) if n in self.degree_semigroup else None
            if alpha is None:
                return Membership(False, steps, n)
            prod = self._sagbi_monomial(alpha)
            c = self.field.div(r.lead, prod.lead)
            steps.append((c, alpha))
            r = r - prod.scale(c)
        return Membership(True, steps)

    def _sagbi_monomial(self, alpha) -> Poly:
        out = Poly.const(self.field, 1)
        for s, a in zip(self.sagbi_basis, alpha):
            if a:
                out = out * s**a
        return out

    def replay(self, m: Membership) -> Poly:
        """Evaluate a positive subduction certificate."""
        acc = Poly(self.field, ())
        for c, alpha in m.steps:
            acc = acc + self._sagbi_monomial(alpha).scale(c)
        return acc

    def __contains__(self, f) -> bool:
        return self.member(f).value

    def complement_basis(self, d: int) -> list[Poly]:
        """Basis of ``k[t]<=d / A<=d`` chosen greedily from ``1, t, t^2, ...``."""
        return _complement(self.space(d), full_space(self.field, d))

    def gens_text(self) -> str:
        return ", ".join(g.render() for g in self.generators)

    def __repr__(self):
        return f"CurveOrder({self.name or self.gens_text()} over {self.field!r})"


def full_space(field: Field, d: int) -> Subspace:
    n = d + 1
    return Subspace(field, n, [Poly.monomial(field, i).vector(n) for i in range(n)])


def _complement(sub: Subspace, ambient: Subspace) -> list[Poly]:
    f = sub.field
    polys = sorted((Poly.from_vector(f, v) for v in ambient.basis()), key=lambda p: p.sort_key())
    out = []
    acc = Subspace(f, sub.n, sub.basis())
    for p in polys:
        v = p.vector(sub.n)
        if v not in acc:
            out.append(p)
            acc = acc.extend([v])
    return sorted(out, key=lambda p: p.sort_key())


def polynomial_ring(field: Field) -> CurveOrder:
    return CurveOrder(field, [Poly.t(field)], name="k[t]")


def base_field_order(field: Field) -> CurveOrder:
    return CurveOrder(field, [], name="k")


def monomial_order(field: Field, exponents) -> CurveOrder:
    return CurveOrder(field, [Poly.monomial(field, e) for e in exponents],
                      name="k[" + ",".join(f"t^{e}" for e in exponents) + "]")


def is_monomial(A: CurveOrder) -> bool:
    return all(sum(1 for c in g.coeffs if c != A.field.zero) == 1 for g in A.generators)


class SpanOracle:
    """Brute-force membership: the span of products of the *original* generators of
    total degree ``<= bound``.  Independent of the closure machinery."""

    def __init__(self, A: CurveOrder, bound: int | None = None, max_monomials: int = 6000):
        field = A.field
        self.A = A
        if A.is_base_field:
            self.bound = 0
            self.space = Subspace(field, 1, [(field.one,)])
            return
        bound = bound or max(40, 3 * max(g.degree for g in A.generators) + 16)
        self.bound = bound
        n = bound + 1
        gens = A.generators
        degs = [g.degree for g in gens]
        vecs = [Poly.const(field, 1).vector(n)]
        frontier = {(0,) * len(gens): Poly.const(field, 1)}
        seen = set(frontier)
        while frontier and len(seen) < max_monomials:
            nxt = {}
            for alpha, p in frontier.items():
                for i, g in enumerate(gens):
                    beta = list(alpha)
                    beta[i] += 1
                    beta = tuple(beta)
                    if beta in seen or sum(b * d for b, d in zip(beta, degs)) > bound:
                        continue
                    q = p * g
                    seen.add(beta)
                    nxt[beta] = q
                    vecs.append(q.vector(n))
            frontier = nxt
        self.space = Subspace(field, n, vecs)

    def __contains__(self, f: Poly) -> bool:
        if f.degree > self.bound:
            return False
        return f.vector(self.bound + 1) in self.space


def span_membership_oracle(A: CurveOrder, f: Poly, bound: int | None = None) -> bool:
    return f in SpanOracle(A, bound)


# ---------------------------------------------------------------------------
# condition-presented orders

@dataclass(frozen=True)
class Condition:
    """``sum coef * f^(order)(point) == 0`` with ``order`` in {0, 1}."""

    terms: tuple  # ((coef, order, point), ...)
    text: str = ""

    def evaluate(self, field: Field, f: Poly):
        acc = field.zero
        df = f.derivative()
        for coef, order, point in self.terms:
            val = (f if order == 0 else df)(point)
            acc = field.add(acc, field.mul(field.coerce(coef), val))
        return acc

    def holds(self, field: Field, f: Poly) -> bool:
        return self.evaluate(field, f) == field.zero


def eval_equal(a, b) -> Condition:
    return Condition(((1, 0, a), (-1, 0, b)), f"eval({a})=eval({b})")


def deriv_zero(a) -> Condition:
    return Condition(((1, 1, a),), f"deriv({a})=0")


def deriv_equal(a, b) -> Condition:
    return Condition(((1, 1, a), (-1, 1, b)), f"deriv({a})=deriv({b})")


class ConditionOrder(CurveOrder):
    """``{f in k[t] : all conditions hold}`` converted to a generator presentation."""

    def __init__(self, field: Field, conditions, name: str = ""):
        self.conditions = [c for c in conditions]
        mult: dict = {}
        for c in self.conditions:
            for _, order, point in c.terms:
                pt = field.coerce(point)
                mult[pt] = max(mult.get(pt, 1), 1 + order)
        P = Poly.const(field, 1)
        for pt, m in sorted(mult.items(), key=lambda kv: field.sort_key(kv[0])):
            P = P * (Poly(field, [field.neg(pt), 1]) ** m)
        self.modulus = P
        one = Poly.const(field, 1)
        for c in self.conditions:
            if not c.holds(field, one):
                raise AlgebraError(f"condition {c.text} fails on 1; not a unital subalgebra")
        dP = P.degree
        top = max(2 * dP - 1, 1)
        space = self._condition_space(field, top)
        low = [p for p in space if p.degree < dP]
        for p, q in itertools.combinations_with_replacement(low, 2):
            if not self.satisfies_with(field, p * q):
                raise AlgebraError(
                    f"conditions are not closed under products: ({p.render()})*({q.render()})")
        super().__init__(field, space, name=name)

    def _condition_space(self, field: Field, top: int) -> list[Poly]:
        n = top + 1
        rows = []
        for c in self.conditions:
            rows.append([c.evaluate(field, Poly.monomial(field, i)) for i in range(n)])
        basis = nullspace(field, rows, n)
        S = Subspace(field, n, basis)
        return sorted((Poly.from_vector(field, v) for v in S.basis()), key=lambda p: p.sort_key())

    def satisfies_with(self, field, f: Poly) -> bool:
        return all(c.holds(field, f) for c in self.conditions)

    def satisfies(self, f: Poly) -> bool:
        """Direct oracle: check the defining conditions."""
        return self.satisfies_with(self.field, f)

    def conditions_text(self) -> str:
        return ", ".join(c.text for c in self.conditions)


# ---------------------------------------------------------------------------
# extensions and frames

class Extension:
    """A verified pair ``A subset B`` of curve orders."""

    def __init__(self, A: CurveOrder, B: CurveOrder, name: str = ""):
        if A.field != B.field:
            raise ValueError("orders over different fields")
        for g in A.generators:
            if not B.member(g):
                raise AlgebraError(f"generator {g.render()} of A is not in B")
        self.A, self.B = A, B
        self.field = A.field
        self.name = name

    kind = "curve"

    @cached_property
    def frame(self) -> "Frame":
        return Frame(self.A, [self.B])

    def complement_basis(self, d: int) -> list[Poly]:
        """Basis of ``(B <= d) / (A <= d)``."""
        return _complement(self.A.space(d), self.B.space(d))

    def codimension(self) -> int:
        c = self.A.conductor_degree
        return self.B.dimension(c) - self.A.dimension(c)

    def __repr__(self):
        return f"Extension({self.name or ''}: {self.A!r} in {self.B!r})"


class Frame:
    """``T = k[t]/(f)`` for ``f`` the conductor of ``A``, with the images of ``A`` and
    of overrings of ``A`` (all of which contain ``f k[t]``) as subalgebras."""

    def __init__(self, A: CurveOrder, overrings=()):
        self.A = A
        self.field = A.field
        self.f = A.conductor
        self.c = A.conductor_degree
        self.T = poly_quotient(self.field, self.f) if self.c else zero_algebra(self.field)
        self._subs = {}
        self.Abar, self.A_reps = self.subalgebra(A)
        for B in overrings:
            self.subalgebra(B)

    def image_space(self, R: CurveOrder) -> Subspace:
        if self.c == 0:
            return self.T.span([])
        return Subspace(self.field, self.c, [p.vector(self.c) for p in R.basis(self.c - 1)])

    def subalgebra(self, R: CurveOrder):
        key = id(R)
        if key not in self._subs:
            sub = self.image_space(R)
            alg, reps, _ = subquotient_algebra(self.T, sub, name=f"{R.name or 'R'} mod f",
                                               labels_from=self._labels)
            self._subs[key] = (alg, reps)
        return self._subs[key]

    def _labels(self, reps):
        return ["(" + Poly.from_vector(self.field, r).render() + ")" for r in reps]

    def inclusion(self, R: CurveOrder) -> AlgebraMap:
        """``R mod f -> T``."""
        alg, reps = self.subalgebra(R)
        return AlgebraMap(alg, self.T, images=reps, check=False)

    def map_between(self, R: CurveOrder, S: CurveOrder) -> AlgebraMap:
        """``R mod f -> S mod f`` for ``R subset S``."""
        ra, rreps = self.subalgebra(R)
        sa, sreps = self.subalgebra(S)
        images = []
        for v in rreps:
            sol = solve(self.field, sreps, v)
            if sol is None:
                raise AlgebraError("R mod f is not inside S mod f")
            images.append(tuple(sol))
        return AlgebraMap(ra, sa, images=images, check=False)

    def lift(self, vec) -> Poly:
        return Poly.from_vector(self.field, vec)

    def reduce(self, p: Poly) -> tuple:
        if self.c == 0:
            return ()
        return (p % self.f).vector(self.c)


def conductor_into(E: Extension) -> Subspace:
    """``{x in A : x B subset A}`` modulo ``f k[t]``, as a subspace of the frame ``T``."""
    fr = E.frame
    T = fr.T
    Asub = fr.image_space(E.A)
    Bsub = fr.image_space(E.B)
    a = Asub.basis()
    b = Bsub.basis()
    f = E.field
    if not a:
        return T.span([])
    rows = []
    for bj in b:
        red = [Asub.reduce(T.mul(ai, bj)) for ai in a]
        for k in range(T.dim):
            rows.append([red[i][k] for i in range(len(a))])
    ker = nullspace(f, [r for r in rows if any(x != f.zero for x in r)], len(a))
    vecs = []
    for sol in ker:
        v = T.zero
        for c, ai in zip(sol, a):
            v = T.add(v, T.scale(c, ai))
        vecs.append(v)
    return T.span(vecs)


def quotient_by_conductor(E: Extension):
    """``(A/c, B/c, inclusion)`` for ``c`` the conductor of ``B`` into ``A``."""
    fr = E.frame
    T = fr.T
    cbar = conductor_into(E)
    Asub, Bsub = fr.image_space(E.A), fr.image_space(E.B)
    if fr.c == 0:
        return zero_algebra(E.field), zero_algebra(E.field), None
    QA, ra, _ = subquotient_algebra(T, Asub, cbar, name="A/c", labels_from=fr._labels)
    QB, rb, _ = subquotient_algebra(T, Bsub, cbar, name="B/c", labels_from=fr._labels)
    images = []
    for v in ra:
        red = cbar.reduce(v)
        sol = solve(E.field, [cbar.reduce(r) for r in rb], red)
        images.append(tuple(sol))
    incl = AlgebraMap(QA, QB, images=images) if QA.dim else None
    return QA, QB, incl


def conductor_polys(E: Extension) -> list[Poly]:
    """Generators of the conductor of ``B`` into ``A`` as a ``B``-ideal."""
    fr = E.frame
    out = [fr.lift(v) for v in conductor_into(E).basis()]
    return out + [E.A.conductor]


def orders_equal(A: CurveOrder, B: CurveOrder) -> bool:
    """Compare stabilised membership spaces."""
    if A.is_base_field or B.is_base_field:
        return A.is_base_field and B.is_base_field
    d = max(A.conductor_degree, B.conductor_degree) + 2
    return A.space(d) == B.space(d) and A.conductor == B.conductor


def order_from_space(field: Field, f: Poly, vecs, name: str = "") -> CurveOrder:
    """Order ``span(lifts of vecs) + f k[t]`` for a subalgebra of ``k[t]/(f)``."""
    if f.degree <= 0:
        return CurveOrder(field, [Poly.t(field)], name=name)
    gens = [Poly.from_vector(field, v) for v in vecs]
    gens += [f * Poly.monomial(field, i) for i in range(f.degree)]
    return CurveOrder(field, gens, name=name)


def parse_points(field: Field, text: str):
    return field.coerce(Fraction(text))
