"""Picard-type groups of curve orders and finite algebras, and the relative groups.

Conventions
-----------
* ``d`` is the truncation: ``NU(R)`` means ``1 + X N[X]`` modulo ``X^(d+1)``.
* ``MU = NU + NU + H^0`` and ``MPic = NPic + NPic + LPic`` (Laurent decomposition).
* A curve order ``A`` is handled through the square ``A -> k[t]``, ``A/f -> k[t]/(f)``
  with ``f`` its conductor; ``Pic k[t] = NPic k[t] = LPic k[t] = 0`` and the frame algebras
  are artinian, so every group below is a cokernel (or a kernel of a map of cokernels)
  of maps between groups of the finite frame algebras.
* A finite algebra has trivial ``Pic``, ``NPic`` and ``LPic``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .algebra import (AlgebraMap, FinDimAlgebra, _rational_split, check_size, component_matrix,
                      extend_map, idempotents_bruteforce, poly_extension, poly_quotient,
                      subquotient_algebra, unit_map_cokernel, units, zero_algebra)
from .curves import CurveOrder, Extension, Frame, quotient_by_conductor
from .errors import AlgebraError, HypothesisNotVerified
from .groups import GroupExpr, finite_quotient, lattice_cokernel, lattice_map_kernel
from .laurent import LaurentPoly, nu_elements
from .linalg import Subspace, solve
from .pairs import AlgebraPair
from .poly import Poly

DIRECT_LIMIT = 20000


# ---------------------------------------------------------------------------
# frames

def _frame(A: CurveOrder) -> Frame:
    fr = getattr(A, "_own_frame", None)
    if fr is None:
        fr = Frame(A)
        A._own_frame = fr
    return fr


def frame_projection(E: Extension) -> AlgebraMap:
    """``k[t]/(f_A) -> k[t]/(f_B)``; defined because ``f_B`` divides ``f_A``."""
    TA = E.frame.T
    fb = _frame(E.B)
    TB = fb.T
    if not fb.c:
        return None
    images = []
    c = E.frame.c
    for i in range(c):
        images.append(fb.reduce(Poly.monomial(E.field, i)))
    return AlgebraMap(TA, TB, images=images, check=False) if c else None


def _is_field_order(R) -> bool:
    return isinstance(R, CurveOrder) and R.is_base_field


# ---------------------------------------------------------------------------
# NU as explicit groups

class _NU:
    """``NU<=d(R)`` inside ``R[X]/(X^(d+1))`` (finite fields) or its dimension (QQ)."""

    def __init__(self, R: FinDimAlgebra, d: int, cutoff: int | None = None):
        self.R, self.d = R, d
        self.P = poly_extension(R, d) if R.dim else zero_algebra(R.field)
        if R.field.is_finite and R.dim:
            _, self.elements = nu_elements(R, d, cutoff)
        else:
            self.elements = None

    @property
    def one(self):
        return self.P.unity

    def group(self) -> GroupExpr:
        R = self.R
        if not R.dim:
            return GroupExpr(field=R.field)
        if self.elements is None:
            return GroupExpr(ga_rank=self.d * R.nilradical_space.dim, field=R.field)
        return finite_quotient(self.elements, {self.one}, self.P.mul, self.one, field=R.field)


def _nu_cache(R: FinDimAlgebra, d: int, cutoff=None) -> _NU:
    cache = R.__dict__.setdefault("_nu_cache", {})
    if d not in cache:
        cache[d] = _NU(R, d, cutoff)
    return cache[d]


def nu_cokernel(phis, d: int, cutoff: int | None = None) -> GroupExpr:
    """``NU(target) / prod image NU(source_i)`` for maps into a common target."""
    T = phis[0].target
    f = T.field
    if not T.dim:
        return GroupExpr(field=f)
    NT = _nu_cache(T, d, cutoff)
    if NT.elements is None:
        img = T.span([phi.apply(v) for phi in phis for v in phi.source.nilradical_space.basis()])
        return GroupExpr(ga_rank=d * (T.nilradical_space.dim - img.dim), field=f)
    H = {NT.one}
    for phi in phis:
        if not phi.source.dim:
            continue
        NS = _nu_cache(phi.source, d, cutoff)
        ext = extend_map(phi, NS.P, NT.P, d)
        img = {ext.apply(x) for x in NS.elements}
        H = {NT.P.mul(a, b) for a in H for b in img}
    return finite_quotient(NT.elements, H, NT.P.mul, NT.one, field=f)


def nu_relative_kernel(iA: AlgebraMap, iB: AlgebraMap, pi: AlgebraMap | None, d: int,
                       cutoff: int | None = None) -> GroupExpr:
    """Kernel of ``NU(TA)/NU(A) -> NU(TB)/NU(B)`` induced by ``pi: TA -> TB``."""
    TA = iA.target
    f = TA.field
    if not TA.dim:
        return GroupExpr(field=f)
    if pi is None or not pi.target.dim:
        return nu_cokernel([iA], d, cutoff)
    TB = pi.target
    Bsub = iB.image_space()
    if not f.is_finite:
        NA = TA.nilradical_space
        # {n in N(TA) : pi(n) in image of B}
        pre = _preimage(pi, NA, Bsub)
        img = TA.span([iA.apply(v) for v in iA.source.nilradical_space.basis()])
        return GroupExpr(ga_rank=d * (pre.dim - img.dim), field=f)
    NT = _nu_cache(TA, d, cutoff)
    ext = extend_map(pi, NT.P, poly_extension(TB, d), d)
    n = TB.dim

    def lands(x):
        y = ext.apply(x)
        return all(tuple(y[k * n:(k + 1) * n]) in Bsub for k in range(d + 1))

    K = [x for x in NT.elements if lands(x)]
    H = {NT.one}
    if iA.source.dim:
        NS = _nu_cache(iA.source, d, cutoff)
        e = extend_map(iA, NS.P, NT.P, d)
        H = {e.apply(x) for x in NS.elements}
    return finite_quotient(K, H, NT.P.mul, NT.one, field=f)


def _preimage(pi: AlgebraMap, V: Subspace, W: Subspace) -> Subspace:
    """``{v in V : pi(v) in W}``."""
    f = pi.source.field
    basis = V.basis()
    if not basis:
        return V
    from .linalg import nullspace
    imgs = [W.reduce(pi.apply(v)) for v in basis]
    rows = [[imgs[j][k] for j in range(len(basis))] for k in range(pi.target.dim)]
    ker = nullspace(f, [r for r in rows if any(x != f.zero for x in r)], len(basis))
    out = []
    for sol in ker:
        v = [f.zero] * pi.source.dim
        for c, b in zip(sol, basis):
            v = [f.add(x, f.mul(c, y)) for x, y in zip(v, b)]
        out.append(tuple(v))
    return Subspace(f, pi.source.dim, out)


# ---------------------------------------------------------------------------
# units and H^0

def h0_cokernel(phis, target: FinDimAlgebra) -> GroupExpr:
    n = len(target.primitive_idempotents) if target.dim else 0
    cols = []
    for phi in phis:
        if not phi.source.dim:
            continue
        M = component_matrix(phi)
        cols += [[M[j][i] for j in range(n)] for i in range(len(M[0]) if M else 0)]
    rows = [[c[j] for c in cols] for j in range(n)] if cols else []
    return lattice_cokernel(rows, n)


def h0(R) -> GroupExpr:
    """``H^0 = Z^(connected components)``."""
    if isinstance(R, CurveOrder):
        return GroupExpr.Z(1)
    return GroupExpr.Z(len(R.primitive_idempotents) if R.dim else 0)


def nu(R, d: int) -> GroupExpr:
    if isinstance(R, CurveOrder):
        return GroupExpr(field=R.field)  # reduced
    return _nu_cache(R, d).group()


def mu(R, d: int) -> GroupExpr:
    """``coker[U(R) -> U(R[X, X^-1])] = NU + NU + H^0``."""
    return nu(R, d) * 2 + h0(R)


def unit_group_of(R) -> GroupExpr:
    from .algebra import unit_group
    if isinstance(R, CurveOrder):
        return GroupExpr(gm_rank=1, field=R.field)
    return unit_group(R).group


# ---------------------------------------------------------------------------
# Pic and its Laurent parts

def _curve_data(A: CurveOrder):
    fr = _frame(A)
    return fr, fr.inclusion(A) if fr.c else None


def pic(A) -> GroupExpr:
    """``coker[U(A/f) x U(k[t]) -> U(k[t]/(f))]`` for a curve order; 0 for finite algebras."""
    f = A.field
    if not isinstance(A, CurveOrder) or A.is_base_field:
        return GroupExpr(field=f)
    fr, inc = _curve_data(A)
    if not fr.c:
        return GroupExpr(field=f)
    return unit_map_cokernel(fr.T, [inc])


def npic(A, d: int) -> GroupExpr:
    f = A.field
    if not isinstance(A, CurveOrder) or A.is_base_field:
        return GroupExpr(field=f)
    fr, inc = _curve_data(A)
    if not fr.c:
        return GroupExpr(field=f)
    return nu_cokernel([inc], d)


def lpic(A, d: int | None = None) -> GroupExpr:
    f = A.field
    if not isinstance(A, CurveOrder) or A.is_base_field:
        return GroupExpr(field=f)
    fr, inc = _curve_data(A)
    if not fr.c:
        return GroupExpr(field=f)
    return h0_cokernel([inc], fr.T)


def mpic(A, d: int) -> GroupExpr:
    return npic(A, d) * 2 + lpic(A, d)


def pic_laurent(A, d: int, direct_limit: int = DIRECT_LIMIT) -> GroupExpr:
    """``Pic A[X, X^-1]`` at truncation ``d``.

    Over a finite field (and small enough frames) the torsion part is one finite quotient
    of ``U(T) x NU(T) x NU(T)`` by the image of the same group for ``A/f``; otherwise the
    pieces ``Pic + NPic + NPic + LPic`` are assembled.
    """
    f = A.field
    if not isinstance(A, CurveOrder) or A.is_base_field:
        return GroupExpr(field=f)
    fr, inc = _curve_data(A)
    if not fr.c:
        return GroupExpr(field=f)
    T, Ab = fr.T, inc.source
    if not f.is_finite:
        return pic(A) + npic(A, d) * 2 + lpic(A, d)
    UT = units(T)
    NT = _nu_cache(T, d)
    size = len(UT) * len(NT.elements) ** 2
    if size > direct_limit:
        return pic(A) + npic(A, d) * 2 + lpic(A, d)
    UA = {inc.apply(u) for u in units(Ab)}
    NA = _nu_cache(Ab, d)
    ext = extend_map(inc, NA.P, NT.P, d)
    NAi = {ext.apply(x) for x in NA.elements}
    G = [(u, p, m) for u in UT for p in NT.elements for m in NT.elements]
    H = {(u, p, m) for u in UA for p in NAi for m in NAi}
    P = NT.P

    def mul(x, y):
        return (T.mul(x[0], y[0]), P.mul(x[1], y[1]), P.mul(x[2], y[2]))

    one = (T.unity, P.unity, P.unity)
    tors = finite_quotient(G, H, mul, one, field=f)
    return tors + h0_cokernel([inc], T)


# ---------------------------------------------------------------------------
# maps of Picard groups along an extension

def _curve_pair(E) -> bool:
    return isinstance(E, Extension) and not E.A.is_base_field


def pic_kernel(E) -> GroupExpr:
    """``ker(Pic A -> Pic B)``."""
    f = E.field
    if not _curve_pair(E):
        return GroupExpr(field=f)
    fr = E.frame
    if not fr.c:
        return GroupExpr(field=f)
    iA = fr.inclusion(E.A)
    pi = frame_projection(E)
    fb = _frame(E.B)
    TA = fr.T
    if not f.is_finite:
        _rational_split(TA)
        comps_ok = pi is not None and pi.target.dim
        # torus part through idempotents, unipotent part linearly
        if comps_ok:
            iB = fb.inclusion(E.B)
            MA, MB = component_matrix(iA), component_matrix(iB)
            Pm = component_matrix(pi)
            gm = lattice_map_kernel(Pm, MA, MB, len(TA.primitive_idempotents),
                                    len(pi.target.primitive_idempotents), atom="Gm", field=f)
            pre = _preimage(pi, TA.nilradical_space, iB.image_space())
        else:
            gm = unit_map_cokernel(TA, [iA])
            return gm
        img = TA.span([iA.apply(v) for v in iA.source.nilradical_space.basis()])
        return gm + GroupExpr(ga_rank=pre.dim - img.dim, field=f)
    UT = units(TA)
    UA = {iA.apply(u) for u in units(iA.source)}
    if pi is None or not pi.target.dim:
        K = UT
    else:
        iB = fb.inclusion(E.B)
        UB = {iB.apply(u) for u in units(iB.source)}
        K = [u for u in UT if pi.apply(u) in UB]
    return finite_quotient(K, UA, TA.mul, TA.unity, field=f)


def npic_kernel(E, d: int) -> GroupExpr:
    f = E.field
    if not _curve_pair(E) or not E.frame.c:
        return GroupExpr(field=f)
    fr = E.frame
    fb = _frame(E.B)
    iB = fb.inclusion(E.B) if fb.c else None
    return nu_relative_kernel(fr.inclusion(E.A), iB, frame_projection(E), d)


def lpic_kernel(E, d: int | None = None) -> GroupExpr:
    f = E.field
    if not _curve_pair(E) or not E.frame.c:
        return GroupExpr(field=f)
    fr = E.frame
    iA = fr.inclusion(E.A)
    TA = fr.T
    a = len(TA.primitive_idempotents)
    MA = component_matrix(iA)
    pi = frame_projection(E)
    fb = _frame(E.B)
    if pi is None or not fb.c:
        return lattice_cokernel(MA, a)
    iB = fb.inclusion(E.B)
    MB = component_matrix(iB)
    b = len(fb.T.primitive_idempotents)
    return lattice_map_kernel(component_matrix(pi), MA, MB, a, b)


def mpic_kernel(E, d: int) -> GroupExpr:
    """``ker(MPic A -> MPic B)`` at truncation ``d``."""
    return npic_kernel(E, d) * 2 + lpic_kernel(E, d)


@dataclass
class Hypothesis:
    holds: bool
    reason: str
    checked: bool = False  # verified by computation, not only by citation


def pic_surjective(E, check: bool = True) -> Hypothesis:
    """Is ``Pic A -> Pic B`` onto?"""
    if isinstance(E, AlgebraPair):
        return Hypothesis(True, "Pic of a finite algebra is trivial", True)
    if E.B.is_base_field:
        return Hypothesis(True, "Pic B = 0 (B is a field)", True)
    if E.A.is_base_field:
        pb = pic(E.B)
        return Hypothesis(pb.is_trivial(), "Pic A = 0, so onto iff Pic B = 0", True)
    if pic(E.B).is_trivial():
        return Hypothesis(True, "Pic B = 0", True)
    reason = "birational integral extension of one-dimensional orders"
    if check and E.field.is_finite:
        # units of the artinian frame of A surject onto those of the frame of B
        pi = frame_projection(E)
        fb = _frame(E.B)
        UB = set(units(fb.T))
        img = {pi.apply(u) for u in units(E.frame.T)}
        sub = {fb.T.mul(x, y) for x in img for y in {fb.inclusion(E.B).apply(v)
                                                    for v in units(fb.inclusion(E.B).source)}}
        return Hypothesis(sub == UB, reason + "; frame units checked", True)
    return Hypothesis(True, reason)


# ---------------------------------------------------------------------------
# relative groups

def _findim_parts(phi: AlgebraMap, d: int, cutoff: int | None = None):
    """``(NU(S)/NU(R), coker H^0)`` for an injective map ``R -> S`` of finite algebras."""
    return nu_cokernel([phi], d, cutoff), h0_cokernel([phi], phi.target)


def _pair_map(E) -> AlgebraMap:
    if isinstance(E, AlgebraPair):
        return E.phi
    return E.frame.map_between(E.A, E.B)


def _nonbirational_mu_coker(E) -> GroupExpr:
    # A = k inside a curve order: coker[Z -> Z] on H^0, NU parts vanish (reduced)
    return GroupExpr(field=E.field)


def i_group(E) -> GroupExpr:
    """``I(A, B)`` from ``1 -> U(A) -> U(B) -> I -> Pic A -> Pic B``."""
    f = E.field
    if isinstance(E, AlgebraPair):
        return unit_map_cokernel(E.S, [E.phi])
    if E.A.is_base_field:
        if not pic(E.B).is_trivial():
            # I(k, B) -> Pic k = 0, so I = U(B)/U(k) = 0 regardless
            pass
        return GroupExpr(field=f)
    K = pic_kernel(E)
    if not K.is_trivial():
        h = pic_surjective(E)
        if not h.holds:
            raise HypothesisNotVerified("Pic A -> Pic B is not onto: " + h.reason)
    return K  # U(A) = U(B) = k* for subrings of k[t]


def mi_group(E, d: int, route: str = "H", cutoff: int | None = None) -> GroupExpr:
    """``MI(A, B)`` at truncation ``d``.

    Routes: ``H`` homological (coker MU extended by ker of MPic); ``Q`` quotient by
    ``f_A k[t]``; ``E`` explicit enumeration (finite algebras over finite fields).
    """
    route = route.upper()
    if route == "E":
        if isinstance(E, AlgebraPair):
            return mi_enumerated(E.phi, d, cutoff)
        fr = E.frame if _curve_pair(E) else None
        if fr is None or not fr.c:
            return mi_group(E, d, "H")
        return mi_enumerated(_pair_map(E), d, cutoff)
    if isinstance(E, AlgebraPair):
        q, l = _findim_parts(E.phi, d)
        return q * 2 + l
    if not _curve_pair(E):
        return _nonbirational_mu_coker(E)
    if route == "Q":
        if not E.frame.c:
            return GroupExpr(field=E.field)
        q, l = _findim_parts(_pair_map(E), d)
        return q * 2 + l
    K = mpic_kernel(E, d)
    if not K.is_trivial():
        h = pic_surjective(E)
        if not h.holds:
            raise HypothesisNotVerified("exactness at MPic A needs Pic A -> Pic B onto: "
                                        + h.reason)
    return K  # MU(A) = MU(B) = Z for domains


def ni_group(E, d: int) -> GroupExpr:
    """``NI(A, B)`` through the quotient by ``f_A k[t]``: ``NU(B/f) / NU(A/f)``."""
    if isinstance(E, AlgebraPair):
        return nu_cokernel([E.phi], d)
    if not _curve_pair(E) or not E.frame.c:
        return GroupExpr(field=E.field)
    return nu_cokernel([_pair_map(E)], d)


def ki_group(E, d: int) -> GroupExpr:
    """``KI(A, B)`` from the K-complex: coker(NU) extended by ker(NPic A -> NPic B)."""
    if isinstance(E, AlgebraPair):
        return nu_cokernel([E.phi], d)
    if not _curve_pair(E):
        return GroupExpr(field=E.field)
    K = npic_kernel(E, d)
    if not K.is_trivial():
        h = pic_surjective(E)
        if not h.holds:
            raise HypothesisNotVerified("exactness at NPic A needs Pic A -> Pic B onto: "
                                        + h.reason)
    return K


ORACLE_CUTOFF = 50000


def mi_routes(E, d: int, oracle_cutoff: int = ORACLE_CUTOFF) -> dict[str, GroupExpr]:
    out = {"H": mi_group(E, d, "H"), "Q": mi_group(E, d, "Q")}
    if E.field.is_finite:
        try:
            out["E"] = mi_group(E, d, "E", cutoff=oracle_cutoff)
        except Exception as exc:  # cutoff exceeded and friends
            out["E"] = exc
    return out


# ---------------------------------------------------------------------------
# the enumeration oracle

def _nilpotent_untruncated(R: FinDimAlgebra, g: LaurentPoly) -> bool:
    x = LaurentPoly(R, {k + 1: v for k, v in g.coeffs.items()})
    p = x
    for _ in range(R.dim + 1):
        if p.is_zero():
            return True
        p = p * x
    return p.is_zero()


def _enum_nu(R: FinDimAlgebra, d: int, cutoff: int | None):
    """``1 + X g`` with ``deg g < d`` and ``X g`` nilpotent in the untruncated ``R[X]``."""
    P = poly_extension(R, d)
    check_size(R.field, R.dim * d, "enumerating NU", cutoff)
    out = []
    elems = list(R.elements(cutoff))
    for coeffs in itertools.product(elems, repeat=d):
        g = LaurentPoly.from_list(R, coeffs)
        if _nilpotent_untruncated(R, g):
            vec = list(R.unity)
            for c in coeffs:
                vec.extend(c)
            out.append(tuple(vec))
    return P, out


def mi_enumerated(phi: AlgebraMap, d: int, cutoff: int | None = None) -> GroupExpr:
    """``MI`` of a finite pair from explicitly enumerated unipotent units and idempotents."""
    R, S = phi.source, phi.target
    f = S.field
    if not f.is_finite:
        raise HypothesisNotVerified("enumeration needs a finite field")
    PS, NS = _enum_nu(S, d, cutoff)
    q = GroupExpr(field=f)
    if NS and len(NS) > 1:
        PR, NR = _enum_nu(R, d, cutoff)
        ext = extend_map(phi, PR, PS, d)
        H = {ext.apply(x) for x in NR}
        q = finite_quotient(NS, H, PS.mul, PS.unity, field=f)
    eS = idempotents_bruteforce(S, cutoff)
    eR = idempotents_bruteforce(R, cutoff)
    M = [[int(not S.is_zero(S.mul(phi.apply(e), g))) for e in eR] for g in eS]
    lat = lattice_cokernel(M, len(eS))
    return q * 2 + lat


# ---------------------------------------------------------------------------
# quotients by ideals, polynomial extensions

def _quotient_pair(E: Extension, g: Poly):
    field = E.field
    fA = E.A.conductor
    if (g % fA) or g.is_zero():
        raise AlgebraError(f"{g.render()} k[t] is not contained in A")
    n = g.degree
    T = poly_quotient(field, g)
    subA = Subspace(field, n, [(p % g).vector(n) for p in E.A.basis(n - 1)] + [T.unity])
    subB = Subspace(field, n, [(p % g).vector(n) for p in E.B.basis(n - 1)] + [T.unity])
    QA, ra, _ = subquotient_algebra(T, subA, name="A/a")
    QB, rb, _ = subquotient_algebra(T, subB, name="B/a")
    images = [tuple(solve(field, rb, v)) for v in ra]
    return QA, QB, AlgebraMap(QA, QB, images=images)


@dataclass
class TransferVerdict:
    isomorphic: bool
    left: GroupExpr
    right: GroupExpr
    ideal: str
    detail: str = ""


def quotient_transfer(E: Extension, a=None, d: int = 2) -> TransferVerdict:
    """Compare ``MI(A, B)`` with ``MI(A/a, B/a)`` for a ``B``-ideal ``a`` inside ``A``.

    ``a`` is a polynomial ``g`` (the ideal ``g k[t]``), the string ``"conductor"`` (the
    conductor of ``B`` into ``A``), or ``None``/``0`` (the zero ideal)."""
    left = mi_group(E, d)
    if a is None or (isinstance(a, (int, Poly)) and not a):
        return TransferVerdict(True, left, left, "0", "zero ideal: identity")
    if isinstance(a, str) and a == "conductor":
        QA, QB, incl = quotient_by_conductor(E)
        label = "conductor"
        if incl is None:
            right = GroupExpr(field=E.field)
        else:
            q, l = _findim_parts(incl, d)
            right = q * 2 + l
    else:
        QA, QB, incl = _quotient_pair(E, a)
        label = a.render() + " k[t]"
        q, l = _findim_parts(incl, d)
        right = q * 2 + l
    return TransferVerdict(left == right, left, right, label,
                           f"{QA.name} ({QA.dim}) in {QB.name} ({QB.dim})")


def mi_polynomial_extension(E, d: int, dT: int = 1) -> GroupExpr:
    """``MI(A[T], B[T])`` through the quotient by ``f_A k[t][T]`` with ``T`` truncated
    at ``dT`` (the truncation only stands in for ``T``; nilradicals are ``N[T]``)."""
    if dT > 2:
        raise ValueError("T-truncation above 2 is out of scope")
    phi = E.phi if isinstance(E, AlgebraPair) else _pair_map(E)
    if not isinstance(E, AlgebraPair) and (not _curve_pair(E) or not E.frame.c):
        return mi_group(E, d)
    R, S = phi.source, phi.target
    RT = poly_extension(R, dT, "T", nil_from_base=True)
    ST = poly_extension(S, dT, "T", nil_from_base=True)
    phiT = extend_map(phi, RT, ST, dT)
    q, l = _findim_parts(phiT, d)
    return q * 2 + l


# ---------------------------------------------------------------------------
# summaries

@dataclass
class GroupSummary:
    name: str
    d: int
    groups: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "d": self.d,
                "groups": {k: v.render() for k, v in self.groups.items()}}


def ring_summary(R, d: int) -> GroupSummary:
    name = getattr(R, "name", "") or repr(R)
    g = {"H0": h0(R), "NU": nu(R, d), "MU": mu(R, d), "Pic": pic(R), "NPic": npic(R, d),
         "LPic": lpic(R, d), "MPic": mpic(R, d)}
    if isinstance(R, CurveOrder) and not R.is_base_field:
        g["Pic[X,X^-1]"] = pic_laurent(R, d)
    return GroupSummary(name, d, g)


def extension_summary(E, d: int) -> GroupSummary:
    name = getattr(E, "name", "") or repr(E)
    g = {"I": i_group(E), "MI": mi_group(E, d), "NI": ni_group(E, d), "KI": ki_group(E, d),
         "ker MPic": mpic_kernel(E, d) if not isinstance(E, AlgebraPair)
         else GroupExpr(field=E.field)}
    return GroupSummary(name, d, g)
