"""Invertible ``A``-submodules of ``B`` with explicit certificates.

An :class:`InvModule` carries generators ``g_i`` of ``I``, generators ``h_j`` of a
candidate inverse and a certificate ``1 = sum a_ij g_i h_j`` with ``a_ij`` in ``A``.
Verification checks the certificate and ``g_i h_j in A`` for all pairs, which together
say ``I I^-1 = A``.  Equality of modules is mutual generator membership, where
``x in I`` iff ``x h_j in A`` for every inverse generator (valid once ``I`` is known to
be invertible).

Three ring contexts are supported: curve orders (polynomials in ``t``), finite
algebra pairs (coordinate tuples) and adjoined variables ``X`` or ``X, X^-1`` over
either (finite maps exponent -> base element).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import FinDimAlgebra, units
from .curves import CurveOrder, Extension, orders_equal
from .errors import BadWitness, CertificateFailure, NotSurjectiveWitness
from .linalg import Subspace, solve
from .pairs import AlgebraPair
from .poly import Poly


# ---------------------------------------------------------------------------
# ring contexts

class CurveContext:
    kind = "curve"

    def __init__(self, A: CurveOrder, B: CurveOrder, name: str = ""):
        self.A, self.B = A, B
        self.field = A.field
        self.one = Poly.const(self.field, 1)
        self.zero = Poly(self.field, ())
        self.name = name or f"{A.name or 'A'} in {B.name or 'B'}"

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def eq(self, x, y) -> bool:
        return x == y

    def in_A(self, x) -> bool:
        return bool(self.A.member(x))

    def in_B(self, x) -> bool:
        return bool(self.B.member(x))

    def render(self, x) -> str:
        return x.render()

    def same_top(self, other) -> bool:
        return isinstance(other, CurveContext) and (other.B is self.B or
                                                    orders_equal(other.B, self.B))


class FinContext:
    kind = "findim"

    def __init__(self, S: FinDimAlgebra, Rsub: Subspace, name: str = ""):
        self.S, self.Rsub = S, Rsub
        self.field = S.field
        self.one = S.unity
        self.zero = S.zero
        self.name = name or f"subalgebra of {S.name}"

    def add(self, x, y):
        return self.S.add(x, y)

    def neg(self, x):
        return self.S.neg(x)

    def mul(self, x, y):
        return self.S.mul(x, y)

    def is_zero(self, x) -> bool:
        return self.S.is_zero(x)

    def eq(self, x, y) -> bool:
        return tuple(x) == tuple(y)

    def in_A(self, x) -> bool:
        return tuple(x) in self.Rsub

    def in_B(self, x) -> bool:
        return len(x) == self.S.dim

    def render(self, x) -> str:
        return self.S.render(x)

    def same_top(self, other) -> bool:
        return isinstance(other, FinContext) and other.S is self.S


class VarContext:
    """``base[X]`` (``laurent=False``) or ``base[X, X^-1]``; elements are tuples of
    ``(exponent, coefficient)`` sorted by exponent with nonzero coefficients."""

    kind = "var"

    def __init__(self, base, laurent: bool = False, var: str = "X"):
        self.base, self.laurent, self.var = base, laurent, var
        self.field = base.field
        self.one = ((0, base.one),)
        self.zero = ()
        suffix = f"[{var}, {var}^-1]" if laurent else f"[{var}]"
        self.name = f"({base.name}){suffix}"

    def make(self, coeffs: dict):
        b = self.base
        return tuple(sorted((k, v) for k, v in coeffs.items() if not b.is_zero(v)))

    def lift(self, x):
        return self.make({0: x})

    def monomial(self, k: int, c):
        return self.make({k: c})

    def add(self, x, y):
        b = self.base
        out = dict(x)
        for k, v in y:
            out[k] = b.add(out[k], v) if k in out else v
        return self.make(out)

    def neg(self, x):
        return tuple((k, self.base.neg(v)) for k, v in x)

    def mul(self, x, y):
        b = self.base
        out: dict = {}
        for i, u in x:
            for j, v in y:
                p = b.mul(u, v)
                out[i + j] = b.add(out[i + j], p) if i + j in out else p
        return self.make(out)

    def is_zero(self, x) -> bool:
        return not x

    def eq(self, x, y) -> bool:
        if len(x) != len(y):
            return False
        return all(i == j and self.base.eq(u, v) for (i, u), (j, v) in zip(x, y))

    def _ok_exponents(self, x) -> bool:
        return self.laurent or all(k >= 0 for k, _ in x)

    def in_A(self, x) -> bool:
        return self._ok_exponents(x) and all(self.base.in_A(v) for _, v in x)

    def in_B(self, x) -> bool:
        return self._ok_exponents(x) and all(self.base.in_B(v) for _, v in x)

    def at_zero(self, x):
        """``X -> 0`` (polynomial contexts only)."""
        for k, v in x:
            if k == 0:
                return v
        return self.base.zero

    def render(self, x) -> str:
        if not x:
            return "0"
        parts = []
        for k, v in sorted(x, reverse=True):
            c = self.base.render(v)
            c = f"({c})" if ("+" in c or " - " in c) else c
            mon = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            parts.append(c if not mon else (mon if c == "1" else f"{c}*{mon}"))
        return " + ".join(parts)

    def same_top(self, other) -> bool:
        return isinstance(other, VarContext) and other.laurent == self.laurent and \
            other.var == self.var and self.base.same_top(other.base)


def context_for(E):
    if isinstance(E, Extension):
        return CurveContext(E.A, E.B, E.name)
    if isinstance(E, AlgebraPair):
        return FinContext(E.S, E.phi.image_space(), E.name)
    if isinstance(E, (CurveContext, FinContext, VarContext)):
        return E
    raise TypeError(f"no ring context for {E!r}")


# ---------------------------------------------------------------------------
# modules

@dataclass
class InvModule:
    ctx: object
    gens: list
    inv: list
    cert: list = dc_field(default_factory=list)  # (i, j, a) with 1 = sum a g_i h_j
    label: str = ""

    def __post_init__(self):
        self._prune()

    def _prune(self):
        c = self.ctx
        keep_g = [i for i, g in enumerate(self.gens) if not c.is_zero(g)]
        keep_h = [j for j, h in enumerate(self.inv) if not c.is_zero(h)]
        gi = {old: new for new, old in enumerate(keep_g)}
        hj = {old: new for new, old in enumerate(keep_h)}
        self.gens = [self.gens[i] for i in keep_g]
        self.inv = [self.inv[j] for j in keep_h]
        self.cert = [(gi[i], hj[j], a) for i, j, a in self.cert
                     if i in gi and j in hj and not c.is_zero(a)]

    # -- checks ---------------------------------------------------------------
    def verify(self) -> "InvModule":
        c = self.ctx
        for g in self.gens + self.inv:
            if not c.in_B(g):
                raise CertificateFailure(f"generator {c.render(g)} is not in B")
        for g in self.gens:
            for h in self.inv:
                if not c.in_A(c.mul(g, h)):
                    raise CertificateFailure(
                        f"{c.render(g)} * {c.render(h)} is not in A: I I^-1 is not inside A")
        total = c.zero
        for i, j, a in self.cert:
            if not c.in_A(a):
                raise CertificateFailure(f"certificate coefficient {c.render(a)} is not in A")
            total = c.add(total, c.mul(a, c.mul(self.gens[i], self.inv[j])))
        if not c.eq(total, c.one):
            raise CertificateFailure(f"certificate sums to {c.render(total)}, not 1")
        return self

    def contains(self, x) -> bool:
        c = self.ctx
        return c.in_B(x) and all(c.in_A(c.mul(x, h)) for h in self.inv)

    def is_unit_module(self) -> bool:
        return inv_equal(self, unit_module(self.ctx))

    def render(self) -> str:
        c = self.ctx
        return "<" + ", ".join(c.render(g) for g in self.gens) + ">"

    def to_dict(self) -> dict:
        c = self.ctx
        return {"generators": [c.render(g) for g in self.gens],
                "inverse": [c.render(h) for h in self.inv],
                "certificate": [[i, j, c.render(a)] for i, j, a in self.cert]}

    def __repr__(self):
        return f"InvModule({self.render()} over {self.ctx.name})"


def unit_module(ctx) -> InvModule:
    return InvModule(ctx, [ctx.one], [ctx.one], [(0, 0, ctx.one)], label="A")


def principal(ctx, u, u_inv) -> InvModule:
    """``u A`` for a unit ``u`` of ``B`` with inverse ``u_inv``."""
    if not ctx.eq(ctx.mul(u, u_inv), ctx.one):
        raise CertificateFailure("u * u_inv != 1")
    return InvModule(ctx, [u], [u_inv], [(0, 0, ctx.one)]).verify()


def _check_same(I: InvModule, J: InvModule):
    if not (I.ctx is J.ctx or I.ctx.same_top(J.ctx)):
        raise CertificateFailure("modules over different extensions")


def inv_mul(I: InvModule, J: InvModule) -> InvModule:
    _check_same(I, J)
    c = I.ctx
    ng, nh = len(J.gens), len(J.inv)
    gens = [c.mul(g, gg) for g in I.gens for gg in J.gens]
    inv = [c.mul(h, hh) for h in I.inv for hh in J.inv]
    cert = []
    for i, j, a in I.cert:
        for k, l, b in J.cert:
            cert.append((i * ng + k, j * nh + l, c.mul(a, b)))
    return InvModule(c, gens, inv, cert).verify()


def inv_inverse(I: InvModule) -> InvModule:
    return InvModule(I.ctx, list(I.inv), list(I.gens), [(j, i, a) for i, j, a in I.cert]).verify()


def inv_equal(I: InvModule, J: InvModule) -> bool:
    _check_same(I, J)
    return all(J.contains(g) for g in I.gens) and all(I.contains(g) for g in J.gens)


def extend_scalars(I: InvModule, ctx) -> InvModule:
    """``I -> I A'`` for a context whose rings contain those of ``I.ctx`` (same
    generators and certificate, re-verified)."""
    if isinstance(ctx, VarContext) and not isinstance(I.ctx, VarContext):
        lift = ctx.lift
    else:
        def lift(x):
            return x
    return InvModule(ctx, [lift(g) for g in I.gens], [lift(h) for h in I.inv],
                     [(i, j, lift(a)) for i, j, a in I.cert]).verify()


# ---------------------------------------------------------------------------
# the elementary witness

def elementary_witness(E, b, var: str = "X", ctx=None) -> InvModule:
    """``<1 + bX, b^2 X^2>`` with inverse ``<1 - bX, b^2 X^2>`` over ``A[X] subset B[X]``.

    ``1 = (1 + bX)(1 - bX)(1 + b^2 X^2) + (b^2 X^2)(b^2 X^2)``.
    """
    base = ctx or context_for(E)
    b2 = base.mul(b, b)
    b3 = base.mul(b2, b)
    if not base.in_B(b):
        raise BadWitness(f"{base.render(b)} is not in B")
    if not (base.in_A(b2) and base.in_A(b3)):
        raise BadWitness(f"b = {base.render(b)}: b^2 and b^3 must lie in A")
    X = VarContext(base, laurent=False, var=var)
    one = X.one
    bX = X.monomial(1, b)
    b2X2 = X.monomial(2, b2)
    gens = [X.add(one, bX), b2X2]
    inv = [X.add(one, X.neg(bX)), b2X2]
    cert = [(0, 0, X.add(one, b2X2)), (1, 1, one)]
    I = InvModule(X, gens, inv, cert, label=f"w({base.render(b)})").verify()
    return I


def specialize_zero(I: InvModule) -> InvModule:
    """Image under ``X -> 0``."""
    X = I.ctx
    if not isinstance(X, VarContext) or X.laurent:
        raise ValueError("X -> 0 needs a polynomial context")
    f = X.at_zero
    return InvModule(X.base, [f(g) for g in I.gens], [f(h) for h in I.inv],
                     [(i, j, f(a)) for i, j, a in I.cert]).verify()


# ---------------------------------------------------------------------------
# explicit representatives of I(A, B)

def _certificate_curve(ctx: CurveContext, gens, inv, start: int) -> list:
    """Solve ``sum a_ij g_i h_j = 1`` for ``a_ij`` in ``A`` of bounded degree."""
    f = ctx.field
    A = ctx.A
    top = max(g.degree for g in gens) + max(h.degree for h in inv)
    for D in range(start, 4 * start + 8, max(1, start // 2)):
        basis = A.basis(D)
        n = D + top + 1
        cols, index = [], []
        for i, g in enumerate(gens):
            for j, h in enumerate(inv):
                gh = g * h
                for p in basis:
                    cols.append((gh * p).vector(n))
                    index.append((i, j, p))
        target = Poly.const(f, 1).vector(n)
        sol = solve(f, cols, target)
        if sol is not None:
            acc: dict = {}
            for c, (i, j, p) in zip(sol, index):
                if c:
                    acc[(i, j)] = acc.get((i, j), Poly(f, ())) + p.scale(c)
            return [(i, j, a) for (i, j), a in acc.items()]
    raise CertificateFailure("no certificate found in the degree range searched")


def frame_module(E: Extension, u: Poly, v: Poly) -> InvModule:
    """``{x in B : x mod f in u (A mod f)}`` for ``u`` in ``B`` invertible mod ``f = f_A``
    with ``u v = 1 mod f``: generated by ``u`` and ``f`` times ``A``-module generators
    of ``k[t]``."""
    ctx = context_for(E)
    A = E.A
    fA = A.conductor
    c = A.conductor_degree
    M = [Poly.const(E.field, 1)] + [m for m in A.complement_basis(max(c - 1, 0))]
    rest = [fA * m for m in M]
    gens = [u] + rest
    inv = [v] + rest
    cert = _certificate_curve(ctx, gens, inv, max(2 * c, 2))
    return InvModule(ctx, gens, inv, cert, label=f"I({u.render()})").verify()


def enumerate_classes(E) -> list[InvModule]:
    """One module per element of ``I(A, B)`` (finite fields): principal modules ``uA``
    over ``U(S)/U(R)`` for finite pairs, frame modules over ``U(B mod f)/U(A mod f)``
    for curve pairs."""
    ctx = context_for(E)
    if not E.field.is_finite:
        raise ValueError("enumeration needs a finite field")
    if isinstance(E, AlgebraPair):
        S = E.S
        UR = [E.phi.apply(u) for u in units(E.R)]
        seen: set = set()
        out = []
        for u in sorted(units(S), key=lambda v: (max((i for i, x in enumerate(v) if x),
                                                     default=-1), tuple(reversed(v)))):
            if u in seen:
                continue
            seen |= {S.mul(u, r) for r in UR}
            I = principal(ctx, u, S.inverse(u))
            I.frame_unit = u
            out.append(I)
        return out
    if E.A.is_base_field or not E.frame.c:
        return [unit_module(ctx)]
    fr = E.frame
    T = fr.T
    Bbar, reps = fr.subalgebra(E.B)
    Abar, areps = fr.subalgebra(E.A)
    incB = fr.inclusion(E.B)
    incA = fr.inclusion(E.A)
    UA = [incA.apply(u) for u in units(Abar)]
    UB = sorted((incB.apply(u) for u in units(Bbar)),
                key=lambda v: Poly.from_vector(E.field, v).sort_key())
    seen = set()
    out = []
    for u in UB:
        if u in seen:
            continue
        seen |= {T.mul(u, a) for a in UA}
        v = T.inverse(u)
        I = frame_module(E, fr.lift(u), fr.lift(v))
        I.frame_unit = u
        out.append(I)
    return out


# ---------------------------------------------------------------------------
# phi(A, C, B) and the theta maps

def phi_map(I: InvModule, E_CB) -> InvModule:
    """``I -> I C`` from ``I(A, B)`` to ``I(C, B)``."""
    ctx = context_for(E_CB)
    if not I.ctx.same_top(ctx):
        raise CertificateFailure("phi needs A subset C subset B with the same B")
    return InvModule(ctx, list(I.gens), list(I.inv), list(I.cert)).verify()


@dataclass
class PhiVerdict:
    surjective: bool
    hypothesis: str
    classes_source: int
    classes_target: int
    unhit: list = dc_field(default_factory=list)


def _phi_hypothesis(E_AB, E_CB) -> str:
    from .predicates import is_subintegral
    if isinstance(E_AB, AlgebraPair):
        if len(E_AB.R.primitive_idempotents) == 1:
            return "A is a finite local algebra (hensel local)"
        return ""
    if E_AB.A.is_base_field:
        return "A is a field (hensel local)"
    C = E_CB.A
    if orders_equal(E_AB.A, C):
        return "A = C"
    if is_subintegral(Extension(E_AB.A, C)).value:
        return "C is subintegral over A"
    return ""


def phi_surjective(E_AB, E_CB) -> PhiVerdict:
    """Hit every class of ``I(C, B)`` by ``phi`` applied to the classes of ``I(A, B)``."""
    source = enumerate_classes(E_AB)
    target = enumerate_classes(E_CB)
    images = [phi_map(I, E_CB) for I in source]
    unhit = [J for J in target if not any(inv_equal(J, K) for K in images)]
    hyp = _phi_hypothesis(E_AB, E_CB)
    if unhit and hyp:
        raise NotSurjectiveWitness(
            f"class {unhit[0].render()} of I(C, B) is not hit although {hyp}")
    return PhiVerdict(not unhit, hyp or "no licensing hypothesis", len(source), len(target),
                      unhit)


def theta1(I: InvModule, var: str = "X") -> InvModule:
    return extend_scalars(I, VarContext(I.ctx, laurent=False, var=var))


def theta(I: InvModule, var: str = "X") -> InvModule:
    return extend_scalars(I, VarContext(I.ctx, laurent=True, var=var))


def theta2(J: InvModule) -> InvModule:
    """``I(A[X], B[X]) -> I(A[X, X^-1], B[X, X^-1])``."""
    X = J.ctx
    L = VarContext(X.base, laurent=True, var=X.var)
    return InvModule(L, list(J.gens), list(J.inv), list(J.cert)).verify()


@dataclass
class ThetaReport:
    modules: int
    commutes: bool
    injective: dict
    lemma: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.commutes and all(self.injective.values()) and \
            all(v for v in self.lemma.values() if isinstance(v, bool))


def theta_maps(E, d: int = 2, extra: list | None = None) -> ThetaReport:
    """Commutation ``theta2 o theta1 = theta`` and injectivity on all enumerated classes
    (plus ``extra`` modules of ``I(A[X], B[X])`` for ``theta2``), and the equivalence
    ``theta iso <=> theta1 iso and theta2 iso`` on the computed groups."""
    from .groups import GroupExpr
    from .pic import ki_group, mi_group

    classes = enumerate_classes(E)
    commutes = True
    inj = {"theta": True, "theta1": True, "theta2": True}
    ims, ims1 = [], []
    for I in classes:
        t1 = theta1(I)
        t = theta(I)
        t21 = theta2(t1)
        if not inv_equal(t21, extend_scalars(I, t21.ctx)):
            commutes = False
        ims.append(t)
        ims1.append(t1)
    # injectivity: distinct classes stay distinct
    for name, images in (("theta", ims), ("theta1", ims1)):
        for a in range(len(classes)):
            for b in range(a + 1, len(classes)):
                if inv_equal(images[a], images[b]):
                    inj[name] = False
    notes = []
    for J in extra or []:
        J2 = theta2(J)
        if J2.is_unit_module() and not J.is_unit_module():
            inj["theta2"] = False
        notes.append(f"theta2({J.render()}) unit: {J2.is_unit_module()}")
    mi = mi_group(E, d)
    ki = ki_group(E, d)
    try:
        coker2 = mi.cancel(ki)
    except Exception:
        coker2 = None
    lemma = {"MI": mi.render(), "KI": ki.render(),
             "coker theta2": coker2.render() if coker2 is not None else "?"}
    if coker2 is not None:
        lemma["iso iff both iso"] = mi.is_trivial() == (ki.is_trivial() and coker2.is_trivial())
    return ThetaReport(len(classes), commutes, inj, lemma, notes)
