"""Turn a parsed :class:`~subint.dsl.Script` into rings and extensions and run its
directives."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import (FinDimAlgebra, algebra_from_table_text, base_algebra, poly_quotient,
                      split_algebra)
from .curves import (ConditionOrder, CurveOrder, Extension, base_field_order, monomial_order,
                     polynomial_ring)
from .dsl import Directive, Script, eval_poly, parse, parse_condition
from .errors import AlgebraError, ParseError, SubintError, UndefinedName
from .groups import GroupExpr
from .pairs import AlgebraPair
from .scalars import field_from_name
from . import pic as P
from . import predicates as PR

DEFAULT_TRUNC = 2


class _Base:
    """``ring K = base``: the ground field, as a curve order or a finite algebra
    depending on where it is used."""

    def __init__(self, field, name):
        self.field, self.name = field, name
        self.curve = base_field_order(field)
        self.curve.name = name
        self.algebra = base_algebra(field)
        self.algebra.name = name


def build_ring(field, rd) -> object:
    form, args, name = rd.form, rd.args, rd.name
    try:
        if form == "base":
            return _Base(field, name)
        if form == "poly":
            R = polynomial_ring(field)
        elif form == "subalgebra":
            R = CurveOrder(field, [eval_poly(a, field)[0] for a in args])
        elif form == "monomial":
            R = monomial_order(field, [int(a) for a in args])
        elif form == "conditions":
            R = ConditionOrder(field, [parse_condition(a, field) for a in args])
        elif form == "quotient":
            p, var = eval_poly(args[0], field, None)
            R = poly_quotient(field, p, var or "t")
        elif form == "split":
            R = split_algebra(field, int(args[0]))
        elif form == "table":
            R = algebra_from_table_text(field, args[0].replace(";", "\n"))
        else:  # pragma: no cover - the parser rejects other forms
            raise ParseError(f"unknown ring form {form!r}", rd.line, 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"ring {name}: {exc}", rd.line, 1) from exc
    R.name = name
    return R


def make_extension(A, B, name: str = ""):
    if isinstance(B, _Base):
        B = B.curve
    if isinstance(A, _Base):
        A = A.curve if isinstance(B, CurveOrder) else A.algebra
    if isinstance(A, CurveOrder) and isinstance(B, CurveOrder):
        return Extension(A, B, name)
    if isinstance(A, FinDimAlgebra) and isinstance(B, FinDimAlgebra):
        return AlgebraPair(A, B, name=name)
    raise AlgebraError(f"{name}: cannot include {type(A).__name__} in {type(B).__name__}")


@dataclass
class Result:
    directive: str
    ok: bool | None          # None: informational (no pass/fail meaning)
    value: object = None     # rendered verdict or group
    payload: dict = dc_field(default_factory=dict)
    text: str = ""
    refused: bool = False

    def to_dict(self) -> dict:
        return {"directive": self.directive, "ok": self.ok, "value": self.value,
                "refused": self.refused, **self.payload}


class Workspace:
    def __init__(self, script: Script, field: str | None = None, trunc: int | None = None,
                 cutoff: int | None = None):
        if field:
            script = script.with_field(field)
        self.script = script
        self.field = field_from_name(script.field)
        self.trunc = trunc
        self.cutoff = cutoff
        self.rings: dict = {}
        self.extensions: dict = {}
        for rd in script.rings:
            self.rings[rd.name] = build_ring(self.field, rd)
        for ed in script.extensions:
            try:
                self.extensions[ed.name] = make_extension(self.rings[ed.sub], self.rings[ed.sup],
                                                          ed.name)
            except AlgebraError as exc:
                raise ParseError(f"extension {ed.name}: {exc}", ed.line, 1) from exc

    @classmethod
    def from_text(cls, text: str, **kw) -> "Workspace":
        return cls(parse(text), **kw)

    # -- lookup --------------------------------------------------------------
    def ring(self, name: str):
        if name not in self.rings:
            raise UndefinedName(f"no ring named {name!r}")
        R = self.rings[name]
        return R.curve if isinstance(R, _Base) else R

    def ext(self, name: str):
        if name in self.extensions:
            return self.extensions[name]
        raise UndefinedName(f"no extension named {name!r}")

    def find_extension(self, sub: str, sup: str):
        for ed in self.script.extensions:
            if ed.sub == sub and ed.sup == sup:
                return self.extensions[ed.name]
        return make_extension(self.rings[sub], self.rings[sup], f"{sub} in {sup}")

    # -- running -------------------------------------------------------------
    def run(self) -> list[Result]:
        return [self.run_directive(d) for d in self.script.directives]

    def run_directive(self, d: Directive) -> Result:
        trunc = d.trunc or self.trunc or DEFAULT_TRUNC
        text = d.render()
        try:
            return _DISPATCH[d.verb](self, d, trunc, text)
        except SubintError as exc:
            if getattr(exc, "exit_code", 1) == 3:
                return Result(text, None, "refused", {"reason": str(exc)},
                              f"{text}: refused ({exc})", refused=True)
            raise


# ---------------------------------------------------------------------------
# directive handlers

_PREDICATES = {
    "subintegral": PR.is_subintegral,
    "elementary": PR.is_elementary_subintegral,
    "closed": PR.is_subintegrally_closed,
    "anodal": PR.is_anodal,
}


def _check(ws: Workspace, d: Directive, trunc: int, text: str) -> Result:
    (name,) = d.targets
    if d.what == "seminormal":
        v = PR.is_seminormal(ws.ring(name))
    elif d.what == "quasinormal":
        v = PR.is_quasinormal(ws.ext(name), trunc)
    else:
        v = _PREDICATES[d.what](ws.ext(name))
    payload = v.to_dict()
    expect = d.option("expect")
    ok = None if expect is None else (str(v.value).lower() == str(expect).lower())
    w = payload.get("witness")
    line = f"{d.what} {name}: {str(v.value).lower()}" + (f" (witness {w})" if w else "")
    return Result(text, ok, v.value, payload, line)


_RING_GROUPS = {"pic": lambda R, d: P.pic(R), "npic": P.npic, "lpic": P.lpic, "mpic": P.mpic,
                "units": lambda R, d: P.unit_group_of(R)}
_EXT_GROUPS = {"i": lambda E, d: P.i_group(E), "mi": P.mi_group, "ni": P.ni_group,
               "ki": P.ki_group}


def _group_result(text, label, g: GroupExpr, expect, extra=None) -> Result:
    ok = None if expect is None else g.render().replace(" ", "") == str(expect).replace(" ", "")
    payload = {"group": g.to_dict()}
    payload.update(extra or {})
    return Result(text, ok, g.render(), payload, f"{label} = {g.render()}")


def _compute(ws: Workspace, d: Directive, trunc: int, text: str) -> Result:
    from .invmod import theta_maps
    from .sequences import sequence_report

    w, tg = d.what, d.targets
    if w in _RING_GROUPS:
        R = ws.ring(tg[0])
        if isinstance(R, AlgebraPair):
            raise UndefinedName(f"{tg[0]} is an extension, not a ring")
        g = _RING_GROUPS[w](R, trunc)
        label = f"{w} {tg[0]}" + (f" (d={trunc})" if w in ("npic", "lpic", "mpic") else "")
        return _group_result(text, label, g, d.option("expect"))
    if w in _EXT_GROUPS:
        E = ws.ext(tg[0])
        if w == "mi" and d.option("route"):
            g = P.mi_group(E, trunc, route=d.option("route").upper(), cutoff=ws.cutoff)
        else:
            g = _EXT_GROUPS[w](E, trunc)
        return _group_result(text, f"{w} {tg[0]} (d={trunc})", g, d.option("expect"))
    if w == "closure":
        E = ws.ext(tg[0])
        plus, trace = PR.subintegral_closure(E, ws.cutoff)
        return Result(text, None, trace.render() if hasattr(trace, "render") else str(trace),
                      {"steps": trace.degrees() if hasattr(trace, "degrees") else []},
                      f"closure {tg[0]}:\n{trace.render()}")
    if w == "summary":
        name = tg[0]
        if name in ws.extensions:
            s = P.extension_summary(ws.ext(name), trunc)
        else:
            s = P.ring_summary(ws.ring(name), trunc)
        body = ", ".join(f"{k} = {v}" for k, v in s.to_dict()["groups"].items())
        return Result(text, None, s.to_dict()["groups"], s.to_dict(), f"{name} (d={trunc}): {body}")
    if w == "transfer":
        E = ws.ext(tg[0])
        a = d.option("ideal", "conductor")
        if a != "conductor":
            a = eval_poly(a, ws.field)[0]
        v = P.quotient_transfer(E, a, trunc)
        return Result(text, v.isomorphic, v.isomorphic,
                      {"left": v.left.render(), "right": v.right.render(), "ideal": v.ideal},
                      f"transfer {tg[0]} mod {v.ideal}: {v.left.render()} vs {v.right.render()}"
                      f" -> {'isomorphic' if v.isomorphic else 'different'}")
    if w == "theta":
        rep = theta_maps(ws.ext(tg[0]), trunc)
        return Result(text, rep.ok, rep.ok, {"injective": rep.injective, "commutes": rep.commutes,
                                             "lemma": rep.lemma, "modules": rep.modules},
                      f"theta {tg[0]}: {rep.modules} modules, commutes {rep.commutes}, "
                      f"injective {rep.injective}")
    if w == "sequence":
        rep = sequence_report(d.kind, *_sequence_data(ws, d.kind, tg), d=trunc, strict=False)
        return Result(text, rep.exact if not rep.failures else False, rep.exact,
                      rep.to_dict(), rep.render())
    raise UndefinedName(f"unknown computation {w!r}")


def _sequence_data(ws: Workspace, kind: str, tg: tuple):
    kind = kind.lower()
    if kind == "prop3.7":
        if len(tg) == 3 and all(t in ws.rings for t in tg):
            A, C, B = tg
            return (ws.find_extension(A, C), ws.find_extension(A, B), ws.find_extension(C, B))
        return tuple(ws.ext(t) for t in tg)
    if len(tg) == 2 and all(t in ws.rings for t in tg):
        return (ws.find_extension(*tg),)
    return (ws.ext(tg[0]),)


def _map(ws: Workspace, d: Directive, trunc: int, text: str) -> Result:
    from .invmod import enumerate_classes, phi_map, phi_surjective

    A, C, B = d.targets
    E_AB, E_CB = ws.find_extension(A, B), ws.find_extension(C, B)
    v = phi_surjective(E_AB, E_CB)
    lines = [f"phi({A}, {C}, {B}): {v.classes_source} -> {v.classes_target} classes, "
             f"surjective {str(v.surjective).lower()} ({v.hypothesis})"]
    images = []
    if d.option("all"):
        for I in enumerate_classes(E_AB):
            J = phi_map(I, E_CB)
            images.append([I.render(), J.render()])
            lines.append(f"  {I.render()} -> {J.render()}")
    return Result(text, v.surjective, v.surjective,
                  {"hypothesis": v.hypothesis, "source": v.classes_source,
                   "target": v.classes_target, "unhit": [J.render() for J in v.unhit],
                   "images": images}, "\n".join(lines))


def _suite(ws: Workspace, d: Directive, trunc: int, text: str) -> Result:
    from .suites import run_suite

    rep = run_suite(d.what, truncs=[trunc] if d.trunc or ws.trunc else None)
    return Result(text, rep.ok, rep.ok, rep.to_dict(), rep.render())


_DISPATCH = {"check": _check, "compute": _compute, "map": _map, "suite": _suite}
