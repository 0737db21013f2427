"""The named corpus of curve orders and finite algebra pairs.

Each entry lives in a ``.sub`` script under ``subint/scripts``; the directives tagged
``--expect`` in a script are the entry's expected verdicts and groups, with ``--source``
recording how the value was obtained (``derived``, ``stated`` or ``trivial``).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources

from .dsl import Directive, Script, parse
from .workspace import Result, Workspace

SCRIPTS = ("cusp", "node", "conjugate", "mixed", "mixed2", "chain", "dual", "split", "full")


@lru_cache(maxsize=None)
def script_text(stem: str) -> str:
    return resources.files("subint").joinpath("scripts").joinpath(f"{stem}.sub").read_text("utf-8")


@lru_cache(maxsize=None)
def workspace(stem: str) -> Workspace:
    return Workspace(parse(script_text(stem)))


@dataclass
class Expectation:
    directive: Directive
    value: str
    source: str
    trunc: int | None

    def render(self) -> str:
        return f"{self.directive.render()}"


@dataclass
class CorpusEntry:
    name: str
    stem: str
    field: str
    construction: str
    expectations: list = dc_field(default_factory=list)

    @property
    def workspace(self) -> Workspace:
        return workspace(self.stem)

    @property
    def extension(self):
        return self.workspace.ext(self.name)

    def expected(self, what: str, trunc: int | None = None) -> str | None:
        for e in self.expectations:
            if e.directive.what == what and (trunc is None or e.trunc in (None, trunc)):
                return e.value
        return None

    def verify(self) -> list[Result]:
        ws = self.workspace
        return [ws.run_directive(e.directive) for e in self.expectations]


def _entries_of(stem: str) -> list[CorpusEntry]:
    s: Script = parse(script_text(stem))
    out = []
    for ed in s.extensions:
        rings = {ed.sub, ed.sup}
        cons = [r.render() for r in s.rings if r.name in rings] + [ed.render()]
        exps = []
        for d in s.directives:
            if d.option("expect") is None:
                continue
            tg = set(d.targets)
            # ring-level expectations belong to the first extension of that ring
            owner = ed.name in tg or (tg <= {r.name for r in s.rings}
                                      and _first_ext(s, tg) is ed)
            if owner:
                exps.append(Expectation(d, d.option("expect"), d.option("source", "derived"),
                                        d.trunc))
        out.append(CorpusEntry(ed.name, stem, s.field, "\n".join(cons), exps))
    return out


def _first_ext(s: Script, rings: set):
    for ed in s.extensions:
        if rings & {ed.sub, ed.sup}:
            return ed
    return None


@lru_cache(maxsize=None)
def _corpus() -> tuple:
    return tuple(e for stem in SCRIPTS for e in _entries_of(stem))


def corpus() -> list[CorpusEntry]:
    return list(_corpus())


def entry(name: str) -> CorpusEntry:
    for e in _corpus():
        if e.name == name:
            return e
    raise KeyError(f"no corpus entry {name!r}")


def find(name: str):
    """Resolve a corpus name to an extension or a ring: entry names, then
    ``stem.ring`` (e.g. ``node.A``)."""
    for e in _corpus():
        if e.name == name:
            return e.extension
    if "." in name:
        stem, ring = name.split(".", 1)
        if stem in SCRIPTS:
            return workspace(stem).ring(ring)
    raise KeyError(f"no corpus object {name!r}")
