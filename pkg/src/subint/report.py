"""Text and structured renderings of a run.  The structured form is sorted JSON so that
golden files diff cleanly."""
from __future__ import annotations

import json

from . import __version__


def status_of(results) -> str:
    if any(r.ok is False for r in results):
        return "fail"
    if any(r.refused for r in results):
        return "refused"
    return "pass"


def exit_code(results) -> int:
    return {"pass": 0, "fail": 1, "refused": 3}[status_of(results)]


def render_text(results, title: str = "") -> str:
    out = [title] if title else []
    for r in results:
        mark = {True: "pass", False: "FAIL", None: "info"}[r.ok]
        if r.refused:
            mark = "refused"
        body = r.text or f"{r.directive}: {r.value}"
        first, *rest = body.splitlines() or [""]
        out.append(f"[{mark}] {first}")
        out += [f"       {line}" for line in rest]
    out.append(f"status: {status_of(results)}")
    return "\n".join(out)


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def render_structured(results, meta: dict | None = None) -> str:
    doc = {"subint": __version__, "meta": _plain(meta or {}),
           "results": [_plain(r.to_dict()) for r in results], "status": status_of(results)}
    return json.dumps(doc, indent=2, sort_keys=True)
