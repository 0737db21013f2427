"""The ``.sub`` script language.

A script is a ``field`` header followed by one statement per line::

    field F2
    ring A = subalgebra(t^2, t^3)
    ring B = poly(t)
    extension E = A in B
    check closed E
    compute mi E --trunc 2
    compute sequence prop3.7 E1 E2 E3
    map phi A C B --all
    suite cor2.11 --trunc 1

Ring forms: ``subalgebra(p, ...)``, ``monomial(n, ...)``, ``poly(t)``, ``base``,
``conditions(f(a)=f(b), f'(a)=0, f'(a)=f'(b))``, ``quotient(p)`` (variable taken from
``p``), ``split(n)``, ``table("dim 2; unity 1 0; 1 1 : 0 0")``.  ``#`` starts a comment.
Every statement starts with a distinct keyword, so one token of lookahead decides the
production.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import DuplicateName, ParseError, UndefinedName

KEYWORDS = ("field", "ring", "extension", "check", "compute", "map", "suite")
RING_FORMS = ("subalgebra", "monomial", "poly", "base", "conditions", "quotient", "split",
              "table")
CHECKS = ("subintegral", "elementary", "closed", "seminormal", "anodal", "quasinormal")
COMPUTES = ("pic", "npic", "lpic", "mpic", "units", "i", "mi", "ni", "ki", "closure",
            "summary", "sequence", "transfer", "theta")
SEQUENCES = ("unitpic", "m-complex", "k-complex", "prop3.7", "corlnew")


# ---------------------------------------------------------------------------
# tokens

@dataclass(frozen=True)
class Token:
    kind: str        # NAME INT STR OPT OP EOL
    text: str
    line: int
    col: int


_TOP = re.compile(r"""
    (?P<ws>[ \t]+) | (?P<comment>\#.*) |
    (?P<str>"[^"\n]*") |
    (?P<opt>--[A-Za-z][\w-]*) |
    (?P<int>\d+) |
    (?P<name>[A-Za-z_][\w.]*(?:-[A-Za-z_][\w.]*)*) |
    (?P<op>[(),=+\-*^/';])
""", re.X)
# inside parentheses '-' and '.' are arithmetic, never part of a name
_INNER = re.compile(r"""
    (?P<ws>[ \t]+) | (?P<comment>\#.*) |
    (?P<str>"[^"\n]*") |
    (?P<int>\d+) |
    (?P<name>[A-Za-z_]\w*) |
    (?P<op>[(),=+\-*^/';])
""", re.X)


def tokenize(text: str) -> list[list[Token]]:
    """Tokens grouped by non-empty line."""
    lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        toks, pos, depth = [], 0, 0
        while pos < len(raw):
            m = (_INNER if depth else _TOP).match(raw, pos)
            if not m:
                raise ParseError(f"unexpected character {raw[pos]!r}", ln, pos + 1)
            kind = m.lastgroup
            if kind == "comment":
                break
            if kind != "ws":
                tok = m.group()
                toks.append(Token(kind.upper(), tok, ln, pos + 1))
                if tok == "(":
                    depth += 1
                elif tok == ")":
                    depth = max(0, depth - 1)
            pos = m.end()
        if toks:
            toks.append(Token("EOL", "", ln, len(raw) + 1))
            lines.append(toks)
    return lines


# ---------------------------------------------------------------------------
# syntax tree

_SIMPLE = re.compile(r"\d+|[A-Za-z_][\w.]*(?:-[A-Za-z_][\w.]*)*")

@dataclass
class RingDef:
    name: str
    form: str
    args: tuple = ()
    line: int = dc_field(default=0, compare=False)

    def render(self) -> str:
        if self.form == "base":
            return f"ring {self.name} = base"
        if self.form == "table":
            return f'ring {self.name} = table("{self.args[0]}")'
        return f"ring {self.name} = {self.form}({', '.join(self.args)})"


@dataclass
class ExtDef:
    name: str
    sub: str
    sup: str
    line: int = dc_field(default=0, compare=False)

    def render(self) -> str:
        return f"extension {self.name} = {self.sub} in {self.sup}"


@dataclass
class Directive:
    verb: str                  # check / compute / map / suite
    what: str                  # predicate, group, sequence, suite name or "phi"
    kind: str = ""             # sequence kind for ``compute sequence``
    targets: tuple = ()
    options: tuple = ()        # ((name, value-or-None), ...)
    line: int = dc_field(default=0, compare=False)

    def option(self, name: str, default=None):
        for k, v in self.options:
            if k == name:
                return True if v is None else v
        return default

    @property
    def trunc(self) -> int | None:
        v = self.option("trunc")
        return int(v) if v is not None else None

    def render(self) -> str:
        parts = [self.verb, self.what] + ([self.kind] if self.kind else []) + list(self.targets)
        for k, v in self.options:
            if v is None:
                parts.append(f"--{k}")
            else:
                parts.append(f"--{k} {v}" if _SIMPLE.fullmatch(v) else f'--{k} "{v}"')
        return " ".join(parts)


@dataclass
class Script:
    field: str
    rings: list = dc_field(default_factory=list)
    extensions: list = dc_field(default_factory=list)
    directives: list = dc_field(default_factory=list)
    order: list = dc_field(default_factory=list, compare=False)  # statements in source order

    def names(self) -> dict:
        out = {r.name: r for r in self.rings}
        out.update({e.name: e for e in self.extensions})
        return out

    @property
    def checks(self) -> list:
        return [d for d in self.directives if d.verb == "check"]

    def render(self) -> str:
        stmts = self.order or (self.rings + self.extensions + self.directives)
        return "\n".join([f"field {self.field}"] + [s.render() for s in stmts]) + "\n"

    def with_field(self, name: str) -> "Script":
        return Script(name, list(self.rings), list(self.extensions), list(self.directives),
                      list(self.order))


# ---------------------------------------------------------------------------
# parser

class _Cursor:
    def __init__(self, toks: list[Token]):
        self.toks, self.i = toks, 0

    @property
    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "EOL":
            self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.peek
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text else kind.lower()
            got = "end of line" if t.kind == "EOL" else repr(t.text)
            raise ParseError(f"expected {want}, got {got}", t.line, t.col)
        return self.next()

    def accept(self, text: str) -> bool:
        if self.peek.kind == "OP" and self.peek.text == text:
            self.next()
            return True
        return False

    def end(self):
        t = self.peek
        if t.kind != "EOL":
            raise ParseError(f"unexpected {t.text!r}", t.line, t.col)


def _raw_until_comma(cur: _Cursor, opener: Token) -> str:
    """Tokens of one argument, up to a top-level ``,`` or the closing ``)``."""
    out, depth = [], 0
    start = cur.peek
    while True:
        t = cur.peek
        if t.kind == "EOL":
            raise ParseError("unclosed '('", opener.line, opener.col)
        if t.kind == "OP" and t.text in ",)" and depth == 0:
            break
        if t.text == "(":
            depth += 1
        elif t.text == ")":
            depth -= 1
        out.append(cur.next().text)
    if not out:
        raise ParseError("empty argument", start.line, start.col)
    return "".join(out)


def _args(cur: _Cursor) -> tuple:
    opener = cur.expect("OP", "(")
    args = [_raw_until_comma(cur, opener)]
    while cur.accept(","):
        args.append(_raw_until_comma(cur, opener))
    cur.expect("OP", ")")
    return tuple(args)


def _ring(cur: _Cursor, line: int) -> RingDef:
    name = cur.expect("NAME").text
    cur.expect("OP", "=")
    form_tok = cur.expect("NAME")
    form = form_tok.text
    if form not in RING_FORMS:
        raise ParseError(f"unknown ring form {form!r}", form_tok.line, form_tok.col)
    if form == "base":
        args = ()
    elif form == "table":
        cur.expect("OP", "(")
        args = (cur.expect("STR").text[1:-1],)
        cur.expect("OP", ")")
    else:
        args = _args(cur)
    cur.end()
    return RingDef(name, form, args, line)


def _options(cur: _Cursor) -> tuple:
    opts = []
    while cur.peek.kind == "OPT":
        key = cur.next().text[2:]
        val = None
        if cur.peek.kind in ("INT", "NAME"):
            val = cur.next().text
        elif cur.peek.kind == "STR":
            val = cur.next().text[1:-1]
        if key == "trunc" and (val is None or not val.isdigit() or int(val) < 1):
            t = cur.toks[cur.i - 1]
            raise ParseError("--trunc needs an integer d >= 1", t.line, t.col)
        opts.append((key, val))
    cur.end()
    return tuple(opts)


def _names(cur: _Cursor) -> tuple:
    out = []
    while cur.peek.kind == "NAME":
        out.append(cur.next().text)
    return tuple(out)


def _directive(cur: _Cursor, verb: str, line: int) -> Directive:
    what_tok = cur.expect("NAME")
    what = what_tok.text
    kind = ""
    if verb == "check" and what not in CHECKS:
        raise ParseError(f"unknown check {what!r}", what_tok.line, what_tok.col)
    if verb == "compute":
        if what not in COMPUTES:
            raise ParseError(f"unknown computation {what!r}", what_tok.line, what_tok.col)
        if what == "sequence":
            k = cur.expect("NAME")
            if k.text.lower() not in SEQUENCES:
                raise ParseError(f"unknown sequence {k.text!r}", k.line, k.col)
            kind = k.text
    if verb == "map" and what != "phi":
        raise ParseError("only 'map phi' is defined", what_tok.line, what_tok.col)
    targets = () if verb == "suite" else _names(cur)
    return Directive(verb, what, kind, targets, _options(cur), line)


def parse(text: str) -> Script:
    lines = tokenize(text)
    if not lines:
        raise ParseError("empty script: expected 'field' header", 1, 1)
    head = _Cursor(lines[0])
    t = head.peek
    if not (t.kind == "NAME" and t.text == "field"):
        raise ParseError("script must start with 'field <name>'", t.line, t.col)
    head.next()
    fname = head.expect("NAME").text
    head.end()
    script = Script(fname)
    seen: dict[str, int] = {}

    def define(name, line, col):
        if name in seen:
            raise DuplicateName(f"{name!r} already defined on line {seen[name]}", line, col)
        seen[name] = line

    def need(name, tok_line):
        if name not in seen:
            raise UndefinedName(f"{name!r} is not defined", tok_line, 1)

    for toks in lines[1:]:
        cur = _Cursor(toks)
        kw = cur.peek
        if kw.kind != "NAME" or kw.text not in KEYWORDS:
            raise ParseError(f"expected a statement keyword, got {kw.text!r}", kw.line, kw.col)
        cur.next()
        ln = kw.line
        if kw.text == "field":
            raise ParseError("duplicate field header", ln, kw.col)
        if kw.text == "ring":
            col = cur.peek.col
            stmt = _ring(cur, ln)
            define(stmt.name, ln, col)
            script.rings.append(stmt)
        elif kw.text == "extension":
            col = cur.peek.col
            name = cur.expect("NAME").text
            cur.expect("OP", "=")
            sub_t = cur.expect("NAME")
            cur.expect("NAME", "in")
            sup_t = cur.expect("NAME")
            cur.end()
            for tk in (sub_t, sup_t):
                if tk.text not in seen or tk.text in {e.name for e in script.extensions}:
                    raise UndefinedName(f"ring {tk.text!r} is not defined", tk.line, tk.col)
            define(name, ln, col)
            stmt = ExtDef(name, sub_t.text, sup_t.text, ln)
            script.extensions.append(stmt)
        else:
            start = cur.i
            stmt = _directive(cur, kw.text, ln)
            for tk in cur.toks[start:]:
                if tk.kind == "NAME" and tk.text in stmt.targets and tk.text not in seen:
                    raise UndefinedName(f"{tk.text!r} is not defined", tk.line, tk.col)
            script.directives.append(stmt)
        script.order.append(stmt)
    return script


def render(script: Script) -> str:
    return script.render()


# ---------------------------------------------------------------------------
# arithmetic expressions in ring arguments

class _Expr:
    """Recursive descent over ``+ - * ^ /`` and parentheses with implicit products."""

    _TOK = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")

    def __init__(self, text: str, field, var: str | None = None):
        from .poly import Poly

        self.Poly, self.field, self.var = Poly, field, var
        self.toks = [m.group(1) or m.group(2) or m.group(3)
                     for m in self._TOK.finditer(text) if m.group(0).strip()]
        self.i = 0
        self.text = text

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def _take(self):
        t = self._peek()
        if t is None:
            raise ValueError(f"unexpected end of {self.text!r}")
        self.i += 1
        return t

    def parse(self):
        v = self._sum()
        if self._peek() is not None:
            raise ValueError(f"trailing {self._peek()!r} in {self.text!r}")
        return v

    def _sum(self):
        v = self._product()
        while self._peek() in ("+", "-"):
            op = self._take()
            w = self._product()
            v = v + w if op == "+" else v - w
        return v

    def _product(self):
        v = self._power()
        while True:
            t = self._peek()
            if t == "*":
                self._take()
                v = v * self._power()
            elif t == "/":
                self._take()
                den = self._power()
                if den.degree > 0 or den.is_zero():
                    raise ValueError(f"division by a non-constant in {self.text!r}")
                v = v.scale(self.field.inv(den.coeff(0)))
            elif t is not None and (t == "(" or t[0].isalnum()):
                v = v * self._power()
            else:
                return v

    def _power(self):
        if self._peek() == "-":
            self._take()
            return -self._power()
        v = self._atom()
        if self._peek() == "^":
            self._take()
            e = self._take()
            if not e.isdigit():
                raise ValueError(f"exponent must be a non-negative integer in {self.text!r}")
            v = v ** int(e)
        return v

    def _atom(self):
        t = self._take()
        P = self.Poly
        if t == "(":
            v = self._sum()
            if self._take() != ")":
                raise ValueError(f"missing ')' in {self.text!r}")
            return v
        if t.isdigit():
            return P.const(self.field, self.field.coerce(Fraction(int(t))))
        if t[0].isalpha():
            if self.var is None:
                self.var = t
            if t != self.var:
                raise ValueError(f"unknown variable {t!r} in {self.text!r}")
            return P.t(self.field)
        raise ValueError(f"unexpected {t!r} in {self.text!r}")


def eval_poly(text: str, field, var: str | None = "t"):
    """Evaluate an argument expression; returns ``(poly, variable)``."""
    e = _Expr(text, field, var)
    return e.parse(), e.var


_COND = re.compile(r"f('?)\((-?[\d/]+)\)=(?:(0)|f('?)\((-?[\d/]+)\))$")


def parse_condition(text: str, field):
    from .curves import Condition

    m = _COND.match(text.replace(" ", ""))
    if not m:
        raise ValueError(f"bad condition {text!r}: use f(a)=f(b), f'(a)=0 or f'(a)=f'(b)")
    d1, a, zero, d2, b = m.groups()
    pa = field.coerce(Fraction(a))
    terms = [(1, 1 if d1 else 0, pa)]
    if not zero:
        terms.append((-1, 1 if d2 else 0, field.coerce(Fraction(b))))
    return Condition(tuple(terms), text.replace(" ", ""))
