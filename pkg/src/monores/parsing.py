"""Reading and writing generator lists.

Text syntax, one ideal per input::

    vars: x y z                    (optional header line)
    z1^8, z1^6 z2, z1^2 z2^3

Monomials are separated by commas, factors inside a monomial by whitespace
(or ``*``), and a factor is a name with an optional ``^exponent``.  If every
name is one common stem followed by a positive index (``z1``, ``z2``, ...)
the index picks the coordinate; otherwise coordinates follow the order of
first appearance.  Lines starting with ``#`` are comments.

JSON input is ``{"dimension": n, "exponents": [[...], ...]}``.
"""

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, UnitIdealError, ZeroIdealError
from .ideals import monomial_str, prepare_points

_NAME = re.compile(r"[A-Za-z]+[0-9]*")
_INDEXED = re.compile(r"([A-Za-z]+)([0-9]+)$")


@dataclass(frozen=True)
class IdealSource:
    dimension: int
    exponents: tuple
    variable_names: tuple
    provenance: str = field(default="<inline>", compare=False)
    warnings: tuple = field(default=(), compare=False)


class _Scanner:
    def __init__(self, text, line_offset=0):
        self.text = text
        self.pos = 0
        self.line_offset = line_offset

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1 + self.line_offset
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg, pos=None):
        return ParseError(msg, *self.where(pos))

    def skip_ws(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos > start

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""


def _strip_comments(text):
    return "\n".join("" if ln.lstrip().startswith("#") else ln for ln in text.split("\n"))


def _split_header(text):
    lines = text.split("\n")
    for i, ln in enumerate(lines):
        if not ln.strip():
            continue
        if ln.strip().startswith("vars:"):
            names = ln.strip()[len("vars:"):].replace(",", " ").split()
            if not names or len(set(names)) != len(names):
                raise ParseError("header must list distinct variable names", i + 1, 1)
            for name in names:
                if not _NAME.fullmatch(name):
                    raise ParseError(f"bad variable name {name!r}", i + 1, 1)
            return tuple(names), "\n".join(lines[i + 1:]), i + 1
        break
    return None, text, 0


def _parse_monomials(sc):
    """Return a list of monomials, each a list of (name, exponent, pos)."""
    monos = []
    sc.skip_ws()
    if not sc.peek():
        raise ZeroIdealError("no generators given")
    while True:
        factors = []
        while True:
            sc.skip_ws()
            m = _NAME.match(sc.text, sc.pos)
            if not m:
                raise sc.error("expected a variable name" if sc.peek() else "unexpected end of input")
            start = sc.pos
            sc.pos = m.end()
            exp = 1
            sc.skip_ws()
            if sc.peek() == "^":
                sc.pos += 1
                sc.skip_ws()
                if sc.peek() == "-":
                    raise sc.error("negative exponent")
                d = re.compile(r"[0-9]+").match(sc.text, sc.pos)
                if not d:
                    raise sc.error("expected a non-negative integer exponent")
                exp = int(d.group())
                sc.pos = d.end()
            else:
                sc.pos = m.end()
            factors.append((m.group(), exp, start))
            end = sc.pos
            sc.skip_ws()
            had_ws = sc.pos > end
            nxt = sc.peek()
            if nxt == "*":
                sc.pos += 1
                continue
            if nxt in ("", ","):
                break
            if not had_ws:
                raise sc.error(f"unexpected character {nxt!r}")
        monos.append(factors)
        if sc.peek() == ",":
            sc.pos += 1
            continue
        break
    return monos


def _assign_coordinates(monos, header):
    if header is not None:
        return {name: i for i, name in enumerate(header)}, header
    seen = []
    for factors in monos:
        for name, _, _ in factors:
            if name not in seen:
                seen.append(name)
    matches = [_INDEXED.match(name) for name in seen]
    if all(matches) and len({m.group(1) for m in matches}) == 1 \
            and all(int(m.group(2)) >= 1 for m in matches):
        stem = matches[0].group(1)
        n = max(int(m.group(2)) for m in matches)
        return {name: int(m.group(2)) - 1 for name, m in zip(seen, matches)}, \
            tuple(f"{stem}{i}" for i in range(1, n + 1))
    return {name: i for i, name in enumerate(seen)}, tuple(seen)


def parse_ideal(text: str, provenance: str = "<inline>") -> IdealSource:
    header, body, offset = _split_header(_strip_comments(text))
    sc = _Scanner(body, offset)
    monos = _parse_monomials(sc)
    sc.skip_ws()
    if sc.peek():
        raise sc.error(f"unexpected character {sc.peek()!r}")
    coord, names = _assign_coordinates(monos, header)
    n = len(names)
    exps = []
    for factors in monos:
        e = [0] * n
        for name, x, pos in factors:
            if name not in coord:
                raise sc.error(f"variable {name!r} is not declared in the header", pos)
            e[coord[name]] += x
        if not any(e):
            raise UnitIdealError("a constant generator makes the ideal the whole ring")
        exps.append(tuple(e))
    points, warnings = prepare_points(exps, n)
    return IdealSource(n, points, names, provenance, tuple(warnings))


def parse_json(text: str, provenance: str = "<inline>") -> IdealSource:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "exponents" not in doc:
        raise ParseError("JSON input needs an 'exponents' list")
    exps = doc["exponents"]
    if not isinstance(exps, list) or not all(isinstance(e, list) for e in exps):
        raise ParseError("'exponents' must be a list of integer lists")
    n = doc.get("dimension", len(exps[0]) if exps else None)
    if not isinstance(n, int) or n < 1:
        raise ParseError("'dimension' must be a positive integer")
    if not exps:
        raise ZeroIdealError("no generators given")
    if any(len(e) != n for e in exps):
        raise ParseError(f"every exponent must have {n} entries")
    if any(not isinstance(x, int) or x < 0 for e in exps for x in e):
        raise ParseError("exponents must be non-negative integers")
    if any(not any(e) for e in exps):
        raise UnitIdealError("a zero exponent makes the ideal the whole ring")
    points, warnings = prepare_points(exps, n)
    names = tuple(doc.get("variables") or (f"z{i}" for i in range(1, n + 1)))
    if len(names) != n:
        raise ParseError("'variables' must name every coordinate")
    return IdealSource(n, points, names, provenance, tuple(warnings))


def load_source(path: str) -> IdealSource:
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if p.suffix == ".json" or text.lstrip().startswith("{"):
        return parse_json(text, str(p))
    return parse_ideal(text, str(p))


def render_source(source: IdealSource) -> str:
    """Text form of a source; parsing it back gives an equal source."""
    body = ", ".join(monomial_str(e, source.variable_names) for e in source.exponents)
    return "vars: " + " ".join(source.variable_names) + "\n" + body + "\n"
