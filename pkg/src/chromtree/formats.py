"""Parsers for the edge-list, symmetric-function and polynomial text formats."""

from __future__ import annotations

import re
from fractions import Fraction

from .bipoly import BivariatePolynomial
from .graphs import CaterpillarSpec, CrabSpec, Graph, SpiderSpec, SquidSpec
from .partitions import Partition
from .symfunc import SymFunc


class ParseError(ValueError):
    """Malformed input; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<input>"):
        self.line, self.column, self.source = line, column, source
        super().__init__(f"{source}:{line}:{column}: {message}")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, raw, body


def _col(raw: str, token: str) -> int:
    return raw.find(token) + 1 if token in raw else 1


def parse_edge_list(text: str, source: str = "<input>") -> Graph:
    """``n <count>`` header (optional), then one ``u v`` pair per line."""
    n = None
    edges = []
    width = 0
    for lineno, raw, body in _content_lines(text):
        tokens = body.split()
        if tokens[0] == "n":
            if n is not None or edges:
                raise ParseError("header 'n <count>' must come first and only once", lineno, _col(raw, "n"), source)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("expected 'n <count>'", lineno, _col(raw, "n"), source)
            n = int(tokens[1])
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex indices, got {len(tokens)} tokens", lineno, _col(raw, tokens[0]), source)
        pair = []
        for tok in tokens:
            if not tok.isdigit():
                raise ParseError(f"vertex index {tok!r} is not a nonnegative integer", lineno, _col(raw, tok), source)
            pair.append(int(tok))
        if pair[0] == pair[1]:
            raise ParseError(f"loop at vertex {pair[0]}", lineno, _col(raw, tokens[0]), source)
        if n is not None and max(pair) >= n:
            bad = tokens[0] if pair[0] >= n else tokens[1]
            raise ParseError(f"vertex {max(pair)} out of range for n={n}", lineno, _col(raw, bad), source)
        width = max(width, max(pair) + 1)
        edges.append(tuple(pair))
    if n is None:
        n = width
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc), 0, 0, source) from None


def format_edge_list(g: Graph) -> str:
    return f"n {g.n}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


_SYM_TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s+([ph])\[([\d,\s]*)\]\s*$")
_LETTERS = {"p": "P", "h": "H"}


def parse_symfunc(text: str, source: str = "<input>", degree: int | None = None) -> SymFunc:
    """Read ``<coef> p[3,1,1]`` lines; a single ``0`` line is the zero function."""
    basis = None
    coeffs: dict[Partition, Fraction] = {}
    seen_zero = False
    for lineno, raw, body in _content_lines(text):
        if body.strip() == "0":
            seen_zero = True
            continue
        match = _SYM_TERM.match(body)
        if not match:
            raise ParseError("expected '<coef> p[parts]' or '<coef> h[parts]'", lineno, len(raw) - len(raw.lstrip()) + 1, source)
        coef_text, letter, parts_text = match.groups()
        if basis is None:
            basis = _LETTERS[letter]
        elif basis != _LETTERS[letter]:
            raise ParseError("mixed bases in one function", lineno, match.start(2) + 1, source)
        try:
            lam = Partition(int(x) for x in parts_text.split(",") if x.strip())
        except ValueError as exc:
            raise ParseError(str(exc), lineno, match.start(3) + 1, source) from None
        if degree is None:
            degree = lam.weight()
        elif lam.weight() != degree:
            raise ParseError(f"partition {lam} has weight {lam.weight()}, expected {degree}", lineno, match.start(3) + 1, source)
        try:
            coef = Fraction(coef_text)
        except ZeroDivisionError:
            raise ParseError("zero denominator", lineno, match.start(1) + 1, source) from None
        coeffs[lam] = coeffs.get(lam, 0) + coef
    if basis is None:
        if not seen_zero:
            raise ParseError("empty input", 1, 1, source)
        return SymFunc.zero("P", degree or 0)
    return SymFunc(basis, degree, coeffs)


_POLY_TERM = re.compile(r"^\s*(-?\d+)\s+([a-z])\^(\d+)\s+([a-z])\^(\d+)\s*$")


def parse_bivariate(text: str, source: str = "<input>") -> BivariatePolynomial:
    """Read ``<coef> q^i r^j`` (or ``x^a y^b``) lines; ``0`` is the zero polynomial."""
    names = None
    terms: dict[tuple[int, int], int] = {}
    seen_any = False
    for lineno, raw, body in _content_lines(text):
        seen_any = True
        if body.strip() == "0":
            continue
        match = _POLY_TERM.match(body)
        if not match:
            raise ParseError("expected '<coef> q^i r^j'", lineno, len(raw) - len(raw.lstrip()) + 1, source)
        coef, a, i, b, j = match.groups()
        if names is None:
            names = (a, b)
        elif names != (a, b):
            raise ParseError(f"variables {a},{b} differ from {names[0]},{names[1]}", lineno, match.start(2) + 1, source)
        key = (int(i), int(j))
        terms[key] = terms.get(key, 0) + int(coef)
    if not seen_any:
        raise ParseError("empty input", 1, 1, source)
    return BivariatePolynomial(terms, names or ("q", "r"))


# ------------------------------------------------------------------ inline family specs


def _int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"{what} must be comma-separated integers, got {text!r}", 1, 1, "<argument>") from None
    if any(v < 0 for v in values):
        raise ParseError(f"{what} must be nonnegative", 1, 1, "<argument>")
    return values


def _split_girth(text: str, what: str) -> tuple[int, str]:
    head, sep, tail = text.partition(":")
    if not sep or not head.isdigit():
        raise ParseError(f"{what} spec must look like 'g:a,b,...', got {text!r}", 1, 1, "<argument>")
    return int(head), tail


def spider_from_arg(text: str) -> SpiderSpec:
    try:
        return SpiderSpec(Partition(x for x in _int_list(text, "spider legs") if x))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1, "<argument>") from None


def caterpillar_from_arg(text: str) -> CaterpillarSpec:
    try:
        return CaterpillarSpec(_int_list(text, "leaf numbers"))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1, "<argument>") from None


def squid_from_arg(text: str) -> SquidSpec:
    g, tail = _split_girth(text, "squid")
    try:
        return SquidSpec(g, Partition(x for x in _int_list(tail, "tentacles") if x))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1, "<argument>") from None


def crab_from_arg(text: str) -> CrabSpec:
    g, tail = _split_girth(text, "crab")
    counts = _int_list(tail, "leaf counts")
    if len(counts) != g:
        raise ParseError(f"crab with girth {g} needs {g} leaf counts, got {len(counts)}", 1, 1, "<argument>")
    try:
        return CrabSpec(counts)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1, "<argument>") from None
