"""Sparse bivariate integer polynomials (subtree and connector polynomials)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class BivariatePolynomial:
    """Map from exponent pairs ``(i, j)`` to nonzero integer coefficients.

    ``names`` only affects text output: ``("q", "r")`` for subtree
    polynomials, ``("x", "y")`` for connector polynomials.
    """

    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = (), names=("q", "r")):
        clean: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if c != int(c):
                raise ValueError(f"non-integral coefficient {c} at ({i}, {j})")
            c = int(c)
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
                if not clean[(i, j)]:
                    del clean[(i, j)]
        self.terms = clean
        self.names = tuple(names)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.terms.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out, self.names)

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + BivariatePolynomial({k: -c for k, c in other.terms.items()}, other.names)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.sorted_terms()!r}, names={self.names!r})"

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in degree-lex order: total degree, then first exponent."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0], kv[0][1]))

    def evaluate(self, u, v):
        return sum(c * u**i * v**j for (i, j), c in self.terms.items())

    def degree_in_first(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def to_text(self) -> str:
        if not self.terms:
            return "0\n"
        a, b = self.names
        return "".join(f"{c} {a}^{i} {b}^{j}\n" for (i, j), c in self.sorted_terms())

    def with_names(self, names) -> "BivariatePolynomial":
        return BivariatePolynomial(self.terms, names)


def substitute_connector(k: BivariatePolynomial) -> BivariatePolynomial:
    """Expand ``K(qr, q(1-r))`` as a polynomial in ``q, r``."""
    from .partitions import binomial

    out: dict[tuple[int, int], int] = {}
    for (a, b), c in k.terms.items():
        for h in range(b + 1):
            key = (a + b, a + h)
            out[key] = out.get(key, 0) + c * (-1) ** h * binomial(b, h)
    return BivariatePolynomial(out, ("q", "r"))


def inverse_substitution_holds(s: BivariatePolynomial, k: BivariatePolynomial, points) -> bool:
    """Check ``K(x, y) == S(x + y, x / (x + y))`` at the given rational points."""
    for x, y in points:
        x, y = Fraction(x), Fraction(y)
        if x + y == 0:
            continue
        if k.evaluate(x, y) != s.evaluate(x + y, x / (x + y)):
            return False
    return True
