"""Sparse symmetric functions in the power-sum (P) and complete homogeneous (H) bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .partitions import (
    Partition,
    even_part_count,
    partitions_list,
    phi,
    psi,
    sort_key,
    z_of,
)

BASES = ("P", "H")
_LETTER = {"P": "p", "H": "h"}


class BasisError(ValueError):
    pass


class SymFunc:
    """Homogeneous symmetric function stored as ``{Partition: Fraction}``.

    Zero coefficients are pruned on construction, so two equal functions
    always have equal ``coeffs`` dicts.
    """

    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, basis: str, degree: int, coeffs: Mapping | Iterable = ()):
        if basis not in BASES:
            raise BasisError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = degree
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.weight() != degree:
                raise ValueError(f"{lam} has weight {lam.weight()}, expected {degree}")
            c = clean.get(lam, 0) + Fraction(c)
            if c:
                clean[lam] = c
            else:
                clean.pop(lam, None)
        self.coeffs = clean

    @classmethod
    def p(cls, *parts: int, coef=1) -> "SymFunc":
        lam = Partition(parts)
        return cls("P", lam.weight(), {lam: coef})

    @classmethod
    def h(cls, *parts: int, coef=1) -> "SymFunc":
        lam = Partition(parts)
        return cls("H", lam.weight(), {lam: coef})

    @classmethod
    def zero(cls, basis: str, degree: int) -> "SymFunc":
        return cls(basis, degree)

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def items(self):
        """Terms in canonical partition order."""
        return sorted(self.coeffs.items(), key=lambda kv: sort_key(kv[0]))

    def _check_compatible(self, other: "SymFunc") -> None:
        if self.basis != other.basis:
            raise BasisError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.degree != other.degree and self.coeffs and other.coeffs:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        degree = self.degree if self.coeffs else other.degree
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, degree, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, factor) -> "SymFunc":
        factor = Fraction(factor)
        return SymFunc(self.basis, self.degree, {k: c * factor for k, c in self.coeffs.items()})

    def __rmul__(self, factor) -> "SymFunc":
        return self.scale(factor)

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        if self.basis != "P" or other.basis != "P":
            raise BasisError("products are only implemented in the P basis")
        out: dict[Partition, Fraction] = {}
        for lam, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                key = Partition(lam + mu)
                out[key] = out.get(key, 0) + a * b
        return SymFunc("P", self.degree + other.degree, out)

    def multiply_by_p(self, *parts: int) -> "SymFunc":
        return self * SymFunc.p(*parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis or self.coeffs != other.coeffs:
            return False
        return self.degree == other.degree or not self.coeffs

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"SymFunc({self.basis!r}, {self.degree}, {{{', '.join(f'{list(k)}: {v}' for k, v in self.items())}}})"

    def to_text(self) -> str:
        if not self.coeffs:
            return "0\n"
        letter = _LETTER[self.basis]
        return "".join(f"{c} {letter}{lam}\n" for lam, c in self.items())

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())


def _require_p(f: SymFunc) -> None:
    if f.basis != "P":
        raise BasisError(f"expected a P-basis function, got {f.basis}")


def hall_inner_product(f: SymFunc, g: SymFunc) -> Fraction:
    _require_p(f)
    _require_p(g)
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    small, big = (f, g) if len(f.coeffs) <= len(g.coeffs) else (g, f)
    total = Fraction(0)
    for lam, c in small.coeffs.items():
        other = big.coeffs.get(lam)
        if other:
            total += c * other * z_of(lam)
    return total


def two_part_portion(f: SymFunc) -> SymFunc:
    _require_p(f)
    return SymFunc("P", f.degree, {lam: c for lam, c in f.coeffs.items() if len(lam) == 2})


def specialize_principal(f: SymFunc, k: int) -> int:
    """Value at ``x_1 = ... = x_k = 1``, other variables 0."""
    _require_p(f)
    if not f.is_integral():
        raise ValueError("principal specialization needs integral coefficients")
    return sum(int(c) * k ** len(lam) for lam, c in f.coeffs.items())


@lru_cache(maxsize=None)
def _h_expansion(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """``h_lam`` in the P basis for every ``lam`` of weight ``n``."""
    single = {}
    for m in range(1, n + 1):
        single[m] = SymFunc("P", m, {mu: Fraction(1, z_of(mu)) for mu in partitions_list(m)})
    table = {}
    for lam in partitions_list(n):
        acc = SymFunc("P", 0, {Partition(): 1})
        for part in lam:
            acc = acc * single[part]
        table[lam] = acc.coeffs
    return table


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse."""
    size = len(matrix)
    aug = [row[:] + [Fraction(int(i == r)) for i in range(size)] for r, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular transition matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                row_c = aug[col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], row_c)]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def _p_in_h(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """``p_mu`` in the H basis for every ``mu`` of weight ``n``."""
    parts = partitions_list(n)
    expansion = _h_expansion(n)
    # rows: h_lam, columns: p_mu
    matrix = [[expansion[lam].get(mu, Fraction(0)) for mu in parts] for lam in parts]
    inverse = _invert(matrix)
    # p_mu = sum_lam inverse[mu][lam] h_lam
    return {
        mu: {lam: inverse[r][c] for c, lam in enumerate(parts) if inverse[r][c] != 0}
        for r, mu in enumerate(parts)
    }


def h_to_p(f: SymFunc) -> SymFunc:
    if f.basis != "H":
        raise BasisError(f"expected an H-basis function, got {f.basis}")
    expansion = _h_expansion(f.degree)
    out: dict[Partition, Fraction] = {}
    for lam, c in f.coeffs.items():
        for mu, d in expansion[lam].items():
            out[mu] = out.get(mu, 0) + c * d
    return SymFunc("P", f.degree, out)


def p_to_h(f: SymFunc) -> SymFunc:
    _require_p(f)
    table = _p_in_h(f.degree)
    out: dict[Partition, Fraction] = {}
    for mu, c in f.coeffs.items():
        for lam, d in table[mu].items():
            out[lam] = out.get(lam, 0) + c * d
    return SymFunc("H", f.degree, out)


@lru_cache(maxsize=None)
def psi_series(n: int) -> dict[tuple[int, int], SymFunc]:
    """Nonzero cells ``(a, b)`` of the connector generating function."""
    if n < 1:
        raise ValueError("n must be positive")
    cells = {}
    for a in range(1, n):
        for b in range(0, n - a):
            f = SymFunc("P", n, {lam: Fraction(psi(lam, n, a, b), z_of(lam)) for lam in partitions_list(n)})
            if f:
                cells[(a, b)] = f
    return cells


@lru_cache(maxsize=None)
def phi_series(n: int) -> dict[tuple[int, int], SymFunc]:
    """Nonzero cells ``(i, j)`` of the subtree generating function."""
    if n < 1:
        raise ValueError("n must be positive")
    cells = {}
    for i in range(1, n):
        for j in range(1, i + 1):
            f = SymFunc("P", n, {lam: Fraction(phi(lam, n, i, j), z_of(lam)) for lam in partitions_list(n)})
            if f:
                cells[(i, j)] = f
    return cells


@dataclass
class XiTable:
    """H-basis coefficients of the connector generating function."""

    n: int
    entries: dict[tuple[Partition, int, int], Fraction] = field(default_factory=dict)

    def positivity_violations(self) -> list[tuple[Partition, int, int]]:
        return [k for k, v in self.entries.items() if (-1) ** even_part_count(k[0]) * v < 0]

    def integrality_violations(self) -> list[tuple[Partition, int, int]]:
        return [k for k, v in self.entries.items() if (v * z_of(k[0])).denominator != 1]

    def scaled_range(self) -> tuple[int, int] | None:
        """Min and max of ``xi * z_mu`` over the table (integers when the table is integral)."""
        vals = [v * z_of(k[0]) for k, v in self.entries.items()]
        if not vals:
            return None
        lo, hi = min(vals), max(vals)
        return (int(lo) if lo.denominator == 1 else lo, int(hi) if hi.denominator == 1 else hi)


def xi_table(n: int) -> XiTable:
    table = XiTable(n)
    for (a, b), f in psi_series(n).items():
        for mu, c in p_to_h(f).coeffs.items():
            table.entries[(mu, a, b)] = c
    return table
