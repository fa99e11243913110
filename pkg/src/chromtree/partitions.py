"""Integer partitions and the scalar coefficient formulas built on them."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

MAX_WEIGHT = 64


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Construction sorts the parts, so ``Partition([1, 3, 1])`` is ``(3, 1, 1)``.
    Equality and hashing are those of the underlying tuple; use
    :func:`sort_key` for the canonical output order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def length(self) -> int:
        return len(self)

    def weight(self) -> int:
        return sum(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def singleton_free(self) -> bool:
        return all(p >= 2 for p in self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


def sort_key(p: Sequence[int]) -> tuple:
    """Canonical order: length ascending, then parts lexicographically descending."""
    return (len(p), tuple(-x for x in p))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition must look like [3,1,1], got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(x) for x in body.split(","))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


@lru_cache(maxsize=None)
def partitions_list(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in canonical order."""
    if n > MAX_WEIGHT:
        raise ValueError(f"partitions of weight > {MAX_WEIGHT} are unsupported")
    return tuple(sorted(partitions_of(n), key=sort_key))


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 outside 0 <= b <= a."""
    if a < 0:
        raise ValueError(f"binomial top argument must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    parts = sorted(p, reverse=True)
    return Partition(sum(1 for x in parts if x > i) for i in range(parts[0]))


def z_of(p: Sequence[int]) -> int:
    """Size of the centralizer of a permutation of cycle type ``p``."""
    return prod(i**m * factorial(m) for i, m in Counter(p).items())


def even_part_count(p: Sequence[int]) -> int:
    return sum(1 for x in p if x % 2 == 0)


def omega(capacities: Iterable[int], balls: int) -> int:
    """Ways to put ``balls`` identical balls into distinguishable boxes.

    Box ``i`` holds at most ``capacities[i]`` balls. Computed as the
    coefficient of ``t**balls`` in the product of truncated geometric series.
    """
    if balls < 0:
        return 0
    poly = [1] + [0] * balls
    for cap in capacities:
        if cap < 0:
            raise ValueError("box capacities must be nonnegative")
        if cap == 0:
            continue
        # multiply by 1 + t + ... + t^cap using a sliding window sum
        out = [0] * (balls + 1)
        window = 0
        for d in range(balls + 1):
            window += poly[d]
            if d - cap - 1 >= 0:
                window -= poly[d - cap - 1]
            out[d] = window
        poly = out
    return poly[balls]


def omega_by_class(counts: Sequence[int]) -> int:
    """Balls-in-boxes count indexed by capacity class.

    ``counts[i]`` boxes have capacity ``i + 1``; the number of balls equals
    ``len(counts)``.
    """
    caps = [cap for cap, m in enumerate(counts, start=1) for _ in range(m)]
    if any(m < 0 for m in counts):
        raise ValueError(f"negative box count in {list(counts)}")
    return omega(caps, len(counts))


def _check_weight(lam: Sequence[int], n: int) -> None:
    if sum(lam) != n:
        raise ValueError(f"partition {list(lam)} does not have weight {n}")


def psi(lam: Sequence[int], n: int, a: int, b: int) -> int:
    """Weight of ``c_lam`` in the coefficient of ``x^a y^b`` of the connector polynomial."""
    _check_weight(lam, n)
    if a <= 0 or b < 0:
        raise ValueError("psi requires a > 0 and b >= 0")
    ell = len(lam)
    head = binomial(ell - 1, ell - n + a + b)
    if head == 0:
        return 0
    tail = sum(binomial(part - 1, a) for part in lam)
    return (-1) ** (a + b) * head * tail


def phi(lam: Sequence[int], n: int, i: int, j: int) -> int:
    """Weight of ``c_lam`` in the coefficient of ``q^i r^j`` of the subtree polynomial."""
    _check_weight(lam, n)
    if not 1 <= j <= i:
        raise ValueError("phi requires 1 <= j <= i")
    ell = len(lam)
    head = binomial(ell - 1, ell - n + i)
    if head == 0:
        return 0
    inner = 0
    for d in range(1, j + 1):
        inner += (-1) ** d * binomial(i - d, j - d) * sum(binomial(part - 1, d) for part in lam)
    return (-1) ** (i + j) * head * inner
