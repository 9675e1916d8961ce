"""Partitions, permutations and the small numerical attributes built on them.

Permutations are tuples of images on the points ``0, ..., m-1``.  Composition
is fixed once for the whole package: ``compose(p, q)`` is ``p o q``, the map
``x -> p[q[x]]``, so the right factor acts first.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured budget or degree cap."""


class Partition(tuple):
    """A partition stored in canonical weakly decreasing order.

    ``Partition([1, 3, 1])`` and ``Partition((3, 1, 1))`` are the same value.
    The empty partition is allowed and has weight 0.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"3,1,1"``; the empty (or blank) string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}: {exc}") from None

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def pad(self, weight: int) -> "Partition":
        """Append parts equal to 1 until the weight reaches ``weight``."""
        if weight < self.weight:
            raise ValueError(f"cannot pad {self} down to weight {weight}")
        return Partition(tuple(self) + (1,) * (weight - self.weight))

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def ones(d: int) -> Partition:
    """The partition ``(1^d)``, cycle type of the identity."""
    return Partition((1,) * d)


def simple_profile(d: int) -> Partition:
    """``(2, 1^(d-2))``, the cycle type of a transposition."""
    if d < 2:
        raise ValueError("a transposition needs d >= 2")
    return Partition((2,) + (1,) * (d - 2))


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int) -> tuple:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return [Partition(p) for p in _partitions(d, d)]


def partition_count(d: int) -> int:
    return len(_partitions(d, d))


def z_of(delta: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type ``delta``."""
    z = 1
    for part, m in Counter(delta).items():
        z *= math.factorial(m) * part**m
    return z


def class_size(delta: Sequence[int]) -> int:
    """Number of permutations of cycle type ``delta`` in S_d."""
    return math.factorial(sum(delta)) // z_of(delta)


def sign_of(delta: Sequence[int]) -> int:
    return -1 if (sum(delta) - len(delta)) % 2 else 1


def rising_factorial(x, k: int):
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def content_pochhammer(x, lam: Sequence[int]) -> Fraction:
    """Content product ``(x)_lam = prod_i (x - i + 1)_{lam_i}``.

    Equivalently the product of ``x + c`` over all boxes, where ``c`` is the
    box content (column minus row).
    """
    x = Fraction(x)
    out = Fraction(1)
    for i, part in enumerate(lam):
        out *= rising_factorial(x - i, part)
    return out


# -- permutations ----------------------------------------------------------


def identity(m: int) -> tuple:
    return tuple(range(m))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """``p o q``: apply ``q`` first, then ``p``."""
    return tuple(p[x] for x in q)


def compose_all(perms: Iterable[Sequence[int]], m: int) -> tuple:
    """Left-to-right word ``p1 o p2 o ... o pk`` (so ``pk`` acts first)."""
    out = identity(m)
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Sequence[int]) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycles(p: Sequence[int]) -> list[tuple]:
    """Disjoint cycles of ``p``, each starting at its smallest point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Sequence[int]) -> Partition:
    return Partition(len(c) for c in cycles(p))


def from_cycles(cycle_list: Iterable[Sequence[int]], m: int) -> tuple:
    img = list(range(m))
    for cyc in cycle_list:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            img[a] = b
    return tuple(img)


def representative(delta: Sequence[int]) -> tuple:
    """A fixed permutation of cycle type ``delta`` built from consecutive blocks."""
    blocks, start = [], 0
    for part in Partition(delta):
        blocks.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(blocks, start)


def symmetric_group(d: int) -> Iterator[tuple]:
    """All of S_d in lexicographic order of image tuples."""
    return itertools.permutations(range(d))


# -- text formats ----------------------------------------------------------


def format_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_profiles(text: str) -> list[Partition]:
    """``"2,1;2,1;3"`` -> three partitions.  Blank input means no profiles."""
    text = text.strip()
    if not text:
        return []
    return [Partition.parse(chunk) for chunk in text.split(";")]


def revlex_key(p: Sequence[int]):
    """Sort key: by weight, then reverse-lexicographic within a weight."""
    return (sum(p), tuple(-x for x in p))
