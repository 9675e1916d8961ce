"""The centre of the group algebra of S_d, in the class-sum and idempotent bases."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .characters import dimension, normalized_character
from .core import Partition, partitions_of, revlex_key, z_of

BRUTE_FORCE_MAX_DEGREE = 6


@dataclass(frozen=True)
class ClassAlgebraElement:
    """sum_D coeffs[D] * C_D, where C_D is the sum of all permutations of type D."""

    degree: int
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, value in self.coeffs.items():
            key = Partition(key)
            if key.weight != self.degree:
                raise ValueError(f"class {key} does not have weight {self.degree}")
            value = Fraction(value)
            if value:
                clean[key] = clean.get(key, 0) + value
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def class_sum(cls, delta: Sequence[int]) -> "ClassAlgebraElement":
        delta = Partition(delta)
        return cls(delta.weight, {delta: 1})

    @classmethod
    def unit(cls, d: int) -> "ClassAlgebraElement":
        return cls.class_sum((1,) * d)

    def __getitem__(self, delta) -> Fraction:
        return self.coeffs.get(Partition(delta), Fraction(0))

    def _same_degree(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")

    def __add__(self, other: "ClassAlgebraElement") -> "ClassAlgebraElement":
        self._same_degree(other)
        out = Counter(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return ClassAlgebraElement(self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "ClassAlgebraElement":
        return ClassAlgebraElement(self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, ClassAlgebraElement):
            return class_multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, ClassAlgebraElement) and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def to_json(self) -> dict:
        return {str(k): str(v) for k, v in sorted(self.coeffs.items(), key=lambda kv: revlex_key(kv[0]))}


def class_multiply(a: ClassAlgebraElement, b: ClassAlgebraElement) -> ClassAlgebraElement:
    """Product through the idempotent basis: C_D1 C_D2 = sum_lam phi(D1) phi(D2) F_lam."""
    a._same_degree(b)
    d = a.degree
    eigen = {}
    for lam in partitions_of(d):
        ea = sum((c * normalized_character(lam, k) for k, c in a.coeffs.items()), Fraction(0))
        eb = sum((c * normalized_character(lam, k) for k, c in b.coeffs.items()), Fraction(0))
        eigen[lam] = ea * eb
    return from_idempotent_coordinates(d, eigen)


def idempotent(lam: Sequence[int]) -> ClassAlgebraElement:
    """F_lam = (dim lam/d!)^2 sum_D z_D phi_lam(D) C_D."""
    lam = Partition(lam)
    d = lam.weight
    w = Fraction(dimension(lam), math.factorial(d)) ** 2
    return ClassAlgebraElement(
        d, {delta: w * z_of(delta) * normalized_character(lam, delta) for delta in partitions_of(d)}
    )


def expand_in_idempotents(delta: Sequence[int]) -> dict:
    """Coefficients of C_delta on the idempotents: phi_lam(delta)."""
    delta = Partition(delta)
    return {lam: normalized_character(lam, delta) for lam in partitions_of(delta.weight)}


def idempotent_coordinates(a: ClassAlgebraElement) -> dict:
    return {
        lam: sum((c * normalized_character(lam, k) for k, c in a.coeffs.items()), Fraction(0))
        for lam in partitions_of(a.degree)
    }


def from_idempotent_coordinates(d: int, coords: Mapping) -> ClassAlgebraElement:
    out = ClassAlgebraElement(d)
    for lam, c in coords.items():
        if c:
            out = out + idempotent(lam).scale(c)
    return out


def brute_force_multiply(a: ClassAlgebraElement, b: ClassAlgebraElement) -> ClassAlgebraElement:
    """Multiply by expanding both factors into group elements (d <= 6)."""
    from .oracle import group_table

    a._same_degree(b)
    d = a.degree
    if d > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"brute-force multiplication is capped at d={BRUTE_FORCE_MAX_DEGREE}")
    table = group_table(d)
    classes = partitions_of(d)
    tally = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            prods = table.mul[table.members(ka)[:, None], table.members(kb)[None, :]].ravel()
            hist = np.bincount(table.class_id[prods], minlength=len(classes))
            for k, n in enumerate(hist):
                if n:
                    tally[classes[k]] = tally.get(classes[k], 0) + ca * cb * int(n)
    # each element of a class appears equally often; divide the tally by the class size
    sizes = {delta: len(table.members(delta)) for delta in classes}
    return ClassAlgebraElement(d, {k: Fraction(v) / sizes[k] for k, v in tally.items()})
