"""Truncated series in the power sums p_1, p_2, ... with exact coefficients.

A monomial p_D = p_{D_1} p_{D_2} ... is keyed by the partition D and has
degree |D|.  Every series records the degree through which it is known.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .characters import character, normalized_character
from .core import Partition, ResourceLimitError, partitions_of, revlex_key, z_of

DEFAULT_DEGREE_CAP = int(os.environ.get("HZ_DEGREE_CAP", "10"))


@dataclass(frozen=True)
class PSeries:
    coeffs: Mapping = field(default_factory=dict)
    max_degree: Optional[int] = None

    def __post_init__(self):
        clean = {}
        for key, value in self.coeffs.items():
            key = Partition(key)
            value = Fraction(value)
            if value:
                clean[key] = clean.get(key, 0) + value
        clean = {k: v for k, v in clean.items() if v}
        top = max((k.weight for k in clean), default=0)
        max_degree = top if self.max_degree is None else self.max_degree
        if max_degree > DEFAULT_DEGREE_CAP:
            raise ResourceLimitError(f"series degree {max_degree} exceeds the cap {DEFAULT_DEGREE_CAP}")
        if top > max_degree:
            raise ValueError(f"term of degree {top} beyond the tracked degree {max_degree}")
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "max_degree", max_degree)

    @classmethod
    def one(cls, max_degree: int = 0) -> "PSeries":
        return cls({Partition(): 1}, max_degree)

    @classmethod
    def monomial(cls, delta: Sequence[int], coeff=1, max_degree: Optional[int] = None) -> "PSeries":
        return cls({Partition(delta): coeff}, max_degree)

    def __getitem__(self, delta) -> Fraction:
        return self.coeffs.get(Partition(delta), Fraction(0))

    @property
    def constant(self) -> Fraction:
        return self[()]

    def component(self, k: int) -> "PSeries":
        return PSeries({m: c for m, c in self.coeffs.items() if m.weight == k}, self.max_degree)

    def degrees(self) -> list[int]:
        return sorted({m.weight for m in self.coeffs})

    def is_homogeneous(self, k: int) -> bool:
        return all(m.weight == k for m in self.coeffs)

    def truncate(self, k: int) -> "PSeries":
        return PSeries({m: c for m, c in self.coeffs.items() if m.weight <= k}, min(k, self.max_degree))

    def with_degree(self, k: int) -> "PSeries":
        return PSeries(self.coeffs, k)

    def __add__(self, other: "PSeries") -> "PSeries":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        deg = min(self.max_degree, other.max_degree)
        return PSeries({m: c for m, c in out.items() if m.weight <= deg}, deg)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PSeries":
        return PSeries({m: c * v for m, v in self.coeffs.items()}, self.max_degree)

    def __mul__(self, other):
        if not isinstance(other, PSeries):
            return self.scale(other)
        # the product is only known through the smaller tracked degree
        deg = min(self.max_degree, other.max_degree)
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                if m1.weight + m2.weight > deg:
                    continue
                key = Partition(tuple(m1) + tuple(m2))
                out[key] = out.get(key, 0) + c1 * c2
        return PSeries(out, deg)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, PSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def to_json(self) -> dict:
        terms = sorted(self.coeffs.items(), key=lambda kv: revlex_key(kv[0]))
        return {"max_degree": self.max_degree, "coefficients": {str(k): str(v) for k, v in terms}}

    def __repr__(self):
        terms = sorted(self.coeffs.items(), key=lambda kv: revlex_key(kv[0]))
        body = " + ".join(f"{c}*p[{k}]" for k, c in terms) or "0"
        return f"PSeries({body}; deg<={self.max_degree})"


def p(m: int, max_degree: Optional[int] = None) -> PSeries:
    return PSeries.monomial((m,), 1, max_degree)


# -- Schur basis -------------------------------------------------------------


def schur_in_p(lam: Sequence[int], max_degree: Optional[int] = None) -> PSeries:
    """s_lam = (dim lam/d!) sum_D phi_lam(D) p_D = sum_D chi_lam(D)/z_D p_D."""
    lam = Partition(lam)
    d = lam.weight
    if d > DEFAULT_DEGREE_CAP:
        raise ResourceLimitError(f"degree {d} exceeds the cap {DEFAULT_DEGREE_CAP}")
    return PSeries({delta: Fraction(character(lam, delta), z_of(delta)) for delta in partitions_of(d)}, max_degree)


def p_monomial_in_schur(delta: Sequence[int]) -> dict:
    """p_D = sum_lam chi_lam(D) s_lam."""
    delta = Partition(delta)
    return {lam: Fraction(character(lam, delta)) for lam in partitions_of(delta.weight)}


def to_schur(series: PSeries) -> dict:
    out = {}
    for delta, c in series.coeffs.items():
        for lam, a in p_monomial_in_schur(delta).items():
            out[lam] = out.get(lam, 0) + c * a
    return {lam: c for lam, c in out.items() if c}


def from_schur(coeffs: Mapping, max_degree: Optional[int] = None) -> PSeries:
    keys = [Partition(k) for k in coeffs]
    deg = max((k.weight for k in keys), default=0) if max_degree is None else max_degree
    out = PSeries({}, deg)
    for lam, c in coeffs.items():
        out = out + schur_in_p(lam, deg).scale(c)
    return out


# -- operators ---------------------------------------------------------------


def _cut_and_join_monomial(delta: Partition) -> dict:
    """L applied to p_delta, as a dict of monomials.

    L = 1/2 sum_{a,b} ((a+b) p_a p_b d/dp_{a+b} + a b p_{a+b} d^2/dp_a dp_b)
    """
    mult = delta.multiplicities()
    out = {}

    def add(parts, coeff):
        key = Partition(parts)
        out[key] = out.get(key, 0) + coeff

    parts = list(delta)
    # cut: a part c splits into an ordered pair (a, c - a)
    for c, m in mult.items():
        rest = list(parts)
        rest.remove(c)
        for a in range(1, c):
            add(rest + [a, c - a], Fraction(c * m, 2))
    # join: an ordered pair of parts (a, b) merges into a + b
    for a, ma in mult.items():
        for b, mb in mult.items():
            pairs = ma * (mb - 1) if a == b else ma * mb
            if not pairs:
                continue
            rest = list(parts)
            rest.remove(a)
            rest.remove(b)
            add(rest + [a + b], Fraction(a * b * pairs, 2))
    return out


def cut_and_join(series: PSeries) -> PSeries:
    out = {}
    for delta, c in series.coeffs.items():
        for key, a in _cut_and_join_monomial(delta).items():
            out[key] = out.get(key, 0) + c * a
    return PSeries(out, series.max_degree)


def w_operator(delta: Sequence[int], series: PSeries, strict: bool = False) -> PSeries:
    """Act diagonally on the Schur basis with eigenvalue phi_lam(delta).

    On a component of degree k > |delta|, ``delta`` is padded with parts 1
    up to weight k; components of degree below |delta| are annihilated.
    With ``strict`` the series must be homogeneous of degree |delta|.
    """
    delta = Partition(delta)
    if strict and not series.is_homogeneous(delta.weight):
        raise ValueError(f"series is not homogeneous of degree {delta.weight}")
    out = PSeries({}, series.max_degree)
    for k in series.degrees():
        if k < delta.weight:
            continue
        padded = delta.pad(k)
        coeffs = to_schur(series.component(k))
        out = out + from_schur({lam: c * normalized_character(lam, padded) for lam, c in coeffs.items()}, series.max_degree)
    return out


def series_exp(series: PSeries) -> PSeries:
    if series.constant:
        raise ValueError("exp needs a series without constant term")
    deg = series.max_degree
    out = PSeries.one(deg)
    power = PSeries.one(deg)
    for k in range(1, deg + 1):
        power = power * series
        if not power.coeffs:
            break
        out = out + power.scale(Fraction(1, math.factorial(k)))
    return out


def series_log(series: PSeries) -> PSeries:
    if series.constant != 1:
        raise ValueError("log needs a series with constant term 1")
    deg = series.max_degree
    q = series - PSeries.one(deg)
    out = PSeries({}, deg)
    power = PSeries.one(deg)
    for k in range(1, deg + 1):
        power = power * q
        if not power.coeffs:
            break
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    return out
