"""Hurwitz numbers of compact surfaces without boundary from characters of S_d.

The closed formula summed here is

    H_e(D^1, ..., D^F) = sum_lam (dim lam / d!)^e  prod_i phi_lam(D^i),

which counts possibly disconnected coverings weighted by 1/|Aut|.  It only
depends on the Euler characteristic ``e`` of the base surface.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .characters import DEFAULT_CHAR_CAP, _phi, character, dimension
from .core import Partition, ResourceLimitError, class_size, partitions_of, z_of


@dataclass(frozen=True)
class SurfaceSignature:
    orientable: bool
    genus: int = 0  # handles if orientable, crosscaps otherwise

    def __post_init__(self):
        if self.genus < 0 or (not self.orientable and self.genus < 1):
            raise ValueError(f"invalid surface signature {self!r}")

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    @classmethod
    def sphere(cls):
        return cls(True, 0)

    @classmethod
    def torus(cls):
        return cls(True, 1)

    @classmethod
    def rp2(cls):
        return cls(False, 1)

    @classmethod
    def klein(cls):
        return cls(False, 2)

    @classmethod
    def from_euler(cls, e: int, orientable: Optional[bool] = None) -> "SurfaceSignature":
        """Some surface with Euler characteristic ``e``; orientable when possible."""
        if e > 2:
            raise ValueError(f"no closed surface has Euler characteristic {e}")
        if orientable is None:
            orientable = e % 2 == 0
        if orientable:
            if e % 2:
                raise ValueError(f"orientable surfaces have even Euler characteristic, got {e}")
            return cls(True, (2 - e) // 2)
        return cls(False, 2 - e)

    @classmethod
    def parse(cls, text: str) -> "SurfaceSignature":
        text = text.strip().lower()
        named = {"sphere": cls.sphere, "torus": cls.torus, "rp2": cls.rp2, "klein": cls.klein}
        if text in named:
            return named[text]()
        m = re.fullmatch(r"(genus|crosscaps):(\d+)", text)
        if not m:
            raise ValueError(f"unknown surface {text!r}")
        return cls(m.group(1) == "genus", int(m.group(2)))

    def __str__(self) -> str:
        return f"genus:{self.genus}" if self.orientable else f"crosscaps:{self.genus}"


@dataclass(frozen=True)
class HurwitzQuery:
    surface: SurfaceSignature
    profiles: tuple = ()
    degree: Optional[int] = None  # needed only when there are no profiles

    def __post_init__(self):
        profiles = tuple(Partition(p) for p in self.profiles)
        object.__setattr__(self, "profiles", profiles)
        weights = {p.weight for p in profiles}
        if len(weights) > 1:
            raise ValueError(f"profiles have mixed weights {sorted(weights)}")
        if weights:
            (w,) = weights
            if self.degree is not None and self.degree != w:
                raise ValueError(f"degree {self.degree} does not match profile weight {w}")
            object.__setattr__(self, "degree", w)
        elif self.degree is None:
            raise ValueError("a query without profiles needs an explicit degree")
        elif self.degree < 0:
            raise ValueError("degree must be nonnegative")

    @property
    def euler_char(self) -> int:
        return self.surface.euler_char


def _profile_degree(profiles: Sequence[Sequence[int]], degree: Optional[int]) -> int:
    weights = {sum(p) for p in profiles}
    if len(weights) > 1:
        raise ValueError(f"profiles have mixed weights {sorted(weights)}")
    if weights:
        (w,) = weights
        if degree is not None and degree != w:
            raise ValueError(f"degree {degree} does not match profile weight {w}")
        return w
    if degree is None:
        raise ValueError("a query without profiles needs an explicit degree")
    return degree


def _lambdas(d: int, max_length: Optional[int]):
    for lam in partitions_of(d):
        if max_length is None or len(lam) <= max_length:
            yield lam


def _phi_product(lam: Partition, profiles: Sequence[Partition]) -> Fraction:
    out = Fraction(1)
    for delta in profiles:
        phi = _phi(lam, delta)
        if not phi:
            return phi
        out *= phi
    return out


def _nontrivial(profiles: Sequence[Sequence[int]]) -> list:
    # phi_lam((1^d)) = 1, so identity profiles drop out of every sum
    return [Partition(p) for p in profiles if any(x > 1 for x in p)]


def hurwitz_e(
    e: int,
    profiles: Sequence[Sequence[int]] = (),
    degree: Optional[int] = None,
    max_length: Optional[int] = None,
) -> Fraction:
    """Hurwitz number over a surface of Euler characteristic ``e``."""
    d = _profile_degree(profiles, degree)
    return _hurwitz_cached(e, tuple(Partition(p) for p in profiles), d, max_length)


@lru_cache(maxsize=1 << 16)
def _hurwitz_cached(e: int, profiles: tuple, d: int, max_length: Optional[int]) -> Fraction:
    if d == 0:
        return Fraction(1)
    active = _nontrivial(profiles)
    if active and d > DEFAULT_CHAR_CAP:
        raise ResourceLimitError(f"degree {d} exceeds the character cap {DEFAULT_CHAR_CAP}")
    fact = math.factorial(d)
    total = Fraction(0)
    for lam in _lambdas(d, max_length):
        term = _phi_product(lam, active)
        if term and e:
            term *= Fraction(dimension(lam), fact) ** e
        total += term
    return total


def hurwitz(q: HurwitzQuery, max_length: Optional[int] = None) -> Fraction:
    return hurwitz_e(q.euler_char, q.profiles, q.degree, max_length)


def hurwitz_mednykh(e: int, profiles: Sequence[Sequence[int]] = (), degree: Optional[int] = None) -> Fraction:
    """The same number written with raw character values.

    (d!)^(-e) |C_1| ... |C_F| sum_lam chi(D^1) ... chi(D^F) / (dim lam)^(F - e)
    """
    d = _profile_degree(profiles, degree)
    if d == 0:
        return Fraction(1)
    profiles = [Partition(p) for p in profiles]
    f = len(profiles)
    total = Fraction(0)
    for lam in partitions_of(d):
        num = 1
        for delta in profiles:
            num *= character(lam, delta)
        total += Fraction(num) / Fraction(dimension(lam)) ** (f - e)
    prefactor = Fraction(math.prod(class_size(p) for p in profiles)) / Fraction(math.factorial(d)) ** e
    return prefactor * total


def mobius_factor(delta: Sequence[int]) -> Fraction:
    """Crosscap insertion coefficient D(delta) = z_delta H_1(delta)."""
    delta = Partition(delta)
    return z_of(delta) * hurwitz_e(1, [delta])


def mobius_factor_from_characters(delta: Sequence[int]) -> int:
    """sum_lam chi_lam(delta), with chi evaluated on one element of the class."""
    delta = Partition(delta)
    return sum(character(lam, delta) for lam in partitions_of(delta.weight))


def weighted_hurwitz(
    exponent: int,
    weight: Mapping | Callable,
    profiles: Sequence[Sequence[int]] = (),
    degree: Optional[int] = None,
    max_length: Optional[int] = None,
) -> Fraction:
    """sum_lam (dim lam/d!)^x g(lam) prod_i phi_lam(D^i) for a weight ``g``.

    ``weight`` is a mapping from partitions to rationals or a callable.  A
    mapping must cover every partition of ``d`` that enters the sum.
    """
    d = _profile_degree(profiles, degree)
    profiles = _nontrivial(profiles)
    fact = math.factorial(d)
    total = Fraction(0)
    for lam in _lambdas(d, max_length):
        if callable(weight):
            g = weight(lam)
        else:
            if lam not in weight:
                raise ValueError(f"weight table has no entry for {lam}")
            g = weight[lam]
        if not g:
            continue
        total += Fraction(g) * Fraction(dimension(lam), fact) ** exponent * _phi_product(lam, profiles)
    return total


# -- cut relations -----------------------------------------------------------


@dataclass
class TftReport:
    ok: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)

    def record(self, name: str, lhs: Fraction, rhs: Fraction):
        self.checked += 1
        if lhs != rhs:
            self.ok = False
            self.failures.append(f"{name}: lhs={lhs} rhs={rhs}")


def handle_cut_sides(e: int, profiles: Sequence[Partition], d: int):
    lhs = hurwitz_e(e - 2, profiles, d)
    rhs = sum((hurwitz_e(e, list(profiles) + [delta, delta], d) * z_of(delta) for delta in partitions_of(d)), Fraction(0))
    return lhs, rhs


def gluing_sides(e1: int, profiles1, e2: int, profiles2, d: int):
    lhs = hurwitz_e(e1 + e2 - 2, list(profiles1) + list(profiles2), d)
    rhs = sum(
        (
            hurwitz_e(e1, list(profiles1) + [delta], d) * z_of(delta) * hurwitz_e(e2, [delta] + list(profiles2), d)
            for delta in partitions_of(d)
        ),
        Fraction(0),
    )
    return lhs, rhs


def mobius_cut_sides(e: int, profiles: Sequence[Partition], d: int):
    lhs = hurwitz_e(e - 1, profiles, d)
    rhs = sum((hurwitz_e(e, list(profiles) + [delta], d) * mobius_factor(delta) for delta in partitions_of(d)), Fraction(0))
    return lhs, rhs


def verify_tft_axioms(d: int, base_cases: Sequence[HurwitzQuery], glue: bool = True) -> TftReport:
    """Check the handle cut, surface gluing and Moebius cut relations exactly.

    Each base case supplies the surface on the right-hand side of the handle
    and Moebius cuts; with ``glue`` every ordered pair of base cases is glued.
    """
    report = TftReport()
    for q in base_cases:
        if q.degree != d:
            raise ValueError(f"base case of degree {q.degree} given for d={d}")
        tag = f"e={q.euler_char} {[str(p) for p in q.profiles]}"
        report.record(f"handle cut {tag}", *handle_cut_sides(q.euler_char, q.profiles, d))
        report.record(f"moebius cut {tag}", *mobius_cut_sides(q.euler_char, q.profiles, d))
    for q1, q2 in itertools.product(base_cases, repeat=2) if glue else ():
        tag = f"e1={q1.euler_char} e2={q2.euler_char}"
        report.record(f"gluing {tag}", *gluing_sides(q1.euler_char, q1.profiles, q2.euler_char, q2.profiles, d))
    return report
