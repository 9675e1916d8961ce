"""Irreducible characters of S_d by the Murnaghan-Nakayama rule."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .core import Partition, ResourceLimitError, class_size, partitions_of, z_of

DEFAULT_CHAR_CAP = int(os.environ.get("HZ_CHAR_CAP", "12"))


def _beta_set(lam: Sequence[int]) -> tuple:
    n = len(lam)
    return tuple(lam[i] + n - 1 - i for i in range(n))


def _from_beta(beta: Sequence[int]) -> tuple:
    beads = sorted(beta, reverse=True)
    n = len(beads)
    return tuple(b - (n - 1 - i) for i, b in enumerate(beads) if b - (n - 1 - i) > 0)


@lru_cache(maxsize=None)
def _rim_hooks(lam: tuple, r: int) -> tuple:
    """All ``(shape, sign)`` left after removing a border strip of size ``r``.

    A strip removal moves one bead of the abacus from ``b`` to ``b - r``; the
    leg length is the number of beads jumped over.
    """
    beta = _beta_set(lam)
    occupied = set(beta)
    out = []
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beta if t < c < b)
        shape = _from_beta([t if c == b else c for c in beta])
        out.append((shape, -1 if height % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(lam: tuple, rho: tuple) -> int:
    if not rho:
        return 1 if not lam else 0
    total = 0
    for shape, sign in _rim_hooks(lam, rho[0]):
        total += sign * _mn(shape, rho[1:])
    return total


def character(lam: Sequence[int], delta: Sequence[int]) -> int:
    """chi_lam evaluated on a permutation of cycle type ``delta``."""
    lam, delta = Partition(lam), Partition(delta)
    if lam.weight != delta.weight:
        raise ValueError(f"weight mismatch: |{lam}| != |{delta}|")
    return _mn(tuple(lam), tuple(delta))


@lru_cache(maxsize=None)
def _dimension(lam: tuple) -> int:
    conj = Partition(lam).conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(sum(lam)) // hooks


def dimension(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    return _dimension(tuple(Partition(lam)))


def normalized_character(lam: Sequence[int], delta: Sequence[int]) -> Fraction:
    """phi_lam(delta) = |C_delta| chi_lam(delta) / dim lam.

    This is the eigenvalue of the class sum of ``delta`` on the irreducible
    module ``lam``.
    """
    return _phi(tuple(Partition(lam)), tuple(Partition(delta)))


@lru_cache(maxsize=None)
def _phi(lam: tuple, delta: tuple) -> Fraction:
    return Fraction(class_size(delta) * character(lam, delta), dimension(lam))


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_d; rows and columns in reverse-lex order."""

    degree: int
    partitions: tuple
    chi: tuple  # chi[row][col], row = lambda, col = cycle type
    dims: tuple
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({p: i for i, p in enumerate(self.partitions)})

    def index(self, p: Sequence[int]) -> int:
        return self._index[Partition(p)]

    def value(self, lam, delta) -> int:
        return self.chi[self.index(lam)][self.index(delta)]

    def dim(self, lam) -> int:
        return self.dims[self.index(lam)]

    def phi(self, lam, delta) -> Fraction:
        return Fraction(class_size(delta) * self.value(lam, delta), self.dim(lam))

    def with_entry(self, lam, delta, value: int) -> "CharacterTable":
        """Copy of the table with one entry replaced (for negative controls)."""
        rows = [list(r) for r in self.chi]
        rows[self.index(lam)][self.index(delta)] = value
        return CharacterTable(self.degree, self.partitions, tuple(map(tuple, rows)), self.dims)


@lru_cache(maxsize=None)
def _table(d: int) -> CharacterTable:
    parts = tuple(partitions_of(d))
    chi = tuple(tuple(_mn(tuple(lam), tuple(delta)) for delta in parts) for lam in parts)
    dims = tuple(dimension(lam) for lam in parts)
    table = CharacterTable(d, parts, chi, dims)
    identity_col = table.index((1,) * d)
    if any(row[identity_col] != dim for row, dim in zip(chi, dims)):
        raise ArithmeticError(f"hook-length dimensions disagree with chi(1) for d={d}")
    return table


def character_table(d: int, cap: Optional[int] = None) -> CharacterTable:
    cap = DEFAULT_CHAR_CAP if cap is None else cap
    if d < 1:
        raise ValueError("character tables are built for d >= 1")
    if d > cap:
        raise ResourceLimitError(f"character table of S_{d} exceeds the degree cap {cap}")
    return _table(d)


@dataclass
class OrthogonalityReport:
    degree: int
    ok: bool
    checked: int
    counterexample: Optional[str] = None


def verify_orthogonality(d: int, table: Optional[CharacterTable] = None) -> OrthogonalityReport:
    """Check both orthogonality relations of the normalized characters exactly.

    Row form: sum_lam (dim/d!)^2 phi_lam(mu) phi_lam(delta) = delta_{mu,delta} / z_delta.
    Column form: (dim lam/d!)^2 sum_delta z_delta phi_lam(delta) phi_mu(delta) = delta_{lam,mu}.
    """
    table = character_table(d) if table is None else table
    parts = table.partitions
    fact = math.factorial(d)
    phi = {(lam, delta): table.phi(lam, delta) for lam in parts for delta in parts}
    weight = {lam: Fraction(table.dim(lam), fact) ** 2 for lam in parts}
    checked = 0
    for mu in parts:
        for delta in parts:
            lhs = sum(weight[lam] * phi[lam, mu] * phi[lam, delta] for lam in parts)
            rhs = Fraction(1, z_of(delta)) if mu == delta else 0
            checked += 1
            if lhs != rhs:
                return OrthogonalityReport(
                    d, False, checked, f"class relation at ({mu}; {delta}): {lhs} != {rhs}"
                )
    for lam in parts:
        for mu in parts:
            lhs = weight[lam] * sum(z_of(delta) * phi[lam, delta] * phi[mu, delta] for delta in parts)
            rhs = 1 if lam == mu else 0
            checked += 1
            if lhs != rhs:
                return OrthogonalityReport(
                    d, False, checked, f"irrep relation at ({lam}; {mu}): {lhs} != {rhs}"
                )
    return OrthogonalityReport(d, True, checked)
