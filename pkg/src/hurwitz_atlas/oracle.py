"""Brute-force Hurwitz numbers: count monodromy tuples satisfying the surface relation.

For a genus-g orientable base the relation is

    [a_1, b_1] ... [a_g, b_g] s_1 ... s_F = 1,    [a, b] = a b a^-1 b^-1,

and for k crosscaps it is ``c_1^2 ... c_k^2 s_1 ... s_F = 1``, with ``s_i``
of cycle type ``D^i``.  Words are read with the package-wide composition
convention (right factor acts first).  The Hurwitz number is the count
divided by d!.

Every tuple in the enumeration gets its own product computed; the work is
vectorised over a precomputed multiplication table of S_d but nothing is
tallied or merged before the final identity test.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .core import (
    Partition,
    ResourceLimitError,
    class_size,
    compose,
    compose_all,
    cycle_type,
    cycles,
    identity,
    inverse,
    partitions_of,
    representative,
)
from .engine import SurfaceSignature

DEFAULT_BUDGET = int(float(os.environ.get("HZ_BUDGET", "1e8")))
MAX_TABLE_DEGREE = 7
_CHUNK = 1 << 21


@dataclass(frozen=True)
class FactorizationProblem:
    surface: SurfaceSignature
    profiles: tuple = ()
    degree: Optional[int] = None

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
            raise ValueError("a problem without profiles needs an explicit degree")
        if self.degree < 1:
            raise ValueError("the oracle needs d >= 1")


class GroupTable:
    """S_d with elements indexed 0..d!-1 in lexicographic order."""

    def __init__(self, d: int):
        if d > MAX_TABLE_DEGREE:
            raise ResourceLimitError(f"no multiplication table beyond S_{MAX_TABLE_DEGREE} (asked for S_{d})")
        self.d = d
        self.elements = list(itertools.permutations(range(d)))
        self.order = len(self.elements)
        perms = np.array(self.elements, dtype=np.int64).reshape(self.order, d)
        weights = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
        codes = perms @ weights
        self._codes = codes
        # lexicographic order of image tuples is increasing code order
        self.mul = np.empty((self.order, self.order), dtype=np.int32)
        for i in range(self.order):
            composed = perms[i][perms]  # row j: perms[i] o perms[j]
            self.mul[i] = np.searchsorted(codes, composed @ weights)
        self.identity = 0
        self.inv = np.array([self.index(inverse(p)) for p in self.elements], dtype=np.int32)
        self.class_of = [cycle_type(p) for p in self.elements]
        self._class_ids = {c: k for k, c in enumerate(partitions_of(d))}
        self.class_id = np.array([self._class_ids[c] for c in self.class_of], dtype=np.int32)

    def index(self, p: Sequence[int]) -> int:
        code = 0
        for x in p:
            code = code * self.d + x
        return int(np.searchsorted(self._codes, code))

    def members(self, delta: Sequence[int]) -> np.ndarray:
        return np.flatnonzero(self.class_id == self._class_ids[Partition(delta)]).astype(np.int32)

    def class_index(self, delta: Sequence[int]) -> int:
        return self._class_ids[Partition(delta)]

    def commutators(self, first: Optional[np.ndarray] = None) -> np.ndarray:
        """[a, b] = a b a^-1 b^-1 for every pair, a-major."""
        a = np.arange(self.order) if first is None else first
        b = np.arange(self.order)
        ab = self.mul[a[:, None], b[None, :]]
        abai = self.mul[ab, self.inv[a][:, None]]
        return self.mul[abai, self.inv[b][None, :]].ravel()

    def squares(self, only: Optional[np.ndarray] = None) -> np.ndarray:
        c = np.arange(self.order) if only is None else only
        return self.mul[c, c]


@lru_cache(maxsize=None)
def group_table(d: int) -> GroupTable:
    return GroupTable(d)


def _count_products(table: GroupTable, slots: Sequence[np.ndarray], final) -> int:
    """Count tuples from ``slots`` whose left-to-right product passes ``final``.

    ``final`` maps an array of product indices to a boolean mask.
    """

    def walk(prods: np.ndarray, k: int) -> int:
        if k == len(slots):
            return int(np.count_nonzero(final(prods)))
        slot = slots[k]
        if prods.size * slot.size > _CHUNK and prods.size > 1:
            step = max(1, _CHUNK // slot.size)
            return sum(walk(prods[i : i + step], k) for i in range(0, prods.size, step))
        if slot.size > _CHUNK:
            return sum(
                walk(table.mul[prods[:, None], slot[None, i : i + _CHUNK]].ravel(), k + 1)
                for i in range(0, slot.size, _CHUNK)
            )
        return walk(table.mul[prods[:, None], slot[None, :]].ravel(), k + 1)

    return walk(np.array([table.identity], dtype=np.int32), 0)


def _free_generators(p: FactorizationProblem) -> int:
    s = p.surface
    return 2 * s.genus if s.orientable else s.genus


def enumeration_size(p: FactorizationProblem, naive: bool = False) -> int:
    """Number of tuples the chosen enumeration visits."""
    d = p.degree
    fact = math.factorial(d)
    free = _free_generators(p)
    classes = [class_size(delta) for delta in p.profiles]
    if naive:
        return fact**free * math.prod(classes)
    if p.profiles:
        # first profile pinned to one element, last one solved for
        middle = classes[1:-1] if len(classes) > 1 else []
        return fact**free * math.prod(middle)
    if free == 0:
        return 1
    # first free generator pinned to one element per class
    return len(partitions_of(d)) * fact ** (free - 1)


def _check_budget(p: FactorizationProblem, naive: bool, budget: Optional[int]):
    budget = DEFAULT_BUDGET if budget is None else budget
    need = enumeration_size(p, naive)
    if need > budget:
        raise ResourceLimitError(f"enumeration needs {need} tuples, budget is {budget}")


def _generator_slots(table: GroupTable, p: FactorizationProblem, first: Optional[np.ndarray] = None) -> list:
    s = p.surface
    slots = []
    for k in range(s.genus):
        pinned = first if k == 0 else None
        slots.append(table.commutators(pinned) if s.orientable else table.squares(pinned))
    return slots


def oracle_count(p: FactorizationProblem, naive: bool = False, budget: Optional[int] = None) -> int:
    """Number of monodromy tuples solving the surface relation."""
    _check_budget(p, naive, budget)
    d = p.degree
    table = group_table(d)
    profiles = list(p.profiles)
    is_identity = lambda prods: prods == table.identity  # noqa: E731

    if naive:
        slots = _generator_slots(table, p) + [table.members(delta) for delta in profiles]
        return _count_products(table, slots, is_identity)

    if profiles:
        # conjugation moves the solutions with s_1 = r bijectively onto those with s_1 = q r q^-1
        rep = np.array([table.index(representative(profiles[0]))], dtype=np.int32)
        slots = _generator_slots(table, p)
        slots.append(rep)
        slots += [table.members(delta) for delta in profiles[1:-1]]
        if len(profiles) > 1:
            target = table.class_index(profiles[-1])
            final = lambda prods: table.class_id[table.inv[prods]] == target  # noqa: E731
        else:
            final = is_identity
        size = len(table.members(profiles[0]))
        return size * _count_products(table, slots, final)

    if p.surface.genus == 0:
        return 1  # the empty tuple
    total = 0
    for delta in partitions_of(d):
        rep = np.array([table.index(representative(delta))], dtype=np.int32)
        slots = _generator_slots(table, p, first=rep)
        total += len(table.members(delta)) * _count_products(table, slots, is_identity)
    return total


def oracle_hurwitz(p: FactorizationProblem, naive: bool = False, budget: Optional[int] = None) -> Fraction:
    return Fraction(oracle_count(p, naive, budget), math.factorial(p.degree))


# -- explicit tuples and the Riemann-Hurwitz audit ---------------------------


def relation_word(p: FactorizationProblem, gens: Sequence[tuple]) -> list:
    """The relation as a list of permutations, read left to right."""
    s = p.surface
    free = _free_generators(p)
    word = []
    if s.orientable:
        for k in range(s.genus):
            a, b = gens[2 * k], gens[2 * k + 1]
            word += [a, b, inverse(a), inverse(b)]
    else:
        for k in range(s.genus):
            word += [gens[k], gens[k]]
    word += list(gens[free:])
    return word


def iter_solutions(p: FactorizationProblem, budget: Optional[int] = None) -> Iterator[tuple]:
    """Yield every generator tuple ``(a_1, b_1, ..., s_1, ..., s_F)`` solving the relation."""
    _check_budget(p, True, budget)
    d = p.degree
    group = list(itertools.permutations(range(d)))
    by_class = {delta: [g for g in group if cycle_type(g) == delta] for delta in partitions_of(d)}
    choices = [group] * _free_generators(p) + [by_class[delta] for delta in p.profiles]
    e = identity(d)
    for gens in itertools.product(*choices):
        if compose_all(relation_word(p, gens), d) == e:
            yield gens


@dataclass
class AuditReport:
    ok: bool = True
    tuples: int = 0
    violations: list = field(default_factory=list)
    component_euler: list = field(default_factory=list)  # one entry per tuple


def covering_euler_characteristics(p: FactorizationProblem, gens: Sequence[tuple]) -> list:
    """Euler characteristic of each connected component of the covering.

    The base has a CW structure with one vertex, one edge per generator, one
    2-cell bounded by the relation and one disk around each branch point.
    On a component covering the sheets in an orbit O this lifts to |O|
    vertices, |O| edges per generator, one 2-cell per fixed point of the
    relation product on O, and one disk per cycle of s_i inside O.
    """
    d = p.degree
    free = _free_generators(p)
    orbits = _orbits(d, gens)
    relation = compose_all(relation_word(p, gens), d)
    out = []
    for orbit in orbits:
        k = len(orbit)
        faces = sum(1 for x in orbit if relation[x] == x)
        disks = sum(sum(1 for c in cycles(s) if c[0] in orbit) for s in gens[free:])
        out.append(k - k * len(gens) + faces + disks)
    return out


def _orbits(d: int, gens: Sequence[tuple]) -> list:
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(d):
            parent[find(x)] = find(g[x])
    groups = {}
    for x in range(d):
        groups.setdefault(find(x), set()).add(x)
    return sorted(groups.values(), key=min)


def riemann_hurwitz_audit(p: FactorizationProblem, budget: Optional[int] = None) -> AuditReport:
    """Check e(P) = e(base) d + sum_i (l(D^i) - d) on every counted tuple."""
    d = p.degree
    expected = p.surface.euler_char * d + sum(len(delta) - d for delta in p.profiles)
    report = AuditReport()
    for gens in iter_solutions(p, budget):
        comps = covering_euler_characteristics(p, gens)
        report.tuples += 1
        report.component_euler.append(comps)
        if sum(comps) != expected:
            report.ok = False
            report.violations.append((gens, sum(comps), expected))
    return report


def count_with_pinned_first(p: FactorizationProblem, budget: Optional[int] = None) -> int:
    """Class-representative count computed from explicit tuples.

    Sums |C| over the solutions whose first generator is the fixed
    representative of its class C.  Audits the pruning in
    :func:`oracle_count` against :func:`iter_solutions`.
    """
    reps = {representative(delta): class_size(delta) for delta in partitions_of(p.degree)}
    total = 0
    for gens in iter_solutions(p, budget):
        if not gens:
            total += 1
        elif gens[0] in reps:
            total += reps[gens[0]]
    return total
