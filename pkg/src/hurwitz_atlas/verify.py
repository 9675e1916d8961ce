"""Runnable verification suites, each cross-checking two independent routes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import class_algebra as ca
from . import genfun, oracle, ribbon, symfun
from .characters import normalized_character, verify_orthogonality
from .core import Partition, partitions_of, simple_profile, z_of
from .engine import HurwitzQuery, SurfaceSignature, hurwitz_e, verify_tft_axioms

ORACLE_SURFACES = {
    "sphere": SurfaceSignature.sphere(),
    "torus": SurfaceSignature.torus(),
    "genus:2": SurfaceSignature(True, 2),
    "rp2": SurfaceSignature.rp2(),
    "klein": SurfaceSignature.klein(),
}


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)

    def record(self, where: str, got, want):
        self.checked += 1
        if got != want:
            self.ok = False
            self.failures.append(f"{where}: got {got}, expected {want}")

    def absorb(self, ok: bool, checked: int, failures: Iterable[str]):
        self.checked += checked
        if not ok:
            self.ok = False
            self.failures.extend(failures)

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checked": self.checked, "failures": self.failures[:20]}


def characters_suite(max_degree: int) -> SuiteResult:
    res = SuiteResult("characters")
    for d in range(1, max_degree + 1):
        rep = verify_orthogonality(d)
        res.absorb(rep.ok, rep.checked, [rep.counterexample or ""])
    return res


def class_algebra_suite(max_degree: int) -> SuiteResult:
    res = SuiteResult("class-algebra")
    for d in range(1, min(max_degree, ca.BRUTE_FORCE_MAX_DEGREE) + 1):
        parts = partitions_of(d)
        for d1, d2 in itertools.product(parts, repeat=2):
            a, b = ca.ClassAlgebraElement.class_sum(d1), ca.ClassAlgebraElement.class_sum(d2)
            brute = ca.brute_force_multiply(a, b)
            res.record(f"C[{d1}]C[{d2}] idempotent route", ca.class_multiply(a, b), brute)
            for delta in parts:
                res.record(
                    f"C[{d1}]C[{d2}] at C[{delta}]", brute[delta], hurwitz_e(2, [d1, d2, delta]) * z_of(delta)
                )
    return res


def profile_tuples(d: int, max_profiles: int):
    for f in range(max_profiles + 1):
        yield from itertools.product(partitions_of(d), repeat=f)


def engine_oracle_suite(max_degree: int, max_profiles: int = 3) -> SuiteResult:
    res = SuiteResult("engine-oracle")
    for name, surface in ORACLE_SURFACES.items():
        for d in range(1, max_degree + 1):
            for profs in profile_tuples(d, max_profiles):
                prob = oracle.FactorizationProblem(surface, profs, d)
                res.record(
                    f"{name} d={d} {[str(p) for p in profs]}",
                    oracle.oracle_hurwitz(prob),
                    hurwitz_e(surface.euler_char, profs, d),
                )
    return res


def tft_base_cases(d: int, euler_chars=(2, 1, 0, -1, -2), max_profiles: int = 2) -> list:
    cases = []
    for e in euler_chars:
        surface = SurfaceSignature.from_euler(e)
        for f in range(max_profiles + 1):
            for profs in itertools.combinations_with_replacement(partitions_of(d), f):
                cases.append(HurwitzQuery(surface, profs, d))
    return cases


def tft_suite(max_degree: int, euler_chars=(2, 1, 0, -1, -2)) -> SuiteResult:
    res = SuiteResult("tft")
    for d in range(1, max_degree + 1):
        rep = verify_tft_axioms(d, tft_base_cases(d, euler_chars, 2))
        res.absorb(rep.ok, rep.checked, rep.failures)
    return res


def map_suite(max_edges: int = 3) -> SuiteResult:
    res = SuiteResult("maps")
    for n in range(1, max_edges + 1):
        for g in ribbon.all_face_systems(n, connected=False):
            res.record(f"{g.faces} alpha o phi = sigma", g.map_identity_holds(), True)
            v = len(g.stars)
            res.record(f"{g.faces} euler", g.euler_char, v - n + len(g.faces))
            faces = ribbon.canonical_system(g.faces)
            stars = ribbon.canonical_system(g.stars)
            once = ribbon.canonical_system(ribbon.apply_all_t(faces, n))
            twice = ribbon.canonical_system(ribbon.apply_all_t(once, n))
            res.record(f"{g.faces} T-product faces -> stars", once, stars)
            res.record(f"{g.faces} (prod T)^2 = id", twice, faces)
    return res


def wick_suite(max_degree: int = 3, max_edges: int = 2) -> SuiteResult:
    res = SuiteResult("wick")
    for n in range(1, max_edges + 1):
        for g in ribbon.all_face_systems(n):
            for d in range(1, max_degree + 1):
                counts = ribbon.wick_counts(g, d)
                res.record(f"{g.faces} d={d} total", sum(counts.values()), math.factorial(d) ** n)
                for profs in itertools.product(partitions_of(d), repeat=g.V):
                    res.record(
                        f"{g.faces} d={d} {[str(p) for p in profs]}",
                        Fraction(counts.get(profs, 0), math.factorial(d) ** g.F),
                        hurwitz_e(g.euler_char, profs, d),
                    )
                for fprofs in itertools.product(partitions_of(d), repeat=g.F):
                    fcounts = ribbon.wick_counts(g, d, fprofs)
                    norm = math.prod(z_of(p) for p in fprofs)
                    for profs in itertools.product(partitions_of(d), repeat=g.V):
                        res.record(
                            f"{g.faces} d={d} faces {[str(p) for p in fprofs]} stars {[str(p) for p in profs]}",
                            Fraction(fcounts.get(profs, 0), norm),
                            hurwitz_e(g.euler_char, list(fprofs) + list(profs), d),
                        )
    return res


def symfun_suite(max_degree: int) -> SuiteResult:
    res = SuiteResult("symfun")
    top = min(max_degree, symfun.DEFAULT_DEGREE_CAP)
    for d in range(2, top + 1):
        simple = simple_profile(d)
        for mu in partitions_of(d):
            s = symfun.schur_in_p(mu)
            res.record(f"L s[{mu}]", symfun.cut_and_join(s), s.scale(normalized_character(mu, simple)))
    for d in range(1, top + 1):
        for delta in partitions_of(d):
            back = symfun.from_schur(symfun.p_monomial_in_schur(delta))
            res.record(f"round trip p[{delta}]", back, symfun.PSeries.monomial(delta))
    for d in range(1, min(top, 5) + 1):
        parts = partitions_of(d)
        probes = [symfun.PSeries.monomial(mu) for mu in parts]
        for d1, d2 in itertools.combinations(parts, 2):
            for probe in probes:
                res.record(
                    f"W[{d1}] W[{d2}] on p[{list(probe.coeffs)[0]}]",
                    symfun.w_operator(d1, symfun.w_operator(d2, probe)),
                    symfun.w_operator(d2, symfun.w_operator(d1, probe)),
                )
    return res


def genfun_suite(max_degree: int, max_u: int = 4) -> SuiteResult:
    res = SuiteResult("genfun")
    top = min(max_degree, symfun.DEFAULT_DEGREE_CAP)
    for rep in (
        genfun.vacuum_series_check(top),
        genfun.connected_single_branch_check(top),
        genfun.verify_cut_and_join_pde(top, max_u),
    ):
        res.absorb(rep.ok, rep.checked, rep.failures)
    if top >= 3:
        res.record("H^{1,1}(3;(3))", genfun.rp2_single_branch_table(3)[3, Partition((3,))].value, Fraction(1, 3))
    return res


def riemann_hurwitz_suite(max_degree: int = 3, max_profiles: int = 3) -> SuiteResult:
    res = SuiteResult("riemann-hurwitz")
    for name, surface in ORACLE_SURFACES.items():
        free = 2 * surface.genus if surface.orientable else surface.genus
        for d in range(1, max_degree + 1):
            for profs in profile_tuples(d, max_profiles):
                prob = oracle.FactorizationProblem(surface, profs, d)
                if oracle.enumeration_size(prob, naive=True) > 50_000:
                    continue
                rep = oracle.riemann_hurwitz_audit(prob)
                res.absorb(rep.ok, rep.tuples, [f"{name} {profs}: {v[1:]}" for v in rep.violations])
                res.record(f"{name} {[str(p) for p in profs]} tuple count", rep.tuples, oracle.oracle_count(prob))
    for n in (1, 2):
        for g in ribbon.all_face_systems(n):
            for d in range(1, min(max_degree, 3) + 1):
                for c in ribbon.iter_assignments(g, d):
                    profs = ribbon.covering_profiles(c)
                    want = g.euler_char * d + sum(len(p) - d for p in profs)
                    res.record(f"wick {g.faces} {c.perms}", ribbon.covering_euler_char(c), want)
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "characters": characters_suite,
    "class-algebra": class_algebra_suite,
    "engine-oracle": lambda D: engine_oracle_suite(min(D, 4)),
    "tft": lambda D: tft_suite(min(D, 5)),
    "maps": lambda D: map_suite(3),
    "wick": lambda D: wick_suite(min(D, 3)),
    "symfun": symfun_suite,
    "genfun": genfun_suite,
    "riemann-hurwitz": lambda D: riemann_hurwitz_suite(min(D, 3)),
}


def run_suites(names: Iterable[str], max_degree: int) -> list[SuiteResult]:
    out = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        out.append(SUITES[name](max_degree))
    return out
