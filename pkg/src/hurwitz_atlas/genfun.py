"""Generating functions: the sum of all Schur functions, single-branch RP^2 numbers,
and simple Hurwitz numbers of the sphere with their cut-and-join evolution."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import Partition, content_pochhammer, partitions_of, revlex_key, simple_profile
from .engine import hurwitz_e
from .symfun import DEFAULT_DEGREE_CAP, PSeries, cut_and_join, schur_in_p, series_exp, series_log


def _check_cap(d_max: int):
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    if d_max > DEFAULT_DEGREE_CAP:
        from .core import ResourceLimitError

        raise ResourceLimitError(f"degree {d_max} exceeds the cap {DEFAULT_DEGREE_CAP}")


def bkp_vacuum_series(d_max: int) -> PSeries:
    """sum_{|lam| <= d_max} s_lam."""
    _check_cap(d_max)
    out = PSeries({}, d_max)
    for d in range(d_max + 1):
        for lam in partitions_of(d):
            out = out + schur_in_p(lam, d_max)
    return out


def bkp_exponent(d_max: int) -> PSeries:
    """1/2 sum_m p_m^2 / m + sum_{m odd} p_m / m, truncated at degree d_max."""
    terms = {}
    for m in range(1, d_max + 1):
        if 2 * m <= d_max:
            terms[Partition((m, m))] = Fraction(1, 2 * m)
        if m % 2:
            terms[Partition((m,))] = Fraction(1, m)
    return PSeries(terms, d_max)


def bkp_exponential_form(d_max: int) -> PSeries:
    _check_cap(d_max)
    return series_exp(bkp_exponent(d_max))


@dataclass(frozen=True)
class SingleBranchEntry:
    degree: int
    profile: Partition
    value: Fraction
    c_power: int  # power of c, equal to d
    inverse_h_power: int  # power of 1/h, equal to the profile length
    branched: bool


def rp2_single_branch_table(d_max: int) -> dict:
    """(d, D) -> p_D coefficient of the vacuum series, with its grading metadata."""
    series = bkp_vacuum_series(d_max)
    table = {}
    for d in range(1, d_max + 1):
        for delta in partitions_of(d):
            table[d, delta] = SingleBranchEntry(
                d, delta, series[delta], d, len(delta), any(x > 1 for x in delta)
            )
    return table


@dataclass
class Report:
    ok: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)

    def record(self, where: str, got, want):
        self.checked += 1
        if got != want:
            self.ok = False
            self.failures.append(f"{where}: got {got}, expected {want}")


def connected_single_branch_check(d_max: int) -> Report:
    """log of the vacuum series must be 1/2 sum p_m^2/m + sum_{m odd} p_m/m.

    That is, the connected numbers are 1/(2m) for profile (m, m) and
    1/(2m - 1) for profile (2m - 1); every other coefficient vanishes.
    """
    log = series_log(bkp_vacuum_series(d_max))
    want = bkp_exponent(d_max)
    report = Report()
    for d in range(1, d_max + 1):
        for delta in partitions_of(d):
            report.record(f"log coefficient of p[{delta}]", log[delta], want[delta])
    return report


def vacuum_series_check(d_max: int) -> Report:
    """Schur-sum form against the exponential form and against H_1 from the engine."""
    schur = bkp_vacuum_series(d_max)
    expo = bkp_exponential_form(d_max)
    report = Report()
    for d in range(0, d_max + 1):
        for delta in partitions_of(d):
            report.record(f"exp form at p[{delta}]", schur[delta], expo[delta])
            report.record(f"H_1 at p[{delta}]", schur[delta], hurwitz_e(1, [delta], d))
    return report


@dataclass(frozen=True)
class GradedSeries:
    """F = sum_m u^m/m! * components[m]; each component is a PSeries in p."""

    components: tuple
    max_degree: int
    max_u: int

    def coefficient(self, m: int, delta: Sequence[int]) -> Fraction:
        return self.components[m][delta]

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "max_u": self.max_u,
            "u_convention": "u^m/m!",
            "components": [c.to_json()["coefficients"] for c in self.components],
        }


def simple_hurwitz_number(m: int, delta: Sequence[int]) -> Fraction:
    """h_{m,D}: sphere, one profile D and m simple branch points."""
    delta = Partition(delta)
    d = delta.weight
    if m == 0:
        return hurwitz_e(2, [delta], d)
    if d < 2:
        return Fraction(0)
    return hurwitz_e(2, [delta] + [simple_profile(d)] * m, d)


def simple_hurwitz_series(d_max: int, m_max: int) -> GradedSeries:
    _check_cap(d_max)
    comps = []
    for m in range(m_max + 1):
        coeffs = {}
        for d in range(0, d_max + 1):
            for delta in partitions_of(d):
                coeffs[delta] = simple_hurwitz_number(m, delta)
        comps.append(PSeries(coeffs, d_max))
    return GradedSeries(tuple(comps), d_max, m_max)


def verify_cut_and_join_pde(d_max: int, m_max: int, series: Optional[GradedSeries] = None) -> Report:
    """dF/du = L F, i.e. component m+1 equals L applied to component m."""
    series = simple_hurwitz_series(d_max, m_max) if series is None else series
    report = Report()
    for m in range(series.max_u):
        lhs = series.components[m + 1]
        rhs = cut_and_join(series.components[m])
        for d in range(series.max_degree + 1):
            for delta in partitions_of(d):
                report.record(f"u^{m + 1} p[{delta}]", lhs[delta], rhs[delta])
    return report


def hypergeometric_coefficients(d_max: int, n_list: Sequence[int]) -> dict:
    """lam -> prod_i (n_i)_lam for every |lam| <= d_max."""
    _check_cap(d_max)
    table = {}
    for d in range(d_max + 1):
        for lam in partitions_of(d):
            value = Fraction(1)
            for n in n_list:
                value *= content_pochhammer(n, lam)
            table[lam] = value
    return dict(sorted(table.items(), key=lambda kv: revlex_key(kv[0])))
