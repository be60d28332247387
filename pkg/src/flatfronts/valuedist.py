"""Exceptional and totally ramified values of a rational Gauss map on a punctured sphere.

For ``b`` in the extended plane write ``G^-1(b)`` as a divisor of degree ``d``.
Away from critical points every preimage is simple, so the only candidates
for a totally ramified value are critical values and values taken at ends.
For a candidate, the number of simple preimages outside the ends is

    d - sum(multiplicities at critical preimages) - #(non-critical end preimages)

and no root-multiplicity has to be detected numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import GaussianRational, RationalMap
from .sphere import INF, Point, as_point, critical_divisor, evaluate, point_sort_key, same_point


class ValueDistributionError(ValueError):
    pass


@dataclass(frozen=True)
class ExceptionalValue:
    value: Point
    preimages: tuple


@dataclass(frozen=True)
class RamifiedValue:
    value: Point
    nu: int
    preimages: tuple


@dataclass(frozen=True)
class TRVReport:
    degree: int
    exceptional: tuple[ExceptionalValue, ...]
    ramified: tuple[RamifiedValue, ...]
    n0: int
    nr: int
    n_total: int
    exact: bool

    @property
    def r0(self) -> int:
        return len(self.exceptional)

    @property
    def l0(self) -> int:
        return len(self.ramified)

    @property
    def nu(self) -> Fraction:
        return self.r0 + sum((1 - Fraction(1, r.nu) for r in self.ramified), Fraction(0))

    def bounds(self, k: int, genus: int = 0) -> dict:
        d = self.degree
        return {
            "rh": self.n_total == 2 * (d + genus - 1),
            "ex_rami": k >= d * self.r0 - self.n0,
            "trvn1": self.nu <= 2 + Fraction(2 * genus - 2 + k, d),
        }


def _is_exact_point(p: Point) -> bool:
    return p is INF or isinstance(p, GaussianRational)


def _normalize_ends(ends: Sequence) -> list[Point]:
    return [as_point(e) for e in ends]


def _analyse(g: RationalMap, ends: Sequence):
    if g.is_constant:
        raise ValueDistributionError("value distribution of a constant map is not defined")
    ends = _normalize_ends(ends)
    d = g.degree
    crit = critical_divisor(g)
    mult = {c: b + 1 for c, b in crit.items()}

    def in_ends(p):
        return any(same_point(p, e) for e in ends)

    def crit_mult(p):
        for c, m in mult.items():
            if same_point(p, c):
                return m
        return 1

    crit_values = [(c, evaluate(g, c)) for c in mult]
    end_values = [(e, evaluate(g, e)) for e in ends]
    candidates: list[Point] = []
    for _, v in crit_values + end_values:
        if not any(same_point(v, w) for w in candidates):
            candidates.append(v)
    candidates.sort(key=point_sort_key)

    exceptional, ramified = [], []
    n0 = nr = 0
    for b in candidates:
        crit_pre = [c for c, v in crit_values if same_point(v, b)]
        end_pre = [e for e, v in end_values if same_point(v, b)]
        end_simple = [e for e in end_pre if crit_mult(e) == 1]
        simple_outside = d - sum(mult[c] for c in crit_pre) - len(end_simple)
        if simple_outside < 0:
            raise ValueDistributionError(f"inconsistent preimage count for value {b}")
        if simple_outside > 0:
            continue
        outside = [c for c in crit_pre if not in_ends(c)]
        if not outside:
            exceptional.append(ExceptionalValue(b, tuple(sorted(end_pre, key=point_sort_key))))
            n0 += sum(crit_mult(e) - 1 for e in end_pre)
        else:
            ramified.append(RamifiedValue(b, min(mult[c] for c in outside), tuple(outside)))
            nr += sum(mult[c] - 1 for c in outside)
    exact = all(_is_exact_point(p) for p in list(mult) + ends)
    return TRVReport(d, tuple(exceptional), tuple(ramified), n0, nr, sum(crit.values()), exact)


def exceptional_values(g: RationalMap, ends: Sequence) -> list[Point]:
    """Values whose every preimage on the sphere is an end."""
    return [e.value for e in _analyse(g, ends).exceptional]


def totally_ramified(g: RationalMap, ends: Sequence) -> TRVReport:
    return _analyse(g, ends)


@dataclass(frozen=True)
class TheoremVerdict:
    applicable: bool
    lhs: Fraction | None
    rhs: Fraction
    holds: bool | None
    nu_bounds: dict = field(default_factory=dict)


def verify_main_theorem(
    nu_g: Fraction,
    nu_gstar: Fraction,
    genus: int,
    k: int,
    d: int | None = None,
    dstar: int | None = None,
) -> TheoremVerdict:
    """``1/(nu_G - 2) + 1/(nu_G* - 2) >= k / (2 genus - 2 + k)`` when both numbers exceed 2.

    With degrees supplied, the per-map bounds ``nu <= 2 + (2 genus - 2 + k)/d`` are
    reported as well.
    """
    if k < 1:
        raise ValueDistributionError("at least one end is required")
    chi = 2 * genus - 2 + k
    if chi <= 0:
        raise ValueDistributionError("2*genus - 2 + k must be positive")
    nu_g, nu_gstar = Fraction(nu_g), Fraction(nu_gstar)
    rhs = Fraction(k, chi)
    bounds = {}
    if d:
        bounds["G"] = nu_g <= 2 + Fraction(chi, d)
    if dstar:
        bounds["Gstar"] = nu_gstar <= 2 + Fraction(chi, dstar)
    if nu_g > 2 and nu_gstar > 2:
        lhs = 1 / (nu_g - 2) + 1 / (nu_gstar - 2)
        return TheoremVerdict(True, lhs, rhs, lhs >= rhs, bounds)
    return TheoremVerdict(False, None, rhs, None, bounds)


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    min_ends: int | None = None
    ends_regular_and_embedded: bool = False
    reason: str = ""


def _lhs(p: int, q: int) -> Fraction | None:
    if p <= 2 or q <= 2:
        return None
    return Fraction(1, p - 2) + Fraction(1, q - 2)


def corollary_feasibility(genus: int, dg: int, dgstar: int, k: int | None = None) -> Feasibility:
    """Constraints on complete fronts whose Gauss maps omit ``dg`` and ``dgstar`` values.

    Exceptional values count fully in the ramification number, so the main
    inequality applies with ``nu = D``.
    """
    if genus not in (0, 1):
        raise ValueDistributionError("genus must be 0 or 1")
    lhs = _lhs(dg, dgstar)
    if genus == 0:
        if dg >= 4 and dgstar >= 4:
            return Feasibility(False, reason="sum of 1/(D-2) is at most 1 but must exceed 1")
        if lhs is not None:
            # lhs >= k/(k-2) solved for the smallest admissible k; lhs > 1 here
            min_k = 3
            while Fraction(min_k, min_k - 2) > lhs:
                min_k += 1
            ok = k is None or k >= min_k
            return Feasibility(ok, min_ends=min_k, reason=f"requires k >= {min_k}")
        return Feasibility(True)
    if dg >= 5 and dgstar >= 5:
        return Feasibility(False, reason="sum of 1/(D-2) is below 1 but must be at least 1")
    if lhs is not None and lhs == 1:
        return Feasibility(
            True,
            ends_regular_and_embedded=True,
            reason="equality forces d + d* = k, so every end is regular and embedded",
        )
    return Feasibility(True)
