"""Analysis pipeline and deterministic JSON serialization.

Exact values are written as strings (``"3/2"``, ``"1/2-3*i"``), the point at
infinity as ``"inf"``, and floating values with 17 significant digits.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GaussianRational, RationalMap, format_rational
from .front import (
    FrontSpec,
    canonical_data,
    classify_ends,
    front_condition,
    period_check,
)
from .sphere import INF
from .valuedist import ValueDistributionError, totally_ramified, verify_main_theorem

_RAW = "\x00raw:"


@dataclass(frozen=True)
class Raw:
    """A float that must be printed with 17 significant digits."""

    value: float

    def token(self) -> str:
        x = float(self.value)
        if x != x:
            return '"nan"'
        if x in (float("inf"), float("-inf")):
            return '"inf"' if x > 0 else '"-inf"'
        return format(x, ".17g")


def fmt(value):
    """Convert a scalar or point into its JSON form."""
    if value is INF:
        return "inf"
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, GaussianRational):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return Raw(value)
    if isinstance(value, complex):
        return format_complex(value)
    if isinstance(value, RationalMap):
        return format_rational(value)
    return value


def format_complex(z: complex) -> str:
    re_part = format(z.real + 0.0, ".17g")
    if z.imag == 0:
        return re_part
    im = format(abs(z.imag), ".17g")
    sign = "-" if z.imag < 0 else "+"
    return f"{re_part}{sign}{im}*i"


def _prepare(obj):
    if isinstance(obj, Raw):
        return _RAW + obj.token()
    if isinstance(obj, dict):
        return {str(k): _prepare(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_prepare(v) for v in obj]
    converted = fmt(obj)
    if isinstance(converted, Raw):
        return _RAW + converted.token()
    return converted


def dumps(obj) -> str:
    text = json.dumps(_prepare(obj), indent=2, ensure_ascii=False)
    return re.sub(r'"\\u0000raw:((?:[^"\\]|\\.)*)"', lambda m: m.group(1).replace('\\"', '"'), text) + "\n"


def spec_echo(spec: FrontSpec) -> dict:
    return {
        "gauss": format_rational(spec.gauss),
        "gauss_star": format_rational(spec.gauss_star),
        "scale_sq": fmt(spec.scale_sq),
        "genus": spec.genus,
        "ends": [fmt(p) for p in spec.ends],
    }


# Pipeline -----------------------------------------------------------------------


@dataclass
class AnalysisReport:
    data: dict
    period_ok: bool

    def to_json(self) -> str:
        return dumps(self.data)


def _trv_block(g: RationalMap, ends, k: int) -> tuple[dict | None, Fraction | None]:
    if g.is_constant:
        return {"constant": True}, None
    try:
        rep = totally_ramified(g, ends)
    except ValueDistributionError as exc:
        return {"error": str(exc)}, None
    block = {
        "exceptional": [fmt(e.value) for e in rep.exceptional],
        "ramified": [{"value": fmt(r.value), "nu_i": r.nu} for r in rep.ramified],
        "r0": rep.r0,
        "l0": rep.l0,
        "nu": fmt(rep.nu),
        "n0": rep.n0,
        "nr": rep.nr,
        "nG": rep.n_total,
        "degree": rep.degree,
        "exact": rep.exact,
        "bounds": rep.bounds(k),
    }
    return block, rep.nu


def analyze_spec(spec: FrontSpec) -> AnalysisReport:
    g, gs = spec.gauss, spec.gauss_star
    period = period_check(g, gs)
    cond = front_condition(g, gs, spec.ends)
    data: dict = {"spec": spec_echo(spec), "ends": [fmt(p) for p in spec.ends]}
    data["period"] = {
        "poles": [
            {
                "location": fmt(p.location),
                "order": p.order,
                "residue": fmt(p.residue),
                "real": p.real,
                "exact": p.exact,
            }
            for p in period.poles
        ],
        "verdict": period.verdict,
        "justification": period.justification,
    }
    data["front_condition"] = {
        "holds": cond.holds,
        "witness": fmt(cond.witness),
        "horosphere": cond.horosphere,
    }
    canon = canonical_data(spec)
    records, summary = classify_ends(spec)
    data["canonical"] = {
        "Q": format_rational(canon.hopf),
        "omega": {"factor": format_rational(canon.omega_factor), "xi_power": canon.omega_xi_power},
        "theta": {"factor": format_rational(canon.theta_factor), "xi_power": canon.theta_xi_power},
        "ordQ": [{"end": fmt(r.point), "ord": r.ord_q} for r in records],
    }
    data["end_classification"] = [
        {
            "end": fmt(r.point),
            "ordQ": r.ord_q,
            "regular": r.regular,
            "complete_by_pole": r.complete_by_pole,
            "complete_by_metric": r.complete_by_metric,
            "G": fmt(r.gauss_value),
            "Gstar": fmt(r.gauss_star_value),
            "values_agree": r.values_agree,
            "q_at_most_double_pole": r.q_at_most_double_pole,
            "gauss_meromorphic": r.gauss_meromorphic,
            "gauss_star_meromorphic": r.gauss_star_meromorphic,
        }
        for r in records
    ]
    data["degrees"] = {"d": summary.d, "dstar": summary.dstar, "k": summary.k}
    data["osserman"] = {
        "holds": summary.holds,
        "equality": summary.equality,
        "embedded": summary.embedded,
        "all_regular": summary.all_regular,
        "complete": summary.complete,
    }
    data["horosphere"] = spec.is_horosphere
    k = len(spec.ends)
    vg, nu_g = _trv_block(g, spec.ends, k)
    vgs, nu_gs = _trv_block(gs, spec.ends, k)
    valuedist = {"G": vg, "Gstar": vgs}
    if nu_g is not None and nu_gs is not None and k >= 3:
        verdict = verify_main_theorem(nu_g, nu_gs, 0, k, summary.d, summary.dstar)
        valuedist["ramification_inequality"] = {
            "applicable": verdict.applicable,
            "lhs": fmt(verdict.lhs),
            "rhs": fmt(verdict.rhs),
            "holds": verdict.holds,
        }
    else:
        valuedist["ramification_inequality"] = {"applicable": False, "lhs": None, "rhs": None, "holds": None}
    data["valuedist"] = valuedist
    return AnalysisReport(data, period.verdict)


def period_failure_report(spec_like: dict, g: RationalMap, gs: RationalMap) -> AnalysisReport:
    """Diagnostic report when the residues of ``dG/(G - G*)`` are not all real."""
    period = period_check(g, gs)
    data = {
        "spec": spec_like,
        "period": {
            "poles": [
                {
                    "location": fmt(p.location),
                    "order": p.order,
                    "residue": fmt(p.residue),
                    "real": p.real,
                    "exact": p.exact,
                }
                for p in period.poles
            ],
            "verdict": period.verdict,
            "offending": [fmt(p.location) for p in period.poles if not p.real],
            "justification": period.justification,
        },
    }
    return AnalysisReport(data, period.verdict)


def analyze_torus(front) -> AnalysisReport:
    from .elliptic import gauss_degrees, torus_period_check

    period = torus_period_check(front)
    d, dstar = gauss_degrees(front)
    k = len(front.ends)
    data = {
        "spec": {key: fmt(v) if not isinstance(v, list) else v for key, v in front.describe().items()},
        "ends": [fmt(p) for p in front.ends],
        "period": {
            "cycles": [
                {
                    "start": fmt(c.start),
                    "direction": fmt(c.direction),
                    "integral": fmt(c.value),
                    "winding": c.winding,
                    "in_2pi_i_Z": c.in_lattice,
                }
                for c in period.cycles
            ],
            "identity_max_error": fmt(period.identity_max_error),
            "verdict": period.verdict,
        },
        "coincidences_outside_ends": [fmt(p) for p in front.coincidences_outside_ends],
        "degrees": {"d": d, "dstar": dstar, "k": k},
        "osserman": {"holds": d + dstar >= k, "equality": d + dstar == k, "embedded": d + dstar == k},
        "backend": front.backend,
    }
    data["spec"]["ends"] = [fmt(p) for p in front.ends]
    return AnalysisReport(data, period.verdict)
