"""Built-in examples with expected results.

Each fixture value carries a tag: ``reported`` for published reference values,
``computed`` for values produced here by an independent computation (exact
expansion, brute-force preimage counts).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import GaussianRational
from .expr import parse_constant, parse_rational


class CatalogError(ValueError):
    pass


def _real_param(name: str, forbidden: tuple = ()) -> Callable[[GaussianRational], None]:
    def check(value: GaussianRational) -> None:
        if value.im != 0:
            raise CatalogError(f"{name} must be real, got {value}")
        if value.re in forbidden:
            raise CatalogError(f"{name} = {value} is outside the admissible domain")

    return check


@dataclass(frozen=True)
class Expected:
    value: object
    tag: str  # "reported" or "computed"
    note: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    gauss: str
    gauss_star: str
    defaults: Mapping[str, str] = field(default_factory=dict)
    checks: Mapping[str, Callable] = field(default_factory=dict)
    genus: int = 0
    fixture: Mapping[str, Expected] = field(default_factory=dict)
    window: str = "-3,3,-3,3"

    def bindings(self, overrides: Mapping[str, object] | None = None) -> dict[str, GaussianRational]:
        overrides = dict(overrides or {})
        unknown = set(overrides) - set(self.defaults)
        if unknown:
            raise CatalogError(f"unknown parameter(s) for {self.name}: {', '.join(sorted(unknown))}")
        values = {}
        for key, default in self.defaults.items():
            raw = overrides.get(key, default)
            value = raw if isinstance(raw, GaussianRational) else parse_constant(str(raw))
            if key in self.checks:
                self.checks[key](value)
            values[key] = value
        return values


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    CATALOG[entry.name] = entry


_register(
    CatalogEntry(
        name="revolution",
        description="G = z, G* = alpha z: fronts of revolution, a horosphere when alpha = 0",
        gauss="z",
        gauss_star="alpha*z",
        defaults={"alpha": "1/3"},
        checks={"alpha": _real_param("alpha", (Fraction(1),))},
        fixture={
            "exceptional_G": Expected(["0", "inf"], "reported", "for alpha != 0"),
            "horosphere_at_alpha_0": Expected(True, "reported"),
        },
    )
)
_register(
    CatalogEntry(
        name="kuy-z-z2",
        description="(G, G*) = (z, z^2) on the sphere minus {0, 1, inf}",
        gauss="z",
        gauss_star="z^2",
        fixture={
            "ends": Expected(["0", "1", "inf"], "reported"),
            "D_G": Expected(3, "reported"),
            "D_Gstar": Expected(2, "reported"),
            "embedded": Expected(True, "reported"),
        },
    )
)
_register(
    CatalogEntry(
        name="k1-four-ends",
        description="(z^2, z(z+a)/(az+1)) with four regular embedded ends",
        gauss="z^2",
        gauss_star="(z*(z+a))/(a*z+1)",
        defaults={"a": "2"},
        checks={"a": _real_param("a", (Fraction(0), Fraction(1), Fraction(-1)))},
        fixture={
            "residues": Expected({"1": "(1+a)/a", "-1": "(a-1)/a", "inf": "-2"}, "reported"),
            "ordQ": Expected({"0": -1, "1": -2, "-1": -2, "inf": -1}, "reported"),
            "degrees": Expected((2, 2, 4), "reported"),
            "embedded": Expected(True, "reported"),
            "nu_G": Expected(Fraction(3), "reported"),
            "nu_Gstar": Expected(Fraction(2), "reported"),
            "exceptional_Gstar_count": Expected(1, "reported"),
            "exceptional_Gstar": Expected(["1"], "computed", "the omitted value of G* is 1, not 0"),
        },
    )
)
_register(
    CatalogEntry(
        name="k2-five-ends",
        description="(z^3, z(z+6)/(2z+5)) with five regular embedded ends",
        gauss="z^3",
        gauss_star="z*(z+6)/(2*z+5)",
        fixture={
            "residues": Expected({"1": "7/5", "-2": "-2", "-3/2": "18/5", "inf": "-3"}, "reported"),
            "degrees": Expected((3, 2, 5), "reported"),
            "embedded": Expected(True, "reported"),
            "hopf_numerator": Expected("z^2 + 5*z + 15", "computed", "exact expansion of -G' G*' / (G - G*)^2"),
            "nu_G": Expected(Fraction(2), "computed", "two exceptional values and no ramified value"),
            "nu_Gstar": Expected(Fraction(1), "reported"),
            "ramified_Gstar": Expected([2, 2], "reported"),
        },
    )
)
_register(
    CatalogEntry(
        name="k3-torus",
        description="(wp'/wp, 2(wp^2-3a^2)/wp') on the square torus, a = wp(1/2)",
        gauss="wpp/wp",
        gauss_star="2*(wp^2-3*a^2)/wpp",
        genus=1,
        fixture={
            "degrees": Expected((2, 4, 5), "reported"),
            "embedded": Expected(False, "reported"),
            "coincidences_outside_ends": Expected(["0"], "computed", "G = G* = inf at the lattice point"),
        },
        window="0,1,0,1",
    )
)


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None


def build(name: str, overrides: Mapping[str, object] | None = None, scale=1):
    """The spec (genus 0) or torus front (genus 1) of a catalog entry."""
    from .front import FrontSpec

    entry = get(name)
    bindings = entry.bindings(overrides)
    if entry.genus == 1:
        from .elliptic import TORUS, TorusFront

        a = TORUS.a
        modulus = abs(complex(parse_constant(scale) if isinstance(scale, str) else scale))
        # ends are the zeros of wp (wp^2 + a^2)
        return TorusFront.from_text(entry.gauss, entry.gauss_star, (0j, 1j * a, -1j * a), scale=modulus)
    g = parse_rational(entry.gauss, bindings)
    gs = parse_rational(entry.gauss_star, bindings)
    return FrontSpec.build(g, gs, scale)


def run_catalog(name: str, overrides: Mapping[str, object] | None = None, scale=1):
    from .report import analyze_spec, analyze_torus

    obj = build(name, overrides, scale)
    if get(name).genus == 1:
        return analyze_torus(obj)
    return analyze_spec(obj)


__all__ = ["CATALOG", "CatalogEntry", "CatalogError", "Expected", "build", "get", "run_catalog"]
