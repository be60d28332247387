"""Sampling, triangulation and export of fronts in the Poincare ball."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol, Sequence

import numpy as np

from .contour import marching_squares
from .front import FrontSpec, ball_points, front_matrices, log_rho_sq
from .sphere import INF, point_sort_key

DEFAULT_RESOLUTION = 256
EXCLUSION_FRACTION = 1e-2
DEGENERATE_TOL = 1e-9


class MeshError(ValueError):
    pass


class Surface(Protocol):
    backend: str

    def matrices(self, z: np.ndarray, t: float) -> tuple[np.ndarray, np.ndarray]: ...

    def polyline_matrices(self, line: np.ndarray, t: float) -> tuple[np.ndarray, np.ndarray]: ...

    def log_rho_sq(self, z: np.ndarray) -> np.ndarray: ...

    def excluded_points(self) -> list[complex]: ...

    def describe(self) -> dict: ...


@dataclass(frozen=True)
class RationalSurface:
    """Closed-form evaluation of a genus-0 spec."""

    spec: FrontSpec
    backend: str = "closed-form"

    def matrices(self, z, t):
        return front_matrices(self.spec, z, t)

    def polyline_matrices(self, line, t):
        return front_matrices(self.spec, line, t)

    def log_rho_sq(self, z):
        return log_rho_sq(self.spec, z)

    def excluded_points(self) -> list[complex]:
        pts = [p for p in self.spec.ends if p is not INF]
        for g in (self.spec.gauss, self.spec.gauss_star):
            if g.den.degree >= 1:
                from .algebra import roots

                pts.extend(p for p, _ in roots(g.den))
        pts = sorted(set(complex(p) for p in pts), key=point_sort_key)
        return pts

    def describe(self) -> dict:
        from .report import spec_echo

        return spec_echo(self.spec)


def as_surface(obj) -> Surface:
    return RationalSurface(obj) if isinstance(obj, FrontSpec) else obj


# Sampling plans -------------------------------------------------------------


@dataclass(frozen=True)
class Window:
    x0: float
    x1: float
    y0: float
    y1: float

    def __post_init__(self):
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise MeshError(f"degenerate window {self}")

    @classmethod
    def parse(cls, text: str) -> "Window":
        try:
            vals = [float(v) for v in text.split(",")]
        except ValueError as exc:
            raise MeshError(f"bad window {text!r}") from exc
        if len(vals) != 4:
            raise MeshError("window needs x0,x1,y0,y1")
        return cls(*vals)

    @property
    def diameter(self) -> float:
        return math.hypot(self.x1 - self.x0, self.y1 - self.y0)

    def grid(self, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Parameter grid ``z[i, j]`` with its axis coordinates."""
        xs = np.linspace(self.x0, self.x1, n + 1)
        ys = np.linspace(self.y0, self.y1, n + 1)
        return xs[None, :] + 1j * ys[:, None], xs, ys


@dataclass(frozen=True)
class Annulus:
    """Polar grid with geometrically spaced radii; the angular seam is duplicated."""

    center: complex
    inner: float
    outer: float

    def __post_init__(self):
        if not (0 < self.inner < self.outer):
            raise MeshError(f"degenerate annulus {self}")

    @property
    def diameter(self) -> float:
        return 2 * self.outer

    def grid(self, n: int):
        rs = np.geomspace(self.inner, self.outer, n + 1)
        angles = np.linspace(0.0, 2 * math.pi, n + 1)
        z = self.center + rs[:, None] * np.exp(1j * angles[None, :])
        # contouring happens in (log r, angle) coordinates
        return z, angles, np.log(rs)


@dataclass
class Mesh:
    vertices: np.ndarray
    faces: np.ndarray
    rho: np.ndarray
    t: float
    parameters: np.ndarray
    polylines: list = field(default_factory=list)
    parameter_polylines: list = field(default_factory=list)
    degenerate_level_set: bool = False
    spec: dict = field(default_factory=dict)
    backend: str = "closed-form"


@dataclass(frozen=True)
class SingularLocus:
    polylines: list
    degenerate: bool


# Core -----------------------------------------------------------------------


def _valid_mask(z: np.ndarray, excluded: Sequence[complex], radius: float) -> np.ndarray:
    mask = np.ones(z.shape, dtype=bool)
    for p in excluded:
        mask &= np.abs(z - p) > radius
    return mask


def _cells(mask: np.ndarray) -> np.ndarray:
    return mask[:-1, :-1] & mask[1:, :-1] & mask[:-1, 1:] & mask[1:, 1:]


def _to_parameter(line: np.ndarray, plan) -> np.ndarray:
    a, b = line[:, 0], line[:, 1]
    if isinstance(plan, Annulus):
        return plan.center + np.exp(b) * np.exp(1j * a)
    return a + 1j * b


def _locus_from_grid(values, axes_x, axes_y, valid, plan) -> SingularLocus:
    finite = values[np.isfinite(values) & valid]
    if finite.size and np.all(np.abs(finite) <= DEGENERATE_TOL):
        return SingularLocus([], True)
    lines = marching_squares(values, axes_x, axes_y, 0.0, valid)
    return SingularLocus([_to_parameter(ln, plan) for ln in lines], False)


def singular_locus(source, plan, resolution: int = DEFAULT_RESOLUTION) -> SingularLocus:
    """Curves ``|rho| = 1`` in the parameter domain, or a degenerate-level-set flag."""
    surface = as_surface(source)
    if resolution < 2:
        raise MeshError("resolution must be at least 2")
    z, ax, ay = plan.grid(resolution)
    mask = _valid_mask(z, surface.excluded_points(), EXCLUSION_FRACTION * plan.diameter)
    values = surface.log_rho_sq(z)
    return _locus_from_grid(values, ax, ay, mask, plan)


def build_mesh(source, plan, resolution: int = DEFAULT_RESOLUTION, t: float = 0.0) -> Mesh:
    surface = as_surface(source)
    if resolution < 2:
        raise MeshError("resolution must be at least 2")
    z, ax, ay = plan.grid(resolution)
    mask = _valid_mask(z, surface.excluded_points(), EXCLUSION_FRACTION * plan.diameter)
    f, _ = surface.matrices(z, t)
    ball = np.full(z.shape + (3,), np.nan)
    ok = mask & np.all(np.isfinite(f.reshape(z.shape + (4,))), axis=-1)
    ball[ok] = ball_points(f[ok])
    ok &= np.all(np.isfinite(ball), axis=-1) & (np.linalg.norm(np.nan_to_num(ball, nan=2.0), axis=-1) < 1.0)
    cells = _cells(ok)
    if not cells.any():
        raise MeshError("no sample cells survive the exclusion policy")

    used = np.zeros(z.shape, dtype=bool)
    used[:-1, :-1] |= cells
    used[1:, :-1] |= cells
    used[:-1, 1:] |= cells
    used[1:, 1:] |= cells
    index = -np.ones(z.shape, dtype=np.int64)
    index[used] = np.arange(used.sum())
    ci, cj = np.nonzero(cells)
    v00, v01 = index[ci, cj], index[ci, cj + 1]
    v10, v11 = index[ci + 1, cj], index[ci + 1, cj + 1]
    faces = np.concatenate([np.stack([v00, v01, v11], 1), np.stack([v00, v11, v10], 1)])
    faces = faces[np.lexsort((faces[:, 2], faces[:, 1], faces[:, 0]))]

    log_rho = surface.log_rho_sq(z)
    # the level set uses the t-independent exclusion mask so every parallel front shares it
    locus = _locus_from_grid(log_rho, ax, ay, mask, plan)
    polylines = []
    for line in locus.polylines:
        lf, _ = surface.polyline_matrices(line, t)
        pts = ball_points(lf)
        pts = pts[np.all(np.isfinite(pts), axis=1)]
        if len(pts) >= 2:
            polylines.append(pts)
    with np.errstate(over="ignore"):
        rho = np.exp(0.5 * log_rho[used])
    return Mesh(
        vertices=ball[used],
        faces=faces,
        rho=rho,
        t=float(t),
        parameters=z[used],
        polylines=polylines,
        parameter_polylines=locus.polylines,
        degenerate_level_set=locus.degenerate,
        spec=surface.describe(),
        backend=surface.backend,
    )


# Export ---------------------------------------------------------------------


def _g(x: float) -> str:
    return format(float(x), ".17g")


def obj_text(mesh: Mesh) -> str:
    out = []
    for v in mesh.vertices:
        out.append("v " + " ".join(_g(c) for c in v))
    extra = len(mesh.vertices)
    for line in mesh.polylines:
        for v in line:
            out.append("v " + " ".join(_g(c) for c in v))
    for a, b, c in mesh.faces + 1:
        out.append(f"f {a} {b} {c}")
    start = extra + 1
    for line in mesh.polylines:
        out.append("l " + " ".join(str(start + k) for k in range(len(line))))
        start += len(line)
    return "\n".join(out) + "\n"


def sidecar(mesh: Mesh) -> dict:
    from .report import Raw

    return {
        "backend": mesh.backend,
        "degenerate_level_set": mesh.degenerate_level_set,
        "rho": [Raw(x) for x in mesh.rho],
        "singular_curves": [
            [[Raw(p.real), Raw(p.imag)] for p in line] for line in mesh.parameter_polylines
        ],
        "spec": mesh.spec,
        "t": Raw(mesh.t),
    }


def write_mesh(mesh: Mesh, path) -> tuple[Path, Path]:
    """Write ``path`` (OBJ) and ``path`` with suffix ``.json`` (sidecar)."""
    from .report import dumps

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(obj_text(mesh))
    side = path.with_suffix(".json")
    side.write_text(dumps(sidecar(mesh)))
    return path, side
