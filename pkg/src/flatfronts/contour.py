"""Zero level sets of sampled scalar fields (marching squares via scikit-image)."""

from __future__ import annotations

import numpy as np
from skimage.measure import find_contours


def marching_squares(
    values: np.ndarray,
    xs: np.ndarray,
    ys: np.ndarray,
    level: float = 0.0,
    valid: np.ndarray | None = None,
) -> list[np.ndarray]:
    """Polylines of ``values == level`` on the grid ``values[i, j] ~ (xs[j], ys[i])``.

    Points with ``valid == False`` or a non-finite value are left out, which
    disables every cell touching them.  Returns ``(m, 2)`` arrays of ``(x, y)``;
    closed curves repeat their first point.
    """
    values = np.asarray(values, dtype=float)
    mask = np.isfinite(values)
    if valid is not None:
        mask &= valid
    if mask.sum() < 4:
        return []
    filled = np.where(mask, values, level)
    rows = np.arange(len(ys))
    cols = np.arange(len(xs))
    out = []
    for line in find_contours(filled, level, mask=mask):
        x = np.interp(line[:, 1], cols, xs)
        y = np.interp(line[:, 0], rows, ys)
        out.append(np.column_stack([x, y]))
    return out
