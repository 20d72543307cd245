"""Rational-hat vectorization of barcodes with analytic gradients.

Each output coordinate i sums, over bar points p, the bounded bump
    1/(1 + |p-c_i|_1) - 1/(1 + ||r_i| - |p-c_i|_1|)
so a barcode of any size maps to a fixed k-vector.  Gradients are exact away
from the L1 kinks; at a kink the corresponding subgradient coordinate is 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .extended import KINDS, ExtendedBarcode

__all__ = [
    "RationalHatParams",
    "RationalHatGrad",
    "rational_hat",
    "rational_hat_grad",
    "vectorize_barcode",
    "init_rational_hat_params",
    "params_to_json",
    "params_from_json",
]


@dataclass(frozen=True)
class RationalHatParams:
    centers: np.ndarray  # (k, 2)
    radii: np.ndarray    # (k,)

    def __init__(self, centers, radii):
        centers = np.asarray(centers, dtype=np.float64).reshape(-1, 2)
        radii = np.asarray(radii, dtype=np.float64).reshape(-1)
        if centers.shape[0] != radii.shape[0] or centers.shape[0] < 1:
            raise ValueError("need k >= 1 centers with matching radii")
        if not (np.all(np.isfinite(centers)) and np.all(np.isfinite(radii))):
            raise ValueError("parameters must be finite")
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "radii", radii)

    @property
    def k(self) -> int:
        return self.centers.shape[0]


def _as_points(bars) -> np.ndarray:
    if isinstance(bars, ExtendedBarcode):
        bars = [(b.birth, b.death) for b in bars.bars()]
    arr = np.asarray(list(bars) if not isinstance(bars, np.ndarray) else bars, dtype=np.float64)
    if arr.size == 0:
        return np.empty((0, 2))
    return arr.reshape(-1, 2)


def _canonical_order(pts: np.ndarray) -> np.ndarray:
    # summing in sorted point order makes the output independent of the
    # multiset's presentation order (exact, not just up to rounding)
    return np.lexsort((pts[:, 1], pts[:, 0]))


def rational_hat(bars, params: RationalHatParams) -> np.ndarray:
    """Sum the per-bar bump over the multiset; empty input gives zeros."""
    pts = _as_points(bars)
    if pts.shape[0] == 0:
        return np.zeros(params.k)
    pts = pts[_canonical_order(pts)]
    d = np.abs(pts[:, None, :] - params.centers[None, :, :]).sum(axis=2)  # (B,k)
    r = np.abs(params.radii)[None, :]
    return (1.0 / (1.0 + d) - 1.0 / (1.0 + np.abs(r - d))).sum(axis=0)


class RationalHatGrad(NamedTuple):
    value: np.ndarray      # (k,)
    d_points: np.ndarray   # (B, 2, k): d value[i] / d p[b, coord]
    d_centers: np.ndarray  # (k, 2)
    d_radii: np.ndarray    # (k,)


def rational_hat_grad(bars, params: RationalHatParams) -> RationalHatGrad:
    pts = _as_points(bars)
    k = params.k
    if pts.shape[0] == 0:
        return RationalHatGrad(np.zeros(k), np.zeros((0, 2, k)), np.zeros((k, 2)), np.zeros(k))
    order = _canonical_order(pts)
    spts = pts[order]
    x = spts[:, None, :] - params.centers[None, :, :]  # (B,k,2)
    sx = np.sign(x)
    d = np.abs(x).sum(axis=2)                          # (B,k)
    r = np.abs(params.radii)[None, :]
    a = r - d
    value = (1.0 / (1.0 + d) - 1.0 / (1.0 + np.abs(a))).sum(axis=0)

    df_dd = -((1.0 + d) ** -2.0) - np.sign(a) * ((1.0 + np.abs(a)) ** -2.0)
    d_points = np.empty((pts.shape[0], 2, k))
    d_points[order] = (df_dd[:, :, None] * sx).transpose(0, 2, 1)
    d_centers = -(df_dd[:, :, None] * sx).sum(axis=0)                # (k,2)
    d_radii = (np.sign(a) * ((1.0 + np.abs(a)) ** -2.0)).sum(axis=0) * np.sign(params.radii)
    return RationalHatGrad(value, d_points, d_centers, d_radii)


def vectorize_barcode(bc: ExtendedBarcode, params4) -> np.ndarray:
    """Apply one hat per bar kind and concatenate in fixed kind order."""
    if len(params4) != 4:
        raise ValueError("expected one RationalHatParams per bar kind")
    blocks = []
    for kind, params in zip(KINDS, params4):
        pts = [(b.birth, b.death) for b in bc.by_kind(kind)]
        blocks.append(rational_hat(pts, params))
    return np.concatenate(blocks)


def init_rational_hat_params(reference_bars, k: int = 64, seed: int = 0) -> RationalHatParams:
    """Seeded init: centers uniform over the reference bounding box, radii U(0.1,1)."""
    rng = np.random.default_rng(seed)
    pts = _as_points(reference_bars)
    if pts.shape[0] == 0:
        lo = np.array([0.0, 0.0])
        hi = np.array([1.0, 1.0])
    else:
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        hi = np.where(hi > lo, hi, lo + 1.0)
    centers = rng.uniform(lo, hi, size=(k, 2))
    radii = rng.uniform(0.1, 1.0, size=k)
    return RationalHatParams(centers, radii)


def params_to_json(params_list) -> str:
    if isinstance(params_list, RationalHatParams):
        params_list = [params_list]
    return json.dumps(
        [
            {"centers": p.centers.tolist(), "radii": p.radii.tolist()}
            for p in params_list
        ]
    )


def params_from_json(text: str):
    return [
        RationalHatParams(obj["centers"], obj["radii"]) for obj in json.loads(text)
    ]
