"""Residual-feedback correction weighted by median local total variation.

Row-subsampled spectra alias each pixel with its vertical half-period
partner.  Comparing windowed medians of local total variation between the
two partners decides which one receives the data-consistency residual; the
weighted update contracts the residual geometrically until the acquired
spectrum entries are matched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import ConfigError, NumericalError, SymmetryError
from .fourier import dft2_centered, idft2_centered, mask_is_symmetric
from .metrics import psnr


def smooth_vertical(a: np.ndarray, n_passes: int) -> np.ndarray:
    """Apply the vertical 3-tap kernel (1, 2, 1)/4 ``n_passes`` times,
    with (3a + neighbor)/4 at the top and bottom rows."""
    if n_passes < 0:
        raise ConfigError(f"smoothing pass count must be >= 0, got {n_passes}")
    out = a
    for _ in range(n_passes):
        nxt = np.empty_like(out)
        nxt[1:-1, :] = 0.25 * (out[:-2, :] + 2.0 * out[1:-1, :] + out[2:, :])
        nxt[0, :] = 0.25 * (3.0 * out[0, :] + out[1, :])
        nxt[-1, :] = 0.25 * (out[-2, :] + 3.0 * out[-1, :])
        out = nxt
    return out


def smooth_symmetric(a: np.ndarray, n_passes: int) -> np.ndarray:
    """Smoothing for box patterns: each pass filters vertically, then
    horizontally."""
    out = a
    for _ in range(n_passes):
        out = smooth_vertical(smooth_vertical(out, 1).T, 1).T
    return out


def local_tv_map(a: np.ndarray) -> np.ndarray:
    """Local total variation at every pixel: the two horizontal neighbor
    differences plus the four vertical differences spanning rows k-2..k+2,
    each over the three columns k2-1..k2+1.  Missing neighbors at the image
    boundary contribute nothing."""
    n_rows, n_cols = a.shape
    tv = np.zeros((n_rows, n_cols))
    dh = np.abs(a[:, 1:] - a[:, :-1])
    dv = np.abs(a[1:, :] - a[:-1, :])
    tv[:, :-1] += dh
    tv[:, 1:] += dh
    for di in (-2, -1, 0, 1):
        i0, i1 = max(0, -di), min(n_rows, n_rows - 1 - di)
        for dj in (-1, 0, 1):
            j0, j1 = max(0, -dj), min(n_cols, n_cols - dj)
            tv[i0:i1, j0:j1] += dv[i0 + di:i1 + di, j0 + dj:j1 + dj]
    return tv


def local_tv_map_symmetric(a: np.ndarray) -> np.ndarray:
    """Axis-symmetric local total variation for box patterns: the standard
    map plus its transpose-oriented counterpart."""
    return local_tv_map(a) + local_tv_map(a.T).T


def mtv_map(tv: np.ndarray, gamma1: int, gamma2: int) -> np.ndarray:
    """Windowed median of local-TV values over [-gamma1, gamma1] x
    [-gamma2, gamma2], truncated at the boundary (only existing values
    enter; even counts give the midpoint of the two central values)."""
    if gamma1 < 0 or gamma2 < 0:
        raise ConfigError("median window half-widths must be >= 0")
    if gamma1 == 0 and gamma2 == 0:
        return tv.copy()
    n_rows, n_cols = tv.shape
    padded = np.full((n_rows + 2 * gamma1, n_cols + 2 * gamma2), np.nan)
    padded[gamma1:gamma1 + n_rows, gamma2:gamma2 + n_cols] = tv
    windows = sliding_window_view(padded, (2 * gamma1 + 1, 2 * gamma2 + 1))
    return np.nanmedian(windows, axis=(2, 3))


def _pair_weights(own, partner, eps):
    strong_own = own > 1.5 * partner
    strong_partner = partner > 1.5 * own
    total = own + partner
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(total > 1e-14, own / np.where(total > 0, total, 1.0), 0.5)
    w = np.clip(ratio, eps, 1.0 - eps)
    w[strong_own] = 1.0 - eps
    w[strong_partner] = eps
    return w


def weight_matrix(mtv: np.ndarray, eps: float, axis: int = 0) -> np.ndarray:
    """Per-pixel residual weights from MTV comparison with the half-period
    partner along ``axis``:

    1 - eps where the own MTV dominates (> 1.5x the partner's), eps where the
    partner dominates, and the ratio own/(own + partner) otherwise (clipped
    to [eps, 1 - eps]; a vanishing pair gives 1/2).
    """
    if not 0.0 < eps < 0.5:
        raise ConfigError(f"weight floor must satisfy 0 < eps < 0.5, got {eps}")
    half = mtv.shape[axis] // 2
    partner = np.roll(mtv, half, axis=axis)
    return _pair_weights(mtv, partner, eps)


def residual(s_masked: np.ndarray, mask: np.ndarray,
             a_current: np.ndarray) -> np.ndarray:
    """Image-domain residual restoring data consistency when added:
    mask o spec(a + residual) equals the acquired data exactly."""
    return idft2_centered(mask * (s_masked - dft2_centered(a_current)))


@dataclass
class HybridParams:
    """Knobs of the residual-feedback correction.

    ``mu`` amplifies the weighted residual and must stay in [1, 2) for the
    contraction guarantee; ``eps`` floors the weights away from 0 and 1.
    ``refresh_mtv`` recomputes the TV statistics from the running iterate
    instead of keeping the ones of the initial image.
    """

    mu: float = 1.6
    eps: float = 0.05
    gamma1: int = 3
    gamma2: int = 3
    n_smooth: int = 0
    n_iter: int = 10
    stop_tol: float | None = None
    refresh_mtv: bool = False

    def __post_init__(self):
        if not 1.0 <= self.mu < 2.0:
            raise ConfigError(f"amplification must be in [1, 2), got {self.mu}")
        if not 0.0 < self.eps < 0.5:
            raise ConfigError(f"weight floor must be in (0, 0.5), got {self.eps}")
        if self.gamma1 < 0 or self.gamma2 < 0:
            raise ConfigError("median window half-widths must be >= 0")
        if self.n_smooth < 0 or self.n_iter < 0:
            raise ConfigError("iteration counts must be >= 0")


def _check_symmetric_mask(mask):
    if not mask_is_symmetric(mask):
        raise SymmetryError(
            "hybrid correction needs a mirror-symmetric sampling pattern")


def _run_correction(a0, s_masked, mask, params, weights_of, callback,
                    ground_truth):
    w = weights_of(a0)
    a = a0
    res = residual(s_masked, mask, a).real
    res_norm = float(np.linalg.norm(res))
    bound = 1.0 - params.eps
    res0_norm = res_norm
    for j in range(params.n_iter):
        a = a + params.mu * (w * res)
        res = residual(s_masked, mask, a).real
        new_norm = float(np.linalg.norm(res))
        if new_norm > bound * res_norm + 1e-12 * (1.0 + res_norm):
            raise NumericalError(
                f"residual contraction violated at step {j}: "
                f"{new_norm:.6e} > (1 - eps) * {res_norm:.6e}")
        res_norm = new_norm
        if callback is not None:
            quality = psnr(ground_truth, a) if ground_truth is not None else None
            callback(j, res_norm, quality)
        if params.stop_tol is not None and res_norm <= params.stop_tol * res0_norm:
            break
        if params.refresh_mtv:
            w = weights_of(a)
    return a


def hybrid_reconstruct(a_init: np.ndarray, s_masked: np.ndarray,
                       mask: np.ndarray, params: HybridParams,
                       ground_truth: np.ndarray | None = None,
                       callback=None) -> np.ndarray:
    """Improve an initial reconstruction on a symmetric row pattern by
    MTV-weighted residual feedback.

    The initial image (typically a TV-minimization output) is smoothed
    vertically ``n_smooth`` times; its local-TV medians decide the per-pixel
    weights; then ``n_iter`` residual updates a += mu * (w o residual) run.
    ``callback(j, residual_norm, psnr)`` reports progress (PSNR only when
    ``ground_truth`` is given).
    """
    _check_symmetric_mask(mask)

    def weights_of(img):
        tv_loc = local_tv_map(img)
        mtv = mtv_map(tv_loc, params.gamma1, params.gamma2)
        return weight_matrix(mtv, params.eps, axis=0)

    a0 = smooth_vertical(np.asarray(a_init, dtype=float), params.n_smooth)
    return _run_correction(a0, s_masked, mask, params, weights_of, callback,
                           ground_truth)


def hybrid_reconstruct_box(a_init: np.ndarray, s_masked: np.ndarray,
                           mask: np.ndarray, params: HybridParams,
                           ground_truth: np.ndarray | None = None,
                           callback=None) -> np.ndarray:
    """Two-axis variant for box patterns: weights from vertical and
    horizontal partner comparisons are averaged each update."""
    _check_symmetric_mask(mask)

    def weights_of(img):
        tv_loc = local_tv_map_symmetric(img)
        mtv = mtv_map(tv_loc, params.gamma1, params.gamma2)
        w1 = weight_matrix(mtv, params.eps, axis=0)
        w2 = weight_matrix(mtv, params.eps, axis=1)
        return 0.5 * (w1 + w2)

    a0 = smooth_symmetric(np.asarray(a_init, dtype=float), params.n_smooth)
    return _run_correction(a0, s_masked, mask, params, weights_of, callback,
                           ground_truth)
