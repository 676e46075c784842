"""Quality and diagnostic metrics: PSNR, discrete total variation, and the
energy of the discarded spectrum coefficients."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .tv import grad, tv_norm


def psnr(a: np.ndarray, a_rec: np.ndarray) -> float:
    """Peak signal-to-noise ratio 10*log10(N*M / ||a_rec - a||_F^2) for
    images normalized to [0, 1]; exact recovery reports +inf."""
    if a.shape != a_rec.shape:
        raise ConfigError(f"image shapes disagree: {a.shape} vs {a_rec.shape}")
    err2 = float(np.sum(np.abs(a_rec - a) ** 2))
    if err2 == 0.0:
        return float("inf")
    return 10.0 * np.log10(a.size / err2)


def discrete_tv(a: np.ndarray) -> float:
    """Isotropic total variation of an image: ||grad(a)||_1."""
    return tv_norm(grad(a))


def missing_energy(s_full: np.ndarray, mask: np.ndarray) -> float:
    """Sum of squared magnitudes of the unacquired spectrum entries; equals
    the squared Frobenius error of zero refilling."""
    if s_full.shape != mask.shape:
        raise ConfigError(f"spectrum {s_full.shape} and mask {mask.shape} disagree")
    return float(np.sum((1.0 - mask) * np.abs(s_full) ** 2))


@dataclass
class QualityReport:
    """Bundle of quality figures for one reconstruction."""

    psnr_db: float
    frobenius_error: float
    tv_value: float
    data_fidelity: float


def quality_report(a: np.ndarray, a_rec: np.ndarray, s_masked: np.ndarray,
                   mask: np.ndarray) -> QualityReport:
    from .fourier import dft2_centered

    err = float(np.linalg.norm(a_rec - a))
    fidelity = float(np.linalg.norm(mask * (dft2_centered(a_rec) - s_masked)))
    return QualityReport(psnr_db=psnr(a, a_rec), frobenius_error=err,
                         tv_value=discrete_tv(a_rec), data_fidelity=fidelity)
