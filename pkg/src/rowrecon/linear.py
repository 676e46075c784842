"""Non-adaptive baselines: zero refilling, windowed low-pass reconstruction,
and the closed-form analysis of interpolating from odd rows alone.

These methods serve as references and as test oracles for the adaptive
solvers; none of them can outperform zero refilling in the 2-norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, WindowSupportError
from .fourier import centered_index_set, dft2_centered, idft2_centered


@dataclass
class WindowVector:
    """Row-weight vector over the centered index set of length N.

    ``support`` is an inclusive centered interval (lo, hi); weights vanish
    outside it.
    """

    weights: np.ndarray
    support: tuple[int, int]

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=float)
        n = len(self.weights)
        idx = centered_index_set(n)
        outside = (idx < self.support[0]) | (idx > self.support[1])
        if np.any(self.weights[outside] != 0):
            raise ConfigError("window weights must vanish outside the support")

    @property
    def support_indices(self) -> np.ndarray:
        idx = centered_index_set(len(self.weights))
        return idx[(idx >= self.support[0]) & (idx <= self.support[1])]


def dirichlet_window(ell: int, N: int) -> WindowVector:
    """Indicator window of the low-pass rows -ell..ell (width L = 2*ell + 1)."""
    if not 0 <= ell <= N // 2 - 1:
        raise ConfigError(f"need 0 <= ell <= N/2 - 1, got ell={ell}")
    w = np.zeros(N)
    half = N // 2
    w[half - ell:half + ell + 1] = 1.0
    return WindowVector(w, (-ell, ell))


def hamming_window(ell: int, N: int) -> WindowVector:
    """Hamming weights 0.54 + 0.46*cos(2 pi k / (2 ell)) on -ell..ell."""
    if ell < 1:
        raise ConfigError("hamming window needs ell >= 1")
    if ell > N // 2 - 1:
        raise ConfigError(f"ell={ell} does not fit a length-{N} grid")
    w = np.zeros(N)
    k = np.arange(-ell, ell + 1)
    half = N // 2
    w[half + k] = 0.54 + 0.46 * np.cos(2 * np.pi * k / (2 * ell))
    return WindowVector(w, (-ell, ell))


def zero_refill(s_masked: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """Inverse DFT after filling every unacquired coefficient with zero."""
    if s_masked.shape != mask.shape:
        raise ConfigError(
            f"spectrum {s_masked.shape} and mask {mask.shape} disagree")
    return idft2_centered(mask * s_masked)


def window_recon(s_masked: np.ndarray, window: WindowVector,
                 mask: np.ndarray) -> np.ndarray:
    """Reconstruct by weighting each spectrum row with the window vector.

    Each image column becomes a circular convolution of the true column with
    the inverse transform of the window.  The window support must lie inside
    the acquired rows.
    """
    if s_masked.shape != mask.shape:
        raise ConfigError(
            f"spectrum {s_masked.shape} and mask {mask.shape} disagree")
    N = s_masked.shape[0]
    if len(window.weights) != N:
        raise ConfigError(f"window length {len(window.weights)} != {N} rows")
    sup = window.support_indices + N // 2
    if not np.all(mask[sup, :] == 1):
        raise WindowSupportError("window support reaches unacquired rows")
    return idft2_centered(window.weights[:, None] * s_masked)


@dataclass
class InterpWeights:
    """Periodic interpolation weights on the half-height grid (n x M).

    ``w_check`` caches sqrt(M*n) times the inverse centered DFT of ``w``;
    it drives the closed-form prediction of the interpolation outcome.
    """

    w: np.ndarray
    w_check: np.ndarray = field(init=False)

    def __post_init__(self):
        self.w = np.asarray(self.w, dtype=complex)
        n, M = self.w.shape
        self.w_check = np.sqrt(M * n) * idft2_centered(self.w)


def _odd_row_data(s):
    # rows with centered index 2*l+1, ordered by l in centered layout
    return s[1::2, :]


def theorem1_interpolate(s_odd: np.ndarray, weights: InterpWeights) -> np.ndarray:
    """Fill the even spectrum rows from the odd ones by periodic local
    interpolation, then invert the completed spectrum.

    ``s_odd`` must vanish on all even-indexed rows (only odd rows acquired).
    """
    N, M = s_odd.shape
    if N % 4:
        raise ConfigError(f"odd-row interpolation needs N divisible by 4, got {N}")
    n = N // 2
    if weights.w.shape != (n, M):
        raise ConfigError(
            f"weights must be {(n, M)} for a {N}x{M} spectrum, got {weights.w.shape}")
    if np.any(s_odd[0::2, :] != 0):
        raise ConfigError("even-indexed rows must be empty (odd rows only)")

    odd = _odd_row_data(s_odd)
    kernel = np.fft.ifftshift(weights.w)
    filled_even = np.fft.ifft2(np.fft.fft2(kernel) * np.fft.fft2(odd))
    completed = np.zeros((N, M), dtype=complex)
    completed[1::2, :] = odd
    completed[0::2, :] = filled_even
    return idft2_centered(completed)


def theorem1_predict(a: np.ndarray, weights: InterpWeights) -> np.ndarray:
    """Closed-form prediction of :func:`theorem1_interpolate` applied to the
    odd rows of the spectrum of ``a``:

        0.5 * (1 + w_check(k) * omega_N^k1) * (a(k) - a(k1 - n, k2))

    with periodic index reduction in both the weights and the image.
    """
    a = np.asarray(a, dtype=complex)
    N, M = a.shape
    if N % 4:
        raise ConfigError(f"prediction needs N divisible by 4, got {N}")
    n = N // 2
    if weights.w.shape != (n, M):
        raise ConfigError(
            f"weights must be {(n, M)} for a {N}x{M} image, got {weights.w.shape}")

    k1 = np.arange(N) - n
    rows = (np.arange(N) + n // 2) % n
    w_check_full = weights.w_check[rows, :]
    omega = np.exp(-2j * np.pi * k1 / N)[:, None]
    shifted = np.roll(a, n, axis=0)
    return 0.5 * (1.0 + w_check_full * omega) * (a - shifted)
