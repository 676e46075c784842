"""Data-adaptive Fourier-domain interpolation: single-coil GRAPPA and SPIRiT.

Both methods learn local interpolation weights from the fully sampled
low-pass block and use them to estimate unacquired spectrum entries; GRAPPA
fills each missing entry once from its acquired neighbors, SPIRiT enforces
self-consistency of the whole spectrum through a fixed-point iteration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CalibrationError, ConfigError, NumericalError
from .fourier import idft2_centered

_RIDGE_COND_LIMIT = 1e12
_RIDGE_SCALE = 1e-10


@dataclass(frozen=True)
class NeighborhoodWindow:
    """Centered offset window {-p1..p1} x {-p2..p2}."""

    p1: int = 5
    p2: int = 5

    def __post_init__(self):
        if self.p1 < 0 or self.p2 < 0:
            raise ConfigError("window half-widths must be >= 0")

    @property
    def size(self) -> int:
        return (2 * self.p1 + 1) * (2 * self.p2 + 1)

    def offsets(self):
        return tuple((j1, j2)
                     for j1 in range(-self.p1, self.p1 + 1)
                     for j2 in range(-self.p2, self.p2 + 1))


@dataclass
class PatternAssignment:
    """Distinct acquired-neighbor patterns of a row mask and where they apply.

    ``segments`` lists (row, col_start, col_stop, pattern_id) in array
    coordinates; ``stay_zero`` collects rows without any acquired neighbor.
    """

    window: NeighborhoodWindow
    patterns: list
    segments: list
    stay_zero: list

    def pattern_at(self, i: int, j: int):
        """Pattern (tuple of offsets) serving array position (i, j), or None
        if the position is acquired / has no acquired neighbors."""
        for row, lo, hi, pid in self.segments:
            if row == i and lo <= j < hi:
                return self.patterns[pid]
        return None


def _acquired_row_flags(mask):
    first = mask[:, :1]
    if not np.array_equal(mask, np.broadcast_to(first, mask.shape)):
        raise ConfigError("pattern enumeration expects a row mask")
    return first[:, 0].astype(bool)


def enumerate_patterns(mask: np.ndarray, window: NeighborhoodWindow) -> PatternAssignment:
    """For every unacquired position, collect the window offsets that land on
    acquired data, dedupe the resulting patterns, and record which positions
    each pattern serves.

    Patterns depend only on the row and on clipping at the left/right image
    border, so positions are grouped into row segments.
    """
    rows_acq = _acquired_row_flags(mask)
    n_rows, n_cols = mask.shape
    p1, p2 = window.p1, window.p2

    patterns: list = []
    ids: dict = {}
    segments = []
    stay_zero = []

    # runs of columns sharing the same clipped offset range [lo, hi]
    ranges = [(max(-p2, -jj), min(p2, n_cols - 1 - jj)) for jj in range(n_cols)]
    col_classes = []
    start = 0
    for jj in range(1, n_cols + 1):
        if jj == n_cols or ranges[jj] != ranges[start]:
            col_classes.append((*ranges[start], start, jj))
            start = jj

    for i in range(n_rows):
        if rows_acq[i]:
            continue
        row_offs = tuple(j1 for j1 in range(-p1, p1 + 1)
                         if 0 <= i + j1 < n_rows and rows_acq[i + j1])
        if not row_offs:
            stay_zero.append(i)
            continue
        for lo, hi, c0, c1 in col_classes:
            key = (row_offs, lo, hi)
            pid = ids.get(key)
            if pid is None:
                pid = len(patterns)
                ids[key] = pid
                patterns.append(tuple((j1, j2) for j1 in row_offs
                                      for j2 in range(lo, hi + 1)))
            segments.append((i, c0, c1, pid))

    return PatternAssignment(window=window, patterns=patterns,
                             segments=segments, stay_zero=stay_zero)


def _solve_normal(design, rhs):
    gram = design.conj().T @ design
    moment = design.conj().T @ rhs
    cond = np.linalg.cond(gram) if gram.size else 0.0
    if not np.isfinite(cond) or cond > _RIDGE_COND_LIMIT:
        scale = float(np.trace(gram).real) / max(gram.shape[0], 1)
        gram = gram + (_RIDGE_SCALE * scale) * np.eye(gram.shape[0])
    sol, *_ = np.linalg.lstsq(gram, moment, rcond=None)
    return sol


def fit_grappa_weights(calib: np.ndarray, pattern) -> np.ndarray:
    """Least-squares interpolation weights for one pattern, fitted on every
    calibration position whose full offset set stays inside the block.

    ``calib`` is the fully acquired low-pass block (L x M).  Raises
    :class:`CalibrationError` when fewer equations than unknowns exist.
    """
    offsets = np.asarray(pattern, dtype=int).reshape(-1, 2)
    n_rows, n_cols = calib.shape
    j1 = offsets[:, 0]
    j2 = offsets[:, 1]
    r0, r1 = max(0, -j1.min()), n_rows - max(0, j1.max())
    c0, c1 = max(0, -j2.min()), n_cols - max(0, j2.max())
    n_eq = max(r1 - r0, 0) * max(c1 - c0, 0)
    if n_eq < len(offsets):
        raise CalibrationError(
            f"pattern with {len(offsets)} offsets has only {n_eq} calibration "
            f"equations in a {n_rows}x{n_cols} block")
    design = np.empty((n_eq, len(offsets)), dtype=complex)
    for col, (d1, d2) in enumerate(offsets):
        design[:, col] = calib[r0 + d1:r1 + d1, c0 + d2:c1 + d2].ravel()
    rhs = calib[r0:r1, c0:c1].ravel()
    return _solve_normal(design, rhs)


@dataclass
class GrappaReport:
    """What the fill pass did: patterns fitted, patterns that could not be
    calibrated (their targets stay zero), and rows left empty."""

    n_patterns: int = 0
    unfit_patterns: list = field(default_factory=list)
    stay_zero_rows: list = field(default_factory=list)


def _lowpass_block(mask):
    rows_acq = _acquired_row_flags(mask)
    n_rows = mask.shape[0]
    center = n_rows // 2
    if not rows_acq[center]:
        raise CalibrationError("mask has no acquired center row to calibrate on")
    top = center
    while top > 0 and rows_acq[top - 1]:
        top -= 1
    bottom = center
    while bottom + 1 < n_rows and rows_acq[bottom + 1]:
        bottom += 1
    return top, bottom + 1


def grappa_fill(s_masked: np.ndarray, mask: np.ndarray,
                window: NeighborhoodWindow):
    """Complete the spectrum by per-pattern weighted interpolation.

    Returns the completed spectrum and a :class:`GrappaReport`.  Acquired
    entries are never altered; targets of uncalibratable patterns stay zero.
    """
    top, bottom = _lowpass_block(mask)
    if bottom - top < 2 * window.p1 + 1:
        raise CalibrationError(
            f"low-pass block of {bottom - top} rows is smaller than the "
            f"{2 * window.p1 + 1}-row window")
    calib = s_masked[top:bottom, :]
    assignment = enumerate_patterns(mask, window)

    report = GrappaReport(n_patterns=len(assignment.patterns),
                          stay_zero_rows=list(assignment.stay_zero))
    weights: list = []
    for pattern in assignment.patterns:
        try:
            weights.append(fit_grappa_weights(calib, pattern))
        except CalibrationError:
            report.unfit_patterns.append(pattern)
            weights.append(None)

    completed = np.array(s_masked, dtype=complex)
    for i, c0, c1, pid in assignment.segments:
        g = weights[pid]
        if g is None:
            continue
        acc = np.zeros(c1 - c0, dtype=complex)
        for gk, (j1, j2) in zip(g, assignment.patterns[pid]):
            acc += gk * s_masked[i + j1, c0 + j2:c1 + j2]
        completed[i, c0:c1] = acc
    return completed, report


def grappa_reconstruct(s_masked: np.ndarray, mask: np.ndarray,
                       window: NeighborhoodWindow | None = None) -> np.ndarray:
    """GRAPPA image estimate: fill the spectrum, then invert."""
    completed, _ = grappa_fill(s_masked, mask, window or NeighborhoodWindow())
    return idft2_centered(completed)


@dataclass
class SpiritKernel:
    """Self-consistency kernel on the punctured window (center weight 0)."""

    window: NeighborhoodWindow
    g: np.ndarray

    def kernel_grid(self) -> np.ndarray:
        """Weights arranged on the (2*p1+1) x (2*p2+1) offset grid."""
        p1, p2 = self.window.p1, self.window.p2
        grid = np.zeros((2 * p1 + 1, 2 * p2 + 1), dtype=complex)
        for gk, (j1, j2) in zip(self.g, self._offsets()):
            grid[j1 + p1, j2 + p2] = gk
        return grid

    def _offsets(self):
        return tuple(o for o in self.window.offsets() if o != (0, 0))


def fit_spirit_kernel(calib: np.ndarray, window: NeighborhoodWindow) -> SpiritKernel:
    """Fit the full punctured-window pattern on the calibration block."""
    offsets = tuple(o for o in window.offsets() if o != (0, 0))
    g = fit_grappa_weights(calib, offsets)
    return SpiritKernel(window=window, g=g)


def _transfer(kernel: SpiritKernel, shape):
    embedded = np.zeros(shape, dtype=complex)
    for gk, (j1, j2) in zip(kernel.g, kernel._offsets()):
        embedded[j1 % shape[0], j2 % shape[1]] = gk
    return np.conj(np.fft.fft2(np.conj(embedded)))


def spirit_apply_g(s: np.ndarray, kernel: SpiritKernel) -> np.ndarray:
    """Periodic cross-correlation (G s)(v) = sum_j g_j s(v + j mod grid)."""
    transfer = _transfer(kernel, s.shape)
    return np.fft.ifft2(np.fft.fft2(s) * transfer)


def spirit_reconstruct(s_masked: np.ndarray, mask: np.ndarray,
                       kernel: SpiritKernel, lam: float = 1.0,
                       mu: float = 0.5, n_iter: int = 100) -> np.ndarray:
    """Estimate the image by gradient descent on
    ||mask o (x - data)||^2 + lam * ||(G - I) x||^2 over the spectrum x.

    Raises :class:`NumericalError` when the objective grows for ten
    consecutive steps (step size too large).
    """
    if mu <= 0:
        raise ConfigError(f"step size must be positive, got {mu}")
    if lam < 0:
        raise ConfigError(f"consistency weight must be >= 0, got {lam}")
    transfer = _transfer(kernel, s_masked.shape)
    penalty = np.abs(transfer - 1.0) ** 2
    x = mask * s_masked
    prev_obj = np.inf
    n_grew = 0
    for it in range(n_iter):
        spec = np.fft.fft2(x)
        grad_step = mask * (x - s_masked) + lam * np.fft.ifft2(penalty * spec)
        x = x - mu * grad_step
        obj = (float(np.sum(np.abs(mask * (x - s_masked)) ** 2))
               + lam * float(np.sum(np.abs((np.fft.ifft2(
                   (transfer - 1.0) * np.fft.fft2(x)))) ** 2)))
        if not np.isfinite(obj):
            raise NumericalError(f"objective non-finite at iteration {it}")
        n_grew = n_grew + 1 if obj > prev_obj else 0
        if n_grew >= 10:
            raise NumericalError(
                f"objective grew for 10 consecutive steps (mu={mu} too large)")
        prev_obj = obj
    return idft2_centered(x)
