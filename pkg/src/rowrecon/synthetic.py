"""Synthetic test images: gradients, checkerboards, disks, smooth bumps, and
an analytic ellipse phantom.  Everything is deterministic given the seed and
normalized to [0, 1]."""

from __future__ import annotations

import numpy as np

from .errors import ConfigError

# (intensity, a, b, x0, y0, angle_deg): the classic ten-ellipse head phantom
# with the moderated intensity variant used throughout image processing.
_PHANTOM_ELLIPSES = (
    (1.0, 0.69, 0.92, 0.0, 0.0, 0.0),
    (-0.8, 0.6624, 0.874, 0.0, -0.0184, 0.0),
    (-0.2, 0.11, 0.31, 0.22, 0.0, -18.0),
    (-0.2, 0.16, 0.41, -0.22, 0.0, 18.0),
    (0.1, 0.21, 0.25, 0.0, 0.35, 0.0),
    (0.1, 0.046, 0.046, 0.0, 0.1, 0.0),
    (0.1, 0.046, 0.046, 0.0, -0.1, 0.0),
    (0.1, 0.046, 0.023, -0.08, -0.605, 0.0),
    (0.1, 0.023, 0.023, 0.0, -0.605, 0.0),
    (0.1, 0.023, 0.046, 0.06, -0.605, 0.0),
)


def ramp(n: int, m: int | None = None) -> np.ndarray:
    """Vertical intensity ramp from 0 to 1."""
    m = n if m is None else m
    return np.tile(np.linspace(0.0, 1.0, n)[:, None], (1, m))


def checkerboard(n: int, m: int | None = None, cell: int = 8) -> np.ndarray:
    m = n if m is None else m
    ii, jj = np.meshgrid(np.arange(n) // cell, np.arange(m) // cell,
                         indexing="ij")
    return ((ii + jj) % 2).astype(float)


def disk(n: int, m: int | None = None, radius: float = 0.35,
         center=(0.0, 0.0)) -> np.ndarray:
    """Filled disk of the given relative radius on a dark background."""
    m = n if m is None else m
    y = np.linspace(-1.0, 1.0, n)[:, None]
    x = np.linspace(-1.0, 1.0, m)[None, :]
    return ((x - center[0]) ** 2 + (y - center[1]) ** 2
            <= radius ** 2).astype(float)


def smooth_bumps(n: int, m: int | None = None, seed: int = 0,
                 n_bumps: int = 6) -> np.ndarray:
    """Sum of random Gaussian bumps, rescaled to [0, 1]."""
    m = n if m is None else m
    rng = np.random.default_rng(seed)
    y = np.linspace(-1.0, 1.0, n)[:, None]
    x = np.linspace(-1.0, 1.0, m)[None, :]
    img = np.zeros((n, m))
    for _ in range(n_bumps):
        cx, cy = rng.uniform(-0.8, 0.8, size=2)
        width = rng.uniform(0.05, 0.4)
        img += rng.uniform(0.2, 1.0) * np.exp(
            -((x - cx) ** 2 + (y - cy) ** 2) / (2 * width ** 2))
    img -= img.min()
    peak = img.max()
    return img / peak if peak > 0 else img


def random_image(n: int, m: int | None = None, seed: int = 0) -> np.ndarray:
    m = n if m is None else m
    return np.random.default_rng(seed).uniform(size=(n, m))


def ellipse_phantom(n: int = 512) -> np.ndarray:
    """Cartoon head phantom rendered on an n x n grid, clipped to [0, 1]."""
    if n < 2:
        raise ConfigError(f"phantom size must be >= 2, got {n}")
    coords = (np.arange(n) - (n - 1) / 2.0) / ((n - 1) / 2.0)
    x = coords[None, :]
    y = -coords[:, None]
    img = np.zeros((n, n))
    for intensity, a, b, x0, y0, angle in _PHANTOM_ELLIPSES:
        phi = np.deg2rad(angle)
        xr = (x - x0) * np.cos(phi) + (y - y0) * np.sin(phi)
        yr = -(x - x0) * np.sin(phi) + (y - y0) * np.cos(phi)
        img[(xr / a) ** 2 + (yr / b) ** 2 <= 1.0] += intensity
    return np.clip(img, 0.0, 1.0)
