"""8-bit grayscale image I/O (binary PGM and PNG) normalized to [0, 1]."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from .errors import ConfigError

_FORMATS = {"PPM", "PNG"}        # Pillow reports binary PGM as PPM


def load_image(path) -> np.ndarray:
    """Load an 8-bit grayscale PGM (P5) or PNG with even dimensions and
    scale it to [0, 1]."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"image file not found: {path}")
    with PILImage.open(path) as img:
        if img.format not in _FORMATS:
            raise ConfigError(
                f"unsupported format {img.format!r} for {path} "
                "(need binary PGM or grayscale PNG)")
        if img.mode != "L":
            raise ConfigError(
                f"need 8-bit grayscale, got mode {img.mode!r} for {path}")
        data = np.asarray(img, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] % 2 or data.shape[1] % 2:
        raise ConfigError(
            f"image dimensions must be even, got {data.shape} for {path}")
    return data / 255.0


def save_image(a: np.ndarray, path) -> None:
    """Clamp to [0, 1], quantize to 8 bits, and write PGM or PNG by
    extension."""
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix not in (".pgm", ".png"):
        raise ConfigError(f"unsupported output extension {suffix!r} for {path}")
    quantized = np.round(np.clip(np.asarray(a, dtype=float), 0.0, 1.0) * 255.0)
    img = PILImage.fromarray(quantized.astype(np.uint8), mode="L")
    img.save(path, format="PPM" if suffix == ".pgm" else "PNG")
