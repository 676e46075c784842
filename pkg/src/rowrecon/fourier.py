"""Centered index sets, structured sampling patterns, and the centered
unitary 2D DFT.

All spectra and images use centered storage: entry ``[i, j]`` of an N x M
array belongs to the index ``(i - N//2, j - M//2)``.  Frequency (0, 0) sits
at the array center.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, SymmetryError

ROW_KINDS = ("rows-stride2", "rows-stride3", "rows-stride4", "rows-lowpass-only")
BOX_KIND = "box"


def centered_index_set(n: int) -> np.ndarray:
    """Centered index set: {-n/2, ..., n/2 - 1} for even n,
    {-(n-1)/2, ..., (n-1)/2} for odd n."""
    if n < 1:
        raise ConfigError(f"index set size must be positive, got {n}")
    lo = -(n // 2)
    return np.arange(lo, lo + n)


def odd_index_set(k: int) -> np.ndarray:
    """Every-second-index set {-k+1, -k+3, ..., k-3, k-1} with k even."""
    if k % 2 or k < 2:
        raise ConfigError(f"stride-2 set needs even k >= 2, got {k}")
    return np.arange(-k + 1, k, 2)


def _stride2_set(half):
    # half = K/2; K even indices, all odd, symmetric about 0
    if half == 0:
        return np.empty(0, dtype=int)
    return odd_index_set(2 * half)


def _stride3_set(kappa):
    # {-3k+2, ..., -4, -1} + {2, 5, ..., 3k-1}: 2k indices, all = 2 (mod 3)
    neg = np.arange(-3 * kappa + 2, 0, 3)
    pos = np.arange(2, 3 * kappa, 3)
    return np.concatenate([neg, pos])


def _stride4_set(kappa):
    # {-4k-1, ..., -5, -1} + {3, 7, ..., 4k-1}: 2k+1 indices, all = 3 (mod 4)
    neg = np.arange(-4 * kappa - 1, 0, 4)
    pos = np.arange(3, 4 * kappa, 4)
    return np.concatenate([neg, pos])


@dataclass(frozen=True)
class SamplingPattern:
    """Acquired-index description of a structured sampling scheme.

    ``rows`` holds sorted acquired indices in the centered convention.  For
    row kinds these are full spectrum rows; for the box kind the acquired set
    is ``rows x rows`` and ``rows`` is the per-axis index set.
    """

    kind: str
    N: int
    M: int
    r: int
    L: int
    K: int
    rows: tuple[int, ...]

    @property
    def size(self) -> int:
        """Number of acquired rows (row kinds) or index pairs (box kind)."""
        if self.kind == BOX_KIND:
            return len(self.rows) ** 2
        return len(self.rows)

    @property
    def is_symmetric(self) -> bool:
        """True when every acquired index has its mirror acquired.

        The boundary index -N/2 is its own mirror under the periodic wrap.
        """
        rowset = set(self.rows)
        half = self.N // 2
        return all((v if v == -half else -v) in rowset for v in rowset)

    def describe(self) -> str:
        return (f"{self.kind},{self.N},{self.M},{self.r},{self.L},"
                f"{self.K},{self.size}")


def _check_grid(N, M):
    if N < 2 or M < 2 or N % 2 or M % 2:
        raise ConfigError(f"grid dimensions must be even and >= 2, got {N}x{M}")


def _lowpass_rows(L):
    return np.empty(0, dtype=int) if L == 0 else centered_index_set(L)


def _check_lowpass_width(L, N):
    if L < 0 or L > N or (L != 0 and L % 2 == 0 and L != N):
        raise ConfigError(f"low-pass width must be odd (or 0), got L={L}")


def build_row_pattern(N: int, M: int, r: int, L: int, stride: int = 2) -> SamplingPattern:
    """Row sampling pattern: L centered low-pass rows plus a strided set of
    further rows, as many as fit the budget of floor(N/r) acquired rows.

    Parameters
    ----------
    N, M : even grid dimensions.
    r : reduction rate; the pattern acquires at most floor(N/r) rows.
    L : odd width of the fully acquired centered low-pass block (0 allowed).
    stride : 2, 3 or 4; spacing of the extra rows outside the low-pass block.

    The stride extent is the largest one keeping the total row count within
    the budget; the boundary row -N/2 is never placed in a stride set.
    """
    _check_grid(N, M)
    _check_lowpass_width(L, N)
    if r < 1:
        raise ConfigError(f"reduction rate must be >= 1, got {r}")
    budget = N // r
    if L > budget:
        raise ConfigError(
            f"low-pass width L={L} exceeds the row budget floor({N}/{r})={budget}")
    if stride not in (2, 3, 4):
        raise ConfigError(f"stride must be 2, 3 or 4, got {stride}")

    make = {2: _stride2_set, 3: _stride3_set, 4: _stride4_set}[stride]
    low = _lowpass_rows(L)
    n = N // 2
    best_rows, best_k = low, 0
    j = 0 if stride > 2 else 1
    while True:
        cand = make(j)
        if cand.size and (cand.min() <= -n or cand.max() >= n):
            break
        rows = np.union1d(low, cand)
        if rows.size > budget:
            break
        best_rows, best_k = rows, cand.size
        j += 1
    return SamplingPattern(kind=f"rows-stride{stride}", N=N, M=M, r=r, L=L,
                           K=best_k, rows=tuple(int(v) for v in best_rows))


def build_lowpass_pattern(N: int, M: int, L: int, r: int = 0) -> SamplingPattern:
    """Pattern acquiring only the L centered rows (L odd, or L = N for full)."""
    _check_grid(N, M)
    _check_lowpass_width(L, N)
    rows = centered_index_set(N) if L == N else _lowpass_rows(L)
    return SamplingPattern(kind="rows-lowpass-only", N=N, M=M, r=r, L=L, K=0,
                           rows=tuple(int(v) for v in rows))


def full_pattern(N: int, M: int) -> SamplingPattern:
    """Fully sampled grid, represented as an all-rows low-pass pattern."""
    return build_lowpass_pattern(N, M, N, r=1)


def build_box_pattern(N: int, M: int, r: int, L: int,
                      lowpass_only: bool = False) -> SamplingPattern:
    """Two-axis box pattern: the acquired set is S x S with
    S = lowpass(L) + stride-2 rows, sized to roughly N*M/r entries.

    With ``lowpass_only`` the stride part is dropped and the acquired set is
    just the centered L x L box.
    """
    _check_grid(N, M)
    if N != M:
        raise ConfigError(f"box patterns need a square grid, got {N}x{M}")
    _check_lowpass_width(L, N)
    if r < 1:
        raise ConfigError(f"reduction rate must be >= 1, got {r}")
    budget = (N * M) // r
    if L * L > budget:
        raise ConfigError(
            f"low-pass box {L}x{L} exceeds the budget floor({N}*{M}/{r})={budget}")
    low = _lowpass_rows(L)
    n = N // 2
    best_rows, best_k = low, 0
    if not lowpass_only:
        half = 1
        while True:
            cand = _stride2_set(half)
            if cand.max() >= n:
                break
            rows = np.union1d(low, cand)
            if rows.size ** 2 > budget:
                break
            best_rows, best_k = rows, cand.size
            half += 1
    return SamplingPattern(kind=BOX_KIND, N=N, M=M, r=r, L=L, K=best_k,
                           rows=tuple(int(v) for v in best_rows))


def build_mask(pattern: SamplingPattern) -> np.ndarray:
    """Binary N x M mask matrix (1 = acquired) in centered storage."""
    N, M = pattern.N, pattern.M
    mask = np.zeros((N, M))
    idx = np.asarray(pattern.rows, dtype=int) + N // 2
    if pattern.kind == BOX_KIND:
        mask[np.ix_(idx, idx)] = 1.0
    else:
        mask[idx, :] = 1.0
    return mask


def mask_is_symmetric(mask: np.ndarray) -> bool:
    """Check a 0/1 mask for mirror symmetry under the periodic index flip."""
    flipped = np.roll(mask[::-1, ::-1], (1, 1), axis=(0, 1))
    return bool(np.array_equal(mask, flipped))


def dft2_centered(a: np.ndarray) -> np.ndarray:
    """Centered unitary 2D DFT: frequency (0, 0) at the array center."""
    return np.fft.fftshift(np.fft.fft2(np.fft.ifftshift(a), norm="ortho"))


def idft2_centered(s: np.ndarray) -> np.ndarray:
    """Inverse of :func:`dft2_centered` (also unitary)."""
    return np.fft.fftshift(np.fft.ifft2(np.fft.ifftshift(s), norm="ortho"))


def conj_mirror(s: np.ndarray) -> np.ndarray:
    """conj(S(-v)) with periodic index wrap, in centered storage."""
    return np.conj(np.roll(s[::-1, ::-1], (1, 1), axis=(0, 1)))


def hermitian_split(s_masked: np.ndarray, pattern: SamplingPattern):
    """Split masked spectrum data of a complex image into the DFTs of its
    real and imaginary parts, both restricted to the mask.

    Requires a mirror-symmetric pattern; recombining as ``S_R + 1j*S_I``
    returns the input exactly on the mask.
    """
    if not pattern.is_symmetric:
        raise SymmetryError(
            f"hermitian split needs a symmetric pattern, got {pattern.describe()}")
    mask = build_mask(pattern)
    mirrored = conj_mirror(s_masked)
    s_r = 0.5 * (s_masked + mirrored) * mask
    s_i = -0.5j * (s_masked - mirrored) * mask
    return s_r, s_i
