"""Fast self-contained correctness checks on synthetic data.

Each check returns (name, passed, detail).  The CLI ``selftest`` command and
the test suite both run these; they need no external images and finish in a
few seconds.
"""

from __future__ import annotations

import numpy as np

from .fourier import (build_lowpass_pattern, build_mask, build_row_pattern,
                      centered_index_set, dft2_centered, full_pattern,
                      idft2_centered)
from .hybrid import HybridParams, hybrid_reconstruct
from .linear import InterpWeights, theorem1_interpolate, theorem1_predict, \
    zero_refill
from .metrics import missing_energy
from .tv import div_adjoint, grad, prox_data, prox_dual, sup_norm


def centered_dft_matrix(n):
    """Dense centered unitary DFT matrix, straight from the definition."""
    idx = centered_index_set(n)
    return np.exp(-2j * np.pi * np.outer(idx, idx) / n) / np.sqrt(n)


def check_dft_bruteforce(seed=0):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    brute = centered_dft_matrix(8) @ a @ centered_dft_matrix(8)
    err = float(np.abs(dft2_centered(a) - brute).max())
    round_trip = float(np.abs(idft2_centered(dft2_centered(a)) - a).max())
    unitarity = abs(np.linalg.norm(dft2_centered(a)) - np.linalg.norm(a))
    ok = err < 1e-12 and round_trip < 1e-12 and unitarity < 1e-12
    return ("dft-bruteforce-oracle", ok,
            f"err={err:.2e} roundtrip={round_trip:.2e} unitarity={unitarity:.2e}")


def check_parseval_error_identity(seed=1, n_cases=200):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_cases):
        n = int(rng.choice([8, 16, 24]))
        a = rng.normal(size=(n, n))
        spectrum = dft2_centered(a)
        n_rows = int(rng.integers(1, n + 1))
        rows = rng.choice(n, size=n_rows, replace=False)
        mask = np.zeros((n, n))
        mask[rows, :] = 1.0
        err = np.linalg.norm(zero_refill(spectrum * mask, mask) - a) ** 2
        gap = abs(err - missing_energy(spectrum, mask))
        worst = max(worst, gap / np.linalg.norm(a) ** 2)
    return ("zero-refill-error-identity", worst < 1e-10, f"rel-gap={worst:.2e}")


def check_theorem1(seed=2, n_cases=50, size=16):
    rng = np.random.default_rng(seed)
    n = size // 2
    worst = 0.0
    for _ in range(n_cases):
        a = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
        spectrum = dft2_centered(a)
        s_odd = np.zeros_like(spectrum)
        s_odd[1::2, :] = spectrum[1::2, :]
        w = InterpWeights(rng.normal(size=(n, size))
                          + 1j * rng.normal(size=(n, size)))
        gap = np.abs(theorem1_interpolate(s_odd, w)
                     - theorem1_predict(a, w)).max()
        worst = max(worst, float(gap))
    return ("theorem1-scheme-vs-prediction", worst < 1e-11, f"gap={worst:.2e}")


def check_gradient_adjoint(seed=3):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for size in (4, 8, 16):
        for _ in range(100):
            a = rng.normal(size=(size, size))
            x = rng.normal(size=(2, size, size))
            lhs = float(np.sum(grad(a) * x))
            rhs = float(np.sum(a * div_adjoint(x)))
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1e-300))
    return ("gradient-adjoint-identity", worst < 1e-12, f"rel-gap={worst:.2e}")


def check_prox_operators(seed=4):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(2, 12, 12)) * 3.0
    p1 = prox_dual(x)
    idem = float(np.abs(prox_dual(p1) - p1).max())
    feasible = sup_norm(p1) <= 1.0 + 1e-12
    s = dft2_centered(rng.normal(size=(12, 12)))
    s_tilde = s + rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))
    mask = np.zeros((12, 12))
    mask[::2, :] = 1.0
    taulam = 2.5
    z = prox_data(s_tilde, s, mask, taulam)
    resid = float(np.abs((z - s_tilde) + taulam * mask * (z - s)).max())
    ok = idem < 1e-12 and feasible and resid < 1e-12
    return ("prox-operators", ok,
            f"idempotence={idem:.2e} feasible={feasible} normal-eq={resid:.2e}")


def check_hybrid_contraction(seed=5, n_cases=20):
    rng = np.random.default_rng(seed)
    eps, mu = 0.1, 1.6
    worst = 0.0
    for case in range(n_cases):
        img = rng.uniform(size=(32, 32))
        pattern = build_row_pattern(32, 32, 2, 11)
        mask = build_mask(pattern)
        s_masked = mask * dft2_centered(img)
        norms = []
        params = HybridParams(mu=mu, eps=eps, n_smooth=1, n_iter=8)
        init = zero_refill(s_masked, mask).real
        hybrid_reconstruct(init, s_masked, mask, params,
                           callback=lambda j, r, p: norms.append(r))
        for before, after in zip(norms, norms[1:]):
            if before > 0:
                worst = max(worst, after / before)
    return ("hybrid-contraction", worst <= (1 - eps) + 1e-12,
            f"worst-ratio={worst:.4f} bound={1 - eps}")


def check_mask_cardinalities():
    expected = {2: 63, 4: 31, 6: 21, 8: 15}
    got = {r: build_row_pattern(128, 128, r, 11).size for r in expected}
    return ("mask-cardinalities-128", got == expected, f"{got}")


def check_full_mask_identity(seed=6):
    rng = np.random.default_rng(seed)
    img = rng.uniform(size=(16, 16))
    mask = build_mask(full_pattern(16, 16))
    err = float(np.abs(zero_refill(dft2_centered(img) * mask, mask) - img).max())
    return ("full-mask-identity", err < 1e-12, f"err={err:.2e}")


ALL_CHECKS = (
    check_dft_bruteforce,
    check_parseval_error_identity,
    check_theorem1,
    check_gradient_adjoint,
    check_prox_operators,
    check_hybrid_contraction,
    check_mask_cardinalities,
    check_full_mask_identity,
)


def run_all(report=print) -> bool:
    """Run every check; report one line each; True when all pass."""
    all_ok = True
    for check in ALL_CHECKS:
        name, ok, detail = check()
        all_ok &= ok
        report(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return all_ok
