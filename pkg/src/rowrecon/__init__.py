"""Image reconstruction from structured row-subsampled 2D Fourier data.

Five reconstruction strategies over the same structured sampling masks:
zero refilling and windowed low-pass baselines, GRAPPA and SPIRiT spectrum
interpolation, TV minimization by a primal-dual iteration, and a hybrid
correction that feeds the data-consistency residual back with weights driven
by median local total variation.
"""

from .errors import (CalibrationError, ConfigError, NumericalError,
                     ReconError, SymmetryError, WindowSupportError)
from .fourier import (SamplingPattern, build_box_pattern, build_lowpass_pattern,
                      build_mask, build_row_pattern, centered_index_set,
                      conj_mirror, dft2_centered, full_pattern,
                      hermitian_split, idft2_centered, mask_is_symmetric,
                      odd_index_set)
from .harness import (CatalogEntry, ExperimentConfig, ResultRow, load_catalog,
                      reproduce_table, run_experiment)
from .hybrid import (HybridParams, hybrid_reconstruct, hybrid_reconstruct_box,
                     local_tv_map, mtv_map, residual, smooth_vertical,
                     weight_matrix)
from .imageio import load_image, save_image
from .interp import (GrappaReport, NeighborhoodWindow, PatternAssignment,
                     SpiritKernel, enumerate_patterns, fit_grappa_weights,
                     fit_spirit_kernel, grappa_fill, grappa_reconstruct,
                     spirit_apply_g, spirit_reconstruct)
from .linear import (InterpWeights, WindowVector, dirichlet_window,
                     hamming_window, theorem1_interpolate, theorem1_predict,
                     window_recon, zero_refill)
from .metrics import QualityReport, discrete_tv, missing_energy, psnr, \
    quality_report
from .tv import (TvParams, div_adjoint, grad, prox_data, prox_dual, sup_norm,
                 tv_minimize, tv_norm)

__version__ = "0.1.0"
