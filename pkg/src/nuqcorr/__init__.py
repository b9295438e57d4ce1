"""Quantum correlations in two-flavor neutrino oscillations.

Core layers: validated small density matrices (:mod:`nuqcorr.states`),
oscillation physics with wave-packet damping (:mod:`nuqcorr.oscillation`),
information-budget and correlation measures (:mod:`nuqcorr.measures`), and
experiment scans with CSV output (:mod:`nuqcorr.scan`).
"""
from .states import (DensityMatrix, StateValidationError, dephase, eig_hermitian,
                     partial_trace, purity, vn_entropy)
from .oscillation import (FLAVORS, HBARC_MEV_FM, KM_IN_INV_EV, PLANE_WAVE_WIDTH,
                          FlavorKernel, MixingSpec, PureFlavorState, WavePacketParams,
                          coherence_factor, flavor_density_matrix, flavor_kernel,
                          natural_units_phase, plane_wave_state,
                          pure_state_density_matrix, survival_probability)
from .measures import (CorrelationReport, SearchGrid, ccr_mixed_residual, ccr_pure_hs,
                       classical_correlations, coherence_hs, conditional_entropy,
                       full_report, mutual_information, naqc_local_bound, naqc_measured,
                       nonlocal_coherence_hs, predictability_hs, predictability_vn,
                       quantum_discord_closed, quantum_discord_numeric,
                       relative_entropy_coherence)
from .scan import (CSV_COLUMNS, PRESETS, ConfigError, ExperimentParams, ScanTable,
                   load_config, run_scan, write_csv)

__all__ = [
    "DensityMatrix", "StateValidationError", "dephase", "eig_hermitian",
    "partial_trace", "purity", "vn_entropy",
    "FLAVORS", "HBARC_MEV_FM", "KM_IN_INV_EV", "PLANE_WAVE_WIDTH",
    "FlavorKernel", "MixingSpec", "PureFlavorState", "WavePacketParams",
    "coherence_factor", "flavor_density_matrix", "flavor_kernel",
    "natural_units_phase", "plane_wave_state", "pure_state_density_matrix",
    "survival_probability",
    "CorrelationReport", "SearchGrid", "ccr_mixed_residual", "ccr_pure_hs",
    "classical_correlations", "coherence_hs", "conditional_entropy", "full_report",
    "mutual_information", "naqc_local_bound", "naqc_measured",
    "nonlocal_coherence_hs", "predictability_hs", "predictability_vn",
    "quantum_discord_closed", "quantum_discord_numeric", "relative_entropy_coherence",
    "CSV_COLUMNS", "PRESETS", "ConfigError", "ExperimentParams", "ScanTable",
    "load_config", "run_scan", "write_csv",
]

__version__ = "0.1.0"
