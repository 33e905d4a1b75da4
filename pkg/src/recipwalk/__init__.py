"""Random walks with a hub trap on a reciprocity-weighted fractal tree."""
from .closed_form import ClosedFormBreakdown, breakdown, growth_factor, mfpt_closed, scaling_exponent
from .experiments import ScalingFit, run_scaling_fit, run_verify_suite
from .montecarlo import SimConfig, SimReport, simulate
from .network import NetworkConfig, NodeRecord, WeightedDigraph, build_binary, build_weighted, out_strength
from .spectral import SpectrumMultiset, base_spectrum, decimate, lambda_min, spectrum, verify_block_identity
from .walk import MfptReport, TrapSystem, assemble, fundamental_entry_sum, solve_trapping_times

__all__ = [
    "ClosedFormBreakdown", "MfptReport", "NetworkConfig", "NodeRecord", "ScalingFit",
    "SimConfig", "SimReport", "SpectrumMultiset", "TrapSystem", "WeightedDigraph",
    "assemble", "base_spectrum", "breakdown", "build_binary", "build_weighted", "decimate",
    "fundamental_entry_sum", "growth_factor", "lambda_min", "mfpt_closed", "out_strength",
    "run_scaling_fit", "run_verify_suite", "scaling_exponent", "simulate", "solve_trapping_times",
    "spectrum", "verify_block_identity",
]
