"""Desk-scale noisy state-vector simulation (n <= 16)."""

from .circuit import MAX_QUBITS, Circuit, random_circuit
from .engine import (
    PAULI_PAIRS,
    FidelityEstimate,
    NoiseModel,
    QuantumState,
    apply_gate,
    estimate_fidelity,
    run_ideal,
    run_trajectory,
    state_fidelity,
    zero_state,
)
from .fit import FitResult, RankDeficientError, fit_error_rates
from .gates import (
    BadTargetError,
    Gate,
    cnot,
    cz,
    gate_matrix,
    h,
    idle,
    rx,
    rz,
    s,
    t,
    x,
    y,
    z,
)
from .grover import (
    SuccessEstimate,
    build_grover_circuit,
    controlled_phase_gates,
    grover_success_probability,
    ideal_success_probability,
    optimal_iterations,
)

__all__ = [
    "MAX_QUBITS",
    "Circuit",
    "random_circuit",
    "PAULI_PAIRS",
    "FidelityEstimate",
    "NoiseModel",
    "QuantumState",
    "apply_gate",
    "estimate_fidelity",
    "run_ideal",
    "run_trajectory",
    "state_fidelity",
    "zero_state",
    "FitResult",
    "RankDeficientError",
    "fit_error_rates",
    "BadTargetError",
    "Gate",
    "cnot",
    "cz",
    "gate_matrix",
    "h",
    "idle",
    "rx",
    "rz",
    "s",
    "t",
    "x",
    "y",
    "z",
    "SuccessEstimate",
    "build_grover_circuit",
    "controlled_phase_gates",
    "grover_success_probability",
    "ideal_success_probability",
    "optimal_iterations",
]
