"""Grover search circuits over the engine's gate set, and their
noisy/noiseless success probabilities.

The multi-controlled Z at the heart of the oracle and the diffusion
operator is expanded by a fixed subset-parity network (see
:func:`controlled_phase_gates`), so every construction has exact,
reproducible gate counts.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from .circuit import MAX_QUBITS, Circuit
from .engine import (
    NoiseModel,
    noise_sites,
    run_ideal,
    run_with_insertions,
    sample_insertions,
)
from .gates import Gate, cnot, h, rz, x


class SuccessEstimate(NamedTuple):
    probability: float
    std_error: float


def controlled_phase_gates(qubits: Sequence[int], theta: float) -> list[Gate]:
    """Phase exp(i*theta) on the all-ones subspace of `qubits`, up to a
    global phase, as RZ and CNOT gates.

    The all-ones indicator expands over subset parities: each non-empty
    subset S of the wires carries a rotation of angle
    (-1)^(|S|+1) * theta / 2^(m-1).  Subsets are grouped by their
    highest wire and their parity is folded onto it with CNOTs walked
    in Gray-code order, so consecutive subsets differ by a single fold.
    Emits exactly 2^m - 1 RZ and 2^m - 2 CNOT gates for m wires.
    """
    qs = sorted(qubits)
    m = len(qs)
    if m < 1 or len(set(qs)) != m:
        raise ValueError(f"qubits must be distinct and non-empty, got {qubits!r}")
    base = theta / (1 << (m - 1))
    out: list[Gate] = []
    for i, q in enumerate(qs):
        lower = qs[:i]
        out.append(rz(q, base))  # S = {q}, odd size
        gray = 0
        for step in range(1, 1 << i):
            code = step ^ (step >> 1)
            flip = (code ^ gray).bit_length() - 1
            gray = code
            out.append(cnot(lower[flip], q))
            size = 1 + gray.bit_count()
            out.append(rz(q, base if size % 2 else -base))
        for bit in range(i):  # unfold whatever the walk left behind
            if gray >> bit & 1:
                out.append(cnot(lower[bit], q))
    return out


def _mcz_gates(n: int) -> tuple[Gate, ...]:
    return tuple(controlled_phase_gates(range(n), math.pi))


def _check_marked(n: int, marked: str) -> None:
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n must lie in [1, {MAX_QUBITS}], got {n}")
    if not isinstance(marked, str) or len(marked) != n or set(marked) - {"0", "1"}:
        raise ValueError(
            f"marked must be a string of {n} bits, got {marked!r}")


def build_grover_circuit(n: int, marked: str, iterations: int) -> Circuit:
    """Standard search circuit: H layer, then per iteration a phase
    oracle on `marked` followed by the diffusion operator.

    The oracle conjugates a multi-controlled Z with X on the qubits
    where `marked` has a 0 bit (qubit 0 = leftmost character); the
    diffusion operator is H X (MCZ) X H on every wire.  Global phases
    are not tracked.
    """
    _check_marked(n, marked)
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    mcz = _mcz_gates(n)
    zeros = [q for q, bit in enumerate(marked) if bit == "0"]
    gates: list[Gate] = [h(q) for q in range(n)]
    for _ in range(iterations):
        gates += [x(q) for q in zeros]
        gates += mcz
        gates += [x(q) for q in zeros]
        gates += [h(q) for q in range(n)]
        gates += [x(q) for q in range(n)]
        gates += mcz
        gates += [x(q) for q in range(n)]
        gates += [h(q) for q in range(n)]
    return Circuit(n, tuple(gates))


def optimal_iterations(n: int) -> int:
    """Iteration count maximizing success: floor(pi / (4*asin(2^(-n/2))))."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return int(math.pi / (4.0 * math.asin(2.0 ** (-n / 2.0))))


def ideal_success_probability(n: int, iterations: int) -> float:
    """Closed form sin^2((2k+1) * asin(2^(-n/2))) for a single marked state."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    angle = math.asin(2.0 ** (-n / 2.0))
    return math.sin((2 * iterations + 1) * angle) ** 2


def _marked_probability(state: np.ndarray, index: int) -> float:
    amp = state[index]
    return float(amp.real ** 2 + amp.imag ** 2)


def grover_success_probability(n: int, marked: str, iterations: int,
                               noise: NoiseModel, n_traj: int,
                               seed: int) -> SuccessEstimate:
    """Mean probability of measuring `marked`, over noisy trajectories.

    Trajectory i uses seed+i, exactly as in estimate_fidelity; with a
    null noise model every trajectory equals the ideal run, so the
    standard error is 0.
    """
    if n_traj < 1:
        raise ValueError(f"n_traj must be >= 1, got {n_traj}")
    circuit = build_grover_circuit(n, marked, iterations)
    index = int(marked, 2)
    ideal = run_ideal(circuit)
    p_ideal = _marked_probability(ideal, index)
    if noise.is_null:
        return SuccessEstimate(p_ideal, 0.0)
    sites = noise_sites(circuit, noise)
    values = np.empty(n_traj, dtype=np.float64)
    for i in range(n_traj):
        insertions = sample_insertions(sites, seed + i)
        if not insertions:
            values[i] = p_ideal  # no insertions: identical to the ideal run
        else:
            values[i] = _marked_probability(
                run_with_insertions(circuit, insertions), index)
    mean = float(values.mean())
    std_error = float(values.std(ddof=1) / math.sqrt(n_traj)) if n_traj > 1 else 0.0
    return SuccessEstimate(mean, std_error)
