"""State-vector engine with Monte-Carlo stochastic Pauli noise.

Gates act through strided slice arithmetic on a flat complex128 array
(no matrix products), so a run is a fixed sequence of elementwise
operations and its output is reproducible bit for bit.

Noise realization per trajectory, given the trajectory seed:

1. the trajectory's generator is ``Generator(Philox(seed))``;
2. one block ``rng.random(len(sites))`` is drawn, where sites are the
   gates with a nonzero rate for their channel (IDLE -> eps0, other
   one-qubit -> eps1, two-qubit -> eps2), in circuit order;
3. for each site whose uniform fell below its rate, in the same order,
   one ``rng.integers(0, n_choices)`` picks the Pauli to insert after
   that gate: uniformly from {X, Y, Z} on the target of a one-qubit or
   IDLE site, uniformly from the 15 non-identity two-qubit Pauli
   products, ordered (I,X), (I,Y), (I,Z), (X,I), (X,X), ... on a
   two-qubit site.

Trajectories use seeds seed, seed+1, ..., so the whole estimate is a
pure function of (circuit, noise, n_traj, seed).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..model import ErrorBudget
from .circuit import MAX_QUBITS, Circuit
from .gates import _SQ2, _T_PHASE, BadTargetError, Gate

#: A register state: 2^n complex128 amplitudes, qubit 0 = high bit.
QuantumState = np.ndarray

PAULI_1Q = ("X", "Y", "Z")

_PAULI_NAMES = ("I", "X", "Y", "Z")

#: The 15 non-identity two-qubit Pauli products, row-major over
#: (first qubit, second qubit) with (I, I) skipped.
PAULI_PAIRS = tuple(
    (_PAULI_NAMES[k // 4], _PAULI_NAMES[k % 4]) for k in range(1, 16)
)


@dataclass(frozen=True)
class NoiseModel:
    """Stochastic Pauli insertion driven by an :class:`ErrorBudget`."""

    budget: ErrorBudget

    @property
    def is_null(self) -> bool:
        b = self.budget
        return b.eps0 == 0.0 and b.eps1 == 0.0 and b.eps2 == 0.0


@dataclass(frozen=True)
class FidelityEstimate:
    """Monte-Carlo estimate of the overlap with the ideal final state."""

    mean: float
    std_error: float
    n_trajectories: int
    seed: int


def zero_state(n_qubits: int) -> QuantumState:
    """|00...0> on n qubits."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must lie in [1, {MAX_QUBITS}], got {n_qubits}")
    state = np.zeros(1 << n_qubits, dtype=np.complex128)
    state[0] = 1.0
    return state


def _register_width(state: np.ndarray) -> int:
    if state.ndim != 1:
        raise ValueError("state must be a 1-D array of amplitudes")
    size = state.shape[0]
    n = size.bit_length() - 1
    if size < 2 or (1 << n) != size:
        raise ValueError(f"state length must be 2^n with n >= 1, got {size}")
    return n


def _check_targets(gate: Gate, n_qubits: int) -> None:
    for q in gate.targets:
        if q >= n_qubits:
            raise BadTargetError(
                f"{gate.kind} targets {gate.targets} outside a "
                f"{n_qubits}-qubit register")


def _apply_inplace(state: np.ndarray, gate: Gate, n: int) -> None:
    kind = gate.kind
    if kind == "IDLE":
        return
    if not gate.is_two_qubit:
        q = gate.targets[0]
        m = state.reshape(1 << q, 2, -1)
        a = m[:, 0, :]
        b = m[:, 1, :]
        if kind == "X":
            tmp = a.copy()
            a[:] = b
            b[:] = tmp
        elif kind == "Z":
            b *= -1.0
        elif kind == "H":
            tmp = a.copy()
            np.add(tmp, b, out=a)
            a *= _SQ2
            np.subtract(tmp, b, out=b)
            b *= _SQ2
        elif kind == "T":
            b *= _T_PHASE
        elif kind == "S":
            b *= 1j
        elif kind == "Y":
            tmp = a.copy()
            np.multiply(b, -1j, out=a)
            np.multiply(tmp, 1j, out=b)
        elif kind == "RZ":
            half = gate.theta / 2.0
            a *= cmath.exp(-1j * half)
            b *= cmath.exp(1j * half)
        elif kind == "RX":
            c = math.cos(gate.theta / 2.0)
            sv = -1j * math.sin(gate.theta / 2.0)
            tmp = a.copy()
            a *= c
            a += sv * b
            b *= c
            b += sv * tmp
        else:
            raise AssertionError(f"unhandled kind {kind!r}")
        return
    t0, t1 = gate.targets
    p0, p1 = (t0, t1) if t0 < t1 else (t1, t0)
    v = state.reshape(1 << p0, 2, 1 << (p1 - p0 - 1), 2, -1)
    if kind == "CZ":
        v[:, 1, :, 1, :] *= -1.0
    elif kind == "CNOT":
        if t0 < t1:  # control is the earlier axis
            sub = v[:, 1]
            tmp = sub[:, :, 0, :].copy()
            sub[:, :, 0, :] = sub[:, :, 1, :]
            sub[:, :, 1, :] = tmp
        else:
            sub = v[:, :, :, 1, :]
            tmp = sub[:, 0].copy()
            sub[:, 0] = sub[:, 1]
            sub[:, 1] = tmp
    else:
        raise AssertionError(f"unhandled kind {kind!r}")


def apply_gate(state: QuantumState, gate: Gate) -> QuantumState:
    """The gate's unitary applied to a copy of the state."""
    out = np.array(state, dtype=np.complex128)
    n = _register_width(out)
    _check_targets(gate, n)
    _apply_inplace(out, gate, n)
    return out


def _initial_state(circuit: Circuit, initial: QuantumState | None) -> np.ndarray:
    if initial is None:
        return zero_state(circuit.n_qubits)
    state = np.array(initial, dtype=np.complex128)
    if _register_width(state) != circuit.n_qubits:
        raise ValueError(
            f"initial state has {_register_width(state)} qubits, "
            f"circuit has {circuit.n_qubits}")
    return state


def run_ideal(circuit: Circuit, initial: QuantumState | None = None) -> QuantumState:
    """Left-to-right noiseless application of the whole circuit."""
    state = _initial_state(circuit, initial)
    for gate in circuit.gates:
        _apply_inplace(state, gate, circuit.n_qubits)
    return state


#: One potential insertion point: (gate index, firing rate, choices),
#: each choice being the Gate sequence realizing one Pauli product.
_Site = tuple[int, float, tuple[tuple[Gate, ...], ...]]


def noise_sites(circuit: Circuit, noise: NoiseModel) -> list[_Site]:
    """Insertion sites in circuit order; zero-rate channels contribute none."""
    budget = noise.budget
    sites: list[_Site] = []
    for i, gate in enumerate(circuit.gates):
        if gate.kind == "IDLE":
            rate = budget.eps0
        elif gate.is_two_qubit:
            rate = budget.eps2
        else:
            rate = budget.eps1
        if rate == 0.0:
            continue
        if gate.is_two_qubit:
            qa, qb = gate.targets
            choices = tuple(
                tuple(Gate(p, (q,)) for p, q in ((pa, qa), (pb, qb)) if p != "I")
                for pa, pb in PAULI_PAIRS)
        else:
            q = gate.targets[0]
            choices = tuple((Gate(p, (q,)),) for p in PAULI_1Q)
        sites.append((i, rate, choices))
    return sites


def sample_insertions(sites: list[_Site], traj_seed: int) -> dict[int, tuple[Gate, ...]]:
    """Draw one trajectory's insertions; see the module docstring for
    the exact draw order."""
    rng = np.random.Generator(np.random.Philox(traj_seed))
    if not sites:
        return {}
    uniforms = rng.random(len(sites))
    insertions: dict[int, tuple[Gate, ...]] = {}
    for j, (index, rate, choices) in enumerate(sites):
        if uniforms[j] < rate:
            insertions[index] = choices[int(rng.integers(0, len(choices)))]
    return insertions


def run_with_insertions(circuit: Circuit, insertions: dict[int, tuple[Gate, ...]],
                        initial: QuantumState | None = None) -> QuantumState:
    """Run the circuit applying each insertion right after its gate."""
    state = _initial_state(circuit, initial)
    n = circuit.n_qubits
    for i, gate in enumerate(circuit.gates):
        _apply_inplace(state, gate, n)
        extra = insertions.get(i)
        if extra is not None:
            for pauli in extra:
                _apply_inplace(state, pauli, n)
    return state


def run_trajectory(circuit: Circuit, noise: NoiseModel, seed: int,
                   initial: QuantumState | None = None) -> QuantumState:
    """One stochastic realization; identical seed gives identical bits."""
    insertions = sample_insertions(noise_sites(circuit, noise), seed)
    return run_with_insertions(circuit, insertions, initial)


def state_fidelity(a: QuantumState, b: QuantumState) -> float:
    """|<a|b>|^2 normalized by both norms; exactly 1.0 for identical states."""
    overlap = np.vdot(a, b)
    denom = np.vdot(a, a).real * np.vdot(b, b).real
    return float((overlap.real ** 2 + overlap.imag ** 2) / denom)


def estimate_fidelity(circuit: Circuit, noise: NoiseModel, n_traj: int,
                      seed: int) -> FidelityEstimate:
    """Mean overlap with the ideal state over n_traj trajectories.

    Trajectory i uses seed+i.  A trajectory with no insertions is bit-
    identical to the ideal run, so its overlap contributes exactly 1.0
    without re-running the circuit.
    """
    if n_traj < 1:
        raise ValueError(f"n_traj must be >= 1, got {n_traj}")
    sites = noise_sites(circuit, noise)
    ideal = run_ideal(circuit)
    values = np.empty(n_traj, dtype=np.float64)
    for i in range(n_traj):
        insertions = sample_insertions(sites, seed + i)
        if not insertions:
            values[i] = 1.0
        else:
            values[i] = state_fidelity(ideal, run_with_insertions(circuit, insertions))
    mean = float(values.mean())
    std_error = float(values.std(ddof=1) / math.sqrt(n_traj)) if n_traj > 1 else 0.0
    return FidelityEstimate(mean=mean, std_error=std_error,
                            n_trajectories=n_traj, seed=seed)
