"""Gate vocabulary for the state-vector simulator.

Qubit 0 is the most significant bit of the basis-state index, so on two
qubits |10> is index 2.  For two-qubit gates the first target is the
control (CNOT) or simply the first wire (CZ is symmetric).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

ONE_QUBIT_KINDS = ("H", "X", "Y", "Z", "S", "T", "RZ", "RX", "IDLE")
TWO_QUBIT_KINDS = ("CZ", "CNOT")
PARAMETRIC_KINDS = ("RZ", "RX")

_SQ2 = math.sqrt(0.5)
_T_PHASE = cmath.exp(0.25j * math.pi)


class BadTargetError(ValueError):
    """Gate targets out of range, repeated, or otherwise unusable."""


@dataclass(frozen=True)
class Gate:
    """One circuit operation: a kind, its target wires, an angle if any."""

    kind: str
    targets: tuple[int, ...]
    theta: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ONE_QUBIT_KINDS and self.kind not in TWO_QUBIT_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        targets = tuple(self.targets)
        object.__setattr__(self, "targets", targets)
        arity = 2 if self.kind in TWO_QUBIT_KINDS else 1
        if len(targets) != arity:
            raise BadTargetError(
                f"{self.kind} takes {arity} target(s), got {targets!r}")
        for t in targets:
            if not isinstance(t, int) or isinstance(t, bool) or t < 0:
                raise BadTargetError(f"targets must be non-negative ints, got {targets!r}")
        if len(set(targets)) != len(targets):
            raise BadTargetError(f"duplicate targets {targets!r}")
        if self.kind in PARAMETRIC_KINDS:
            if self.theta is None:
                raise ValueError(f"{self.kind} requires an angle")
            theta = float(self.theta)
            if not math.isfinite(theta):
                raise ValueError(f"{self.kind} angle must be finite, got {theta!r}")
            object.__setattr__(self, "theta", theta)
        elif self.theta is not None:
            raise ValueError(f"{self.kind} takes no angle")

    @property
    def is_two_qubit(self) -> bool:
        return self.kind in TWO_QUBIT_KINDS


def h(q: int) -> Gate:
    return Gate("H", (q,))


def x(q: int) -> Gate:
    return Gate("X", (q,))


def y(q: int) -> Gate:
    return Gate("Y", (q,))


def z(q: int) -> Gate:
    return Gate("Z", (q,))


def s(q: int) -> Gate:
    return Gate("S", (q,))


def t(q: int) -> Gate:
    return Gate("T", (q,))


def rz(q: int, theta: float) -> Gate:
    return Gate("RZ", (q,), theta)


def rx(q: int, theta: float) -> Gate:
    return Gate("RX", (q,), theta)


def cz(a: int, b: int) -> Gate:
    return Gate("CZ", (a, b))


def cnot(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


def idle(q: int) -> Gate:
    return Gate("IDLE", (q,))


def gate_matrix(gate: Gate) -> np.ndarray:
    """Dense unitary of the gate, 2x2 or 4x4 (first target = high bit).

    Reference implementation for tests; the engine applies gates with
    strided slice arithmetic instead.
    """
    k = gate.kind
    if k == "H":
        return np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=np.complex128)
    if k == "X":
        return np.array([[0, 1], [1, 0]], dtype=np.complex128)
    if k == "Y":
        return np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    if k == "Z":
        return np.diag([1, -1]).astype(np.complex128)
    if k == "S":
        return np.diag([1, 1j]).astype(np.complex128)
    if k == "T":
        return np.diag([1, _T_PHASE]).astype(np.complex128)
    if k == "IDLE":
        return np.eye(2, dtype=np.complex128)
    if k == "RZ":
        half = gate.theta / 2.0
        return np.diag([cmath.exp(-1j * half), cmath.exp(1j * half)]).astype(np.complex128)
    if k == "RX":
        c = math.cos(gate.theta / 2.0)
        sv = -1j * math.sin(gate.theta / 2.0)
        return np.array([[c, sv], [sv, c]], dtype=np.complex128)
    if k == "CZ":
        return np.diag([1, 1, 1, -1]).astype(np.complex128)
    if k == "CNOT":
        m = np.eye(4, dtype=np.complex128)
        m[[2, 3]] = m[[3, 2]]
        return m
    raise AssertionError(f"unhandled kind {k!r}")
