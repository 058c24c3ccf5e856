"""Surface-code logical error law and code-size selection.

The logical error per logical operation for a code block of n_c
physical qubits is modeled as

    eps_L(n_c) = A * (eps2/eps_th)^sqrt(n_c) + B * eps_nc * n_c

with prefactors A, B = 1 by default.  The first term is the
exponentially suppressed correctable part (only meaningful below the
threshold eps_th); the second is the non-correctable floor, which grows
with block size and caps the achievable gain.

Code-size selection is an exhaustive integer scan: it is exact, cheap
(at most nc_max evaluations) and immune to the non-smooth minimum.  The
early exits below are provably equivalent to the full scan, because the
floor term is monotone in n_c under IEEE rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


class AboveThresholdError(ValueError):
    """eps2 at or above threshold: increasing the code size cannot help."""


class FloorUnreachableError(ValueError):
    """No code size within range reaches the requested logical error."""


@dataclass(frozen=True)
class QecCode:
    """Code family parameters and overhead multipliers.

    ``eps_nc`` is the non-correctable error rate per physical qubit per
    logical operation; ``nc_max`` bounds the code sizes considered in
    scans.  ``ops_per_logical_gate`` collapses gate synthesis,
    distillation and syndrome cycles into one physical-ops-per-logical-
    gate multiplier; ``factory_overhead`` multiplies the physical qubit
    count for magic-state factories.
    """

    eps_th: float = 0.01
    eps_nc: float = 0.0
    nc_max: int = 10 ** 6
    ops_per_logical_gate: int | float = 10 ** 4
    factory_overhead: int | float = 10
    correctable_prefactor: float = 1.0
    floor_prefactor: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 < self.eps_th < 1.0:
            raise ValueError(f"eps_th must lie in (0, 1), got {self.eps_th!r}")
        if not self.eps_nc >= 0:
            raise ValueError(f"eps_nc must be >= 0, got {self.eps_nc!r}")
        if not (isinstance(self.nc_max, int) and self.nc_max >= 1):
            raise ValueError(f"nc_max must be an integer >= 1, got {self.nc_max!r}")
        if not self.ops_per_logical_gate >= 1:
            raise ValueError("ops_per_logical_gate must be >= 1")
        if not self.factory_overhead >= 1:
            raise ValueError("factory_overhead must be >= 1")
        if not self.correctable_prefactor > 0:
            raise ValueError("correctable_prefactor must be positive")
        if not self.floor_prefactor > 0:
            raise ValueError("floor_prefactor must be positive")


@dataclass(frozen=True)
class QecPlan:
    """A chosen encoding: block size, its logical error, total qubits, floor."""

    n_c: int
    eps_l: float
    n_total: int | float
    floor: float


class CodeOptimum(NamedTuple):
    n_c: int
    eps_l: float


class FloorValue(float):
    """error_floor result; ``nc_limited`` is True when the scan stopped
    at nc_max while still improving, so a larger nc_max could do better."""

    nc_limited: bool

    def __new__(cls, value: float, nc_limited: bool) -> "FloorValue":
        obj = super().__new__(cls, value)
        obj.nc_limited = nc_limited
        return obj


def logical_error_rate(eps2: float, code: QecCode, n_c: int) -> float:
    """eps_L for one block: correctable term plus non-correctable floor."""
    if not eps2 >= 0:
        raise ValueError(f"eps2 must be >= 0, got {eps2!r}")
    if n_c < 1:
        raise ValueError(f"n_c must be >= 1, got {n_c!r}")
    correctable = code.correctable_prefactor * (eps2 / code.eps_th) ** math.sqrt(n_c)
    # Keep the floor term's evaluation order identical to the scan
    # bounds in optimal_code_size / required_code_size.
    return correctable + code.floor_prefactor * code.eps_nc * n_c


def _check_below_threshold(eps2: float, code: QecCode) -> None:
    if not eps2 >= 0:
        raise ValueError(f"eps2 must be >= 0, got {eps2!r}")
    if eps2 >= code.eps_th:
        raise AboveThresholdError(
            f"eps2={eps2!r} is at or above the threshold {code.eps_th!r}; "
            "error correction gains nothing from larger codes")


def optimal_code_size(eps2: float, code: QecCode) -> CodeOptimum:
    """Block size in [1, nc_max] minimizing eps_L, ties toward smaller.

    Equivalent to the exhaustive scan by construction: the loop only
    skips n_c whose floor term alone is already at or above the best
    value seen (the floor term never decreases with n_c, and the
    correctable term is non-negative).
    """
    _check_below_threshold(eps2, code)
    floor_slope = code.floor_prefactor * code.eps_nc
    best_nc = 1
    best = logical_error_rate(eps2, code, 1)
    for n_c in range(2, code.nc_max + 1):
        if best == 0.0:
            break  # nothing beats an exact zero; ties keep the smaller n_c
        if floor_slope > 0.0 and floor_slope * n_c >= best:
            break
        value = logical_error_rate(eps2, code, n_c)
        if value < best:
            best_nc, best = n_c, value
    return CodeOptimum(best_nc, best)


def error_floor(eps2: float, code: QecCode) -> FloorValue:
    """Minimum achievable eps_L over code sizes up to nc_max."""
    n_c, eps_l = optimal_code_size(eps2, code)
    return FloorValue(eps_l, nc_limited=(n_c == code.nc_max))


#: Relative slack on the target comparison.  "eps_L <= target" is meant
#: in real arithmetic; one part in 1e12 absorbs float rounding (for
#: example (1/10)^6 evaluates 2 ulp above the decimal 1e-6).
_TARGET_SLACK = 1e-12


def required_code_size(eps2: float, code: QecCode, target_eps_l: float) -> int:
    """Smallest block size whose eps_L is at or below the target.

    Raises :class:`FloorUnreachableError` when no n_c in [1, nc_max]
    reaches the target (the non-correctable floor, or the scan bound,
    is in the way) and :class:`AboveThresholdError` at or above
    threshold.
    """
    _check_below_threshold(eps2, code)
    if not target_eps_l >= 0:
        raise ValueError(f"target_eps_l must be >= 0, got {target_eps_l!r}")
    target = target_eps_l * (1.0 + _TARGET_SLACK)
    floor_slope = code.floor_prefactor * code.eps_nc
    for n_c in range(1, code.nc_max + 1):
        if floor_slope > 0.0 and floor_slope * n_c > target:
            break  # the floor term alone already exceeds the target from here on
        if logical_error_rate(eps2, code, n_c) <= target:
            return n_c
    raise FloorUnreachableError(
        f"no code size in [1, {code.nc_max}] reaches eps_L <= {target_eps_l!r} "
        f"at eps2={eps2!r} (floor {float(error_floor(eps2, code)):.4g})")


def physical_resources(n_logical: int, n_c: int, code: QecCode) -> int | float:
    """Total physical qubits: n_logical * n_c * factory_overhead."""
    if n_logical < 1:
        raise ValueError(f"n_logical must be >= 1, got {n_logical!r}")
    if n_c < 1:
        raise ValueError(f"n_c must be >= 1, got {n_c!r}")
    return n_logical * n_c * code.factory_overhead


def logical_runtime(n_logical_ops: int | float, code: QecCode,
                    cycle_time: float) -> float:
    """Seconds to execute the logical ops through the full QEC stack."""
    if n_logical_ops < 0:
        raise ValueError(f"n_logical_ops must be >= 0, got {n_logical_ops!r}")
    if not cycle_time > 0:
        raise ValueError(f"cycle_time must be positive, got {cycle_time!r}")
    return n_logical_ops * code.ops_per_logical_gate * cycle_time
