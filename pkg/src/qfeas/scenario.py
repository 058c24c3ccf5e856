"""Scenario files: strict-schema YAML describing one estimate/simulate run.

Top-level keys: ``hardware`` (preset name, or a mapping; a mapping may
start from ``preset:`` and override individual fields), ``algorithm``,
optional ``qec`` and ``cryo`` (defaults apply), optional ``simulation``.
Unknown keys anywhere are parse errors: a typo must never silently skew
a feasibility verdict.

Example::

    hardware: sc-2020
    algorithm: {kind: shor, size: 2048}
    qec: {eps_nc: 1.0e-10}
    simulation:
      kind: random
      qubits: 6
      depths: [25, 50, 100, 200]
      pairs_per_layer: 2
      noise: {eps2: 2.0e-3}
      trajectories: 4000
      seed: 1
"""

from __future__ import annotations

from dataclasses import dataclass

import yaml

from .algorithms import KINDS, AlgorithmSpec
from .engineering import CryoProfile
from .model import CHANNELS, ErrorBudget, HardwareProfile
from .presets import get_preset
from .qec import QecCode
from .sim.circuit import MAX_QUBITS
from .sim.grover import optimal_iterations


class ScenarioParseError(ValueError):
    """Malformed document: bad syntax or a key the schema does not know."""


class ScenarioValidationError(ValueError):
    """Well-formed document whose values violate an invariant."""


@dataclass(frozen=True)
class SimulationSettings:
    """The optional ``simulation`` block, fully resolved.

    ``kind`` is "random" (benchmarking circuits at each depth in
    ``depths``) or "grover" (one search circuit; ``iterations`` and
    ``marked`` default to the optimal count and the all-ones string).
    ``noise`` defaults to the scenario hardware's error budget.
    ``fit_channels`` limits the rate fit; None means fit the channels
    whose injected rate is nonzero.
    """

    kind: str
    qubits: int
    noise: ErrorBudget
    trajectories: int = 1000
    seed: int = 0
    depths: tuple[int, ...] | None = None
    pairs_per_layer: int | None = None
    iterations: int | None = None
    marked: str | None = None
    fit_channels: tuple[str, ...] | None = None


@dataclass(frozen=True)
class Scenario:
    hardware: HardwareProfile
    algorithm: AlgorithmSpec
    qec: QecCode
    cryo: CryoProfile
    simulation: SimulationSettings | None


_HARDWARE_KEYS = ("preset", "name", "eps0", "eps1", "eps2", "t2",
                  "gate_time_1q", "gate_time_2q", "cycle_time",
                  "time_per_qubit_layer", "yield_p", "area_per_qubit",
                  "dissipation_per_qubit")
_HARDWARE_REQUIRED = ("t2", "gate_time_1q", "gate_time_2q", "cycle_time",
                      "time_per_qubit_layer", "yield_p", "area_per_qubit",
                      "dissipation_per_qubit")
_ALGORITHM_KEYS = ("kind", "size", "target_fidelity", "chemistry_prefactor",
                   "routing_overhead")
_QEC_KEYS = ("eps_th", "eps_nc", "nc_max", "ops_per_logical_gate",
             "factory_overhead", "correctable_prefactor", "floor_prefactor")
_CRYO_KEYS = ("cooling_power_cold", "cooling_power_4k", "wall_power_per_fridge")
_SIM_COMMON_KEYS = ("kind", "qubits", "noise", "trajectories", "seed")
_SIM_RANDOM_KEYS = _SIM_COMMON_KEYS + ("depths", "pairs_per_layer", "fit")
_SIM_GROVER_KEYS = _SIM_COMMON_KEYS + ("iterations", "marked")
_NOISE_KEYS = ("eps0", "eps1", "eps2")


def _check_keys(node: dict, allowed: tuple[str, ...], path: str) -> None:
    unknown = [k for k in node if k not in allowed]
    if unknown:
        where = f"{path}.{unknown[0]}" if path else str(unknown[0])
        raise ScenarioParseError(
            f"unknown key {where!r}; allowed here: {', '.join(allowed)}")


def _mapping(node: object, path: str) -> dict:
    if not isinstance(node, dict):
        raise ScenarioValidationError(f"{path} must be a mapping, got {node!r}")
    return node


def _number(node: object, path: str) -> float:
    if isinstance(node, bool) or not isinstance(node, (int, float)):
        raise ScenarioValidationError(f"{path} must be a number, got {node!r}")
    return node


def _integer(node: object, path: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise ScenarioValidationError(f"{path} must be an integer, got {node!r}")
    return node


def _build(factory, path: str, **kwargs):
    try:
        return factory(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ScenarioValidationError(f"{path}: {exc}") from exc


def _parse_hardware(node: object) -> HardwareProfile:
    path = "hardware"
    if isinstance(node, str):
        try:
            return get_preset(node)
        except ValueError as exc:
            raise ScenarioValidationError(f"{path}: {exc}") from exc
    node = _mapping(node, path)
    _check_keys(node, _HARDWARE_KEYS, path)
    base = None
    if "preset" in node:
        preset_name = node["preset"]
        if not isinstance(preset_name, str):
            raise ScenarioValidationError(f"{path}.preset must be a string")
        try:
            base = get_preset(preset_name)
        except ValueError as exc:
            raise ScenarioValidationError(f"{path}: {exc}") from exc
    else:
        missing = [k for k in _HARDWARE_REQUIRED if k not in node]
        if missing:
            raise ScenarioValidationError(
                f"{path}: missing keys {missing} (or start from a preset)")

    def field(key: str, default):
        if key in node:
            return _number(node[key], f"{path}.{key}")
        return default

    budget = _build(
        ErrorBudget, f"{path}",
        eps0=field("eps0", base.budget.eps0 if base else 0.0),
        eps1=field("eps1", base.budget.eps1 if base else 0.0),
        eps2=field("eps2", base.budget.eps2 if base else 0.0),
    )
    name = node.get("name", base.name if base else "custom")
    if not isinstance(name, str):
        raise ScenarioValidationError(f"{path}.name must be a string")
    return _build(
        HardwareProfile, path,
        name=name,
        budget=budget,
        t2=field("t2", base.t2 if base else None),
        gate_time_1q=field("gate_time_1q", base.gate_time_1q if base else None),
        gate_time_2q=field("gate_time_2q", base.gate_time_2q if base else None),
        cycle_time=field("cycle_time", base.cycle_time if base else None),
        time_per_qubit_layer=field(
            "time_per_qubit_layer", base.time_per_qubit_layer if base else None),
        yield_p=field("yield_p", base.yield_p if base else None),
        area_per_qubit=field("area_per_qubit", base.area_per_qubit if base else None),
        dissipation_per_qubit=field(
            "dissipation_per_qubit", base.dissipation_per_qubit if base else None),
    )


def _parse_algorithm(node: object) -> AlgorithmSpec:
    path = "algorithm"
    node = _mapping(node, path)
    _check_keys(node, _ALGORITHM_KEYS, path)
    for key in ("kind", "size"):
        if key not in node:
            raise ScenarioValidationError(f"{path}.{key} is required")
    kind = node["kind"]
    if kind not in KINDS:
        raise ScenarioValidationError(
            f"{path}.kind must be one of {KINDS}, got {kind!r}")
    kwargs = {"kind": kind, "size_n": _integer(node["size"], f"{path}.size")}
    if "target_fidelity" in node:
        kwargs["target_fidelity"] = _number(node["target_fidelity"],
                                            f"{path}.target_fidelity")
    if "chemistry_prefactor" in node:
        kwargs["chemistry_prefactor"] = _number(node["chemistry_prefactor"],
                                                f"{path}.chemistry_prefactor")
    if "routing_overhead" in node:
        kwargs["routing_overhead"] = _number(node["routing_overhead"],
                                             f"{path}.routing_overhead")
    return _build(AlgorithmSpec, path, **kwargs)


def _parse_qec(node: object) -> QecCode:
    path = "qec"
    node = _mapping(node, path)
    _check_keys(node, _QEC_KEYS, path)
    kwargs = {}
    for key in _QEC_KEYS:
        if key in node:
            if key == "nc_max":
                kwargs[key] = _integer(node[key], f"{path}.{key}")
            else:
                kwargs[key] = _number(node[key], f"{path}.{key}")
    return _build(QecCode, path, **kwargs)


def _parse_cryo(node: object) -> CryoProfile:
    path = "cryo"
    node = _mapping(node, path)
    _check_keys(node, _CRYO_KEYS, path)
    kwargs = {k: _number(node[k], f"{path}.{k}") for k in _CRYO_KEYS if k in node}
    return _build(CryoProfile, path, **kwargs)


def _parse_noise(node: object, default: ErrorBudget, path: str) -> ErrorBudget:
    if node is None:
        return default
    node = _mapping(node, path)
    _check_keys(node, _NOISE_KEYS, path)
    kwargs = {k: _number(node[k], f"{path}.{k}") for k in _NOISE_KEYS if k in node}
    return _build(ErrorBudget, path, **kwargs)


def _parse_simulation(node: object, hardware: HardwareProfile) -> SimulationSettings:
    path = "simulation"
    node = _mapping(node, path)
    if node.get("kind") not in ("random", "grover"):
        raise ScenarioValidationError(
            f"{path}.kind must be 'random' or 'grover', got {node.get('kind')!r}")
    kind = node["kind"]
    allowed = _SIM_RANDOM_KEYS if kind == "random" else _SIM_GROVER_KEYS
    _check_keys(node, allowed, path)
    if "qubits" not in node:
        raise ScenarioValidationError(f"{path}.qubits is required")
    qubits = _integer(node["qubits"], f"{path}.qubits")
    min_q = 2 if kind == "random" else 1
    if not min_q <= qubits <= MAX_QUBITS:
        raise ScenarioValidationError(
            f"{path}.qubits must lie in [{min_q}, {MAX_QUBITS}], got {qubits}")
    noise = _parse_noise(node.get("noise"), hardware.budget, f"{path}.noise")
    trajectories = _integer(node.get("trajectories", 1000), f"{path}.trajectories")
    if trajectories < 1:
        raise ScenarioValidationError(f"{path}.trajectories must be >= 1")
    seed = _integer(node.get("seed", 0), f"{path}.seed")
    if seed < 0:
        raise ScenarioValidationError(f"{path}.seed must be >= 0")

    depths = pairs = iterations = marked = fit_channels = None
    if kind == "random":
        raw_depths = node.get("depths")
        if not isinstance(raw_depths, list) or not raw_depths:
            raise ScenarioValidationError(
                f"{path}.depths must be a non-empty list of layer counts")
        depths = tuple(_integer(d, f"{path}.depths[{i}]")
                       for i, d in enumerate(raw_depths))
        if any(d < 1 for d in depths):
            raise ScenarioValidationError(f"{path}.depths entries must be >= 1")
        if "pairs_per_layer" in node:
            pairs = _integer(node["pairs_per_layer"], f"{path}.pairs_per_layer")
            if not 1 <= pairs <= qubits // 2:
                raise ScenarioValidationError(
                    f"{path}.pairs_per_layer must lie in [1, {qubits // 2}]")
        if "fit" in node:
            raw_fit = node["fit"]
            if not isinstance(raw_fit, list) or not raw_fit:
                raise ScenarioValidationError(
                    f"{path}.fit must be a non-empty list of channel names")
            bad = [c for c in raw_fit if c not in CHANNELS]
            if bad:
                raise ScenarioValidationError(
                    f"{path}.fit: unknown channels {bad}; expected from {CHANNELS}")
            fit_channels = tuple(dict.fromkeys(raw_fit))
    else:
        iterations = node.get("iterations")
        if iterations is None:
            iterations = optimal_iterations(qubits)
        else:
            iterations = _integer(iterations, f"{path}.iterations")
            if iterations < 0:
                raise ScenarioValidationError(f"{path}.iterations must be >= 0")
        marked = node.get("marked", "1" * qubits)
        if (not isinstance(marked, str) or len(marked) != qubits
                or set(marked) - {"0", "1"}):
            raise ScenarioValidationError(
                f"{path}.marked must be a string of {qubits} bits, got {marked!r}")

    return SimulationSettings(
        kind=kind, qubits=qubits, noise=noise, trajectories=trajectories,
        seed=seed, depths=depths, pairs_per_layer=pairs,
        iterations=iterations, marked=marked, fit_channels=fit_channels)


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate one scenario document."""
    try:
        doc = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise ScenarioParseError(f"bad YAML{where}: {exc.problem}") from exc
    except yaml.YAMLError as exc:
        raise ScenarioParseError(f"bad YAML: {exc}") from exc
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise ScenarioParseError("the document must be a mapping")
    _check_keys(doc, ("hardware", "algorithm", "qec", "cryo", "simulation"), "")
    for key in ("hardware", "algorithm"):
        if key not in doc:
            raise ScenarioValidationError(f"{key!r} section is required")
    hardware = _parse_hardware(doc["hardware"])
    algorithm = _parse_algorithm(doc["algorithm"])
    qec = _parse_qec(doc.get("qec", {}))
    cryo = _parse_cryo(doc.get("cryo", {}))
    simulation = None
    if "simulation" in doc and doc["simulation"] is not None:
        simulation = _parse_simulation(doc["simulation"], hardware)
    return Scenario(hardware=hardware, algorithm=algorithm, qec=qec,
                    cryo=cryo, simulation=simulation)


def scenario_to_dict(scenario: Scenario) -> dict:
    """Plain-data echo of a scenario; parses back to an equal Scenario."""
    hw = scenario.hardware
    alg = scenario.algorithm
    code = scenario.qec
    cryo = scenario.cryo
    doc = {
        "hardware": {
            "name": hw.name,
            "eps0": hw.budget.eps0,
            "eps1": hw.budget.eps1,
            "eps2": hw.budget.eps2,
            "t2": hw.t2,
            "gate_time_1q": hw.gate_time_1q,
            "gate_time_2q": hw.gate_time_2q,
            "cycle_time": hw.cycle_time,
            "time_per_qubit_layer": hw.time_per_qubit_layer,
            "yield_p": hw.yield_p,
            "area_per_qubit": hw.area_per_qubit,
            "dissipation_per_qubit": hw.dissipation_per_qubit,
        },
        "algorithm": {
            "kind": alg.kind,
            "size": alg.size_n,
            "target_fidelity": alg.target_fidelity,
            "chemistry_prefactor": alg.chemistry_prefactor,
            "routing_overhead": alg.routing_overhead,
        },
        "qec": {
            "eps_th": code.eps_th,
            "eps_nc": code.eps_nc,
            "nc_max": code.nc_max,
            "ops_per_logical_gate": code.ops_per_logical_gate,
            "factory_overhead": code.factory_overhead,
            "correctable_prefactor": code.correctable_prefactor,
            "floor_prefactor": code.floor_prefactor,
        },
        "cryo": {
            "cooling_power_cold": cryo.cooling_power_cold,
            "cooling_power_4k": cryo.cooling_power_4k,
            "wall_power_per_fridge": cryo.wall_power_per_fridge,
        },
    }
    sim = scenario.simulation
    if sim is not None:
        block: dict = {
            "kind": sim.kind,
            "qubits": sim.qubits,
            "noise": {"eps0": sim.noise.eps0, "eps1": sim.noise.eps1,
                      "eps2": sim.noise.eps2},
            "trajectories": sim.trajectories,
            "seed": sim.seed,
        }
        if sim.kind == "random":
            block["depths"] = list(sim.depths)
            if sim.pairs_per_layer is not None:
                block["pairs_per_layer"] = sim.pairs_per_layer
            if sim.fit_channels is not None:
                block["fit"] = list(sim.fit_channels)
        else:
            block["iterations"] = sim.iterations
            block["marked"] = sim.marked
        doc["simulation"] = block
    return doc
