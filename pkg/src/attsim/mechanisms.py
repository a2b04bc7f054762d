"""The three attitude mechanisms as single-step operators, plus the run loop.

Contagion pulls a node's attitude toward a close friend it names; homophily
wires new ties between strongly-opinionated nodes; confounding jolts two
connected nodes toward a shared external stimulus. Every attitude update is a
convex combination of values in [0, 1], so attitudes stay in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .graph import AttitudeNetwork
from .metrics import CorrelationReport, correlation_report


class Mode(Enum):
    CONTAGION = "PureContagion"
    HOMOPHILY = "PureHomophily"
    CONFOUNDING = "PureConfounding"
    MIXED = "Mixed"


@dataclass(frozen=True)
class MechanismParams:
    """Mechanism strengths.

    contagion_weight: share of the named friend's attitude acquired per event,
        in (0, 0.5]; doubled for mutual ties, so the cap keeps 2w <= 1.
    homophily_threshold: attitude at or above which a node counts as strong.
    confounding_weight: pull toward the external stimulus, in (0, 1].
    """

    contagion_weight: float = 0.05
    homophily_threshold: float = 0.8
    confounding_weight: float = 0.5

    def __post_init__(self) -> None:
        if not 0.0 < self.contagion_weight <= 0.5:
            raise ValueError(
                f"contagion_weight must be in (0, 0.5], got {self.contagion_weight}"
            )
        if not 0.0 < self.homophily_threshold < 1.0:
            raise ValueError(
                f"homophily_threshold must be in (0, 1), got {self.homophily_threshold}"
            )
        if not 0.0 < self.confounding_weight <= 1.0:
            raise ValueError(
                f"confounding_weight must be in (0, 1], got {self.confounding_weight}"
            )


@dataclass(frozen=True)
class MechanismSchedule:
    """Which mechanism fires per iteration, for how long, and snapshot cadence.

    In MIXED mode ``mix`` gives (contagion, homophily, confounding)
    probabilities sampled independently each iteration; pure modes apply the
    same mechanism every iteration and consume no selection draw.
    """

    mode: Mode = Mode.CONTAGION
    mix: tuple[float, float, float] | None = None
    iterations: int = 50000
    snapshot_every: int = 500

    def __post_init__(self) -> None:
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")
        if self.snapshot_every < 1:
            raise ValueError(f"snapshot_every must be >= 1, got {self.snapshot_every}")
        if self.mode is Mode.MIXED:
            if self.mix is None:
                raise ValueError("Mixed mode requires mix probabilities")
            if any(p < 0 for p in self.mix):
                raise ValueError(f"mix probabilities must be >= 0, got {self.mix}")
            if abs(sum(self.mix) - 1.0) > 1e-12:
                raise ValueError(f"mix probabilities must sum to 1, got {self.mix}")
        elif self.mix is not None:
            raise ValueError("mix probabilities only apply to Mixed mode")


@dataclass
class StepReport:
    """What one mechanism step did.

    ``updates`` holds (node, old, new) attitude changes: one entry for a
    contagion step, two for a confounding step, none for homophily.
    """

    mechanism: str
    changed: bool
    tie: tuple[int, int] | None = None
    mutual: bool = False
    pair: tuple[int, int] | None = None
    tie_created: bool = False
    stimulus: float | None = None
    updates: list[tuple[int, float, float]] = field(default_factory=list)


def _clamp(x: float) -> float:
    # guards against float rounding pushing a convex combination past a bound
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


def contagion_step(
    network: AttitudeNetwork, params: MechanismParams, rng: np.random.Generator
) -> StepReport:
    """Sample one directed close tie (A names B) and pull A toward B.

    The effective weight doubles when the tie is mutual. Only the naming node
    changes; topology is untouched. An empty close layer is an explicit no-op
    that still advances the RNG once.
    """
    ties = network.close_ties()
    if not ties:
        rng.random()
        return StepReport(mechanism="contagion", changed=False)
    src, dst = ties[int(rng.integers(len(ties)))]
    mutual = network.has_close_tie(dst, src)
    w = params.contagion_weight * (2.0 if mutual else 1.0)
    old = network.attitudes[src]
    new = _clamp(network.attitudes[dst] * w + old * (1.0 - w))
    network.attitudes[src] = new
    return StepReport(
        mechanism="contagion",
        changed=True,
        tie=(src, dst),
        mutual=mutual,
        updates=[(src, old, new)],
    )


def _strong_nodes(network: AttitudeNetwork, threshold: float) -> list[int]:
    return [v for v, a in enumerate(network.attitudes) if a >= threshold]


def _homophily_step_on(
    network: AttitudeNetwork, strong: list[int], rng: np.random.Generator
) -> StepReport:
    if len(strong) < 2:
        rng.random()
        return StepReport(mechanism="homophily", changed=False)
    i = int(rng.integers(len(strong)))
    j = int(rng.integers(len(strong) - 1))
    if j >= i:
        j += 1
    a, b = strong[i], strong[j]
    if network.has_base_tie(a, b):
        return StepReport(mechanism="homophily", changed=False, pair=(a, b))
    network.add_base_tie(a, b)
    network.add_close_tie(a, b)
    network.add_close_tie(b, a)
    return StepReport(mechanism="homophily", changed=True, pair=(a, b), tie_created=True)


def homophily_step(
    network: AttitudeNetwork, params: MechanismParams, rng: np.random.Generator
) -> StepReport:
    """Tie together two uniformly-sampled strong-attitude nodes.

    Creates the base tie plus a mutual close-tie pair so the new relation is
    visible to every tie-type measure. Already-tied pairs and strong sets
    smaller than two are recorded no-ops; attitudes never change.
    """
    return _homophily_step_on(
        network, _strong_nodes(network, params.homophily_threshold), rng
    )


def confounding_step(
    network: AttitudeNetwork, params: MechanismParams, rng: np.random.Generator
) -> StepReport:
    """Pull a random node and one of its friends toward a fresh stimulus.

    The stimulus is uniform [0, 1], applied to both endpoints with the same
    convex update used for contagion. Topology is untouched.
    """
    n = len(network)
    if n == 0:
        rng.random()
        return StepReport(mechanism="confounding", changed=False)
    v = int(rng.integers(n))
    nbrs = network.base_neighbors(v)
    if not nbrs:
        rng.random()
        return StepReport(mechanism="confounding", changed=False)
    u = nbrs[int(rng.integers(len(nbrs)))]
    s = float(rng.random())
    w = params.confounding_weight
    updates = []
    for x in (v, u):
        old = network.attitudes[x]
        new = _clamp(s * w + old * (1.0 - w))
        network.attitudes[x] = new
        updates.append((x, old, new))
    return StepReport(
        mechanism="confounding", changed=True, pair=(v, u), stimulus=s, updates=updates
    )


def run_simulation(
    network: AttitudeNetwork,
    params: MechanismParams,
    schedule: MechanismSchedule,
    rng: np.random.Generator,
    callback=None,
) -> list[tuple[int, CorrelationReport]]:
    """Apply mechanism steps for ``schedule.iterations`` iterations.

    Emits a CorrelationReport at iteration 0, every ``snapshot_every``
    iterations, and at the final iteration (once, if they coincide), both via
    the optional callback and in the returned list. Fully deterministic given
    the generator state. No-op steps still consume their iteration and RNG
    draws so iteration counts stay comparable across mechanisms.
    """
    reports: list[tuple[int, CorrelationReport]] = []

    def emit(t: int) -> None:
        rep = correlation_report(network)
        reports.append((t, rep))
        if callback is not None:
            callback(t, rep)

    emit(0)
    mix_cum = None
    if schedule.mode is Mode.MIXED:
        mix_cum = np.cumsum(schedule.mix)
    # strong set is static while attitudes are static; invalidate on change
    strong: list[int] | None = None
    for t in range(1, schedule.iterations + 1):
        mode = schedule.mode
        if mix_cum is not None:
            k = int(np.searchsorted(mix_cum, rng.random(), side="right"))
            mode = (Mode.CONTAGION, Mode.HOMOPHILY, Mode.CONFOUNDING)[min(k, 2)]
        if mode is Mode.CONTAGION:
            contagion_step(network, params, rng)
            strong = None
        elif mode is Mode.CONFOUNDING:
            confounding_step(network, params, rng)
            strong = None
        else:
            if strong is None:
                strong = _strong_nodes(network, params.homophily_threshold)
            _homophily_step_on(network, strong, rng)
        if t % schedule.snapshot_every == 0 and t != schedule.iterations:
            emit(t)
    if schedule.iterations > 0:
        emit(schedule.iterations)
    return reports
