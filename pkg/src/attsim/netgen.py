"""Scale-free base network generation and close-friend tie derivation.

New nodes attach to m existing nodes with probability proportional to current
degree, which produces the heavy-tailed degree distribution of real friendship
networks. A second pass turns base ties into directed or mutual close-friend
ties with configurable probabilities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import AttitudeNetwork


class DegenerateDistributionError(ValueError):
    """Attachment distribution requested on a network with zero total degree."""


class StateError(RuntimeError):
    """Operation invoked on a network in the wrong build phase."""


@dataclass(frozen=True)
class GenParams:
    """Parameters for network generation.

    n: total node count, n > m.
    m: ties created per new node.
    p_close: probability that a base tie spawns close tie(s).
    p_mutual: probability a spawned close tie goes both ways; otherwise a
        single direction is chosen uniformly.
    seed: RNG seed (64-bit unsigned).
    """

    n: int = 1000
    m: int = 3
    p_close: float = 0.67
    p_mutual: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n <= self.m:
            raise ValueError(f"n must exceed m, got n={self.n}, m={self.m}")
        for name in ("p_close", "p_mutual"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass
class AttachmentDistribution:
    """Degree-proportional attachment weights over existing nodes."""

    weights: np.ndarray
    _cumulative: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        total = float(self.weights.sum())
        if not np.isclose(total, 1.0, atol=1e-12):
            raise ValueError(f"weights sum to {total}, expected 1")
        self._cumulative = np.cumsum(self.weights)

    def sample(self, rng: np.random.Generator) -> int:
        """Draw one node id with probability equal to its weight."""
        return int(np.searchsorted(self._cumulative, rng.random(), side="right"))


def attachment_distribution(network: AttitudeNetwork) -> AttachmentDistribution:
    """Weight each node by its share of total base-layer degree."""
    degrees = np.array([network.base_degree(v) for v in range(len(network))], dtype=float)
    total = degrees.sum()
    if total == 0:
        raise DegenerateDistributionError("network has no base ties")
    return AttachmentDistribution(degrees / total)


def generate_ba(params: GenParams, rng: np.random.Generator) -> AttitudeNetwork:
    """Grow a preferential-attachment network of n nodes.

    Starts from an m-node clique, then adds one node at a time, each tied to
    m distinct existing nodes sampled proportionally to current degree
    (duplicates rejected and redrawn). Attitudes are i.i.d. uniform [0, 1],
    drawn when each node is created.
    """
    net = AttitudeNetwork()
    for _ in range(params.m):
        net.add_node(float(rng.random()))
    # endpoint multiset: sampling an index uniformly is degree-proportional
    repeated: list[int] = []
    for a in range(params.m):
        for b in range(a + 1, params.m):
            net.add_base_tie(a, b)
            repeated.append(a)
            repeated.append(b)
    for new in range(params.m, params.n):
        net.add_node(float(rng.random()))
        chosen: list[int] = []
        seen: set[int] = set()
        while len(chosen) < params.m:
            if repeated:
                t = repeated[int(rng.integers(len(repeated)))]
            else:
                # only at m=1 before any tie exists: uniform over existing nodes
                t = int(rng.integers(new))
            if t not in seen:
                seen.add(t)
                chosen.append(t)
        for t in chosen:
            net.add_base_tie(new, t)
            repeated.append(new)
            repeated.append(t)
    return net


def derive_close_ties(
    network: AttitudeNetwork, params: GenParams, rng: np.random.Generator
) -> AttitudeNetwork:
    """Turn base ties into close-friend ties, in place.

    Each base tie independently spawns close ties with probability p_close;
    a spawned tie is mutual with probability p_mutual, otherwise one-way with
    the direction chosen uniformly. Returns the same network.
    """
    if network.n_close_ties:
        raise StateError("close layer already populated")
    for a, b in network.base_ties():
        if rng.random() < params.p_close:
            if rng.random() < params.p_mutual:
                network.add_close_tie(a, b)
                network.add_close_tie(b, a)
            elif rng.random() < 0.5:
                network.add_close_tie(a, b)
            else:
                network.add_close_tie(b, a)
    return network


def degree_ccdf(degrees: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Empirical complementary CDF P(K >= k) at each observed degree."""
    degrees = np.asarray(degrees)
    ks = np.unique(degrees)
    counts = np.array([(degrees >= k).sum() for k in ks], dtype=float)
    return ks, counts / len(degrees)


def ccdf_loglog_slope(degrees: np.ndarray, min_tail: int = 10) -> float:
    """Least-squares slope of log CCDF vs log degree.

    Points where fewer than ``min_tail`` nodes remain in the tail are dropped
    to keep the fit off the noisy extreme tail.
    """
    degrees = np.asarray(degrees)
    ks, ccdf = degree_ccdf(degrees)
    keep = ccdf * len(degrees) >= min_tail
    ks, ccdf = ks[keep], ccdf[keep]
    if len(ks) < 3:
        raise ValueError("too few distinct degrees for a slope fit")
    slope, _ = np.polyfit(np.log(ks), np.log(ccdf), 1)
    return float(slope)
