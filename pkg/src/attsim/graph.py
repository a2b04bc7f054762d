"""Dual-layer social graph: undirected friendship ties plus directed close-friend ties.

The base layer is the plain friendship graph. The close layer is a directed
"names as friend" relation that may only exist on top of an existing base tie.
Each node carries a single attitude scalar in [0, 1].
"""

from __future__ import annotations

from enum import Enum


class GraphError(ValueError):
    """Structural violation in an attitude network."""


class MissingNodeError(GraphError):
    """Referenced node id does not exist."""


class SelfLoopError(GraphError):
    """Tie endpoints are the same node."""


class LayeringError(GraphError):
    """Close tie requested without an underlying base tie."""


class TieKind(Enum):
    BASE = "base"
    CLOSE = "close"


class RelationClass(Enum):
    """Alter classes used for ego-network averages and correlations."""

    INCOMING = "incoming"
    OUTGOING = "outgoing"
    MUTUAL = "mutual"
    ALL_CLOSE = "all_close"
    DISTANCE_2 = "distance2"
    DISTANCE_3 = "distance3"
    DISTANCE_4 = "distance4"


# shortest-path distance (on the undirected close-layer projection) per class
CLASS_DISTANCE = {
    RelationClass.ALL_CLOSE: 1,
    RelationClass.DISTANCE_2: 2,
    RelationClass.DISTANCE_3: 3,
    RelationClass.DISTANCE_4: 4,
}


class AttitudeNetwork:
    """Append-only two-layer graph with one attitude scalar per node.

    Node ids are dense integers 0..n-1. Ties are never removed. The
    ``attitudes`` list is public read access; mechanism code updates entries
    in place after clamping to [0, 1].
    """

    def __init__(self) -> None:
        self.attitudes: list[float] = []
        self._base_nbrs: list[list[int]] = []
        self._base_set: set[tuple[int, int]] = set()
        self._base_list: list[tuple[int, int]] = []
        self._close_out: list[list[int]] = []
        self._close_in: list[list[int]] = []
        self._close_set: set[tuple[int, int]] = set()
        self._close_list: list[tuple[int, int]] = []

    def __len__(self) -> int:
        return len(self.attitudes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AttitudeNetwork):
            return NotImplemented
        return (
            self.attitudes == other.attitudes
            and self._base_set == other._base_set
            and self._close_set == other._close_set
        )

    @property
    def n_base_ties(self) -> int:
        return len(self._base_list)

    @property
    def n_close_ties(self) -> int:
        return len(self._close_list)

    def _check_node(self, v: int) -> None:
        if not 0 <= v < len(self.attitudes):
            raise MissingNodeError(f"node {v} does not exist")

    # -- construction -------------------------------------------------

    def add_node(self, attitude: float) -> int:
        if not 0.0 <= attitude <= 1.0:
            raise ValueError(f"attitude {attitude} outside [0, 1]")
        self.attitudes.append(float(attitude))
        self._base_nbrs.append([])
        self._close_out.append([])
        self._close_in.append([])
        return len(self.attitudes) - 1

    def add_base_tie(self, a: int, b: int) -> bool:
        """Insert the undirected pair {a, b}; returns False if already present."""
        self._check_node(a)
        self._check_node(b)
        if a == b:
            raise SelfLoopError(f"base tie ({a}, {b}) is a self-loop")
        pair = (a, b) if a < b else (b, a)
        if pair in self._base_set:
            return False
        self._base_set.add(pair)
        self._base_list.append(pair)
        self._base_nbrs[a].append(b)
        self._base_nbrs[b].append(a)
        return True

    def add_close_tie(self, src: int, dst: int) -> bool:
        """Insert the directed pair (src, dst); requires base tie {src, dst}."""
        self._check_node(src)
        self._check_node(dst)
        if src == dst:
            raise SelfLoopError(f"close tie ({src}, {dst}) is a self-loop")
        if not self.has_base_tie(src, dst):
            raise LayeringError(f"close tie ({src}, {dst}) has no base tie")
        if (src, dst) in self._close_set:
            return False
        self._close_set.add((src, dst))
        self._close_list.append((src, dst))
        self._close_out[src].append(dst)
        self._close_in[dst].append(src)
        return True

    # -- queries ------------------------------------------------------

    def has_base_tie(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self._base_set

    def has_close_tie(self, src: int, dst: int) -> bool:
        return (src, dst) in self._close_set

    def is_mutual(self, a: int, b: int) -> bool:
        return (a, b) in self._close_set and (b, a) in self._close_set

    def base_degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._base_nbrs[v])

    def base_neighbors(self, v: int) -> list[int]:
        """Neighbor list in insertion order; treat as read-only."""
        self._check_node(v)
        return self._base_nbrs[v]

    def close_out_neighbors(self, v: int) -> list[int]:
        self._check_node(v)
        return self._close_out[v]

    def close_in_neighbors(self, v: int) -> list[int]:
        self._check_node(v)
        return self._close_in[v]

    def base_ties(self) -> list[tuple[int, int]]:
        """Undirected ties as (low, high) pairs in insertion order."""
        return self._base_list

    def close_ties(self) -> list[tuple[int, int]]:
        """Directed ties as (src, dst) pairs in insertion order."""
        return self._close_list

    def alters(self, node: int, relation: RelationClass) -> set[int]:
        """Alter set of ``node`` for a relation class.

        Directional classes read the close layer; distance classes are exact
        shortest-path shells on the undirected projection of the close layer,
        recomputed by BFS on demand. The node itself is never included.
        """
        self._check_node(node)
        if relation is RelationClass.INCOMING:
            return set(self._close_in[node])
        if relation is RelationClass.OUTGOING:
            return set(self._close_out[node])
        if relation is RelationClass.MUTUAL:
            return set(self._close_out[node]) & set(self._close_in[node])
        if relation is RelationClass.ALL_CLOSE:
            return set(self._close_out[node]) | set(self._close_in[node])
        return self._distance_shell(node, CLASS_DISTANCE[relation])

    def _distance_shell(self, node: int, dist: int) -> set[int]:
        visited = {node}
        frontier = {node}
        for _ in range(dist):
            nxt: set[int] = set()
            for v in frontier:
                for u in self._close_out[v]:
                    if u not in visited:
                        nxt.add(u)
                for u in self._close_in[v]:
                    if u not in visited:
                        nxt.add(u)
            if not nxt:
                return set()
            visited |= nxt
            frontier = nxt
        return frontier

    def check_invariants(self) -> None:
        """Raise GraphError if any structural invariant is violated."""
        n = len(self.attitudes)
        for a, b in self._base_list:
            if a == b:
                raise SelfLoopError(f"base tie ({a}, {b})")
            if not (0 <= a < n and 0 <= b < n):
                raise MissingNodeError(f"base tie ({a}, {b}) references unknown node")
        for s, d in self._close_list:
            if s == d:
                raise SelfLoopError(f"close tie ({s}, {d})")
            if not (0 <= s < n and 0 <= d < n):
                raise MissingNodeError(f"close tie ({s}, {d}) references unknown node")
            if not self.has_base_tie(s, d):
                raise LayeringError(f"close tie ({s}, {d}) has no base tie")
        for v, a in enumerate(self.attitudes):
            if not 0.0 <= a <= 1.0:
                raise GraphError(f"attitude of node {v} outside [0, 1]: {a}")
