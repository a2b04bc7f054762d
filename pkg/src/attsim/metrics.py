"""Ego-alter attitude averages and the similarity-correlation fingerprint.

For every node we average the attitudes of its alters in each relation class
(directional close-tie classes plus exact-distance shells), then correlate the
ego attitude with each alter-average row across nodes. The resulting profile
of correlations is what distinguishes the attitude-shaping mechanisms.

Cells without alters are Missing (NaN in matrix rows, None from the scalar
API) and are dropped pairwise before correlating; they are never imputed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .graph import AttitudeNetwork, RelationClass

# row order of the ego-alter matrix and of serialized reports
MATRIX_ROWS: tuple[RelationClass, ...] = (
    RelationClass.ALL_CLOSE,
    RelationClass.DISTANCE_2,
    RelationClass.DISTANCE_3,
    RelationClass.DISTANCE_4,
    RelationClass.INCOMING,
    RelationClass.OUTGOING,
    RelationClass.MUTUAL,
)

_MIN_PAIRS = 3  # a 2-point correlation is always +/-1, so report Undefined below this


@dataclass
class EgoAlterMatrix:
    """One column per node: ego attitude plus alter averages per relation class.

    Rows are float arrays aligned with node ids; NaN marks a node with no
    alters in that class.
    """

    ego: np.ndarray
    rows: dict[RelationClass, np.ndarray]

    def n_nodes(self) -> int:
        return len(self.ego)


@dataclass
class CorrelationReport:
    """Pearson correlation of ego attitude vs alter average, per relation class.

    ``correlations[c]`` is None (Undefined) when fewer than three nodes have
    alters in class c or either variable has zero variance over those nodes.
    ``n_effective[c]`` counts nodes with a non-Missing cell in class c.
    """

    correlations: dict[RelationClass, float | None]
    n_effective: dict[RelationClass, int]


def alter_average(
    network: AttitudeNetwork, node: int, relation: RelationClass
) -> float | None:
    """Mean attitude over ``alters(node, relation)``; None when the set is empty."""
    alters = network.alters(node, relation)
    if not alters:
        return None
    return math.fsum(network.attitudes[v] for v in alters) / len(alters)


def _mean_rows(mat: sp.csr_matrix, attitudes: np.ndarray) -> np.ndarray:
    counts = np.diff(mat.indptr)
    sums = mat @ attitudes
    out = np.full(len(attitudes), np.nan)
    nz = counts > 0
    out[nz] = sums[nz] / counts[nz]
    return out


def _distance_rows(
    undirected: sp.csr_matrix, attitudes: np.ndarray, block: int = 1024
) -> dict[int, np.ndarray]:
    """Alter-average rows for exact distances 2..4.

    Shortest paths are recomputed per call by breadth-first search (depth
    capped at 4); sources are processed in blocks so the distance matrix
    never exceeds block x n.
    """
    n = len(attitudes)
    rows = {d: np.full(n, np.nan) for d in (2, 3, 4)}
    for start in range(0, n, block):
        stop = min(start + block, n)
        dist = csgraph.dijkstra(
            undirected, unweighted=True, limit=4, indices=np.arange(start, stop)
        )
        for d in (2, 3, 4):
            shell = dist == d
            counts = shell.sum(axis=1)
            sums = shell @ attitudes
            nz = counts > 0
            seg = rows[d][start:stop]
            seg[nz] = sums[nz] / counts[nz]
    return rows


def build_matrix(network: AttitudeNetwork) -> EgoAlterMatrix:
    """Compute ego attitudes and all alter-average rows for a network.

    Pure function of the network's node and tie sets: two networks with equal
    attitudes and ties produce bit-identical matrices regardless of the order
    in which ties were inserted.
    """
    n = len(network)
    attitudes = np.asarray(network.attitudes, dtype=float)
    pairs = sorted(network.close_ties())
    if pairs:
        src = np.fromiter((p[0] for p in pairs), dtype=np.int64, count=len(pairs))
        dst = np.fromiter((p[1] for p in pairs), dtype=np.int64, count=len(pairs))
        data = np.ones(len(pairs))
        out_mat = sp.csr_matrix((data, (src, dst)), shape=(n, n))
    else:
        out_mat = sp.csr_matrix((n, n))
    in_mat = out_mat.T.tocsr()
    mutual = out_mat.multiply(in_mat).tocsr()
    union = (out_mat + in_mat).tocsr()
    union.data[:] = 1.0

    dist = _distance_rows(union, attitudes)
    rows = {
        RelationClass.ALL_CLOSE: _mean_rows(union, attitudes),
        RelationClass.DISTANCE_2: dist[2],
        RelationClass.DISTANCE_3: dist[3],
        RelationClass.DISTANCE_4: dist[4],
        RelationClass.INCOMING: _mean_rows(in_mat, attitudes),
        RelationClass.OUTGOING: _mean_rows(out_mat, attitudes),
        RelationClass.MUTUAL: _mean_rows(mutual, attitudes),
    }
    return EgoAlterMatrix(ego=attitudes, rows=rows)


def _as_float_array(values) -> np.ndarray:
    """Coerce a sequence of reals, allowing None for Missing."""
    return np.array([np.nan if v is None else float(v) for v in values], dtype=float)


def pearson(x, y) -> float | None:
    """Pearson correlation with pairwise deletion of Missing entries.

    Entries that are None or NaN on either side are dropped. Returns None
    (Undefined) when fewer than three pairs remain or either retained
    variable has zero variance.
    """
    xa = _as_float_array(x)
    ya = _as_float_array(y)
    if xa.shape != ya.shape:
        raise ValueError(f"length mismatch: {xa.shape} vs {ya.shape}")
    mask = ~np.isnan(xa) & ~np.isnan(ya)
    if int(mask.sum()) < _MIN_PAIRS:
        return None
    xv = xa[mask]
    yv = ya[mask]
    xc = xv - xv.mean()
    yc = yv - yv.mean()
    sxx = float(xc @ xc)
    syy = float(yc @ yc)
    if sxx == 0.0 or syy == 0.0:
        return None
    r = float(xc @ yc) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


def correlation_report(network: AttitudeNetwork) -> CorrelationReport:
    """Correlate ego attitude against each alter-average row."""
    matrix = build_matrix(network)
    correlations: dict[RelationClass, float | None] = {}
    n_effective: dict[RelationClass, int] = {}
    for cls in MATRIX_ROWS:
        row = matrix.rows[cls]
        correlations[cls] = pearson(matrix.ego, row)
        n_effective[cls] = int((~np.isnan(row)).sum())
    return CorrelationReport(correlations=correlations, n_effective=n_effective)
