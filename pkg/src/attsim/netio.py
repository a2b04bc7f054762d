"""Delimited import/export of attitude networks.

A network serializes to two text tables sharing a path prefix:
``<prefix>.nodes.csv`` with columns node_id,attitude and
``<prefix>.ties.csv`` with columns src,dst,kind, kind in {base, close}.
Base rows are canonical (src < dst); close rows are directional. Attitudes
are printed with full precision so a round trip reconstructs the network
exactly.
"""

from __future__ import annotations

from pathlib import Path

from .graph import AttitudeNetwork, GraphError


class NetworkFormatError(ValueError):
    """Malformed or invariant-violating network file; message carries the line."""


def node_path(prefix) -> Path:
    return Path(f"{prefix}.nodes.csv")


def tie_path(prefix) -> Path:
    return Path(f"{prefix}.ties.csv")


def export_network(network: AttitudeNetwork, prefix) -> tuple[Path, Path]:
    """Write the nodes and ties tables; returns the two paths."""
    npath, tpath = node_path(prefix), tie_path(prefix)
    npath.parent.mkdir(parents=True, exist_ok=True)
    with open(npath, "w", encoding="utf-8") as fh:
        fh.write("node_id,attitude\n")
        for v, a in enumerate(network.attitudes):
            fh.write(f"{v},{a!r}\n")
    with open(tpath, "w", encoding="utf-8") as fh:
        fh.write("src,dst,kind\n")
        for a, b in sorted(network.base_ties()):
            fh.write(f"{a},{b},base\n")
        for s, d in sorted(network.close_ties()):
            fh.write(f"{s},{d},close\n")
    return npath, tpath


def _parse_node_row(path, lineno: int, row: str) -> tuple[int, float]:
    parts = row.split(",")
    if len(parts) != 2:
        raise NetworkFormatError(f"{path}:{lineno}: expected node_id,attitude")
    try:
        v = int(parts[0])
        a = float(parts[1])
    except ValueError:
        raise NetworkFormatError(f"{path}:{lineno}: cannot parse {row!r}") from None
    if not 0.0 <= a <= 1.0:
        raise NetworkFormatError(f"{path}:{lineno}: attitude {a} outside [0, 1]")
    return v, a


def import_network(prefix) -> AttitudeNetwork:
    """Rebuild a network from its two tables, enforcing every graph invariant.

    Close rows lacking a matching base row are rejected with the offending
    line number, as are unknown node ids, self-loops, non-dense ids, and
    unknown tie kinds.
    """
    npath, tpath = node_path(prefix), tie_path(prefix)
    entries: list[tuple[int, float]] = []
    with open(npath, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "node_id,attitude":
            raise NetworkFormatError(f"{npath}:1: expected header node_id,attitude")
        for lineno, line in enumerate(fh, start=2):
            if line.strip():
                entries.append(_parse_node_row(npath, lineno, line.strip()))
    entries.sort()
    if [v for v, _ in entries] != list(range(len(entries))):
        raise NetworkFormatError(f"{npath}: node ids must be dense 0..n-1")
    network = AttitudeNetwork()
    for _, attitude in entries:
        network.add_node(attitude)

    base_rows: list[tuple[int, int, int]] = []
    close_rows: list[tuple[int, int, int]] = []
    with open(tpath, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "src,dst,kind":
            raise NetworkFormatError(f"{tpath}:1: expected header src,dst,kind")
        for lineno, line in enumerate(fh, start=2):
            text = line.strip()
            if not text:
                continue
            parts = text.split(",")
            if len(parts) != 3:
                raise NetworkFormatError(f"{tpath}:{lineno}: expected src,dst,kind")
            try:
                s, d = int(parts[0]), int(parts[1])
            except ValueError:
                raise NetworkFormatError(f"{tpath}:{lineno}: cannot parse {text!r}") from None
            kind = parts[2]
            if kind == "base":
                base_rows.append((lineno, s, d))
            elif kind == "close":
                close_rows.append((lineno, s, d))
            else:
                raise NetworkFormatError(f"{tpath}:{lineno}: unknown tie kind {kind!r}")
    # base ties first so close rows can be layer-checked wherever they appear
    for lineno, s, d in base_rows:
        try:
            network.add_base_tie(s, d)
        except GraphError as exc:
            raise NetworkFormatError(f"{tpath}:{lineno}: {exc}") from None
    for lineno, s, d in close_rows:
        try:
            network.add_close_tie(s, d)
        except GraphError as exc:
            raise NetworkFormatError(f"{tpath}:{lineno}: {exc}") from None
    network.check_invariants()
    return network
