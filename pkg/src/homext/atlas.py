"""Exhaustive small-graph corpus and the JSONL atlas of membership vectors.

The corpus enumerates one representative per isomorphism class by canonical
filtering of all labeled graphs, feasible through seven vertices.  Atlas
records are emitted one JSON object per line after a schema header; output
is byte-reproducible, so reruns can both be diffed and resumed.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .engine import Verdict, classify_finite
from .formats import to_graph6
from .graphs import FiniteGraph, GraphError, canonical_form

ATLAS_SCHEMA = "homext-atlas/1"
ENUMERATION_CAP = 7


def graphs_of_size(n: int) -> list[FiniteGraph]:
    """Canonical representatives of all isomorphism classes on ``n`` vertices."""
    if n < 1:
        raise GraphError(f"size must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise GraphError(f"exhaustive enumeration beyond {ENUMERATION_CAP} vertices")
    pairs = list(itertools.combinations(range(n), 2))
    seen: dict[FiniteGraph, None] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        g = FiniteGraph.from_edges(n, edges)
        canon, _ = canonical_form(g)
        seen.setdefault(canon, None)
    return sorted(seen, key=to_graph6)


def corpus_upto(n_max: int) -> list[tuple[str, FiniteGraph]]:
    """(id, graph) pairs for every isomorphism class on ``1..n_max`` vertices."""
    out = []
    for n in range(1, n_max + 1):
        for idx, g in enumerate(graphs_of_size(n)):
            out.append((f"n{n}g{idx:03d}", g))
    return out


@dataclass(frozen=True)
class AtlasRecord:
    """One classified graph; serializes to a single deterministic JSON line."""

    graph_id: str
    graph6: str
    n: int
    vector: dict[str, dict]
    provenance: dict
    bounds: dict

    def to_json(self) -> str:
        payload = {
            "id": self.graph_id,
            "graph6": self.graph6,
            "n": self.n,
            "vector": self.vector,
            "provenance": self.provenance,
            "bounds": self.bounds,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(line: str) -> "AtlasRecord":
        d = json.loads(line)
        return AtlasRecord(
            d["id"], d["graph6"], d["n"], d["vector"], d["provenance"], d["bounds"]
        )


def _verdict_cell(v: Verdict) -> dict:
    cell: dict = {"status": v.status.value}
    if v.witness is not None:
        cell["witness"] = v.witness.serialize()
    if v.stuck is not None:
        cell["stuck"] = v.stuck
    if v.note:
        cell["note"] = v.note
    if v.certificate:
        cell["certificate"] = v.certificate
    return cell


def record_for(graph_id: str, g: FiniteGraph, provenance: dict | None = None) -> AtlasRecord:
    vector = {code: _verdict_cell(v) for code, v in classify_finite(g).items()}
    return AtlasRecord(
        graph_id,
        to_graph6(g),
        g.n,
        vector,
        provenance or {"corpus": "exhaustive"},
        {"mode": "finite-exact"},
    )


def atlas_records(n_max: int) -> Iterator[AtlasRecord]:
    for graph_id, g in corpus_upto(n_max):
        yield record_for(graph_id, g)


def write_atlas(
    records: Iterable[AtlasRecord], out: TextIO, *, skip_ids: set[str] | None = None
) -> int:
    """Stream records as JSONL after a schema header; returns records written."""
    out.write(json.dumps({"schema": ATLAS_SCHEMA}, sort_keys=True) + "\n")
    written = 0
    for rec in records:
        if skip_ids and rec.graph_id in skip_ids:
            continue
        out.write(rec.to_json() + "\n")
        written += 1
    return written


def read_atlas(lines: Iterable[str]) -> list[AtlasRecord]:
    records = []
    header_seen = False
    for line in lines:
        line = line.strip()
        if not line:
            continue
        if not header_seen:
            header = json.loads(line)
            if header.get("schema") != ATLAS_SCHEMA:
                raise GraphError(f"unknown atlas schema {header.get('schema')!r}")
            header_seen = True
            continue
        records.append(AtlasRecord.from_json(line))
    return records


def existing_ids(lines: Iterable[str]) -> set[str]:
    try:
        return {rec.graph_id for rec in read_atlas(lines)}
    except (GraphError, json.JSONDecodeError, KeyError):
        return set()
