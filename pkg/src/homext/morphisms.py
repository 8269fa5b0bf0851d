"""Finite partial maps between vertex sets and their morphism classification.

A :class:`PartialMap` is a finite partial function on the vertex set of a
single ambient graph.  Maps are stored as sorted source/target pair lists so
that sparse domains over unbounded oracle vertices work the same way as dense
domains on finite graphs.  Every map is surjective onto its image by
construction, which is the only shape the extension machinery ever needs to
consider.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Iterator

from .graphs import FiniteGraph, GraphError


class MorphismKind(IntEnum):
    """Classification of a partial map, ordered by strength."""

    NOT_HOMOMORPHISM = 0
    HOMOMORPHISM = 1
    MONOMORPHISM = 2
    ISOMORPHISM = 3


class EndoKind(str, Enum):
    """Kinds of total endomorphisms a local morphism may extend to.

    H: homomorphism, M: monomorphism (injective), I: self-embedding
    (isomorphism onto an induced image), E: epimorphism (surjective),
    B: bimorphism (bijective homomorphism), A: automorphism.
    """

    H = "H"
    M = "M"
    I = "I"  # noqa: E741 - single-letter kind names are the domain vocabulary
    E = "E"
    B = "B"
    A = "A"

    @property
    def required_kind(self) -> MorphismKind:
        """Weakest local-morphism kind a map must have to extend to this kind."""
        return _REQUIRED[self]

    @property
    def needs_injective(self) -> bool:
        return self in (EndoKind.M, EndoKind.I, EndoKind.B, EndoKind.A)

    @property
    def needs_surjective(self) -> bool:
        return self in (EndoKind.E, EndoKind.B, EndoKind.A)

    @property
    def preserves_nonedges(self) -> bool:
        return self in (EndoKind.I, EndoKind.A)

    def implies(self) -> tuple["EndoKind", ...]:
        """Kinds every endomorphism of this kind also has."""
        return _IMPLIES[self]


_REQUIRED = {
    EndoKind.H: MorphismKind.HOMOMORPHISM,
    EndoKind.E: MorphismKind.HOMOMORPHISM,
    EndoKind.M: MorphismKind.MONOMORPHISM,
    EndoKind.B: MorphismKind.MONOMORPHISM,
    EndoKind.I: MorphismKind.ISOMORPHISM,
    EndoKind.A: MorphismKind.ISOMORPHISM,
}

_IMPLIES = {
    EndoKind.A: (EndoKind.I, EndoKind.B, EndoKind.E),
    EndoKind.B: (EndoKind.M, EndoKind.E),
    EndoKind.I: (EndoKind.M,),
    EndoKind.M: (EndoKind.H,),
    EndoKind.E: (EndoKind.H,),
    EndoKind.H: (),
}

X_KINDS = (MorphismKind.ISOMORPHISM, MorphismKind.MONOMORPHISM, MorphismKind.HOMOMORPHISM)
Y_KINDS = (EndoKind.H, EndoKind.I, EndoKind.A, EndoKind.E, EndoKind.B, EndoKind.M)

X_NAMES = {
    MorphismKind.ISOMORPHISM: "I",
    MorphismKind.MONOMORPHISM: "M",
    MorphismKind.HOMOMORPHISM: "H",
}
X_BY_NAME = {v: k for k, v in X_NAMES.items()}


@dataclass(frozen=True)
class PartialMap:
    """Finite partial vertex map as sorted ``(source, target)`` pairs."""

    pairs: tuple[tuple[int, int], ...]

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, int]]) -> "PartialMap":
        ps = tuple(sorted(pairs))
        for (a, _), (b, _) in zip(ps, ps[1:]):
            if a == b:
                raise GraphError(f"source vertex {a} repeated")
        return PartialMap(ps)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted({t for _, t in self.pairs}))

    @property
    def values(self) -> tuple[int, ...]:
        """Targets in source order (may repeat)."""
        return tuple(t for _, t in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def is_injective(self) -> bool:
        return len({t for _, t in self.pairs}) == len(self.pairs)

    def extended(self, source: int, target: int) -> "PartialMap":
        return PartialMap.from_pairs(self.pairs + ((source, target),))

    def restricted(self, vertices: Iterable[int]) -> "PartialMap":
        keep = set(vertices)
        return PartialMap(tuple(p for p in self.pairs if p[0] in keep))

    def serialize(self) -> str:
        return ",".join(f"{s}->{t}" for s, t in self.pairs)

    @staticmethod
    def parse(text: str) -> "PartialMap":
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                s, t = chunk.split("->")
                pairs.append((int(s), int(t)))
            except ValueError as exc:
                raise GraphError(f"bad map chunk {chunk!r}") from exc
        return PartialMap.from_pairs(pairs)


def classify_map(g, f: PartialMap) -> MorphismKind:
    """Classify ``f`` within the ambient graph ``g`` (finite or oracle).

    Homomorphism: edges map to edges.  Monomorphism: additionally injective.
    Isomorphism: additionally nonedges map to nonedges.
    """
    if isinstance(g, FiniteGraph):
        for s, t in f.pairs:
            if not (0 <= s < g.n and 0 <= t < g.n):
                raise GraphError(f"map vertex pair ({s}, {t}) out of range for n={g.n}")
    pairs = f.pairs
    hom = True
    iso = True
    for i in range(len(pairs)):
        u, fu = pairs[i]
        for j in range(i + 1, len(pairs)):
            v, fv = pairs[j]
            e, fe = g.adj(u, v), g.adj(fu, fv)
            if e and not fe:
                hom = False
            if e != fe:
                iso = False
        if not hom:
            return MorphismKind.NOT_HOMOMORPHISM
    if not f.is_injective():
        return MorphismKind.HOMOMORPHISM
    return MorphismKind.ISOMORPHISM if iso else MorphismKind.MONOMORPHISM


def enumerate_local_morphisms(
    g: FiniteGraph, x: MorphismKind, k: int
) -> Iterator[PartialMap]:
    """All maps of kind at least ``x`` with domain size ``1..k``, each exactly once.

    Deterministic lexicographic order of ``(domain, image assignment)``.
    """
    if k < 1:
        raise GraphError(f"max domain size must be at least 1, got {k}")
    n = g.n
    rows = g.rows
    for dom in _subsets_lex(n, min(k, n)):
        size = len(dom)
        values = [0] * size

        def rec(pos: int) -> Iterator[PartialMap]:
            if pos == size:
                yield PartialMap(tuple(zip(dom, values)))
                return
            u = dom[pos]
            for d in range(n):
                ok = True
                for q in range(pos):
                    e = rows[dom[q]] >> u & 1
                    fe = rows[values[q]] >> d & 1
                    if e and not fe:
                        ok = False
                        break
                    if x is MorphismKind.ISOMORPHISM and e != fe:
                        ok = False
                        break
                    if x >= MorphismKind.MONOMORPHISM and values[q] == d:
                        ok = False
                        break
                if ok:
                    values[pos] = d
                    yield from rec(pos + 1)

        yield from rec(0)


def _subsets_lex(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # nonempty subsets of range(n), size <= k, in lexicographic tuple order
    for first in range(n):
        stack = [(first,)]
        while stack:
            cur = stack.pop()
            yield cur
            if len(cur) < k:
                stack.extend(
                    cur + (nxt,) for nxt in range(n - 1, cur[-1], -1)
                )


def kernel(f: PartialMap) -> tuple[tuple[int, ...], ...]:
    """Partition of the domain into blocks of equal image value."""
    blocks: dict[int, list[int]] = {}
    for s, t in f.pairs:
        blocks.setdefault(t, []).append(s)
    return tuple(sorted(tuple(sorted(b)) for b in blocks.values()))


def transversal(f: PartialMap) -> tuple[int, ...]:
    """Least-index representative of each kernel block, in increasing order."""
    return tuple(sorted(block[0] for block in kernel(f)))


def neighborhood_indicator(g, v: int, fset: Iterable[int]) -> tuple[int, ...]:
    """Adjacency indicator of ``v`` against the ordered finite set ``fset``."""
    fs = tuple(fset)
    if v in fs:
        raise GraphError(f"vertex {v} lies in the indicator set")
    return tuple(int(g.adj(v, x)) for x in fs)


def all_subsets(vertices: Iterable[int], max_size: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of size up to ``max_size``, smaller sizes first."""
    vs = tuple(vertices)
    for size in range(1, max_size + 1):
        yield from itertools.combinations(vs, size)
