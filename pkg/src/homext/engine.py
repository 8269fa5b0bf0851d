"""Deciding XY-homogeneity: exact on finite graphs, bounded on oracle graphs.

A graph is XY-homogeneous when every local morphism of kind X extends to a
total endomorphism of kind Y.  For finite graphs the decision is exact: all
local morphisms are enumerated and extendability is settled by exhaustive
backtracking, with results shared across the 18 (X, Y) pairs through one
memoized analysis per graph.  For oracle graphs a back-and-forth schedule is
driven inside a truncation; a negative verdict is definite only when the
stuck step's candidate set is provably confined to a finite list by the
generator's declared structure, otherwise the answer is UnknownAtBound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from .graphs import FiniteGraph, GraphError, OracleGraph, connected_components, oracle_truncate
from .morphisms import (
    EndoKind,
    MorphismKind,
    PartialMap,
    X_BY_NAME,
    X_KINDS,
    X_NAMES,
    Y_KINDS,
    classify_map,
)

DECIDE_CAP = 7
DEFAULT_MAX_DOMAIN = 4
DEFAULT_HORIZON = 64
DEFAULT_DEPTH = 16
DEFAULT_WINDOW = 8


class Status(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown-at-bound"


@dataclass
class Verdict:
    """Three-valued outcome; failures carry a re-checkable witness."""

    status: Status
    witness: PartialMap | None = None
    stuck: int | None = None
    stuck_side: str | None = None
    certificate: str | None = None
    note: str | None = None
    bounds: dict | None = None
    witnesses: tuple[PartialMap, ...] = ()
    details: tuple = ()

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def report_line(self, x: MorphismKind, y: EndoKind) -> str:
        xn, yn = X_NAMES[x], y.value
        if self.status is Status.HOLDS:
            return f"HOLDS X={xn} Y={yn}"
        if self.status is Status.FAILS:
            stuck = "-" if self.stuck is None else str(self.stuck)
            line = f"FAIL X={xn} Y={yn} map={self.witness.serialize()} stuck={stuck}"
            if self.certificate:
                line += f" certificate={self.certificate}"
            if self.note:
                line += f" note={self.note}"
            return line
        return f"UNKNOWN X={xn} Y={yn} bounds={self.bounds}"


_RANK = {Status.HOLDS: 2, Status.UNKNOWN: 1, Status.FAILS: 0}


@dataclass
class MembershipVector:
    """One verdict per (X, Y) pair of the 18 morphism-extension classes."""

    entries: dict[tuple[MorphismKind, EndoKind], Verdict]

    def get(self, code: str) -> Verdict:
        """Look up by a two-letter code such as ``"MB"``."""
        return self.entries[(X_BY_NAME[code[0]], EndoKind(code[1]))]

    def items(self) -> Iterator[tuple[str, Verdict]]:
        for x in X_KINDS:
            for y in Y_KINDS:
                yield X_NAMES[x] + y.value, self.entries[(x, y)]

    def monotonicity_violations(self) -> list[str]:
        """Order violations along both axes; empty on a lawful vector."""
        out = []
        rank = {k: _RANK[v.status] for k, v in self.entries.items()}
        for y in Y_KINDS:
            iso, mono, hom = (
                rank[(MorphismKind.ISOMORPHISM, y)],
                rank[(MorphismKind.MONOMORPHISM, y)],
                rank[(MorphismKind.HOMOMORPHISM, y)],
            )
            if not (iso >= mono >= hom):
                out.append(f"X-axis order broken at Y={y.value}")
        for x in X_KINDS:
            for y in Y_KINDS:
                for weaker in y.implies():
                    if rank[(x, y)] > rank[(x, weaker)]:
                        out.append(
                            f"Y-axis order broken: {X_NAMES[x]}{y.value} above "
                            f"{X_NAMES[x]}{weaker.value}"
                        )
        return out

    def table(self) -> str:
        return "\n".join(
            self.entries[(x, y)].report_line(x, y) for x in X_KINDS for y in Y_KINDS
        )


def _vertex_range(g, horizon: int | None) -> range:
    if isinstance(g, FiniteGraph):
        return range(g.n)
    if horizon is None:
        raise GraphError("oracle graphs need an explicit horizon")
    return range(horizon)


def _pair_ok(g, f_pairs, s: int, t: int, kind: MorphismKind) -> bool:
    # constraints the new pair (s, t) adds against every existing pair
    for u, fu in f_pairs:
        e = g.adj(u, s)
        fe = g.adj(fu, t)
        if e and not fe:
            return False
        if kind is MorphismKind.ISOMORPHISM and e != fe:
            return False
        if kind >= MorphismKind.MONOMORPHISM and (fu == t or u == s):
            return False
    return True


def _extension_candidates(g, pairs, c, kind, vrange) -> tuple[int, ...]:
    return tuple(d for d in vrange if _pair_ok(g, pairs, c, d, kind))


def _preimage_candidates(g, pairs, b, kind, vrange) -> tuple[int, ...]:
    dom = {u for u, _ in pairs}
    return tuple(
        a for a in vrange if a not in dom and _pair_ok(g, pairs, a, b, kind)
    )


def one_step_extension(
    g, f: PartialMap, c: int, kind: MorphismKind, *, horizon: int | None = None
) -> tuple[int, ...]:
    """All targets ``d`` such that ``f + (c -> d)`` still has the given kind.

    For monomorphism kind and above, ``d`` must avoid the current image.
    """
    if c in f.domain:
        raise GraphError(f"vertex {c} already in the domain")
    if classify_map(g, f) < kind:
        raise GraphError("map is below the requested kind")
    return _extension_candidates(g, f.pairs, c, kind, _vertex_range(g, horizon))


def one_step_preimage(
    g, f: PartialMap, b: int, kind: MorphismKind, *, horizon: int | None = None
) -> tuple[int, ...]:
    """All sources ``a`` outside the domain such that ``f + (a -> b)`` keeps the kind."""
    if b in set(f.image):
        raise GraphError(f"vertex {b} already in the image")
    if classify_map(g, f) < kind:
        raise GraphError("map is below the requested kind")
    return _preimage_candidates(g, f.pairs, b, kind, _vertex_range(g, horizon))


# ---------------------------------------------------------------------------
# Exact finite decisions


def _map_is_hom_compatible(g: FiniteGraph, pairs) -> bool:
    for i in range(len(pairs)):
        u, fu = pairs[i]
        for j in range(i + 1, len(pairs)):
            v, fv = pairs[j]
            if g.adj(u, v) and not g.adj(fu, fv):
                return False
    return True


def _map_is_iso_compatible(g: FiniteGraph, pairs) -> bool:
    for i in range(len(pairs)):
        u, fu = pairs[i]
        for j in range(i + 1, len(pairs)):
            v, fv = pairs[j]
            if g.adj(u, v) != g.adj(fu, fv):
                return False
    return True


def extend_finite(g: FiniteGraph, f: PartialMap, y: EndoKind) -> tuple[int, ...] | None:
    """A total endomorphism of kind ``y`` extending ``f``, or ``None``.

    Backtracking over the unassigned vertices with forward checking: each
    vertex keeps a candidate bitmask, narrowed by every assignment; the
    most-constrained vertex is assigned first, candidate values in ascending
    order.  For surjective kinds two prunes apply: the image plus the number
    of unassigned vertices must still reach ``n``, and every uncovered vertex
    must retain at least one candidate preimage.  ``None`` is an absence
    proof by exhaustion.
    """
    n = g.n
    rows = g.rows
    for s, t in f.pairs:
        if not (0 <= s < n and 0 <= t < n):
            raise GraphError(f"map pair ({s}, {t}) out of range for n={n}")
    if y.needs_injective and not f.is_injective():
        return None
    if not _map_is_hom_compatible(g, f.pairs):
        return None
    if y.preserves_nonedges and not _map_is_iso_compatible(g, f.pairs):
        return None

    assign: list[int] = [-1] * n
    for s, t in f.pairs:
        assign[s] = t
    full = (1 << n) - 1

    def narrowed(cands: list[int], v: int, d: int) -> list[int] | None:
        out = list(cands)
        forbid = (1 << d) if y.needs_injective else 0
        for x in range(n):
            if assign[x] >= 0 or x == v:
                continue
            mask = out[x]
            if rows[x] >> v & 1:
                mask &= rows[d]
            elif y.preserves_nonedges:
                mask &= ~rows[d] & full & ~(1 << d)
            mask &= ~forbid
            if mask == 0:
                return None
            out[x] = mask
        return out

    def initial_candidates() -> list[int] | None:
        used = 0
        for t in assign:
            if t >= 0:
                used |= 1 << t
        cands = [full] * n
        for v in range(n):
            if assign[v] >= 0:
                cands[v] = 1 << assign[v]
                continue
            mask = full
            if y.needs_injective:
                mask &= ~used
            for u in range(n):
                if assign[u] < 0:
                    continue
                if rows[u] >> v & 1:
                    mask &= rows[assign[u]]
                elif y.preserves_nonedges:
                    mask &= ~rows[assign[u]] & full & ~(1 << assign[u])
            if mask == 0:
                return None
            cands[v] = mask
        return cands

    def surjectivity_ok(cands: list[int]) -> bool:
        used = 0
        free = 0
        for v in range(n):
            if assign[v] >= 0:
                used |= 1 << assign[v]
            else:
                free += 1
        if used.bit_count() + free < n:
            return False
        coverable = used
        for v in range(n):
            if assign[v] < 0:
                coverable |= cands[v]
        return coverable == full

    def search(cands: list[int]) -> bool:
        if y.needs_surjective and not surjectivity_ok(cands):
            return False
        best_v = -1
        best_count = n + 1
        for v in range(n):
            if assign[v] < 0:
                c = cands[v].bit_count()
                if c < best_count:
                    best_v, best_count = v, c
        if best_v < 0:
            return True
        mask = cands[best_v]
        while mask:
            low = mask & -mask
            d = low.bit_length() - 1
            mask ^= low
            assign[best_v] = d
            nxt = narrowed(cands, best_v, d)
            if nxt is not None and search(nxt):
                return True
            assign[best_v] = -1
        return False

    cands = initial_candidates()
    if cands is None:
        return None
    if not search(cands):
        return None
    total = tuple(assign)
    if y.needs_surjective:
        assert len(set(total)) == n
    return total


def total_endo_kinds(g: FiniteGraph, total: Iterable[int]) -> set[EndoKind]:
    """All endomorphism kinds a total vertex map satisfies (empty if not a hom)."""
    t = tuple(total)
    if len(t) != g.n:
        raise GraphError("total map must assign every vertex")
    pairs = tuple(zip(range(g.n), t))
    if not _map_is_hom_compatible(g, pairs):
        return set()
    kinds = {EndoKind.H}
    injective = len(set(t)) == g.n  # equivalently surjective, on a finite self-map
    iso = _map_is_iso_compatible(g, pairs)
    if injective:
        kinds.add(EndoKind.M)
        kinds.add(EndoKind.B)
        kinds.add(EndoKind.E)
    if iso and injective:
        kinds.add(EndoKind.I)
        kinds.add(EndoKind.A)
    return kinds


def _enumerate_homs(g: FiniteGraph):
    """All local homomorphisms as (domain, values, kind), size then lex order."""
    n = g.n
    rows = g.rows
    out = []
    values = [0] * n
    for size in range(1, n + 1):
        for dom in itertools.combinations(range(n), size):
            def rec(pos: int, injective: bool, iso: bool) -> None:
                if pos == size:
                    vals = tuple(values[:size])
                    if injective and iso:
                        kind = MorphismKind.ISOMORPHISM
                    elif injective:
                        kind = MorphismKind.MONOMORPHISM
                    else:
                        kind = MorphismKind.HOMOMORPHISM
                    out.append((dom, vals, kind))
                    return
                u = dom[pos]
                for d in range(n):
                    ok = True
                    inj2 = injective
                    iso2 = iso
                    for q in range(pos):
                        e = rows[dom[q]] >> u & 1
                        fe = rows[values[q]] >> d & 1
                        if e and not fe:
                            ok = False
                            break
                        if e != fe:
                            iso2 = False
                        if values[q] == d:
                            inj2 = False
                    if ok:
                        values[pos] = d
                        rec(pos + 1, inj2, iso2 and inj2)

            rec(0, True, True)
    return out


class _YExtender:
    """Memoized extendability of partial maps to total endomorphisms of one kind.

    The recursion always assigns the least unassigned vertex, so memo entries
    are shared between queries whose domains overlap on prefixes.  Keys are
    ``(domain bitmask, values in vertex order)``; a map's extendability is a
    property of the map alone, so the cache is sound across queries.  Queried
    maps must already be homomorphism-compatible (the enumeration only
    produces those); the kind-specific constraints are checked here.
    """

    def __init__(self, g: FiniteGraph, y: EndoKind):
        self.g = g
        self.y = y
        self.rows = g.rows
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def query(self, dom: tuple[int, ...], vals: tuple[int, ...]) -> bool:
        y = self.y
        if y.needs_injective and len(set(vals)) < len(vals):
            return False
        if y.needs_surjective and len(set(vals)) + (self.n - len(dom)) < self.n:
            return False
        if y.preserves_nonedges and not _map_is_iso_compatible(
            self.g, tuple(zip(dom, vals))
        ):
            return False
        dom_mask = 0
        for u in dom:
            dom_mask |= 1 << u
        return self._extend(dom_mask, vals)

    def _extend(self, dom_mask: int, vals: tuple[int, ...]) -> bool:
        key = (dom_mask, vals)
        memo = self.memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        n = self.n
        y = self.y
        if dom_mask == self.full:
            result = not y.needs_surjective or len(set(vals)) == n
            memo[key] = result
            return result
        v = (~dom_mask & self.full)
        v = (v & -v).bit_length() - 1  # least unassigned vertex
        rows = self.rows
        dom_bits = []
        m = dom_mask
        while m:
            low = m & -m
            dom_bits.append(low.bit_length() - 1)
            m ^= low
        used = 0
        for t in vals:
            used |= 1 << t
        img_size = used.bit_count()
        insert_at = (dom_mask & ((1 << v) - 1)).bit_count()
        new_mask = dom_mask | 1 << v
        result = False
        for d in range(n):
            if y.needs_injective and used >> d & 1:
                continue
            if y.needs_surjective:
                new_img = img_size + (0 if used >> d & 1 else 1)
                if new_img + (n - len(dom_bits) - 1) < n:
                    continue
            ok = True
            for idx, u in enumerate(dom_bits):
                e = rows[u] >> v & 1
                fe = rows[vals[idx]] >> d & 1
                if e and not fe:
                    ok = False
                    break
                if y.preserves_nonedges and e != fe:
                    ok = False
                    break
            if ok and self._extend(new_mask, vals[:insert_at] + (d,) + vals[insert_at:]):
                result = True
                break
        memo[key] = result
        return result


def _component_confinement_note(g: FiniteGraph, dom, vals, y: EndoKind) -> str | None:
    """Explain surjectivity failure through components when that is the obstruction."""
    if not y.needs_surjective:
        return None
    comps = connected_components(g)
    if len(comps) < 2:
        return None
    comp_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = idx
    touched = {comp_of[u] for u in dom}
    targets = {comp_of[t] for t in vals}
    untouched = len(comps) - len(touched)
    if len(targets) + untouched < len(comps):
        return (
            f"image confined to component(s) {sorted(targets)} of {len(comps)}; "
            f"at most {len(targets) + untouched} component(s) coverable"
        )
    return None


@dataclass
class _FiniteAnalysis:
    maps: list
    extendable: dict[EndoKind, list[bool]]


def _analyze_finite(g: FiniteGraph) -> _FiniteAnalysis:
    maps = _enumerate_homs(g)
    extendable: dict[EndoKind, list[bool]] = {}
    for y in Y_KINDS:
        ext = _YExtender(g, y)
        flags = [True] * len(maps)
        pending = {x: True for x in X_KINDS}
        for i, (dom, vals, kind) in enumerate(maps):
            if not any(pending[x] for x in X_KINDS if kind >= x):
                continue
            ok = ext.query(dom, vals)
            flags[i] = ok
            if not ok:
                for x in X_KINDS:
                    if kind >= x:
                        pending[x] = False
        extendable[y] = flags
    return _FiniteAnalysis(maps, extendable)


def _finite_verdict(g: FiniteGraph, analysis: _FiniteAnalysis, x: MorphismKind, y: EndoKind) -> Verdict:
    flags = analysis.extendable[y]
    for i, (dom, vals, kind) in enumerate(analysis.maps):
        if kind < x or flags[i]:
            continue
        witness = PartialMap(tuple(zip(dom, vals)))
        stuck = None
        step_kind = y.required_kind
        if classify_map(g, witness) >= step_kind:
            for c in range(g.n):
                if c in dom:
                    continue
                if not one_step_extension(g, witness, c, step_kind):
                    stuck = c
                    break
        note = _component_confinement_note(g, dom, vals, y)
        return Verdict(Status.FAILS, witness=witness, stuck=stuck, note=note)
    return Verdict(Status.HOLDS)


@lru_cache(maxsize=4096)
def _classified(g: FiniteGraph) -> MembershipVector:
    analysis = _analyze_finite(g)
    entries = {
        (x, y): _finite_verdict(g, analysis, x, y) for x in X_KINDS for y in Y_KINDS
    }
    return MembershipVector(entries)


def decide_xy_finite(
    g: FiniteGraph, x: MorphismKind, y: EndoKind, *, cap: int = DECIDE_CAP
) -> Verdict:
    """Exact verdict: does every local morphism of kind ``x`` extend to kind ``y``?

    Exhaustive over all local morphisms (every domain size); failures carry
    the first non-extendable map in (size, domain, images) order, so the
    witness has minimal domain.  Graph size is capped (default
    :data:`DECIDE_CAP`) because the sweep enumerates every local morphism.
    """
    if g.n > cap:
        raise GraphError(f"exact decision for n={g.n} exceeds cap {cap}")
    return _classified(g).entries[(x, y)]


def classify_finite(g: FiniteGraph, *, cap: int = DECIDE_CAP) -> MembershipVector:
    """All 18 verdicts at once, sharing one extension analysis."""
    if g.n > cap:
        raise GraphError(f"exact classification for n={g.n} exceeds cap {cap}")
    return _classified(g)


# ---------------------------------------------------------------------------
# Bounded oracle decisions


@dataclass(frozen=True)
class TraceStep:
    index: int
    side: str  # "extension" | "preimage"
    pair: tuple[int, int]
    rule: str


@dataclass
class ExtensionTrace:
    """Record of a bounded back-and-forth run from one starting map."""

    initial: PartialMap
    y: EndoKind
    header: str
    steps: list[TraceStep] = field(default_factory=list)
    final: PartialMap | None = None
    outcome: str = "depth-reached"  # | "stuck" | "horizon-exhausted"
    stuck_vertex: int | None = None
    stuck_side: str | None = None
    certificate: str | None = None

    @property
    def is_stuck(self) -> bool:
        return self.outcome == "stuck"


def _certified_exhaustion(
    o: OracleGraph, f: PartialMap, target: int, side: str, kind: MorphismKind
) -> str | None:
    """Certificate that a stuck step has no candidate anywhere in the oracle.

    The declared structure may confine the step's candidates to a finite
    list: for a preimage of ``b`` every candidate must avoid the domain
    vertices whose images are non-neighbors of ``b``; for an extension of
    ``c`` every candidate must be adjacent to the images of the domain
    neighbors of ``c``.  If a complete candidate list comes back and every
    member fails the actual one-step test, the failure is
    horizon-independent.
    """
    structure = o.structure
    if structure is None:
        return None
    pairs = f.pairs
    if side == "preimage":
        avoid = frozenset(u for u, fu in pairs if not o.adj(fu, target))
        cands = structure.cocone_candidates(avoid)
        desc = f"co-cones over {sorted(avoid)}"
        if cands is None and kind is MorphismKind.ISOMORPHISM:
            need = frozenset(u for u, fu in pairs if o.adj(fu, target))
            cands = structure.cone_candidates(need)
            desc = f"cones over {sorted(need)}"
        dom = set(f.domain)
        if cands is None:
            return None
        for a in cands:
            if a not in dom and _pair_ok(o, pairs, a, target, kind):
                return None  # a live candidate exists beyond the horizon
        return f"preimage of {target} confined to {desc} = {sorted(cands)}; exhausted"
    need = frozenset(fu for u, fu in pairs if o.adj(u, target))
    cands = structure.cone_candidates(need)
    desc = f"cones over {sorted(need)}"
    if cands is None and kind is MorphismKind.ISOMORPHISM:
        avoid = frozenset(fu for u, fu in pairs if not o.adj(u, target))
        cands = structure.cocone_candidates(avoid)
        desc = f"co-cones over {sorted(avoid)}"
    if cands is None:
        return None
    for d in cands:
        if _pair_ok(o, pairs, target, d, kind):
            return None
    return f"image of {target} confined to {desc} = {sorted(cands)}; exhausted"


def back_and_forth(
    o: OracleGraph,
    f: PartialMap,
    y: EndoKind,
    *,
    depth: int = DEFAULT_DEPTH,
    horizon: int = DEFAULT_HORIZON,
    x: MorphismKind | None = None,
) -> ExtensionTrace:
    """Drive a bounded extension schedule for ``f`` toward a kind-``y`` endomorphism.

    Surjective targets alternate: even steps cover the least uncovered image
    vertex through a preimage search, odd steps extend the domain at its
    least missing vertex.  Non-surjective targets only extend the domain.
    Each step adds the least candidate inside the horizon; the schedule stops
    when the depth is reached, no candidate exists inside the horizon
    (``stuck``), or the truncation is entirely used up
    (``horizon-exhausted``).

    Steps preserve kind ``max(x, required kind of y)`` so that every prefix,
    in particular a stuck one, is itself a kind-``x`` morphism.  A stuck step
    is certified only when the candidate set at kind ``required(y)`` (the
    kind any restriction of a kind-``y`` endomorphism satisfies) is provably
    confined by the declared structure and exhausted; the stuck prefix is
    then a definite counterexample in its own right.
    """
    cert_kind = y.required_kind
    kind = cert_kind if x is None else max(x, cert_kind)
    if classify_map(o, f) < kind:
        raise GraphError(f"map is below the kind required for Y={y.value}")
    surj = y.needs_surjective
    header = f"schedule for Y={y.value}: step kind {kind.name}"
    header += ", alternating preimage/extension" if surj else ", extension only"
    if surj and kind > cert_kind:
        header += (
            f" (preimage steps kept at {kind.name} so stuck prefixes stay"
            f" valid witnesses)"
        )
    elif y is EndoKind.E and classify_map(o, f) is MorphismKind.ISOMORPHISM:
        header += " (isomorphism start driven by image-side preimage steps)"
    trace = ExtensionTrace(initial=f, y=y, header=header)
    current = f
    for step in range(depth):
        preimage_turn = surj and step % 2 == 0
        if preimage_turn:
            covered = set(current.image)
            target = next((b for b in range(horizon) if b not in covered), None)
            side = "preimage"
        else:
            dom = set(current.domain)
            target = next((c for c in range(horizon) if c not in dom), None)
            side = "extension"
        if target is None:
            trace.outcome = "horizon-exhausted"
            break
        pair = None
        if side == "preimage":
            dom = set(current.domain)
            for a in range(horizon):
                if a not in dom and _pair_ok(o, current.pairs, a, target, kind):
                    pair = (a, target)
                    break
        else:
            for d in range(horizon):
                if _pair_ok(o, current.pairs, target, d, kind):
                    pair = (target, d)
                    break
        if pair is None:
            trace.outcome = "stuck"
            trace.stuck_vertex = target
            trace.stuck_side = side
            in_horizon_weaker = False
            if cert_kind < kind:
                dom = set(current.domain)
                for v in range(horizon):
                    if side == "preimage":
                        ok = v not in dom and _pair_ok(o, current.pairs, v, target, cert_kind)
                    else:
                        ok = _pair_ok(o, current.pairs, target, v, cert_kind)
                    if ok:
                        in_horizon_weaker = True
                        break
            if not in_horizon_weaker:
                trace.certificate = _certified_exhaustion(
                    o, current, target, side, cert_kind
                )
            break
        current = current.extended(*pair)
        trace.steps.append(TraceStep(step, side, pair, f"least {side} candidate"))
    trace.final = current
    return trace


def _bounded_morphisms(
    o: OracleGraph, x: MorphismKind, k: int, window: int
) -> list[PartialMap]:
    """Kind-``x`` maps with domain and image inside the window, size then lex order."""
    from .morphisms import enumerate_local_morphisms

    trunc = oracle_truncate(o, window)
    maps = list(enumerate_local_morphisms(trunc, x, k))
    maps.sort(key=lambda f: (len(f.pairs), f.domain, f.values))
    return maps


def decide_xy_bounded(
    o: OracleGraph,
    x: MorphismKind,
    y: EndoKind,
    *,
    k: int = DEFAULT_MAX_DOMAIN,
    horizon: int = DEFAULT_HORIZON,
    depth: int = DEFAULT_DEPTH,
    window: int | None = None,
) -> Verdict:
    """Bounded sweep: back-and-forth from every kind-``x`` map inside the window.

    Never returns Holds for an oracle graph.  The sweep is complete over its
    bounds: every starting map is driven to depth and every certified stuck
    prefix is collected.  A certified stuck prefix extends its starting map
    by kind-preserving steps, so it is itself a kind-``x`` morphism with no
    kind-``y`` extension anywhere in the graph: the verdict's witnesses are
    those prefix maps, and ``details`` pairs each with its starting map and
    trace.  Uncertified stuck steps only contribute to the UnknownAtBound
    accounting.
    """
    window = min(horizon, DEFAULT_WINDOW) if window is None else window
    definite: list[tuple[PartialMap, ExtensionTrace]] = []
    stuck_uncertified = 0
    maps = _bounded_morphisms(o, x, k, window)
    for f in maps:
        kind = classify_map(o, f)
        if kind < y.required_kind:
            # a restriction of a kind-y endomorphism always has kind
            # required(y); a strictly weaker map fails horizon-independently
            trace = ExtensionTrace(
                initial=f,
                y=y,
                header="kind obstruction",
                final=f,
                outcome="stuck",
                certificate=(
                    f"map kind {kind.name} below {y.required_kind.name}, the kind "
                    f"every restriction of a {y.value}-endomorphism has"
                ),
            )
            definite.append((f, trace))
            continue
        trace = back_and_forth(o, f, y, depth=depth, horizon=horizon, x=x)
        if trace.is_stuck:
            if trace.certificate:
                definite.append((f, trace))
            else:
                stuck_uncertified += 1
    bounds = {
        "max_domain": k,
        "horizon": horizon,
        "depth": depth,
        "window": window,
        "maps": len(maps),
        "stuck_uncertified": stuck_uncertified,
    }
    if definite:
        first, trace = definite[0]
        return Verdict(
            Status.FAILS,
            witness=trace.final,
            stuck=trace.stuck_vertex,
            stuck_side=trace.stuck_side,
            certificate=trace.certificate,
            bounds=bounds,
            witnesses=tuple(tr.final for _, tr in definite),
            details=tuple((f, tr) for f, tr in definite),
        )
    return Verdict(Status.UNKNOWN, bounds=bounds)
