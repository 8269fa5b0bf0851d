"""Age analysis: cone/co-cone classification, age orders, and derived criteria.

The age of a graph is the set of isomorphism types of its finite induced
subgraphs.  Each type is flagged by whether some copy has a cone (a vertex
adjacent to the whole copy), some copy has none, and dually for co-cones.
Two partial orders compare age members: existence of a surjective
homomorphism, and of a surjective monomorphism.  On those ingredients sit
the closure criteria for extension-homogeneity, the four extension
properties, and the independence/star statistics with their inequality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .formats import to_graph6
from .graphs import (
    FiniteGraph,
    GraphError,
    OracleGraph,
    canonical_form,
    complement,
    induced_subgraph,
    max_independent_set_size,
    oracle_truncate,
)
from .engine import Status, Verdict
from .morphisms import PartialMap, all_subsets

EMBEDDING_CAP = 500
PROPERTY_NAMES = ("delta", "therefore", "star", "dagger")


class Flag(Enum):
    YES = "Y"
    NO = "N"
    UNKNOWN = "U"


@dataclass
class AgeEntry:
    """One isomorphism type in the age, with its cone/co-cone flags."""

    graph: FiniteGraph  # canonical form
    size: int
    copies: int  # distinct realizing vertex sets seen (within the bound)
    kk: Flag = Flag.UNKNOWN  # some copy has a cone
    okk: Flag = Flag.UNKNOWN  # some copy has no cone at all
    hh: Flag = Flag.UNKNOWN  # some copy has a co-cone
    ohh: Flag = Flag.UNKNOWN  # some copy has no co-cone at all
    coned_copy: tuple[int, ...] | None = None
    cone_free_copy: tuple[int, ...] | None = None
    coconed_copy: tuple[int, ...] | None = None
    cocone_free_copy: tuple[int, ...] | None = None

    @property
    def graph6(self) -> str:
        return to_graph6(self.graph)

    def report_line(self) -> str:
        return (
            f"size={self.size} canon={self.graph6} kk={self.kk.value} "
            f"okk={self.okk.value} hh={self.hh.value} ohh={self.ohh.value}"
        )


@dataclass
class _Source:
    """Uniform view of a finite graph or an oracle truncation."""

    trunc: FiniteGraph
    oracle: OracleGraph | None

    @property
    def finite(self) -> bool:
        return self.oracle is None

    @property
    def structure(self):
        return None if self.oracle is None else self.oracle.structure


def _as_source(source, horizon: int | None) -> _Source:
    if isinstance(source, FiniteGraph):
        return _Source(source, None)
    if isinstance(source, OracleGraph):
        if horizon is None:
            raise GraphError("oracle age analysis needs a horizon")
        return _Source(oracle_truncate(source, horizon), source)
    raise GraphError(f"unsupported source {source!r}")


def _cone_status(src: _Source, subset: tuple[int, ...], *, co: bool) -> tuple[bool, bool, int | None]:
    """(exists, definite_absence, witness) for cones (or co-cones) over a copy.

    Existence is first searched inside the truncation, then asked of the
    declared structure and verified pointwise against the predicate.
    Definite absence needs either a finite graph or a complete candidate
    list from the structure, every member of which fails.
    """
    g = src.trunc
    sset = set(subset)
    for v in range(g.n):
        if v in sset:
            continue
        hits = sum(1 for u in subset if g.adj(u, v))
        if (not co and hits == len(subset)) or (co and hits == 0):
            return True, False, v
    if src.finite:
        return False, True, None
    o = src.oracle
    structure = src.structure
    assert o is not None
    if structure is not None:
        witness = (
            structure.cocone_witness(frozenset(subset))
            if co
            else structure.cone_witness(frozenset(subset))
        )
        if witness is not None and witness not in sset:
            good = all(
                (not o.adj(witness, u)) if co else o.adj(witness, u) for u in subset
            )
            if good:
                return True, False, witness
        cands = (
            structure.cocone_candidates(frozenset(subset))
            if co
            else structure.cone_candidates(frozenset(subset))
        )
        if cands is not None:
            for v in cands:
                if v in sset:
                    continue
                ok = all(
                    (not o.adj(v, u)) if co else o.adj(v, u) for u in subset
                )
                if ok:
                    return True, False, v
            return False, True, None
    return False, False, None


def compute_age(
    source,
    k: int,
    *,
    horizon: int | None = None,
    embedding_cap: int = EMBEDDING_CAP,
) -> list[AgeEntry]:
    """Isomorphism types of induced subgraphs of size up to ``k``, with flags.

    Types are deduplicated by canonical form.  The four flags are settled per
    copy: an existence flag turns Yes on the first verified cone/co-cone, an
    absence flag turns Yes on the first copy whose candidate set is provably
    exhausted.  A No needs every copy examined the other way, so exceeding
    ``embedding_cap`` copies downgrades the universally quantified side to
    Unknown.
    """
    src = _as_source(source, horizon)
    g = src.trunc
    entries: dict[FiniteGraph, AgeEntry] = {}
    capped: set[FiniteGraph] = set()
    for subset in all_subsets(range(g.n), min(k, g.n)):
        canon, _ = canonical_form(induced_subgraph(g, subset))
        entry = entries.get(canon)
        if entry is None:
            entry = AgeEntry(canon, canon.n, 0)
            entries[canon] = entry
        entry.copies += 1
        if entry.copies > embedding_cap:
            capped.add(canon)
            continue
        has_cone, no_cone_definite, _ = _cone_status(src, subset, co=False)
        has_cocone, no_cocone_definite, _ = _cone_status(src, subset, co=True)
        if has_cone and entry.kk is not Flag.YES:
            entry.kk = Flag.YES
            entry.coned_copy = subset
        if no_cone_definite and entry.okk is not Flag.YES:
            entry.okk = Flag.YES
            entry.cone_free_copy = subset
        if has_cocone and entry.hh is not Flag.YES:
            entry.hh = Flag.YES
            entry.coconed_copy = subset
        if no_cocone_definite and entry.ohh is not Flag.YES:
            entry.ohh = Flag.YES
            entry.cocone_free_copy = subset
    for canon, entry in entries.items():
        # On a fully scanned finite source the flags are exhaustive: a flag
        # still Unknown means its existential never fired on any copy.
        if src.finite and canon not in capped:
            for attr in ("kk", "okk", "hh", "ohh"):
                if getattr(entry, attr) is Flag.UNKNOWN:
                    setattr(entry, attr, Flag.NO)
    return sorted(entries.values(), key=lambda e: (e.size, to_graph6(e.graph)))


def age_report(entries: list[AgeEntry]) -> str:
    """Entry lines followed by closure-violation lines, if any."""
    lines = [e.report_line() for e in entries]
    lines.extend(order_violation_lines(entries))
    return "\n".join(lines)


def order_violation_lines(entries: list[AgeEntry]) -> list[str]:
    """Definite breaks of the closure laws among the computed entries."""
    out = []
    for a in entries:
        for b in entries:
            if a is b:
                continue
            if a.kk is Flag.YES and b.kk is Flag.NO and order_preceq(a.graph, b.graph):
                out.append(
                    f"violation: coned {a.graph6} maps onto cone-free {b.graph6}"
                )
            if a.hh is Flag.YES and b.hh is Flag.NO and order_preceq(b.graph, a.graph):
                out.append(
                    f"violation: cocone-free {b.graph6} maps onto coconed {a.graph6}"
                )
    return out


def order_preceq(a: FiniteGraph, b: FiniteGraph) -> bool:
    """Existence of a surjective homomorphism from ``a`` onto ``b``."""
    if a.n < b.n:
        return False
    target = list(range(b.n))

    def rec(pos: int, values: list[int]) -> bool:
        if pos == a.n:
            return len(set(values)) == b.n
        if len(set(values)) + (a.n - pos) < b.n:
            return False
        for d in target:
            ok = True
            for q in range(pos):
                if a.adj(q, pos) and not b.adj(values[q], d):
                    ok = False
                    break
            if ok and rec(pos + 1, values + [d]):
                return True
        return False

    return rec(0, [])


def order_sqsubseteq(a: FiniteGraph, b: FiniteGraph) -> bool:
    """Existence of a surjective monomorphism (a bijective homomorphism) ``a -> b``."""
    if a.n != b.n:
        return False
    for perm in itertools.permutations(range(b.n)):
        if all(b.adj(perm[u], perm[v]) for u, v in a.edges()):
            return True
    return False


@dataclass
class CriterionReport:
    which: str
    conditions: list[tuple[str, Verdict]]
    entries: list[AgeEntry]

    @property
    def verdict(self) -> Verdict:
        worst = min(
            (v for _, v in self.conditions),
            key=lambda v: {Status.FAILS: 0, Status.UNKNOWN: 1, Status.HOLDS: 2}[v.status],
        )
        return worst

    def report(self) -> str:
        lines = [f"criterion {self.which}:"]
        for name, v in self.conditions:
            lines.append(f"  [{v.status.value}] {name}" + (f" ({v.note})" if v.note else ""))
        return "\n".join(lines)


def _flag_disjoint_condition(
    entries: list[AgeEntry], yes_attr: str, no_attr: str, label: str
) -> Verdict:
    unknown = False
    for e in entries:
        a, b = getattr(e, yes_attr), getattr(e, no_attr)
        if a is Flag.YES and b is Flag.YES:
            return Verdict(
                Status.FAILS,
                note=f"{label} overlap at {e.graph6}",
                witness=None,
            )
        if a is Flag.UNKNOWN or b is Flag.UNKNOWN:
            unknown = True
    return Verdict(Status.UNKNOWN if unknown else Status.HOLDS)


def _closure_condition(
    entries: list[AgeEntry],
    attr: str,
    order,
    *,
    upward: bool,
    label: str,
) -> Verdict:
    """Closure of a Yes-flagged set of entries under an age order.

    Upward closure: a Yes entry below a No entry is a violation.  Downward
    closure: a Yes entry above a No entry is a violation.  Unknown flags on
    either side leave the condition undecided at this bound.
    """
    unknown = False
    for a in entries:
        fa = getattr(a, attr)
        if fa is Flag.UNKNOWN:
            unknown = True
        if fa is not Flag.YES:
            continue
        for b in entries:
            if a is b:
                continue
            related = order(a.graph, b.graph) if upward else order(b.graph, a.graph)
            if not related:
                continue
            fb = getattr(b, attr)
            if fb is Flag.NO:
                return Verdict(
                    Status.FAILS,
                    note=f"{label}: {a.graph6} yes but {'above' if not upward else 'below'}-related {b.graph6} no",
                )
            if fb is Flag.UNKNOWN:
                unknown = True
    return Verdict(Status.UNKNOWN if unknown else Status.HOLDS)


def check_criterion(
    source,
    which: str,
    k: int,
    *,
    horizon: int | None = None,
    embedding_cap: int = EMBEDDING_CAP,
) -> CriterionReport:
    """Closure conditions on the age that characterize HH/HE/ME-homogeneity.

    HH: no age member both has a coned copy and a cone-free copy, and the
    coned members are upward-closed under the surjective-homomorphism order.
    HE adds the dual co-cone conditions with downward closure in the same
    order; ME uses the surjective-monomorphism order instead.  On finite
    inputs every condition is definite; on oracles a condition fails only on
    flag values that are certificate-backed, and is otherwise unknown.
    """
    which = which.upper()
    if which not in ("HH", "HE", "ME"):
        raise GraphError(f"unknown criterion {which!r}")
    src = _as_source(source, horizon)
    entries = compute_age(source, k, horizon=horizon, embedding_cap=embedding_cap)
    conditions = [
        (
            "coned and cone-free age members disjoint",
            _flag_disjoint_condition(entries, "kk", "okk", "kk/okk"),
        ),
        (
            "coned members upward-closed under surjective-hom order",
            _closure_condition(entries, "kk", order_preceq, upward=True, label="kk up"),
        ),
    ]
    if which in ("HE", "ME"):
        order = order_preceq if which == "HE" else order_sqsubseteq
        order_name = "surjective-hom" if which == "HE" else "surjective-mono"
        conditions.append(
            (
                "coconed and cocone-free age members disjoint",
                _flag_disjoint_condition(entries, "hh", "ohh", "hh/ohh"),
            )
        )
        conditions.append(
            (
                f"coconed members downward-closed under {order_name} order",
                _closure_condition(entries, "hh", order, upward=False, label="hh down"),
            )
        )
    if not src.finite:
        # the conditions quantify over the full age; a clean bounded scan
        # never settles them positively for an infinite graph
        conditions = [
            (
                name,
                Verdict(Status.UNKNOWN, note="no violation within bound")
                if v.status is Status.HOLDS
                else v,
            )
            for name, v in conditions
        ]
    return CriterionReport(which, conditions, entries)


@dataclass
class PropertyReport:
    which: str
    verdict: Verdict
    cases: int
    unwitnessed: int

    @property
    def all_witnessed(self) -> bool:
        return self.unwitnessed == 0 and self.verdict.status is not Status.FAILS


def _find_cone_like(
    src: _Source,
    need_adjacent: tuple[int, ...],
    need_nonadjacent: tuple[int, ...],
    excluded: set[int],
    horizon: int,
    *,
    injective_avoid: set[int] | None = None,
) -> tuple[int | None, bool]:
    """(witness, definite_absence) for a vertex matching adjacency demands.

    Searches the horizon first; on a miss, asks the structure for a complete
    candidate list (confinement) to certify absence, or a constructive
    witness beyond the horizon.
    """
    g = src.trunc
    avoid = excluded if injective_avoid is None else excluded | injective_avoid

    def matches(v: int, via_oracle: bool) -> bool:
        if v in avoid:
            return False
        adj = src.oracle.adj if via_oracle else g.adj
        return all(adj(v, u) for u in need_adjacent) and not any(
            adj(v, u) for u in need_nonadjacent
        )

    for v in range(min(horizon, g.n) if src.finite else horizon):
        if matches(v, False):
            return v, False
    if src.finite:
        return None, True
    structure = src.structure
    if structure is not None:
        cands = None
        if need_adjacent:
            cands = structure.cone_candidates(frozenset(need_adjacent))
        if cands is None and need_nonadjacent:
            cands = structure.cocone_candidates(frozenset(need_nonadjacent))
        if cands is not None:
            for v in cands:
                if matches(v, True):
                    return v, False
            return None, True
        if not need_nonadjacent and need_adjacent:
            w = structure.cone_witness(frozenset(need_adjacent))
            if w is not None and matches(w, True):
                return w, False
        if not need_adjacent and need_nonadjacent:
            w = structure.cocone_witness(frozenset(need_nonadjacent))
            if w is not None and matches(w, True):
                return w, False
    return None, False


def check_property(
    source,
    which: str,
    k: int,
    *,
    horizon: int | None = None,
    window: int | None = None,
) -> PropertyReport:
    """Bounded check of one of the four extension properties.

    ``delta``: every subset of size up to ``k`` has a cone; ``therefore``:
    a co-cone.  ``star``: every surjective local monomorphism with domain
    size up to ``k`` extends one domain vertex at a time (image-side vertex
    outside the current image); ``dagger``: every surjective local
    homomorphism accepts a preimage for every vertex outside its image.

    Finite graphs get definite verdicts for the bounded quantifiers.  For
    oracles, subsets and map domains range over ``window`` and searches over
    ``horizon``; failures are definite only under a confinement certificate,
    and a clean sweep reports UnknownAtBound with the all-witnessed count.
    """
    if which not in PROPERTY_NAMES:
        raise GraphError(f"unknown property {which!r}")
    if k < 1:
        raise GraphError(f"property bound must be at least 1, got {k}")
    src = _as_source(source, horizon)
    g = src.trunc
    search_bound = g.n if src.finite else (horizon or g.n)
    domain_bound = g.n if src.finite else min(window or 8, g.n)
    cases = 0
    unwitnessed = 0
    if which in ("delta", "therefore"):
        co = which == "therefore"
        for subset in all_subsets(range(domain_bound), min(k, domain_bound)):
            cases += 1
            exists, definite_absence, _ = _cone_status(src, subset, co=co)
            if exists:
                continue
            if definite_absence:
                return PropertyReport(
                    which,
                    Verdict(
                        Status.FAILS,
                        witness=PartialMap(tuple((u, u) for u in subset)),
                        note=f"no {'co-cone' if co else 'cone'} over {subset}",
                        certificate=None if src.finite else "confined candidate list exhausted",
                    ),
                    cases,
                    unwitnessed,
                )
            unwitnessed += 1
        if src.finite:
            return PropertyReport(which, Verdict(Status.HOLDS), cases, unwitnessed)
        return PropertyReport(
            which,
            Verdict(Status.UNKNOWN, bounds={"k": k, "horizon": horizon, "window": domain_bound}),
            cases,
            unwitnessed,
        )
    # star / dagger quantify over surjective local morphisms
    from .morphisms import MorphismKind, enumerate_local_morphisms

    if src.finite and g.n > 12:
        raise GraphError(
            f"{which} on a finite graph enumerates all local maps; n={g.n} exceeds 12"
        )
    want = MorphismKind.MONOMORPHISM if which == "star" else MorphismKind.HOMOMORPHISM
    window_graph = induced_subgraph(g, range(domain_bound))
    for f in enumerate_local_morphisms(window_graph, want, min(k, domain_bound)):
        dom = set(f.domain)
        img = set(f.image)
        pairs = f.pairs
        if which == "star":
            # one new domain vertex; its image must avoid the current image
            for c in range(domain_bound):
                if c in dom:
                    continue
                cases += 1
                need_adj = tuple(fu for u, fu in pairs if g.adj(u, c))
                witness, definite = _find_cone_like(
                    src, need_adj, (), set(), search_bound, injective_avoid=img
                )
                if witness is not None:
                    continue
                if definite:
                    return PropertyReport(
                        which,
                        Verdict(
                            Status.FAILS,
                            witness=f,
                            stuck=c,
                            stuck_side="extension",
                            note=f"no image for {c} outside {sorted(img)}",
                            certificate=None if src.finite else "confined candidate list exhausted",
                        ),
                        cases,
                        unwitnessed,
                    )
                unwitnessed += 1
        else:
            # a preimage for every vertex outside the image
            for b in range(domain_bound):
                if b in img:
                    continue
                cases += 1
                need_nonadj = tuple(u for u, fu in pairs if not g.adj(fu, b))
                witness, definite = _find_cone_like(
                    src, (), need_nonadj, dom, search_bound
                )
                if witness is not None:
                    continue
                if definite:
                    return PropertyReport(
                        which,
                        Verdict(
                            Status.FAILS,
                            witness=f,
                            stuck=b,
                            stuck_side="preimage",
                            note=f"no preimage for {b} outside {sorted(dom)}",
                            certificate=None if src.finite else "confined candidate list exhausted",
                        ),
                        cases,
                        unwitnessed,
                    )
                unwitnessed += 1
    if src.finite:
        return PropertyReport(which, Verdict(Status.HOLDS), cases, unwitnessed)
    return PropertyReport(
        which,
        Verdict(Status.UNKNOWN, bounds={"k": k, "horizon": horizon, "window": domain_bound}),
        cases,
        unwitnessed,
    )


def alpha(g: FiniteGraph) -> int:
    """Independence number, exact."""
    return max_independent_set_size(g)


def sigma(g: FiniteGraph) -> int:
    """Largest ``t`` such that a star with ``t`` leaves embeds as an induced subgraph.

    Computed as the maximum independence number over open neighborhoods.
    """
    best = 0
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) <= best:
            continue
        best = max(best, max_independent_set_size(induced_subgraph(g, nb)))
    return best


def sigma_by_embedding(g: FiniteGraph, *, limit: int | None = None) -> int:
    """Independent re-derivation of ``sigma`` by explicit induced-star search."""
    best = 0
    top = g.n - 1 if limit is None else limit
    for v in range(g.n):
        nb = g.neighbors(v)
        for t in range(min(len(nb), top), best, -1):
            found = False
            for leaves in itertools.combinations(nb, t):
                if all(
                    not g.adj(a, b) for a, b in itertools.combinations(leaves, 2)
                ):
                    found = True
                    break
            if found:
                best = max(best, t)
                break
    return best


@dataclass
class AlphaSigmaReport:
    alpha: int
    sigma: int
    bound: int
    holds: bool

    def line(self) -> str:
        cmp = "<" if self.holds else ">="
        return f"alpha={self.alpha} {cmp} 2*sigma+ceil(sigma/2)-1={self.bound} (sigma={self.sigma})"


def check_alpha_sigma_bound(g: FiniteGraph) -> AlphaSigmaReport:
    """Evaluate ``alpha < 2*sigma + ceil(sigma/2) - 1`` on a finite graph."""
    a = alpha(g)
    s = sigma(g)
    bound = 2 * s + -(-s // 2) - 1
    return AlphaSigmaReport(a, s, bound, a < bound)


def complement_endo_transport(
    g: FiniteGraph, total: tuple[int, ...], f: PartialMap
) -> tuple[int, ...]:
    """Right inverse of a surjective endomorphism, as an endomorphism of the complement.

    ``total`` must be surjective on ``g`` and ``f`` must assign each of its
    sources one of that source's preimages under ``total``.  The remaining
    vertices take their least preimage.  The result is verified edge by edge
    against the complement before returning.
    """
    n = g.n
    if len(total) != n:
        raise GraphError("total map must assign every vertex")
    preimages: dict[int, list[int]] = {v: [] for v in range(n)}
    for x, v in enumerate(total):
        preimages[v].append(x)
    if any(not p for p in preimages.values()):
        raise GraphError("map is not surjective")
    inverse = {v: min(p) for v, p in preimages.items()}
    for v, x in f.pairs:
        if x not in preimages[v]:
            raise GraphError(f"assignment {v}->{x} is not a preimage under the map")
        inverse[v] = x
    out = tuple(inverse[v] for v in range(n))
    comp = complement(g)
    for u, v in comp.edges():
        if not comp.adj(out[u], out[v]):
            raise AssertionError("right inverse failed to preserve complement edges")
    return out
