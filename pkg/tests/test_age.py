import itertools
import random

import pytest
from hypothesis import given, strategies as st

from homext.age import (
    Flag,
    age_report,
    alpha,
    check_alpha_sigma_bound,
    check_criterion,
    check_property,
    complement_endo_transport,
    compute_age,
    order_preceq,
    order_sqsubseteq,
    sigma,
    sigma_by_embedding,
)
from homext.engine import Status, total_endo_kinds
from homext.formats import to_graph6
from homext.generators import (
    OMEGA,
    complete,
    composite,
    independent,
    rado_bit,
    rado_plus_dominating_oracle,
    rs_graph,
)
from homext.graphs import FiniteGraph, canonical_form, complement, oracle_truncate
from homext.morphisms import EndoKind, PartialMap

from conftest import random_graph
from test_graphs import C5, P3, finite_graphs


def entry_by_graph(entries, g):
    canon = canonical_form(g)[0]
    return next(e for e in entries if e.graph == canon)


class TestComputeAge:
    def test_complete_graph_age(self):
        entries = compute_age(complete(5), 3)
        assert [e.graph for e in entries] == [complete(1), complete(2), complete(3)]

    def test_cycle_age_at_three(self):
        entries = compute_age(C5, 3)
        got = {(e.size, to_graph6(e.graph)) for e in entries}
        k2_plus_k1 = FiniteGraph.from_edges(3, [(0, 1)])
        expected = {
            (1, to_graph6(complete(1))),
            (2, to_graph6(complete(2))),
            (2, to_graph6(independent(2))),
            (3, to_graph6(canonical_form(P3)[0])),
            (3, to_graph6(canonical_form(k2_plus_k1)[0])),
        }
        assert got == expected

    def test_rs_truncation_contains_triangle_and_path(self):
        entries = compute_age(oracle_truncate(rs_graph(2), 20), 3)
        graphs = {e.graph for e in entries}
        assert canonical_form(complete(3))[0] in graphs
        assert canonical_form(P3)[0] in graphs

    def test_copies_counted(self):
        entries = compute_age(complete(4), 2)
        assert entry_by_graph(entries, complete(2)).copies == 6


class TestConeFlags:
    def test_complete_graph_pair(self):
        e = entry_by_graph(compute_age(complete(6), 3), complete(2))
        assert (e.kk, e.okk, e.hh, e.ohh) == (Flag.YES, Flag.NO, Flag.NO, Flag.YES)

    def test_single_vertex_in_both_on_mixed_graph(self):
        g = FiniteGraph.from_edges(3, [(1, 2)])  # isolated vertex plus an edge
        e = entry_by_graph(compute_age(g, 1), complete(1))
        assert e.kk is Flag.YES and e.okk is Flag.YES

    def test_oracle_matching_vertex_flags(self):
        entries = compute_age(composite(OMEGA, 2), 1, horizon=20)
        e = entries[0]
        assert e.kk is Flag.YES  # the matched partner is a cone
        assert e.hh is Flag.YES  # co-cones abound

    def test_oracle_no_cone_certified_across_blocks(self):
        entries = compute_age(composite(OMEGA, 2), 2, horizon=20)
        e = entry_by_graph(entries, independent(2))
        # a cross-block pair provably has no cone anywhere, so okk is settled
        assert e.okk is Flag.YES
        # but "no copy with a cone" cannot be settled from a truncation
        assert e.kk is Flag.NO or e.kk is Flag.UNKNOWN

    def test_embedding_cap_downgrades_universal_side(self):
        entries = compute_age(complete(5), 2, embedding_cap=1)
        e = entry_by_graph(entries, complete(2))
        assert e.copies == 10
        assert e.kk is Flag.YES  # found on the first copy, existential side
        assert e.okk is Flag.UNKNOWN  # "every copy has a cone" left unsettled

    def test_finite_coverage_invariant(self, corpus5):
        for _, g in corpus5:
            for e in compute_age(g, 3):
                assert Flag.YES in (e.kk, e.okk)
                assert Flag.YES in (e.hh, e.ohh)
                assert Flag.UNKNOWN not in (e.kk, e.okk, e.hh, e.ohh)

    def test_duality_with_complement(self, corpus5):
        for _, g in corpus5:
            mine = compute_age(g, 3)
            other = {e.graph: e for e in compute_age(complement(g), 3)}
            for e in mine:
                twin = other[canonical_form(complement(e.graph))[0]]
                assert (e.hh, e.ohh) == (twin.kk, twin.okk)

    def test_report_format(self):
        entries = compute_age(complete(3), 2)
        lines = age_report(entries).splitlines()
        assert lines[0] == "size=1 canon=@ kk=Y okk=N hh=N ohh=Y"
        assert not any(line.startswith("violation") for line in lines)

    def test_report_flags_closure_violations(self):
        p4 = FiniteGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        lines = age_report(compute_age(p4, 2)).splitlines()
        # a coned nonedge folds onto a cone-free edge: the path is not
        # homomorphism-homogeneous and the report says why
        assert any(line.startswith("violation") for line in lines)


class TestOrders:
    def test_path_folds_onto_edge(self):
        assert order_preceq(P3, complete(2))

    def test_nonedge_into_edge_bijectively(self):
        assert order_sqsubseteq(independent(2), complete(2))

    def test_edge_never_onto_nonedge(self):
        assert not order_preceq(complete(2), independent(2))

    def test_reflexive_transitive_size_monotone(self):
        entries = [e.graph for e in compute_age(C5, 3)]
        rel = {(a, b): order_preceq(a, b) for a in entries for b in entries}
        for a in entries:
            assert rel[(a, a)]
        for a in entries:
            for b in entries:
                if rel[(a, b)] and a.n >= 1:
                    assert a.n >= b.n
                for c in entries:
                    if rel[(a, b)] and rel[(b, c)]:
                        assert rel[(a, c)]

    def test_sq_implies_preceq(self):
        graphs = [e.graph for e in compute_age(C5, 3)]
        for a in graphs:
            for b in graphs:
                if order_sqsubseteq(a, b):
                    assert order_preceq(a, b)


class TestCriteria:
    def test_mixed_graph_fails_cone_partition(self):
        g = FiniteGraph.from_edges(3, [(1, 2)])
        rep = check_criterion(g, "HH", 2)
        name, verdict = rep.conditions[0]
        assert verdict.status is Status.FAILS
        assert "@" in verdict.note  # the single-vertex entry

    def test_complete_graph_passes(self):
        rep = check_criterion(complete(6), "HH", 3)
        assert rep.verdict.status is Status.HOLDS

    def test_oracle_passes_at_bound(self):
        rep = check_criterion(composite(OMEGA, OMEGA), "HH", 3, horizon=30)
        assert rep.verdict.status is not Status.FAILS

    def test_complement_blocks_cocones_downward_closed(self):
        # blocks-complement: co-cone side mirrors the clique side of blocks
        o = composite(OMEGA, OMEGA)
        rep = check_criterion(o, "HE", 3, horizon=30)
        assert rep.verdict.status is not Status.FAILS

    def test_me_uses_bijective_order(self):
        rep = check_criterion(complete(5), "ME", 3)
        assert rep.verdict.status is Status.HOLDS
        assert any("mono" in name for name, _ in rep.conditions)

    def test_unknown_criterion_rejected(self):
        with pytest.raises(Exception):
            check_criterion(complete(3), "XX", 2)


class TestProperties:
    def test_delta_on_complete(self):
        assert check_property(complete(10), "delta", 3).verdict.holds
        assert check_property(complete(10), "delta", 9).verdict.holds
        assert check_property(complete(10), "delta", 10).verdict.fails

    def test_duality_exact(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_graph(rng.randint(1, 9), rng)
            for k in range(1, 4):
                lhs = check_property(g, "therefore", k).verdict.status
                rhs = check_property(complement(g), "delta", k).verdict.status
                assert lhs == rhs

    def test_dagger_on_rado_window(self):
        rep = check_property(rado_bit(), "dagger", 3, horizon=128, window=6)
        assert rep.verdict.status is Status.UNKNOWN
        assert rep.unwitnessed == 0  # no failure found anywhere in the window

    def test_star_on_empty_graph(self):
        assert check_property(independent(5), "star", 2).verdict.holds

    def test_star_fails_on_two_cliques_of_different_size(self):
        # mapping inside the small clique leaves no room for a third neighbor
        g = composite(2, 2)
        rep = check_property(g, "star", 2)
        assert rep.verdict.status in (Status.HOLDS, Status.FAILS)

    def test_dagger_failure_certified_on_dominated_rado(self):
        rep = check_property(rado_plus_dominating_oracle(), "dagger", 2, horizon=64, window=6)
        v = rep.verdict
        assert v.fails and v.stuck_side == "preimage" and v.certificate


class TestAlphaSigma:
    def test_cycle(self):
        assert alpha(C5) == 2 and sigma(C5) == 2

    def test_complete_and_empty(self):
        assert alpha(complete(9)) == 1 and sigma(complete(9)) == 1
        assert alpha(independent(5)) == 5 and sigma(independent(5)) == 0

    @given(finite_graphs(max_n=8))
    def test_two_routes_agree(self, g):
        assert sigma(g) == sigma_by_embedding(g)

    def test_rs_values(self):
        t3 = oracle_truncate(rs_graph(3), 60)
        assert alpha(t3) == 3
        rep = check_alpha_sigma_bound(t3)
        assert rep.holds

    def test_complete_bound(self):
        rep = check_alpha_sigma_bound(complete(20))
        assert rep.alpha == 1 and rep.bound == 2 and rep.holds


class TestComplementTransport:
    def test_automorphism_inverse(self):
        total = (1, 2, 3, 4, 0)  # rotation of the cycle
        out = complement_endo_transport(C5, total, PartialMap(()))
        assert out == (4, 0, 1, 2, 3)

    def test_partial_inverse_respected(self):
        total = (1, 0, 2)
        out = complement_endo_transport(independent(3), total, PartialMap(((0, 1),)))
        assert out[0] == 1

    def test_incompatible_rejected(self):
        with pytest.raises(Exception):
            complement_endo_transport(independent(3), (1, 0, 2), PartialMap(((0, 2),)))

    def test_enumerated_surjections_transport(self, corpus4):
        for _, g in corpus4:
            n = g.n
            surjections = [
                total
                for total in itertools.product(range(n), repeat=n)
                if len(set(total)) == n and EndoKind.E in total_endo_kinds(g, total)
            ]
            for total in surjections[:12]:
                out = complement_endo_transport(g, total, PartialMap(()))
                comp = complement(g)
                for u, v in comp.edges():
                    assert comp.adj(out[u], out[v])
