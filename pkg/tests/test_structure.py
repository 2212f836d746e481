"""Five-cycle attachment laws, separators, decomposition, and recognition."""

import itertools

import pytest
from hypothesis import assume, given, settings

from conftest import all_graphs, graphs
from p6c4 import canon, detect, families, structure
from p6c4.graphs import Graph, induced_subgraph


def ring5(extra_n, extra_edges):
    """C5 on 0..4 plus extra vertices 5.. with the given attachments."""
    edges = [(i, (i + 1) % 5) for i in range(5)] + extra_edges
    return Graph.from_edges(5 + extra_n, edges)


def base_ring(g):
    for c in structure.find_all_c5(g):
        if set(c.ring) == set(range(5)):
            return c
    raise AssertionError("expected the 0..4 ring to stay induced")


def report(g):
    c = base_ring(g)
    return structure.check_properties(g, c)


def test_find_all_c5():
    assert structure.find_all_c5(families.path_graph(5)) == []
    rings = structure.find_all_c5(families.petersen_graph())
    assert len(rings) == 12
    for c in rings:
        c.validate(families.petersen_graph())


def test_c5_embedding_validate_rejects_chords():
    g = families.wheel_graph(5)
    with pytest.raises(ValueError):
        structure.C5Embedding((0, 1, 2, 3, 5)).validate(g)  # 5 is the hub


def test_classify_buckets():
    g = ring5(4, [(5, 0), (6, 0), (6, 1), (7, 4), (7, 0), (7, 1), (8, 0), (8, 1), (8, 2), (8, 3), (8, 4)])
    p = structure.classify(g, base_ring(g))
    assert p.s1_at[0] == {5}
    assert p.s2_at[0] == {6}
    assert p.s3_at[0] == {7}
    assert p.s[5] == {8}
    assert p.s[0] == frozenset()


def test_classify_nonconsecutive_pairs_stay_unbucketed():
    g = ring5(1, [(5, 0), (5, 2)])  # distance-2 pair: no s2 bucket
    p = structure.classify(g, base_ring(g))
    assert p.s[2] == {5}
    assert all(not b for b in p.s2_at)


# -- single-property violation examples ---------------------------------------


def test_p0_two_nonadjacent_full_vertices():
    g = ring5(2, [(5, i) for i in range(5)] + [(6, i) for i in range(5)])
    assert report(g)["P0"] == structure.Verdict("violated", (5, 6))


def test_p0_s4_must_be_empty():
    g = ring5(1, [(5, 0), (5, 1), (5, 2), (5, 3)])
    assert report(g)["P0"] == structure.Verdict("violated", (5,))


def test_p1_distance_two_complete():
    g = ring5(2, [(5, 0), (6, 2)])
    assert report(g)["P1"] == structure.Verdict("violated", (5, 6))


def test_p1_consecutive_anticomplete():
    g = ring5(2, [(5, 0), (6, 1), (5, 6)])
    assert report(g)["P1"] == structure.Verdict("violated", (5, 6))


def test_p2_consecutive_complete():
    g = ring5(2, [(5, 0), (5, 1), (6, 1), (6, 2)])
    assert report(g)["P2"] == structure.Verdict("violated", (5, 6))
    # the theory survives: this host is not P6-free
    assert detect.find_induced_path(g, 6) is not None


def test_p2_distance_two_anticomplete():
    g = ring5(2, [(5, 0), (5, 1), (6, 2), (6, 3), (5, 6)])
    assert report(g)["P2"] == structure.Verdict("violated", (5, 6))


def test_p3_s3_distance_two_anticomplete():
    g = ring5(2, [(5, 4), (5, 0), (5, 1), (6, 1), (6, 2), (6, 3), (5, 6)])
    assert report(g)["P3"] == structure.Verdict("violated", (5, 6))


def test_p4_s1_anticomplete_to_most_s2():
    g = ring5(2, [(5, 0), (6, 1), (6, 2), (5, 6)])
    assert report(g)["P4"] == structure.Verdict("violated", (5, 6))


def test_p4_neighbor_must_be_universal_in_bucket():
    # 6 and 7 both in s2(2); 5 in s1(0) adjacent to 6 only
    g = ring5(3, [(5, 0), (6, 2), (6, 3), (7, 2), (7, 3), (5, 6), (6, 7)])
    rep = report(g)
    assert rep["P4"].status == "holds"
    g2 = ring5(3, [(5, 0), (6, 2), (6, 3), (7, 2), (7, 3), (5, 6)])
    assert report(g2)["P4"] == structure.Verdict("violated", (6, 7))


def test_p5_s1_anticomplete_s3():
    g = ring5(2, [(5, 0), (6, 1), (6, 2), (6, 3), (5, 6)])
    assert report(g)["P5"] == structure.Verdict("violated", (5, 6))


def test_p6_s2_anticomplete_s3():
    g = ring5(2, [(5, 2), (5, 3), (6, 4), (6, 0), (6, 1), (5, 6)])
    assert report(g)["P6"] == structure.Verdict("violated", (5, 6))


def test_p7_coexistence_ban():
    g = ring5(2, [(5, 0), (6, 3), (6, 4)])
    assert report(g)["P7"] == structure.Verdict("violated", (5, 6))


def test_p8_three_bucket_ban():
    g = ring5(3, [(5, 4), (5, 0), (6, 0), (6, 1), (7, 2), (7, 3), (5, 6)])
    assert report(g)["P8"].status == "violated"


def test_p9_flanking_s1_forces_empty_s2():
    g = ring5(3, [(5, 4), (6, 1), (7, 2), (7, 3)])
    assert report(g)["P9"].status == "violated"


def test_p10_mixed_attachment():
    g = ring5(3, [(5, 4), (5, 0), (5, 1), (6, 1), (6, 2), (7, 3), (7, 4), (5, 6)])
    assert report(g)["P10"] == structure.Verdict("violated", (5, 6, 7))


def test_p11_s1_concentrates():
    g = ring5(3, [(5, 0), (6, 2), (6, 3), (5, 6), (7, 1)])
    assert report(g)["P11"] == structure.Verdict("violated", (5, 6, 7))


def test_p12_needs_no_clique_cutset():
    # 5 in s1(0) held in place by an s2(2) anchor; 7 in s3(0) non-adjacent to 5
    g = ring5(3, [(5, 0), (6, 2), (6, 3), (5, 6), (7, 4), (7, 0), (7, 1)])
    assert structure.find_clique_cutset(g) is None
    assert report(g)["P12"] == structure.Verdict("violated", (5, 7))
    # with a clique cutset the law is out of scope
    g2 = ring5(2, [(5, 0), (6, 4), (6, 0), (6, 1)])
    assert structure.find_clique_cutset(g2) is not None
    assert report(g2)["P12"].status == "not-applicable"


def test_o5_laws_gate_on_w5():
    w5 = families.wheel_graph(5)
    rep = structure.check_properties(w5, base_ring(w5))
    assert rep["O5.1"].status == "not-applicable"

    # o5.1: flanking s1 buckets force s3(i) to avoid them
    g = ring5(3, [(5, 4), (6, 1), (7, 4), (7, 0), (7, 1), (5, 7)])
    rep = report(g)
    assert rep["O5.1"].status == "violated"

    # o5.2: s2(i-1), s2(i) nonempty force s3(i) complete to both
    g = ring5(3, [(5, 4), (5, 0), (6, 0), (6, 1), (7, 4), (7, 0), (7, 1), (6, 7)])
    rep = report(g)
    assert rep["O5.2"].status == "violated"

    # o5.3: an s1-s2 edge keeps neighboring s3 buckets away from both ends
    g = ring5(3, [(5, 0), (6, 2), (6, 3), (5, 6), (7, 0), (7, 1), (7, 2), (5, 7)])
    rep = report(g)
    assert rep["O5.3"].status == "violated"


def test_w5_all_laws_hold():
    w5 = families.wheel_graph(5)
    rep = structure.check_properties(w5, base_ring(w5))
    for name, verdict in rep.items():
        if name.startswith("O5"):
            assert verdict.status == "not-applicable"
        else:
            assert verdict.status == "holds", (name, verdict)


def test_property_sweep_small_family(small_free_family):
    """P0..P11 hold for every C5 of every small (P6,C4)-free graph."""
    unconditional = [f"P{i}" for i in range(12)]
    for g in small_free_family:
        for c in structure.find_all_c5(g):
            rep = structure.check_properties(g, c)
            for name in unconditional:
                assert rep[name].status == "holds", (g.edges(), c.ring, name)
            for name in ("P12", "O5.1", "O5.2", "O5.3"):
                assert rep[name].status in ("holds", "not-applicable")


def test_report_to_json_shape():
    rep = report(ring5(1, [(5, 0)]))
    doc = structure.report_to_json(rep)
    assert doc["P7"]["status"] == "holds"
    assert set(doc) == set(rep)


# -- domination ----------------------------------------------------------------


def test_is_dominating():
    g = families.wheel_graph(5)
    assert structure.is_dominating(g, [5])
    assert structure.is_dominating(g, [0, 2])
    assert not structure.is_dominating(families.path_graph(5), [0])


# -- separators and decomposition -----------------------------------------------


def _brute_minimal_separators(g):
    found = set()
    verts = range(g.n)
    for r in range(g.n - 1):
        for s in itertools.combinations(verts, r):
            s = frozenset(s)
            rest, vmap = induced_subgraph(g, set(verts) - s)
            comps = rest.components()
            if len(comps) < 2:
                continue
            full = 0
            for comp in comps:
                cv = {vmap[i] for i in comp}
                nb = set()
                for v in cv:
                    nb.update(g.neighbors(v))
                if nb & s == s:
                    full += 1
            if full >= 2:
                found.add(s)
    return found


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_minimal_separators_match_brute_force(g):
    # the closure algorithm targets connected graphs; the disconnected
    # case (empty separator) is handled by find_clique_cutset directly
    assume(g.is_connected())
    ours = set(structure.minimal_separators(g))
    assert ours == _brute_minimal_separators(g)


def _brute_has_clique_cutset(g):
    if not g.is_connected():
        return g.n > 1
    for r in range(g.n - 1):
        for s in itertools.combinations(range(g.n), r):
            if not g.is_clique(sum(1 << v for v in s)):
                continue
            rest, _ = induced_subgraph(g, set(range(g.n)) - set(s))
            if len(rest.components()) > 1:
                return True
    return False


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_find_clique_cutset_matches_brute_force(g):
    res = structure.find_clique_cutset(g)
    assert (res is not None) == _brute_has_clique_cutset(g)
    if res is not None:
        cutset, side, rest = res
        assert g.is_clique(sum(1 << v for v in cutset))
        assert side and rest
        assert not (side & rest)
        assert side | rest | cutset == set(range(g.n))
        # no edges straddle the split
        for u in side:
            for v in rest:
                assert not g.has_edge(u, v)


def test_find_clique_cutset_examples():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (2, 4), (3, 4)])
    cutset, _, _ = structure.find_clique_cutset(bowtie)
    assert cutset == {2}
    assert structure.find_clique_cutset(families.cycle_graph(5)) is None
    assert structure.find_clique_cutset(families.complete_graph(4)) is None
    two = Graph.from_edges(2, [])
    cutset, side, rest = structure.find_clique_cutset(two)
    assert cutset == frozenset()


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_decompose_covers_and_separates(g):
    tree = structure.decompose(g)
    atoms = structure.atom_list(tree)
    covered = set().union(*(set(a) for a in atoms))
    assert covered == set(range(g.n))
    for u, v in g.edges():
        assert any(u in a and v in a for a in atoms)
    for a in atoms:
        sub, _ = induced_subgraph(g, a)
        assert structure.find_clique_cutset(sub) is None


def test_decompose_tree_shape():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (2, 4), (3, 4)])
    tree = structure.decompose(bowtie)
    doc = tree.to_json()
    assert doc["cutset"] == [2]
    assert len(doc["children"]) == 2
    assert sorted(structure.atom_list(tree)) == [(0, 1, 2), (2, 3, 4)]
    atom = structure.decompose(families.complete_graph(3))
    assert atom.children == ()
    assert structure.atom_list(atom) == [(0, 1, 2)]


# -- blow-up recognition ---------------------------------------------------------


def _all_blowup_codes(n_max):
    base = families.specific_base()
    codes = set()
    for total in range(n_max + 1):
        for combo in itertools.combinations_with_replacement(range(base.n), total):
            sizes = [0] * base.n
            for v in combo:
                sizes[v] += 1
            codes.add(canon.canonical_code(families.blowup(base, sizes)))
    return codes


def test_is_specific_matches_blowup_enumeration():
    codes = _all_blowup_codes(5)
    for n in range(6):
        for g in all_graphs(n):
            expect = canon.canonical_code(g) in codes
            assert structure.is_specific(g) == expect, g.edges()


def test_is_specific_examples():
    base = families.specific_base()
    assert structure.is_specific(base)
    assert structure.is_specific(families.blowup(base, (3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2)))
    assert structure.is_specific(families.petersen_graph())
    assert structure.is_specific(families.complete_graph(7))  # universal clique alone
    pendant_w5 = families.wheel_graph(5).add_vertex(0b000001)
    assert not structure.is_specific(pendant_w5)
    assert not structure.is_specific(families.cycle_graph(4))
    assert not structure.is_specific(families.path_graph(6))


# -- C6 lemma and size bounds ----------------------------------------------------


def test_check_c6_lemma_gates():
    assert structure.check_c6_lemma(families.cycle_graph(4))["status"] == "not-applicable"
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (2, 4), (3, 4)])
    assert structure.check_c6_lemma(bowtie)["status"] == "not-applicable"
    spec = families.blowup(families.specific_base(), (2,) + (1,) * 10)
    doc = structure.check_c6_lemma(spec)
    assert doc == {"status": "holds", "case": "specific"}
    w5 = families.wheel_graph(5)
    assert structure.check_c6_lemma(w5)["status"] == "holds"


def test_check_c6_lemma_sweep(small_free_family):
    for g in small_free_family:
        assert structure.check_c6_lemma(g)["status"] in ("holds", "not-applicable")


def test_size_bounds_gate_and_hub_count():
    w5 = families.wheel_graph(5)
    doc = structure.check_size_bounds(w5, base_ring(w5), k=3)
    assert doc["status"] == "evaluated" and doc["ok"]
    assert doc["checks"]["s5"] == {"bound": 1, "size": 1, "status": "holds"}

    double_hub = families.blowup(w5, (1, 1, 1, 1, 1, 2))  # hub pair forms a K4
    doc3 = structure.check_size_bounds(double_hub, base_ring(double_hub), k=3)
    assert doc3["status"] == "not-applicable"
    doc4 = structure.check_size_bounds(double_hub, base_ring(double_hub), k=4)
    assert doc4["status"] == "evaluated" and doc4["ok"]
    assert doc4["checks"]["s5"] == {"bound": 2, "size": 2, "status": "holds"}


def test_size_bounds_sweep(small_free_family):
    for g in small_free_family:
        for c in structure.find_all_c5(g):
            doc = structure.check_size_bounds(g, c, k=3)
            if doc["status"] == "evaluated":
                assert doc["ok"], (g.edges(), c.ring, doc)
