import random

import pytest

import orepack as op
from orepack import Embedding, PreconditionError, Verdict

from oracles import (
    has_perfect_matching,
    max_matching_size,
    naive_copy_covering,
    naive_has_perfect_packing,
)


K2 = op.complete_graph(2)
K3 = op.complete_graph(3)


def test_enumerate_copies_counts():
    embs = list(op.enumerate_copies(op.complete_graph(4), K3))
    assert len(embs) == 24  # 4 images x |Aut(K3)| = 6 labelings
    assert len({e.image() for e in embs}) == 4
    assert list(op.enumerate_copies(op.cycle_graph(5), K3)) == []


def test_enumerate_copies_validity():
    g = op.cycle_graph(6)
    h = op.path_graph(3)
    for emb in op.enumerate_copies(g, h):
        assert len(set(emb.mapping)) == h.n
        for u, v in h.edges():
            assert g.has_edge(emb.mapping[u], emb.mapping[v])


def test_enumerate_copies_anchor():
    star = op.star_graph(3)
    embs = list(op.enumerate_copies(star, K2, anchor=0))
    assert len(embs) == 6
    assert len({e.image() for e in embs}) == 3
    assert all(0 in e.image() for e in embs)
    with pytest.raises(PreconditionError):
        list(op.enumerate_copies(star, K2, anchor=9))


def test_enumerate_copies_oversized_h_is_empty():
    assert list(op.enumerate_copies(K2, K3)) == []


def test_enumerate_disconnected_h():
    h = op.disjoint_union(K2, K2)
    g = op.cycle_graph(4)
    images = {e.image() for e in op.enumerate_copies(g, h)}
    # two disjoint edges in C4: the two opposite pairs
    assert images == {frozenset({0, 1, 2, 3})}
    assert all(len(set(e.mapping)) == 4 for e in op.enumerate_copies(g, h))


def test_copy_covering_vertex_examples():
    inst = op.construct_prop1(3, 9)
    res = op.copy_covering_vertex(inst.graph, K3, inst.w)
    assert res.verdict is Verdict.NO
    res2 = op.copy_covering_vertex(op.complete_graph(4), K3, 2)
    assert res2.verdict is Verdict.YES
    assert 2 in res2.embedding.image()
    with pytest.raises(PreconditionError):
        op.copy_covering_vertex(K3, K2, 5)


def test_copy_covering_budget_unknown():
    inst = op.construct_prop2(3, 1, 7, 7)
    fd = op.construct_fdiamond()
    res = op.copy_covering_vertex(inst.graph, fd, inst.w, budget=50)
    assert res.verdict is Verdict.UNKNOWN
    assert res.nodes > 50


def test_anchored_completeness_small():
    rng = random.Random(17)
    for _ in range(40):
        g = op.random_graph(rng.randrange(3, 8), rng.random(), rng)
        h = op.path_graph(3)
        for w in range(g.n):
            res = op.copy_covering_vertex(g, h, w)
            found = any(
                w in e.image() for e in op.enumerate_copies(g, h)
            )
            assert (res.verdict is Verdict.YES) == found
            assert (res.verdict is Verdict.NO) == (not found)
            assert (res.verdict is Verdict.YES) == naive_copy_covering(g, h, w)


def test_has_perfect_packing_examples():
    assert op.has_perfect_packing(op.cycle_graph(4), K2).verdict is Verdict.YES
    assert op.has_perfect_packing(op.star_graph(3), K2).verdict is Verdict.NO
    k222, _ = op.complete_multipartite([2, 2, 2])
    assert op.has_perfect_packing(k222, K3).verdict is Verdict.YES
    assert op.has_perfect_packing(op.cycle_graph(6), K3).verdict is Verdict.NO
    # indivisible order short-circuits to NO
    res = op.has_perfect_packing(op.cycle_graph(5), K2)
    assert res.verdict is Verdict.NO and res.nodes == 0
    with pytest.raises(PreconditionError):
        op.has_perfect_packing(K3, op.empty_graph(0))


def test_packing_empty_host():
    res = op.has_perfect_packing(op.empty_graph(0), K2)
    assert res.verdict is Verdict.YES
    assert res.certificate == ()
    assert op.verify_packing(op.empty_graph(0), K2, [])


def test_packing_certificates_verify():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.choice([4, 6, 8])
        g = op.random_graph(n, rng.random(), rng)
        res = op.has_perfect_packing(g, K2)
        if res.verdict is Verdict.YES:
            assert op.verify_packing(g, K2, res.certificate)


def test_verify_packing_rejects_bad_certificates():
    c4 = op.cycle_graph(4)
    good = (Embedding((0, 1)), Embedding((2, 3)))
    assert op.verify_packing(c4, K2, good)
    overlapping = (Embedding((0, 1)), Embedding((1, 2)))
    assert not op.verify_packing(c4, K2, overlapping)
    incomplete = (Embedding((0, 1)),)
    assert not op.verify_packing(c4, K2, incomplete)
    non_edge = (Embedding((0, 2)), Embedding((1, 3)))
    assert not op.verify_packing(c4, K2, non_edge)
    wrong_arity = (Embedding((0,)), Embedding((1, 2)), Embedding((3,)))
    assert not op.verify_packing(c4, K2, wrong_arity)


def test_matching_oracle_agreement():
    rng = random.Random(4)
    for _ in range(400):
        n = rng.randrange(2, 11)
        g = op.random_graph(n, rng.random(), rng)
        mine = op.has_perfect_packing(g, K2).verdict
        assert (mine is Verdict.YES) == has_perfect_matching(g)


def test_matching_oracle_against_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(77)
    for _ in range(200):
        n = rng.randrange(1, 12)
        g = op.random_graph(n, rng.random(), rng)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(g.edges())
        ref = len(nx.max_weight_matching(G, maxcardinality=True))
        assert max_matching_size(g) == ref


def test_packing_agrees_with_naive_oracle():
    rng = random.Random(8)
    hs = [K2, K3, op.path_graph(3), op.star_graph(2)]
    for _ in range(80):
        h = rng.choice(hs)
        n = h.n * rng.choice([1, 2, 3])
        if n > 9:
            continue
        g = op.random_graph(n, rng.random(), rng)
        res = op.has_perfect_packing(g, h)
        assert (res.verdict is Verdict.YES) == naive_has_perfect_packing(g, h)


def test_isomorphism_invariance_of_verdict():
    rng = random.Random(15)
    for _ in range(40):
        n = 6
        g = op.random_graph(n, rng.random(), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = op.relabel(g, perm)
        for h in (K2, K3):
            assert (
                op.has_perfect_packing(g, h).verdict
                is op.has_perfect_packing(permuted, h).verdict
            )


def test_budget_never_produces_definite_answers():
    # a search cut off by budget must report UNKNOWN, not NO
    inst = op.construct_prop2(3, 1, 7, 7)
    fd = op.construct_fdiamond()
    full = op.copy_covering_vertex(inst.graph, fd, inst.w)
    assert full.verdict is Verdict.NO
    tiny = op.copy_covering_vertex(inst.graph, fd, inst.w, budget=10)
    assert tiny.verdict is Verdict.UNKNOWN
