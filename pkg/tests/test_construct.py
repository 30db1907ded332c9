"""Compatibility graphs, clique search, assembly, and the self-dual search."""

import itertools
import random

import pytest

from orbitcodes import (
    assemble_code,
    build_graph,
    distance,
    enumerate_orbits,
    find_cliques,
    from_exponents,
    inter_orbit_distance,
    load_code_file,
    make_field,
    min_distance,
    orbit_members,
    orbit_of,
    read_dimacs,
    self_dual_search,
    shift,
    span,
    write_dimacs,
)
from orbitcodes.construct import CliqueResult
from orbitcodes.errors import FieldMismatch, ResourceLimit, SameOrbit, VerificationFailed
from tests.conftest import data_path


def random_adj(rng, n, p=0.5):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def brute_max_clique(adj):
    n = len(adj)
    for r in range(n, 0, -1):
        for comb in itertools.combinations(range(n), r):
            if all((adj[a] >> b) & 1 for a, b in itertools.combinations(comb, 2)):
                return r
    return 0


# -- inter-orbit distance ------------------------------------------------------------


def test_inter_orbit_distance_matches_all_pairs(f64):
    rng = random.Random(11)
    orbits = [orbit_of(span(f64, rng.sample(range(63), 3)), 1) for _ in range(6)]
    for A, B in itertools.combinations(orbits, 2):
        if A.rep.bits == B.rep.bits:
            continue
        naive = min(distance(a, b)
                    for a in orbit_members(A) for b in orbit_members(B))
        assert inter_orbit_distance(A, B) == naive
        assert inter_orbit_distance(B, A) == naive  # symmetry


def test_inter_orbit_distance_rep_invariant(f64):
    A = orbit_of(from_exponents(f64, [0, 1, 56]), 1)
    B = orbit_of(from_exponents(f64, [0, 2, 49]), 1)
    if A.rep.bits != B.rep.bits:
        base = inter_orbit_distance(A, B)
        for e in (3, 17, 40):
            A2 = orbit_of(shift(A.rep, e), 1)
            assert inter_orbit_distance(A2, B) == base


def test_same_orbit_rejected(f64):
    A = orbit_of(from_exponents(f64, [0, 1, 56]), 1)
    B = orbit_of(shift(A.rep, 5), 1)
    with pytest.raises(SameOrbit):
        inter_orbit_distance(A, B)


def test_field_mismatch_rejected(f16, f64):
    A = orbit_of(from_exponents(f16, [0, 1, 4]), 1)
    B = orbit_of(from_exponents(f64, [0, 1, 56]), 1)
    with pytest.raises(FieldMismatch):
        inter_orbit_distance(A, B)


# -- graph construction ---------------------------------------------------------------


def test_build_graph_excludes_low_internal_distance(f64):
    orbits = list(enumerate_orbits(f64, 3, 1))
    G = build_graph(orbits, 4)
    assert len(G.orbits) + len(G.excluded) == len(orbits)
    assert all(o.min_dist >= 4 for o in G.orbits)
    assert all(o.min_dist < 4 for o in G.excluded)


def test_graph_degrees_match_distance_matrix(f64):
    orbits = list(enumerate_orbits(f64, 2, 1))
    G = build_graph(orbits, 4)
    for i, A in enumerate(G.orbits):
        expected = sum(
            1 for j, B in enumerate(G.orbits)
            if j != i and inter_orbit_distance(A, B) >= 4)
        assert G.adj[i].bit_count() == expected


def test_threshold_above_distance_cap_gives_empty_edges(f64):
    orbits = list(enumerate_orbits(f64, 2, 1))
    G = build_graph(orbits, 6)  # 2k = 4 < 6: no pair can reach it
    assert all(a == 0 for a in G.adj)


def test_dimacs_round_trip(tmp_path, f64):
    orbits = list(enumerate_orbits(f64, 3, 1))
    G = build_graph(orbits, 4)
    path = str(tmp_path / "g.dimacs")
    write_dimacs(G, path)
    n, adj = read_dimacs(path)
    assert n == G.n_vertices and adj == G.adj


# -- clique search ---------------------------------------------------------------------


def test_exact_clique_matches_exhaustive_small():
    rng = random.Random(2)
    for _ in range(300):
        adj = random_adj(rng, rng.randint(1, 13), rng.choice((0.2, 0.5, 0.8)))
        res = find_cliques(adj, mode="exact")[0]
        assert res.certified
        assert res.size == brute_max_clique(adj)
        assert all((adj[a] >> b) & 1
                   for a, b in itertools.combinations(res.vertices, 2))


def test_greedy_clique_valid_and_deterministic():
    rng = random.Random(5)
    adj = random_adj(rng, 30, 0.6)
    r1 = find_cliques(adj, mode="greedy", seed=42)
    r2 = find_cliques(adj, mode="greedy", seed=42)
    assert [c.vertices for c in r1] == [c.vertices for c in r2]
    for c in r1:
        assert not c.certified
        assert all((adj[a] >> b) & 1
                   for a, b in itertools.combinations(c.vertices, 2))


def test_exact_budget_exhaustion_uncertified():
    rng = random.Random(9)
    adj = random_adj(rng, 40, 0.9)
    res = find_cliques(adj, budget=3, mode="exact")[0]
    assert not res.certified  # budget of 3 nodes cannot finish a 40-vertex graph


def test_edgeless_graph():
    res = find_cliques([0, 0, 0], mode="exact")[0]
    assert res.size == 1 and res.certified


# -- assembly ---------------------------------------------------------------------------


def test_assemble_single_orbit_code(f256):
    orbits = [O for O in enumerate_orbits(f256, 3, 1)
              if O.length == 255 and O.min_dist == 4]
    G = build_graph(orbits[:1], 4)
    code = assemble_code(G, CliqueResult((0,), True))
    assert code.params() == (8, 3, 255, 4)


def test_assemble_rejects_non_clique(f64):
    orbits = list(enumerate_orbits(f64, 2, 1))
    G = build_graph(orbits, 4)
    non_edge = None
    for i in range(G.n_vertices):
        for j in range(i + 1, G.n_vertices):
            if not (G.adj[i] >> j) & 1:
                non_edge = (i, j)
                break
        if non_edge:
            break
    if non_edge:
        with pytest.raises(VerificationFailed):
            assemble_code(G, CliqueResult(non_edge, False))


def test_example2_orbits_form_certified_21_clique():
    cf = load_code_file(data_path("example2_n10k3.json"))
    orbits = [orbit_of(g, 1) for g in cf.generators]
    assert all(o.min_dist >= 4 and o.length == 1023 for o in orbits)
    G = build_graph(orbits, 4)
    assert G.n_vertices == 21 and not G.excluded
    res = find_cliques(G, mode="exact")[0]
    assert res.size == 21 and res.certified
    code = assemble_code(G, res)
    assert code.params() == (10, 3, 21483, 4)
    assert min_distance(code) >= G.threshold  # independent recomputation


# -- self-dual search --------------------------------------------------------------------


def test_self_dual_search_p2_4(f16):
    hits = self_dual_search(f16)
    primary = [h for h in hits if h.constant_dimension and h.single_generator]
    assert len(primary) == 1
    h = primary[0]
    assert h.m == 5 and h.params() == (4, 2, 2, 4)
    words = {tuple(sorted(w.exponents)) for w in h.code.words}
    assert words == {(2, 7, 12), (4, 9, 14)}


def test_self_dual_search_p2_6(f64):
    hits = self_dual_search(f64)
    primary = [h for h in hits if h.constant_dimension and h.single_generator]
    assert len(primary) == 1
    h = primary[0]
    assert h.m == 21 and h.params() == (6, 3, 3, 2)
    words = {tuple(sorted(w.exponents)) for w in h.code.words}
    assert words == {(9, 24, 30, 33, 43, 50, 51),
                     (1, 8, 9, 30, 45, 51, 54),
                     (3, 9, 12, 22, 29, 30, 51)}


def test_self_dual_search_results_genuine(f16):
    from orbitcodes import is_quasi_cyclic, is_self_dual
    for h in self_dual_search(f16):
        assert is_self_dual(h.code)
        assert is_quasi_cyclic(h.code, h.m)
        # minimality: no other hit's word set is strictly contained
        for other in self_dual_search(f16):
            if other is not h:
                assert not (other.code.words < h.code.words)


def test_self_dual_search_budget_guard():
    f = make_field(2, 6)
    with pytest.raises(ResourceLimit):
        self_dual_search(f, max_space=100)
