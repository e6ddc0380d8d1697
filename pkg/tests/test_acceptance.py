"""Exit criteria, one test each; a PASS/FAIL line per criterion is printed
in the terminal summary."""

import itertools
import random
import time
from contextlib import contextmanager

import pytest

from indsat import GF16, BinaryField, cayley_graph
from indsat.graph import (
    Graph,
    common_nonneighbors,
    find_induced_path,
    find_induced_path_through,
    induced_subgraph,
    is_induced_path,
    toggle_edge,
)
from indsat.graph6 import decode
from indsat.saturation import Status, check_certificate, verify_induced_saturated
from indsat.search import Family, SearchSpace, run_search
from indsat.symmetry import affine_group, pair_orbits

PAPER_S = [1, 8, 10, 12, 15]


@pytest.fixture
def criterion(request):
    @contextmanager
    def record(number, text):
        try:
            yield
        except BaseException:
            request.config._acceptance_lines.append(f"FAIL  criterion {number:2d}: {text}")
            raise
        request.config._acceptance_lines.append(f"PASS  criterion {number:2d}: {text}")
    return record


@pytest.fixture(scope="module")
def graph():
    field = BinaryField(4, 0x13)
    return cayley_graph(field, field.nonzero_cubes())


@pytest.fixture(scope="module")
def group():
    return affine_group(GF16, GF16.nonzero_cubes())


@pytest.fixture(scope="module")
def cayley_report():
    return run_search(SearchSpace(Family.CAYLEY_Z2K, n=6, k=4, modulus=0x13), jobs=1)


def test_c01_theorem_end_to_end(criterion, graph):
    with criterion(1, "GF(16) cube Cayley graph is P6-induced-saturated, 40 removals + 80 additions"):
        start = time.perf_counter()
        verdict, cert = verify_induced_saturated(graph, 6)
        elapsed = time.perf_counter() - start
        assert verdict.status is Status.SATURATED
        assert not cert.orbit_reduced and cert.verified_pairs == 120
        removals = [p for p in cert.witness_map if graph.has_edge(*p)]
        additions = [p for p in cert.witness_map if not graph.has_edge(*p)]
        assert len(removals) == 40 and len(additions) == 80
        assert elapsed < 1.0
        assert check_certificate(cert, graph)


def test_c02_claim1(criterion, graph):
    with criterion(2, "common non-neighbours of 0,1 are {2..7} inducing {2,3},{4,5},{6,7}"):
        t = common_nonneighbors(graph, 0, 1)
        assert t == {2, 3, 4, 5, 6, 7}
        sub, labels = induced_subgraph(graph, t)
        assert {(labels[a], labels[b]) for a, b in sub.edges()} == {(2, 3), (4, 5), (6, 7)}


def test_c03_claim2(criterion, graph):
    with criterion(3, "R induces P5 (0,10,2,14,4) + isolated 7, 9; adding {0,7} or {0,9} gives P6"):
        sub, labels = induced_subgraph(graph, {0, 10, 2, 14, 4, 7, 9})
        edges = {(labels[a], labels[b]) for a, b in sub.edges()}
        assert edges == {(0, 10), (2, 10), (2, 14), (4, 14)}
        assert is_induced_path(graph, (0, 10, 2, 14, 4))
        for e in [(0, 7), (0, 9)]:
            assert not graph.has_edge(*e)
            g = toggle_edge(graph, e)
            w = find_induced_path_through(g, e, 6)
            assert w is not None and is_induced_path(g, w)


def test_c04_claim3(criterion, graph):
    with criterion(4, "(14,1,9,8,0,12) is an induced path of G minus {0,1}"):
        assert is_induced_path(toggle_edge(graph, (0, 1)), (14, 1, 9, 8, 0, 12))


def test_c05_orbits(criterion, graph, group):
    with criterion(5, "80 affine maps: 1 edge orbit, 2 non-edge orbits, reduced == full"):
        assert len(group) == 80
        assert len(pair_orbits(graph, group, graph.edges())) == 1
        assert len(pair_orbits(graph, group, graph.non_edges())) == 2
        full, _ = verify_induced_saturated(graph, 6)
        reduced, cert = verify_induced_saturated(graph, 6, group)
        assert full.status is reduced.status is Status.SATURATED
        assert cert.verified_pairs == 3


def test_c06_structure(criterion, graph):
    with criterion(6, "5-regular, triangle-free, strongly regular (16,5,0,2)"):
        adj = [[graph.has_edge(u, v) for v in range(16)] for u in range(16)]
        assert all(sum(row) == 5 for row in adj)
        assert not any(adj[a][b] and adj[b][c] and adj[a][c]
                       for a, b, c in itertools.combinations(range(16), 3))
        for u, v in itertools.combinations(range(16), 2):
            common = sum(adj[u][w] and adj[v][w] for w in range(16))
            assert common == (0 if adj[u][v] else 2)


def brute_force_has_path(g, n):
    adj = [[g.has_edge(u, v) for v in range(g.n)] for u in range(g.n)]
    for t in itertools.permutations(range(g.n), n):
        if all(adj[t[i]][t[j]] == (j == i + 1) for i in range(n) for j in range(i + 1, n)):
            return True
    return False


def test_c07_oracle_equivalence(criterion):
    with criterion(7, "find_induced_path agrees with all-ordered-tuples brute force on 200 graphs"):
        rng = random.Random(2016)
        disagreements = 0
        for _ in range(200):
            nv = rng.randint(3, 10)
            p = rng.choice([0.15, 0.3, 0.5, 0.7])
            g = Graph.from_edges(nv, [e for e in itertools.combinations(range(nv), 2)
                                      if rng.random() < p])
            n = rng.randint(3, 6)
            found = find_induced_path(g, n)
            if found is not None and not is_induced_path(g, found):
                disagreements += 1
            elif (found is not None) != brute_force_has_path(g, n):
                disagreements += 1
        assert disagreements == 0


def test_c08_trivial_cases(criterion):
    with criterion(8, "empty graphs are P2-saturated, K_m P3-saturated, P6 contains P6"):
        for m in range(2, 7):
            assert verify_induced_saturated(Graph.empty(m), 2)[0].saturated
        for m in range(3, 7):
            assert verify_induced_saturated(Graph.complete(m), 3)[0].saturated
        assert verify_induced_saturated(Graph.path(6), 6)[0].status is Status.CONTAINS_INDUCED_PATH


def test_c09_no_p4_saturated_graphs(criterion):
    with criterion(9, "all labelled graphs on 2..7 vertices: no P4-induced-saturated graph"):
        start = time.perf_counter()
        for m in range(2, 8):
            report = run_search(SearchSpace(Family.ALL_GRAPHS, n=4, m=m))
            assert report.exhausted
            assert report.candidates_examined == 2 ** (m * (m - 1) // 2)
            assert report.hits == []
        assert time.perf_counter() - start < 600


def test_c10_rediscovery(criterion, cayley_report):
    with criterion(10, "Cayley search over GF(16) for n=6 finds S = {1,8,10,12,15}; hits certified"):
        report = cayley_report
        assert report.exhausted and report.candidates_examined == 32768
        assert PAPER_S in [h.connection for h in report.hits]
        for hit in report.hits:
            assert check_certificate(hit.certificate, decode(hit.graph))
        assert report.elapsed < 600


def test_c11_parallel_determinism(criterion, cayley_report):
    with criterion(11, "Cayley search hit lists identical with --jobs 1 and --jobs 8"):
        parallel = run_search(cayley_report.space, jobs=8)
        assert parallel.hit_graphs() == cayley_report.hit_graphs()
        assert [h.index for h in parallel.hits] == [h.index for h in cayley_report.hits]
