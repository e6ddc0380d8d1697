import itertools
import json
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from indsat.graph import Graph
from indsat.graph6 import Graph6Error, decode, encode, to_json

CLEBSCH_G6 = "O`?G?EhTlKJHe_XOlOCi@"


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_graph6(g):
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def random_graph(rng, nv):
    return Graph.from_edges(nv, [e for e in itertools.combinations(range(nv), 2) if rng.random() < 0.4])


def test_clebsch_bytes_match_networkx(clebsch):
    assert encode(clebsch) == CLEBSCH_G6 == nx_graph6(clebsch)
    assert decode(CLEBSCH_G6) == clebsch


@pytest.mark.parametrize("nv", [0, 1, 2, 5, 6, 7, 12, 62, 63, 64])
def test_against_networkx(nv):
    rng = random.Random(nv)
    for _ in range(5):
        g = random_graph(rng, nv)
        s = encode(g)
        assert s == nx_graph6(g)
        assert decode(s) == g
        assert encode(decode(s)) == s


def test_large_size_prefix():
    assert encode(Graph.empty(63))[0] == "~"
    assert encode(Graph.empty(62))[0] == chr(62 + 63)


@given(st.integers(0, 20).flatmap(lambda nv: st.lists(
    st.tuples(st.integers(0, max(nv - 1, 0)), st.integers(0, max(nv - 1, 0))).filter(
        lambda e: e[0] != e[1])).map(lambda es: Graph.from_edges(nv, es))))
def test_roundtrip(g):
    assert decode(encode(g)) == g


def test_header_and_whitespace():
    assert decode(">>graph6<<" + CLEBSCH_G6 + "\n").n == 16
    assert decode(CLEBSCH_G6.encode()).n == 16


@pytest.mark.parametrize("bad", ["", "O`?", "\x10abc", "O`?G?EhTlKJHe_XOlOCi@@", "~~"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        decode(bad)


def test_json_dump():
    d = json.loads(to_json(Graph.path(3)))
    assert d == {"n": 3, "edges": [[0, 1], [1, 2]], "adjacency": [[1], [0, 2], [1]]}
