"""Small undirected graphs stored as bitset adjacency rows.

Vertices are ``0..n-1`` with ``n <= 64``; ``rows[v]`` is an int whose bit
``u`` is set iff ``u ~ v``. Graphs are immutable values. Vertex pairs are
plain ``(u, v)`` tuples normalised to ``u < v`` and paths are tuples of
vertex indices, ``P_n`` meaning the path on ``n`` vertices.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations
from typing import Optional

from .gf2k import BinaryField

MAX_VERTICES = 64

Pair = tuple[int, int]
Path = tuple[int, ...]


def pair(u: int, v: int) -> Pair:
    """Normalise an unordered vertex pair."""
    if u == v:
        raise ValueError(f"a vertex pair needs two distinct vertices, got {u} twice")
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Loop-free undirected graph on at most 64 vertices."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int], *, validate: bool = True):
        if validate:
            if not 0 <= n <= MAX_VERTICES:
                raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
            if len(rows) != n:
                raise ValueError("need exactly one adjacency row per vertex")
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r & ~full:
                    raise ValueError(f"row {v} references a vertex outside 0..{n - 1}")
                if r >> v & 1:
                    raise ValueError(f"loop at vertex {v}")
                for u in iter_bits(r):
                    if not rows[u] >> v & 1:
                        raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        self.n = n
        self.rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for {self.n} vertices")
        return v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.rows[self.check_vertex(v)]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def pairs(self) -> Iterator[Pair]:
        return combinations(range(self.n), 2)

    def edges(self) -> list[Pair]:
        return [(u, v) for u, v in self.pairs() if self.rows[u] >> v & 1]

    def non_edges(self) -> list[Pair]:
        return [(u, v) for u, v in self.pairs() if not self.rows[u] >> v & 1]

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, [full & ~r & ~(1 << v) for v, r in enumerate(self.rows)],
                     validate=False)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under the vertex permutation ``v -> perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            rows[perm[v]] = to_mask(perm[u] for u in iter_bits(r))
        return Graph(self.n, rows, validate=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges()],
            "adjacency": [sorted(iter_bits(r)) for r in self.rows],
        }


def cayley_graph(field: BinaryField, connection: Iterable[int]) -> Graph:
    """Cayley graph of the additive group of ``field``.

    Vertex ``x`` is the element with mask ``x``; ``x ~ y`` iff ``x ^ y`` lies
    in ``connection``. Every subset is symmetric in characteristic 2.
    """
    conn = {field.check(s) for s in connection}
    if 0 in conn:
        raise ValueError("connection set must not contain 0")
    n = field.order
    if n > MAX_VERTICES:
        raise ValueError(f"field of order {n} exceeds the {MAX_VERTICES}-vertex limit")
    rows = [to_mask(x ^ s for s in conn) for x in range(n)]
    return Graph(n, rows, validate=False)


def circulant_graph(m: int, connection: Iterable[int]) -> Graph:
    """Cayley graph of Z_m: ``u ~ v`` iff ``(u - v) % m`` is in ``connection``."""
    if not 1 <= m <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {m}")
    conn = set(connection)
    for s in conn:
        if not 0 <= s < m:
            raise ValueError(f"residue {s} out of range mod {m}")
    if 0 in conn:
        raise ValueError("connection set must not contain 0")
    for s in conn:
        if (m - s) % m not in conn:
            raise ValueError(f"connection set not closed under negation: {s} without {m - s}")
    rows = [to_mask((x + s) % m for s in conn) for x in range(m)]
    return Graph(m, rows, validate=False)


def toggle_edge(g: Graph, e: Sequence[int]) -> Graph:
    """The graph with the adjacency of pair ``e`` flipped."""
    u, v = pair(*e)
    g.check_vertex(u)
    g.check_vertex(v)
    rows = list(g.rows)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    return Graph(g.n, rows, validate=False)


def common_nonneighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices other than ``u``, ``v`` adjacent to neither."""
    u, v = pair(g.check_vertex(u), g.check_vertex(v))
    mask = g.vertex_mask & ~(g.rows[u] | g.rows[v] | 1 << u | 1 << v)
    return frozenset(iter_bits(mask))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``.

    Returns the subgraph, relabelled ``0..len-1`` in ascending order of the
    original labels, and the tuple mapping new labels back to ``g``.
    """
    labels = tuple(sorted({g.check_vertex(v) for v in vertices}))
    index = {v: i for i, v in enumerate(labels)}
    rows = [to_mask(index[u] for u in iter_bits(g.rows[v]) if u in index) for v in labels]
    return Graph(len(labels), rows, validate=False), labels


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists the vertices of an induced path of ``g`` in order."""
    try:
        seq = [int(v) for v in seq]
    except (TypeError, ValueError):
        return False
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if g.has_edge(u, seq[j]) != (j == i + 1):
                return False
    return True


# Search kernel. A partial induced path is extended from its tip; ``blocked``
# holds every path vertex and every neighbour of a non-tip path vertex, so the
# legal next vertices are exactly ``rows[tip] & ~blocked``.


def _extend(rows: Sequence[int], tip: int, blocked: int, need: int) -> Optional[list[int]]:
    """Append ``need`` more vertices after ``tip``; returned in reverse order."""
    if need == 0:
        return []
    cand = rows[tip] & ~blocked
    nb = blocked | rows[tip]
    if need == 1:
        return [(cand & -cand).bit_length() - 1] if cand else None
    while cand:
        low = cand & -cand
        cand ^= low
        w = low.bit_length() - 1
        rest = _extend(rows, w, nb, need - 1)
        if rest is not None:
            rest.append(w)
            return rest
    return None


def _arms(rows: Sequence[int], tip: int, blocked: int, need: int) -> Iterator[tuple[list[int], int]]:
    """Every extension of ``need`` vertices after ``tip``, in order, with its blocked mask."""
    if need == 0:
        yield [], blocked
        return
    cand = rows[tip] & ~blocked
    nb = blocked | rows[tip]
    while cand:
        low = cand & -cand
        cand ^= low
        w = low.bit_length() - 1
        for rest, final in _arms(rows, w, nb | low, need - 1):
            yield [w, *rest], final


def find_path_from(rows: Sequence[int], n: int, starts: Iterable[int]) -> Optional[Path]:
    """Some induced path on ``n`` vertices beginning at one of ``starts``."""
    for s in starts:
        rest = _extend(rows, s, 1 << s, n - 1)
        if rest is not None:
            rest.append(s)
            return tuple(reversed(rest))
    return None


def find_path_around(rows: Sequence[int], core: Sequence[int], n: int, must: int = 0) -> Optional[Path]:
    """Some induced ``n``-vertex path containing ``core`` as a contiguous run.

    ``core`` must itself be an induced path. Every vertex in the ``must`` mask
    has to appear on the returned path.
    """
    k = len(core)
    if k > n:
        return None
    core_mask = to_mask(core)
    head, tail = core[0], core[-1]
    right_blocked = core_mask
    for v in core[:-1]:
        right_blocked |= rows[v]
    tail_side = 0
    for v in core[1:]:
        tail_side |= rows[v]
    for b in range(n - k, -1, -1):
        a = n - k - b
        for right, _ in _arms(rows, tail, right_blocked, b):
            path_mask = core_mask | to_mask(right)
            # growing from ``head`` now: every other path vertex is interior
            left_blocked = path_mask | tail_side
            for v in right:
                left_blocked |= rows[v]
            missing = must & ~path_mask
            if missing:
                for left, _ in _arms(rows, head, left_blocked, a):
                    if not missing & ~to_mask(left):
                        return (*reversed(left), *core, *right)
            else:
                left = _extend(rows, head, left_blocked, a)
                if left is not None:
                    return (*left, *core, *right)
    return None


def _check_length(n: int) -> None:
    if n < 2:
        raise ValueError(f"path length counts vertices and must be >= 2, got {n}")


def find_induced_path(g: Graph, n: int, starts: Optional[Iterable[int]] = None) -> Optional[Path]:
    """Some induced ``P_n`` of ``g``, or ``None`` if there is none.

    The search is exhaustive, so ``None`` proves ``g`` is ``P_n``-free. If
    ``starts`` is given only paths beginning there are tried; pass one vertex
    per orbit of an automorphism group to keep the result exhaustive.
    """
    _check_length(n)
    if n > g.n:
        return None
    return find_path_from(g.rows, n, range(g.n) if starts is None else starts)


def find_induced_path_through(g: Graph, e: Sequence[int], n: int) -> Optional[Path]:
    """Some induced ``P_n`` of ``g`` having the edge ``e`` as a path edge."""
    _check_length(n)
    u, v = pair(g.check_vertex(e[0]), g.check_vertex(e[1]))
    if not g.has_edge(u, v):
        raise ValueError(f"{(u, v)} is not an edge")
    return find_path_around(g.rows, (u, v), n)


def find_induced_path_containing(g: Graph, vertices: Iterable[int], n: int) -> Optional[Path]:
    """Some induced ``P_n`` of ``g`` visiting every vertex in ``vertices``."""
    _check_length(n)
    vs = sorted({g.check_vertex(v) for v in vertices})
    if not vs:
        return find_induced_path(g, n)
    if len(vs) > n:
        return None
    return find_path_around(g.rows, (vs[0],), n, must=to_mask(vs[1:]))
