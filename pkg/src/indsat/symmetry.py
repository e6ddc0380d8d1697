"""Affine automorphisms of field Cayley graphs and orbits on vertex pairs.

Permutations are tuples ``perm`` with ``perm[v]`` the image of vertex ``v``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .gf2k import BinaryField
from .graph import Graph, Pair, iter_bits, pair

Perm = tuple[int, ...]


@dataclass(frozen=True)
class AffineMap:
    """The field permutation ``x -> a*x + beta``."""

    field: BinaryField
    a: int
    beta: int = 0

    def __post_init__(self):
        self.field.check(self.a)
        self.field.check(self.beta)
        if self.a == 0:
            raise ValueError("affine multiplier must be non-zero")

    def __call__(self, x: int) -> int:
        return self.field.add(self.field.mul(self.a, x), self.beta)

    def permutation(self) -> Perm:
        return tuple(self(x) for x in self.field.elements())


def apply(m: AffineMap, x: int) -> int:
    return m(x)


def _check_perm(perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError("not a bijection on the vertex set")


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    _check_perm(perm, g.n)
    for v, row in enumerate(g.rows):
        image = 0
        for u in iter_bits(row):
            image |= 1 << perm[u]
        if g.rows[perm[v]] != image:
            return False
    return True


def affine_group(field: BinaryField, multipliers: Iterable[int]) -> list[Perm]:
    """All maps ``x -> a*x + beta`` for ``a`` in ``multipliers``, as permutations."""
    mults = sorted(set(multipliers))
    if 0 in mults:
        raise ValueError("affine multiplier must be non-zero")
    return [AffineMap(field, a, b).permutation() for a in mults for b in field.elements()]


def xor_translations(k: int) -> list[Perm]:
    """Generators ``x -> x ^ 2**i`` of the translation group of ``Z_2^k``."""
    return [tuple(x ^ (1 << i) for x in range(1 << k)) for i in range(k)]


def cyclic_translations(m: int) -> list[Perm]:
    """The generator ``x -> x + 1`` of the translation group of ``Z_m``."""
    return [tuple((x + 1) % m for x in range(m))] if m > 1 else []


def identity(n: int) -> Perm:
    return tuple(range(n))


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            # keep the smaller item as root so roots are least members
            if y < x:
                x, y = y, x
            self.parent[y] = x


@dataclass(frozen=True)
class PairOrbit:
    representative: Pair
    members: frozenset[Pair]

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "representative": list(self.representative),
            "size": self.size,
            "members": [list(p) for p in sorted(self.members)],
        }


def pair_image(perm: Sequence[int], p: Pair) -> Pair:
    return pair(perm[p[0]], perm[p[1]])


def pair_orbits(g: Graph, generators: Sequence[Sequence[int]], pairs: Iterable[Pair],
                *, check: bool = True) -> list[PairOrbit]:
    """Partition ``pairs`` into orbits of the group generated by ``generators``.

    ``pairs`` must be invariant under the generators. Orbits are returned in
    order of their representative, the least pair of each orbit.
    """
    if check:
        for perm in generators:
            if not is_automorphism(g, perm):
                raise ValueError("generator is not an automorphism of the graph")
    items = sorted({pair(*p) for p in pairs})
    uf = UnionFind(items)
    for perm in generators:
        for p in items:
            q = pair_image(perm, p)
            if q not in uf.parent:
                raise ValueError(f"pair set not invariant: {p} maps to {q}")
            uf.union(p, q)
    groups: dict[Pair, set[Pair]] = {}
    for p in items:
        groups.setdefault(uf.find(p), set()).add(p)
    return [PairOrbit(rep, frozenset(ms)) for rep, ms in sorted(groups.items())]


def vertex_orbit_representatives(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Least vertex of each orbit of the generated group on ``0..n-1``."""
    uf = UnionFind(range(n))
    for perm in generators:
        for v in range(n):
            uf.union(v, perm[v])
    return sorted({uf.find(v) for v in range(n)})


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """The permutation ``x -> p[q[x]]``."""
    return tuple(p[x] for x in q)


def pair_transversal(n: int, generators: Sequence[Sequence[int]], rep: Pair) -> dict[Pair, Perm]:
    """For each pair in the orbit of ``rep``, a group element carrying ``rep`` to it."""
    out = {rep: identity(n)}
    queue = deque([rep])
    while queue:
        p = queue.popleft()
        for perm in generators:
            q = pair_image(perm, p)
            if q not in out:
                out[q] = compose(perm, out[p])
                queue.append(q)
    return out
