"""Deciding P_n-induced-saturation, with checkable certificates.

A graph is P_n-induced-saturated when it has no induced P_n but flipping any
single vertex pair (deleting an edge or inserting a non-edge) creates one.
Conditions quantified over an empty set of pairs hold vacuously.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import graph6
from .graph import (
    Graph,
    Pair,
    Path,
    find_path_around,
    find_path_from,
    is_induced_path,
    pair,
    toggle_edge,
)
from .symmetry import (
    Perm,
    is_automorphism,
    pair_orbits,
    pair_transversal,
    vertex_orbit_representatives,
)


class Status(str, Enum):
    SATURATED = "SATURATED"
    CONTAINS_INDUCED_PATH = "CONTAINS_INDUCED_PATH"
    REMOVAL_FAILS = "REMOVAL_FAILS"
    ADDITION_FAILS = "ADDITION_FAILS"


class NotPathFreeError(ValueError):
    def __init__(self, witness: Path):
        super().__init__(f"graph contains the induced path {list(witness)}")
        self.witness = witness


class NoWitnessError(ValueError):
    def __init__(self, p: Pair):
        super().__init__(f"flipping pair {list(p)} creates no induced path")
        self.pair = p


@dataclass(frozen=True)
class SaturationVerdict:
    status: Status
    witness: Optional[Path] = None
    pair: Optional[Pair] = None

    @property
    def saturated(self) -> bool:
        return self.status is Status.SATURATED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": None if self.witness is None else list(self.witness),
            "pair": None if self.pair is None else list(self.pair),
        }


@dataclass
class SaturationCertificate:
    """Witness paths for every (or every orbit-representative) vertex pair.

    ``witness_map[e]`` is a full induced ``n``-vertex path of the graph with
    ``e`` flipped, containing both endpoints of ``e``; the remaining ``n - 2``
    vertices are ``witness(e)``. When ``orbit_reduced`` is set, ``generators``
    are automorphisms of the graph and the map covers one pair per orbit.
    """

    n: int
    graph: str
    witness_map: dict[Pair, Path]
    orbit_reduced: bool = False
    generators: list[Perm] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def verified_pairs(self) -> int:
        return len(self.witness_map)

    def witness(self, e: Sequence[int]) -> tuple[int, ...]:
        p = pair(*e)
        return tuple(v for v in self.witness_map[p] if v not in p)

    def to_dict(self) -> dict:
        g = graph6.decode(self.graph)
        d = {
            "graph": self.graph,
            "n": self.n,
            "orbit_reduced": self.orbit_reduced,
            "verified_pairs": self.verified_pairs,
            "entries": [
                {"pair": list(p), "was_edge": g.has_edge(*p), "path": list(path)}
                for p, path in sorted(self.witness_map.items())
            ],
            "warnings": list(self.warnings),
        }
        if self.orbit_reduced:
            d["generators"] = [list(perm) for perm in self.generators]
            d["orbits"] = [o.to_dict() for o in pair_orbits(g, self.generators, g.pairs(),
                                                            check=False)]
        return d

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, d: Mapping) -> SaturationCertificate:
        try:
            entries = {}
            for entry in d["entries"]:
                u, v = entry["pair"]
                entries[pair(int(u), int(v))] = tuple(int(x) for x in entry["path"])
            return cls(
                n=int(d["n"]),
                graph=str(d["graph"]),
                witness_map=entries,
                orbit_reduced=bool(d.get("orbit_reduced", False)),
                generators=[tuple(int(x) for x in perm) for perm in d.get("generators", [])],
                warnings=list(d.get("warnings", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> SaturationCertificate:
        return cls.from_dict(json.loads(text))


def _check_length(n: int) -> None:
    if n < 2:
        raise ValueError(f"path length counts vertices and must be >= 2, got {n}")


def _flip(rows: Sequence[int], u: int, v: int) -> list[int]:
    out = list(rows)
    out[u] ^= 1 << v
    out[v] ^= 1 << u
    return out


def scan(rows: Sequence[int], nv: int, n: int, starts: Sequence[int],
         pairs: Sequence[Pair]) -> tuple[Status, object]:
    """Check freeness, then each non-edge of ``pairs``, then each edge.

    Returns ``(status, detail)``: the offending path or pair on failure, the
    witness map on success. ``starts`` must meet every vertex orbit of some
    automorphism group; it may simply be every vertex. Flipped pairs are only
    searched for paths through the pair, which is complete once the graph is
    known to be P_n-free.
    """
    if n <= nv:
        found = find_path_from(rows, n, starts)
        if found is not None:
            return Status.CONTAINS_INDUCED_PATH, found
    witnesses: dict[Pair, Path] = {}
    for u, v in pairs:
        if not rows[u] >> v & 1:
            path = find_path_around(_flip(rows, u, v), (u, v), n)
            if path is None:
                return Status.ADDITION_FAILS, (u, v)
            witnesses[(u, v)] = path
    for u, v in pairs:
        if rows[u] >> v & 1:
            path = find_path_around(_flip(rows, u, v), (u,), n, must=1 << v)
            if path is None:
                return Status.REMOVAL_FAILS, (u, v)
            witnesses[(u, v)] = path
    return Status.SATURATED, dict(sorted(witnesses.items()))


def is_path_free(g: Graph, n: int) -> tuple[bool, Optional[Path]]:
    """``(True, None)`` if ``g`` has no induced ``P_n``, else ``(False, witness)``."""
    _check_length(n)
    if n > g.n:
        return True, None
    found = find_path_from(g.rows, n, range(g.n))
    return found is None, found


def _check_generators(g: Graph, generators: Sequence[Sequence[int]]) -> list[Perm]:
    gens = [tuple(p) for p in generators]
    for perm in gens:
        if not is_automorphism(g, perm):
            raise ValueError("generator is not an automorphism of the graph")
    return gens


def verify_induced_saturated(
    g: Graph, n: int, generators: Optional[Sequence[Sequence[int]]] = None
) -> tuple[SaturationVerdict, Optional[SaturationCertificate]]:
    """Decide whether ``g`` is P_n-induced-saturated.

    With ``generators`` (automorphisms of ``g``) one pair per orbit is checked
    and the certificate is orbit-reduced. The first failure found is reported:
    an induced path first, then a non-edge, then an edge, pairs in
    lexicographic order.
    """
    _check_length(n)
    if generators is not None:
        gens = _check_generators(g, generators)
        starts = vertex_orbit_representatives(g.n, gens)
        pairs = [o.representative for o in pair_orbits(g, gens, g.pairs(), check=False)]
    else:
        gens = []
        starts = list(range(g.n))
        pairs = list(g.pairs())
    status, detail = scan(g.rows, g.n, n, starts, pairs)
    if status is Status.CONTAINS_INDUCED_PATH:
        return SaturationVerdict(status, witness=detail), None
    if status is not Status.SATURATED:
        return SaturationVerdict(status, pair=detail), None
    warnings = []
    if n > g.n:
        warnings.append(f"graph has {g.n} vertices, fewer than the path length {n}; "
                        "saturation holds only because no pair can be flipped")
    cert = SaturationCertificate(n=n, graph=graph6.encode(g), witness_map=detail,
                                 orbit_reduced=generators is not None, generators=gens,
                                 warnings=warnings)
    return SaturationVerdict(status), cert


def witness_function(g: Graph, n: int) -> dict[Pair, Path]:
    """Map every vertex pair to a full induced ``P_n`` of the flipped graph.

    Raises ``NotPathFreeError`` if ``g`` has an induced ``P_n`` and
    ``NoWitnessError`` for the first pair whose flip creates none.
    """
    free, found = is_path_free(g, n)
    if not free:
        raise NotPathFreeError(found)
    out = {}
    for u, v in g.pairs():
        flipped = _flip(g.rows, u, v)
        if g.has_edge(u, v):
            path = find_path_around(flipped, (u,), n, must=1 << v)
        else:
            path = find_path_around(flipped, (u, v), n)
        if path is None:
            raise NoWitnessError((u, v))
        out[(u, v)] = path
    return out


def expand_certificate(cert: SaturationCertificate) -> SaturationCertificate:
    """Transport orbit-representative witnesses to every pair of each orbit."""
    if not cert.orbit_reduced:
        return cert
    g = graph6.decode(cert.graph)
    full: dict[Pair, Path] = {}
    for rep, path in cert.witness_map.items():
        for p, perm in pair_transversal(g.n, cert.generators, rep).items():
            full.setdefault(p, tuple(perm[v] for v in path))
    return SaturationCertificate(n=cert.n, graph=cert.graph, witness_map=dict(sorted(full.items())),
                                 warnings=list(cert.warnings))


def has_induced_path_by_subsets(g: Graph, n: int) -> bool:
    """Whether some ``n``-vertex set induces a path.

    Grows vertex sets in increasing order while they induce a linear forest
    (max degree 2, no cycle); shares nothing with the path-extension search.
    """
    if n > g.n:
        return False
    rows = g.rows

    def grow(members: list[int], deg: list[int], comp: list[int], edges: int, nxt: int) -> bool:
        if len(members) == n:
            return edges == n - 1
        for w in range(nxt, g.n):
            nbrs = [i for i, x in enumerate(members) if rows[w] >> x & 1]
            if len(nbrs) > 2 or any(deg[i] == 2 for i in nbrs):
                continue
            if len(nbrs) == 2 and comp[nbrs[0]] == comp[nbrs[1]]:
                continue
            new_deg = deg.copy()
            for i in nbrs:
                new_deg[i] += 1
            new_deg.append(len(nbrs))
            label = len(members)
            merged = {comp[i] for i in nbrs}
            new_comp = [label if c in merged else c for c in comp] + [label]
            # a linear forest on n vertices with n-1 edges is a path; the
            # remaining vertices cannot reduce the number of components
            n_comps = len(set(new_comp))
            if n_comps - 1 > n - len(members) - 1:
                continue
            if grow(members + [w], new_deg, new_comp, edges + len(nbrs), w + 1):
                return True
        return False

    return grow([], [], [], 0, 0)


def check_certificate(cert: SaturationCertificate, g: Graph) -> bool:
    """Re-validate a certificate against ``g`` without the search kernel.

    Raises ``ValueError`` when the certificate is for a different graph.
    """
    try:
        cert_graph = graph6.decode(cert.graph)
    except ValueError as exc:
        raise ValueError(f"certificate graph is not valid graph6: {exc}") from exc
    if cert_graph != g:
        raise ValueError("certificate was issued for a different graph")
    n = cert.n
    if n < 2:
        return False
    for p, path in cert.witness_map.items():
        u, v = p
        if not (0 <= u < v < g.n) or len(path) != n or u not in path or v not in path:
            return False
        if not is_induced_path(toggle_edge(g, p), path):
            return False
    if cert.orbit_reduced:
        try:
            if not all(is_automorphism(g, perm) for perm in cert.generators):
                return False
        except ValueError:
            return False
        covered = set(cert.witness_map)
        for orbit in pair_orbits(g, cert.generators, g.pairs(), check=False):
            if not orbit.members & covered:
                return False
    elif set(cert.witness_map) != set(g.pairs()):
        return False
    return not has_induced_path_by_subsets(g, n)


__all__ = [
    "NoWitnessError",
    "NotPathFreeError",
    "SaturationCertificate",
    "SaturationVerdict",
    "Status",
    "check_certificate",
    "expand_certificate",
    "has_induced_path_by_subsets",
    "is_path_free",
    "scan",
    "verify_induced_saturated",
    "witness_function",
]
