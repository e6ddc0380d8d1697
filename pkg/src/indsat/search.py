"""Exhaustive search for P_n-induced-saturated graphs in small families.

Families:

* ``CAYLEY_Z2K``: Cayley graphs of the additive group of GF(2^k), one per
  subset of the non-zero elements (candidate index bit ``i`` selects ``i+1``).
* ``CIRCULANT``: Cayley graphs of Z_m, one per union of classes {s, m-s}.
* ``ALL_GRAPHS``: every labelled graph on m vertices (index bit ``j`` selects
  the ``j``-th pair in lexicographic order).

Candidates are numbered, so runs are reproducible and splitting the index
range across worker processes gives the same hits as a sequential run.
"""

from __future__ import annotations

import json
import logging
import random
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from . import graph6
from .gf2k import BinaryField
from .graph import Graph
from .saturation import SaturationCertificate, Status, check_certificate, scan
from .symmetry import Perm, cyclic_translations, pair_orbits, xor_translations

log = logging.getLogger(__name__)

MAX_CAYLEY_BITS = 6
MAX_CIRCULANT = 64
MAX_ALL_GRAPHS = 8


class Family(str, Enum):
    CAYLEY_Z2K = "CAYLEY_Z2K"
    CIRCULANT = "CIRCULANT"
    ALL_GRAPHS = "ALL_GRAPHS"


@dataclass(frozen=True)
class SearchSpace:
    family: Family
    n: int
    k: Optional[int] = None
    modulus: Optional[int] = None
    m: Optional[int] = None
    max_candidates: Optional[int] = None
    time_budget: Optional[float] = None
    sample: Optional[int] = None
    seed: int = 0
    allow_large: bool = False

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.n < 2:
            raise ValueError(f"path length must be >= 2, got {self.n}")
        if self.family is Family.CAYLEY_Z2K:
            if self.k is None or self.modulus is None:
                raise ValueError("CAYLEY_Z2K needs k and modulus")
            if not 1 <= self.k <= MAX_CAYLEY_BITS:
                raise ValueError(f"CAYLEY_Z2K needs 1 <= k <= {MAX_CAYLEY_BITS}, got {self.k}")
            BinaryField(self.k, self.modulus)
        else:
            limit = MAX_CIRCULANT if self.family is Family.CIRCULANT else MAX_ALL_GRAPHS
            if self.m is None or not 1 <= self.m <= limit:
                raise ValueError(f"{self.family.value} needs 1 <= m <= {limit}, got {self.m}")
            if self.family is Family.ALL_GRAPHS and self.m == MAX_ALL_GRAPHS and not self.allow_large:
                raise ValueError("ALL_GRAPHS with m=8 has 2^28 candidates; pass allow_large")
        for name in ("max_candidates", "sample"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative")

    @property
    def num_vertices(self) -> int:
        return 1 << self.k if self.family is Family.CAYLEY_Z2K else self.m

    @property
    def family_size(self) -> int:
        if self.family is Family.CAYLEY_Z2K:
            return 1 << ((1 << self.k) - 1)
        if self.family is Family.CIRCULANT:
            return 1 << (self.m // 2)
        return 1 << (self.m * (self.m - 1) // 2)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["family"] = self.family.value
        if self.modulus is not None:
            d["modulus"] = hex(self.modulus)
        return d


class _Family:
    """Per-space precomputation shared by every candidate."""

    def __init__(self, space: SearchSpace):
        self.space = space
        nv = space.num_vertices
        if space.family is Family.CAYLEY_Z2K:
            self.generators: list[Perm] = xor_translations(space.k)
        elif space.family is Family.CIRCULANT:
            self.generators = cyclic_translations(space.m)
            # negation classes {s, m-s}, least element first
            self.classes = [(s, space.m - s) if 2 * s != space.m else (s,)
                            for s in range(1, space.m // 2 + 1)]
        else:
            self.generators = []
            self.pair_bits = list(combinations(range(nv), 2))
        if self.generators:
            # translations act transitively on vertices
            self.starts = [0]
            self.pairs = [o.representative for o in
                          pair_orbits(Graph.empty(nv), self.generators,
                                      combinations(range(nv), 2), check=False)]
        else:
            self.starts = list(range(nv))
            self.pairs = list(combinations(range(nv), 2))

    def connection(self, index: int) -> list[int]:
        if self.space.family is Family.CAYLEY_Z2K:
            return [i + 1 for i in range(index.bit_length()) if index >> i & 1]
        if self.space.family is Family.CIRCULANT:
            return sorted(s for i, cls in enumerate(self.classes) if index >> i & 1 for s in cls)
        raise ValueError("ALL_GRAPHS candidates have no connection set")

    def rows(self, index: int) -> list[int]:
        nv = self.space.num_vertices
        family = self.space.family
        if family is Family.ALL_GRAPHS:
            rows = [0] * nv
            bits = self.pair_bits
            while index:
                low = index & -index
                u, v = bits[low.bit_length() - 1]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                index ^= low
            return rows
        conn = self.connection(index)
        if family is Family.CAYLEY_Z2K:
            base = 0
            for s in conn:
                base |= 1 << s
            return [_xor_shift(base, x, nv) for x in range(nv)]
        return [_rotate(conn, x, nv) for x in range(nv)]


def _xor_shift(mask: int, x: int, nv: int) -> int:
    out = 0
    for y in range(nv):
        if mask >> (y ^ x) & 1:
            out |= 1 << y
    return out


def _rotate(conn: Sequence[int], x: int, m: int) -> int:
    out = 0
    for s in conn:
        out |= 1 << ((x + s) % m)
    return out


def candidate_indices(space: SearchSpace) -> list[int] | range:
    """The candidate numbers examined for ``space``, in order."""
    total = space.family_size
    if space.sample is not None and space.sample < total:
        rng = random.Random(space.seed)
        chosen: set[int] = set()
        while len(chosen) < space.sample:
            chosen.add(rng.randrange(total))
        indices: list[int] | range = sorted(chosen)
    else:
        indices = range(total)
    if space.max_candidates is not None:
        indices = indices[:space.max_candidates]
    return indices


def enumerate_candidates(space: SearchSpace) -> Iterator[Graph]:
    """Yield the candidate graphs of ``space`` in deterministic order."""
    fam = _Family(space)
    for index in candidate_indices(space):
        yield Graph(space.num_vertices, fam.rows(index), validate=False)


@dataclass
class Hit:
    index: int
    graph: str
    certificate: SaturationCertificate
    connection: Optional[list[int]] = None

    def to_dict(self) -> dict:
        d = {"index": self.index, "graph": self.graph,
             "certificate": self.certificate.to_dict()}
        if self.connection is not None:
            d["connection"] = self.connection
        return d


@dataclass
class SearchReport:
    space: SearchSpace
    candidates_examined: int = 0
    hits: list[Hit] = field(default_factory=list)
    exhausted: bool = False
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "space": self.space.to_dict(),
            "candidates_examined": self.candidates_examined,
            "family_size": self.space.family_size,
            "exhausted": self.exhausted,
            "elapsed_seconds": round(self.elapsed, 3),
            "hits": [h.to_dict() for h in self.hits],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def hit_graphs(self) -> list[str]:
        return [h.graph for h in self.hits]


def _scan_chunk(space: SearchSpace, indices: Sequence[int],
                deadline: Optional[float]) -> tuple[int, list[tuple[int, list[int], dict]]]:
    fam = _Family(space)
    nv, n = space.num_vertices, space.n
    starts, pairs = fam.starts, fam.pairs
    examined = 0
    found = []
    for index in indices:
        if deadline is not None and time.monotonic() > deadline:
            break
        rows = fam.rows(index)
        status, detail = scan(rows, nv, n, starts, pairs)
        examined += 1
        if status is Status.SATURATED:
            found.append((index, rows, detail))
    return examined, found


def _make_hit(fam: _Family, index: int, rows: list[int], witnesses: dict) -> Hit:
    g = Graph(fam.space.num_vertices, rows)
    g6 = graph6.encode(g)
    cert = SaturationCertificate(n=fam.space.n, graph=g6, witness_map=witnesses,
                                 orbit_reduced=bool(fam.generators),
                                 generators=list(fam.generators))
    if fam.space.n > g.n:
        cert.warnings.append(f"graph has {g.n} vertices, fewer than the path length "
                             f"{fam.space.n}; saturation holds only because no pair can be flipped")
    if not check_certificate(cert, g):
        raise RuntimeError(f"certificate for candidate {index} failed re-validation")
    connection = None if fam.space.family is Family.ALL_GRAPHS else fam.connection(index)
    return Hit(index, g6, cert, connection)


def _chunks(indices, size: int):
    for i in range(0, len(indices), size):
        yield indices[i:i + size]


def run_search(space: SearchSpace, jobs: int = 1, chunk_size: Optional[int] = None) -> SearchReport:
    """Verify every candidate of ``space``; ``jobs > 1`` uses worker processes.

    The time budget is checked between candidates only. The report lists hits
    in candidate order whatever the number of workers.
    """
    started = time.monotonic()
    deadline = None if space.time_budget is None else started + space.time_budget
    indices = candidate_indices(space)
    fam = _Family(space)
    examined = 0
    raw = []
    if jobs <= 1:
        examined, raw = _scan_chunk(space, indices, deadline)
    else:
        size = chunk_size or max(1, -(-len(indices) // (jobs * 8)))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_scan_chunk, space, chunk, deadline)
                       for chunk in _chunks(indices, size)]
            for fut in futures:
                count, found = fut.result()
                examined += count
                raw.extend(found)
    raw.sort(key=lambda item: item[0])
    report = SearchReport(space=space, candidates_examined=examined)
    report.hits = [_make_hit(fam, index, rows, witnesses) for index, rows, witnesses in raw]
    report.exhausted = examined == space.family_size
    report.elapsed = time.monotonic() - started
    log.info("%s n=%d: %d/%d candidates, %d hits, %.1fs", space.family.value, space.n,
             examined, space.family_size, len(report.hits), report.elapsed)
    return report
