"""
Roman Domination Engine
Seeded instance generators for the property sweeps

Every generator draws from a numpy Generator built on SeedSequence(seed), so an
instance is a pure function of its parameters and seed. Batches use `spawn_seeds`
to split one seed into independent child streams.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from .cograph import build_cotree
from .exceptions import ParameterError
from .graph import Graph, complete_graph, degree_stats, disjoint_union, graph_to_dict, join
from .solver import SetCoverInstance

log = logging.getLogger(__name__)

PAIRING_RETRIES = 1000


class GenKind(str, Enum):
    """Instance families the generators can emit."""
    CUBIC = "cubic"
    COGRAPH = "cograph"
    ERDOS = "erdos"
    BIPARTITE = "bipartite"
    THRESHOLD = "threshold"
    X3C = "x3c"
    X4C = "x4c"


@dataclass(frozen=True)
class GenSpec:
    kind: GenKind
    n: int = 0
    q: int = 0
    t: int = 0
    p: float = 0.5
    max_degree: int = 3
    seed: int = 0
    planted: bool = True

    def validate(self) -> "GenSpec":
        kind = GenKind(self.kind)
        if kind == GenKind.CUBIC and (self.n < 4 or self.n % 2):
            raise ParameterError(f"cubic graphs need an even n >= 4, got n={self.n}")
        if kind in (GenKind.COGRAPH, GenKind.THRESHOLD) and self.n < 1:
            raise ParameterError(f"{kind.value} graphs need n >= 1, got n={self.n}")
        if kind in (GenKind.ERDOS, GenKind.BIPARTITE) and self.n < 0:
            raise ParameterError(f"n must be non-negative, got {self.n}")
        if kind == GenKind.ERDOS and not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"edge probability must lie in [0, 1], got {self.p}")
        if kind in (GenKind.X3C, GenKind.X4C):
            if self.q < 0 or self.t < 0:
                raise ParameterError(f"need q, t >= 0, got q={self.q}, t={self.t}")
            if self.planted and self.t < self.q:
                raise ParameterError(f"a planted cover needs t >= q, got t={self.t} < q={self.q}")
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        return self


@dataclass
class GeneratedInstance:
    spec: GenSpec
    instance: Union[Graph, SetCoverInstance]
    meta: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        if isinstance(self.instance, Graph):
            body = {"graph": graph_to_dict(self.instance)}
        else:
            body = {"instance": self.instance.to_dict()}
        return {"kind": GenKind(self.spec.kind).value, "seed": self.spec.seed, **body, "meta": self.meta}


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, *key]))


def spawn_seeds(seed: int, count: int) -> List[int]:
    """Independent 64-bit child seeds derived from one parent seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


# =============================================================================
# Graphs
# =============================================================================

def _circulant_cubic(n: int) -> Graph:
    # cycle plus antipodal chords; K4 at n=4
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    edges |= {(i, i + n // 2) for i in range(n // 2)}
    return Graph.from_edges(n, sorted(edges), strict=False)


def _pair_stubs(n: int, rng: np.random.Generator) -> Tuple[Optional[Graph], int]:
    """Pairing model with whole-sample rejection; returns the graph and the attempts used."""
    stubs = np.repeat(np.arange(n), 3)
    for attempt in range(1, PAIRING_RETRIES + 1):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        edges = set()
        for s1, s2 in pairs:
            s1, s2 = int(min(s1, s2)), int(max(s1, s2))
            if s1 == s2 or (s1, s2) in edges:
                break
            edges.add((s1, s2))
        else:
            return Graph.from_edges(n, sorted(edges)), attempt
    return None, PAIRING_RETRIES


def _cubic(n: int, seed: int) -> Tuple[Graph, Dict[str, Any]]:
    GenSpec(GenKind.CUBIC, n=n, seed=seed).validate()
    g, attempts = _pair_stubs(n, _rng(seed, 0))
    meta = {"attempts": attempts, "fallback": g is None}
    if g is None:
        log.warning(f"⚠️ pairing model rejected {PAIRING_RETRIES} samples for n={n}; using the circulant fallback")
        g = _circulant_cubic(n)
    assert degree_stats(g).regular == 3
    return g, meta


def gen_cubic(n: int, seed: int) -> Graph:
    """A simple 3-regular graph on n vertices (n even, n >= 4)."""
    return _cubic(n, seed)[0]


def gen_cograph(n: int, seed: int) -> Graph:
    """
    Random cograph: start from n single vertices and repeatedly merge two random
    pieces by disjoint union or join, then shuffle the vertex ids.
    """
    GenSpec(GenKind.COGRAPH, n=n, seed=seed).validate()
    rng = _rng(seed, 1)
    pieces: List[Graph] = [complete_graph(1) for _ in range(n)]
    while len(pieces) > 1:
        i, j = sorted(int(x) for x in rng.choice(len(pieces), size=2, replace=False))
        second, first = pieces.pop(j), pieces.pop(i)
        merge = join if rng.random() < 0.5 else disjoint_union
        pieces.append(merge(first, second))
    g = _relabel(pieces[0], rng.permutation(n))
    build_cotree(g)
    return g


def _relabel(g: Graph, order) -> Graph:
    edges = [(int(order[u]), int(order[v])) for u, v in g.edges()]
    return Graph.from_edges(g.n, edges)


def gen_erdos(n: int, p: float, seed: int) -> Graph:
    GenSpec(GenKind.ERDOS, n=n, p=p, seed=seed).validate()
    rng = _rng(seed, 2)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph.from_edges(n, [(int(u), int(v)) for u, v in zip(*np.nonzero(upper))])


def gen_bipartite(n: int, max_degree: int, seed: int) -> Graph:
    """Random bipartite graph with sides [0, n//2) and [n//2, n) and maximum degree <= max_degree."""
    GenSpec(GenKind.BIPARTITE, n=n, max_degree=max_degree, seed=seed).validate()
    rng = _rng(seed, 3)
    half = n // 2
    pairs = [(u, v) for u in range(half) for v in range(half, n)]
    degree = [0] * n
    edges = []
    for index in rng.permutation(len(pairs)):
        u, v = pairs[int(index)]
        if degree[u] < max_degree and degree[v] < max_degree and rng.random() < 0.5:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    return Graph.from_edges(n, edges)


def gen_threshold(n: int, seed: int) -> Graph:
    """Threshold graph: each new vertex arrives isolated or dominating."""
    GenSpec(GenKind.THRESHOLD, n=n, seed=seed).validate()
    rng = _rng(seed, 4)
    edges = []
    for v in range(1, n):
        if rng.random() < 0.5:
            edges.extend((u, v) for u in range(v))
    return Graph.from_edges(n, edges)


# =============================================================================
# Exact cover
# =============================================================================

def gen_exact_cover(ell: int, q: int, t: int, seed: int, planted: bool = True) -> SetCoverInstance:
    """
    Planted: a random partition of the universe into q blocks plus t - q random sets,
    in shuffled order. Unplanted: t random ell-subsets.
    """
    if ell not in (3, 4):
        raise ParameterError(f"ell must be 3 or 4, got {ell}")
    GenSpec(GenKind.X3C if ell == 3 else GenKind.X4C, q=q, t=t, seed=seed, planted=planted).validate()
    size = ell * q
    if size < ell and t > (q if planted else 0):
        raise ParameterError(f"cannot draw {ell}-subsets from a universe of {size} elements")
    rng = _rng(seed, 5, ell)
    sets: List[List[int]] = []
    if planted:
        sets.extend(block.tolist() for block in rng.permutation(size).reshape(q, ell))
    while len(sets) < t:
        sets.append(rng.choice(size, size=ell, replace=False).tolist())
    order = rng.permutation(len(sets))
    return SetCoverInstance.create(ell, q, [sets[int(i)] for i in order])


def generate(spec: GenSpec) -> GeneratedInstance:
    spec = spec.validate()
    kind = GenKind(spec.kind)
    meta: Dict[str, Any] = {}
    if kind == GenKind.CUBIC:
        instance, meta = _cubic(spec.n, spec.seed)
    elif kind == GenKind.COGRAPH:
        instance = gen_cograph(spec.n, spec.seed)
    elif kind == GenKind.ERDOS:
        instance = gen_erdos(spec.n, spec.p, spec.seed)
    elif kind == GenKind.BIPARTITE:
        instance = gen_bipartite(spec.n, spec.max_degree, spec.seed)
    elif kind == GenKind.THRESHOLD:
        instance = gen_threshold(spec.n, spec.seed)
    else:
        ell = 3 if kind == GenKind.X3C else 4
        instance = gen_exact_cover(ell, spec.q, spec.t, spec.seed, spec.planted)
        meta = {"planted": spec.planted}
    log.debug(f"🎲 generated {kind.value} instance (seed {spec.seed})")
    return GeneratedInstance(spec, instance, meta)
