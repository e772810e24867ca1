"""
Roman Domination Engine
Graph Core - simple undirected graphs on dense vertex ids 0..n-1

Adjacency is stored as one integer bit row per vertex, so the neighbourhood
tests the solver relies on ("is there a label-2 vertex in N(u)", "outside
N[u]") are single AND operations. The public contract is plain set semantics.
"""

import json
import logging
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import EmptyGraph, GraphFormatError

log = logging.getLogger(__name__)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class ComponentProfile:
    """Counts of components of order 1, 2 and at least 3."""
    k1: int = 0
    k2: int = 0
    k3: int = 0

    def __add__(self, other: "ComponentProfile") -> "ComponentProfile":
        return ComponentProfile(self.k1 + other.k1, self.k2 + other.k2, self.k3 + other.k3)

    @classmethod
    def of_order(cls, order: int) -> "ComponentProfile":
        """Profile of a single connected graph with `order` vertices."""
        if order == 1:
            return cls(1, 0, 0)
        if order == 2:
            return cls(0, 1, 0)
        return cls(0, 0, 1)

    @property
    def nontrivial(self) -> int:
        return self.k2 + self.k3

    def to_dict(self) -> Dict[str, int]:
        return {"k1": self.k1, "k2": self.k2, "k3": self.k3}


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    regular: Optional[int]  # k when the graph is k-regular


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple undirected graph.

    `rows[u]` is the bit mask of N(u). Instances are validated on construction:
    rows must be symmetric, irreflexive and within [0, n).
    """
    n: int
    rows: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphFormatError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphFormatError(f"expected {self.n} labels, got {len(self.labels)}")
        full = self.full_mask
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphFormatError(f"vertex {u} has a neighbour outside [0, {self.n})")
            if row >> u & 1:
                raise GraphFormatError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphFormatError(f"asymmetric adjacency between {u} and {v}")

    # --- construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   labels: Optional[Sequence[str]] = None, strict: bool = True) -> "Graph":
        """
        Build a graph from an edge iterable.

        With `strict`, self-loops and duplicate edges are rejected (the parsers use
        this); otherwise duplicates are merged silently.
        """
        rows = [0] * n
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                if strict:
                    raise GraphFormatError(f"duplicate edge ({u}, {v})")
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    # --- basic queries ------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def neighbors(self, u: int) -> frozenset:
        return frozenset(bits(self.rows[u]))

    def closed_row(self, u: int) -> int:
        return self.rows[u] | (1 << u)

    def closed_neighborhood(self, u: int) -> frozenset:
        return frozenset(bits(self.closed_row(u)))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def same_edges(self, other: "Graph") -> bool:
        return self.n == other.n and self.rows == other.rows

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# =============================================================================
# Operations
# =============================================================================

def complement(g: Graph) -> Graph:
    """Complement graph: u-v is an edge iff u != v and u-v is not an edge of g."""
    full = g.full_mask
    rows = tuple(full & ~g.rows[u] & ~(1 << u) for u in range(g.n))
    return Graph(g.n, rows, g.labels)


def components(g: Graph) -> Tuple[List[List[int]], ComponentProfile]:
    """Maximal connected vertex sets (each sorted, ordered by least vertex) and their profile."""
    unseen = g.full_mask
    parts: List[List[int]] = []
    profile = ComponentProfile()
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for u in bits(frontier):
                reach |= g.rows[u]
            frontier = reach & ~comp
            comp |= frontier
        unseen &= ~comp
        members = list(bits(comp))
        parts.append(members)
        profile = profile + ComponentProfile.of_order(len(members))
    return parts, profile


def is_connected(g: Graph) -> bool:
    return len(components(g)[0]) <= 1


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise EmptyGraph("degree statistics need at least one vertex")
    degrees = [g.degree(u) for u in range(g.n)]
    lo, hi = min(degrees), max(degrees)
    return DegreeStats(lo, hi, lo if lo == hi else None)


def is_bipartite(g: Graph) -> Optional[Tuple[frozenset, frozenset]]:
    """A proper 2-colouring (side of vertex 0 first) or None when an odd cycle exists."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits(g.rows[u]):
                if colour[v] == -1:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    left = frozenset(u for u in range(g.n) if colour[u] == 0)
    right = frozenset(u for u in range(g.n) if colour[u] == 1)
    return left, right


def is_split(g: Graph) -> Optional[Tuple[frozenset, frozenset]]:
    """
    Split partition (clique, independent set) via the degree-sequence test.

    With degrees sorted decreasingly and m = max{i : d_i >= i - 1}, g is split iff
    sum(d_1..d_m) = m(m-1) + sum(d_{m+1}..d_n); equality forces any m top-degree
    vertices to be a clique and the rest independent. The partition is re-verified.
    """
    order = sorted(range(g.n), key=lambda u: (-g.degree(u), u))
    degrees = [g.degree(u) for u in order]
    m = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            m = i
    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return None
    clique, independent = frozenset(order[:m]), frozenset(order[m:])
    clique_mask, independent_mask = mask_of(clique), mask_of(independent)
    for u in clique:
        if (g.closed_row(u) & clique_mask) != clique_mask:
            log.error(f"❌ split verification failed: {u} is not adjacent to the whole clique")
            return None
    for u in independent:
        if g.rows[u] & independent_mask:
            log.error(f"❌ split verification failed: {u} has a neighbour in the independent side")
            return None
    return clique, independent


def special_vertices(g: Graph) -> Tuple[List[int], List[List[int]]]:
    """Universal vertices and the false-twin classes (equal open neighbourhoods)."""
    universal = [u for u in range(g.n) if g.degree(u) == g.n - 1]
    classes: Dict[int, List[int]] = {}
    for u in range(g.n):
        classes.setdefault(g.rows[u], []).append(u)
    twin_classes = sorted(classes.values(), key=lambda members: members[0])
    return universal, twin_classes


def find_chordless_cycle(g: Graph, min_length: int) -> Optional[List[int]]:
    """
    Some induced cycle with at least `min_length` vertices, or None.

    Brute-force induced-path search rooted at the least cycle vertex; exponential,
    meant for desk-scale graphs (n <= 24).
    """
    for s in range(g.n):
        above = g.full_mask & ~((1 << (s + 1)) - 1)
        for p1 in bits(g.rows[s] & above):
            found = _extend_induced_path(g, s, [s, p1], (1 << s) | (1 << p1), 0, above, min_length)
            if found:
                return found
    return None


def _extend_induced_path(g: Graph, s: int, path: List[int], path_mask: int,
                         blocked: int, above: int, min_length: int) -> Optional[List[int]]:
    # blocked = N(p_1) | ... | N(p_{k-1}); only s may neighbour the next vertex besides p_k
    last = path[-1]
    for x in bits(g.rows[last] & above & ~path_mask & ~blocked):
        if g.rows[s] >> x & 1:
            if x > path[1] and len(path) + 1 >= min_length:
                return path + [x]
            continue
        found = _extend_induced_path(g, s, path + [x], path_mask | (1 << x),
                                     blocked | g.rows[last], above, min_length)
        if found:
            return found
    return None


def is_chordal_bipartite(g: Graph) -> bool:
    return is_bipartite(g) is not None and find_chordless_cycle(g, 6) is None


# =============================================================================
# Named constructors
# =============================================================================

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: List[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.rows)
        offset += h.n
    return Graph(offset, tuple(rows))


def join(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between vertices of different parts."""
    union = disjoint_union(*graphs)
    rows = list(union.rows)
    offset = 0
    for h in graphs:
        part = ((1 << h.n) - 1) << offset
        others = union.full_mask & ~part
        for u in range(offset, offset + h.n):
            rows[u] |= others
        offset += h.n
    return Graph(union.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on `vertices`, relabelled 0..k-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u in vertices for v in bits(g.rows[u])
             if v in index and index[u] < index[v]]
    return Graph.from_edges(len(vertices), edges)


# =============================================================================
# Edge-list and JSON formats
# =============================================================================

def parse_edgelist(text: str) -> Graph:
    """First line "n m", then m lines "u v" with 0-based ids; '#' starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("edge list is empty")
    try:
        n, m = (int(tok) for tok in lines[0].split())
        edges = [tuple(int(tok) for tok in line.split()) for line in lines[1:]]
    except ValueError as e:
        raise GraphFormatError(f"malformed edge list: {e}") from e
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    if any(len(edge) != 2 for edge in edges):
        raise GraphFormatError("every edge line needs exactly two vertex ids")
    return Graph.from_edges(n, edges, strict=True)


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def graph_to_dict(g: Graph) -> Dict:
    data: Dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        data["names"] = list(g.labels)
    return data


def graph_from_dict(data: Dict) -> Graph:
    try:
        return Graph.from_edges(int(data["n"]), data.get("edges", []),
                                labels=data.get("names"), strict=True)
    except (KeyError, TypeError, IndexError) as e:
        raise GraphFormatError(f"malformed JSON graph: {e}") from e


def load_graph(path: Union[str, Path], fmt: str = "edgelist") -> Graph:
    text = Path(path).read_text()
    if fmt == "json":
        try:
            return graph_from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise GraphFormatError(f"invalid JSON in {path}: {e}") from e
    return parse_edgelist(text)


def save_graph(g: Graph, path: Union[str, Path], fmt: str = "edgelist") -> None:
    text = json.dumps(graph_to_dict(g)) if fmt == "json" else format_edgelist(g)
    Path(path).write_text(text)
    log.info(f"💾 Wrote {g!r} to {path}")
