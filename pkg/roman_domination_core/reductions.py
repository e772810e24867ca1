"""
Roman Domination Engine
Hardness reductions: instance constructions, forward labelings and backward extraction

Five constructions live here:
    x3c_to_x4c        Exact 3-Cover      -> Exact 4-Cover
    ds3reg_to_classF  DS on cubic graphs -> GRD on the three-copy class
    x4c_to_classG     Exact 4-Cover      -> RD/GRD on the gadget class
    x3c_to_split      Exact 3-Cover      -> GRD on split graphs
    ds_to_treegadget  DS                 -> GRD with a pendant tree per vertex

Each graph-producing construction returns a ReductionOutput whose vertices carry role
tags, so the labelings below can be written in terms of roles instead of raw ids.
"""

import hashlib
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .exceptions import EmptyGraph, ExtractionFailed, InvalidCover, NotCubic, NotDominating, ParameterError
from .graph import Graph, degree_stats, graph_to_dict
from .labeling import Mode, RomanLabeling, check, first_undominated
from .solver import SetCoverInstance, cost_given_two_set, require_exact_cover

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Role:
    """A vertex role such as `u`, `A(2)` or `S(3,1)`; indices are 1-based like the constructions."""
    tag: str
    args: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.tag
        return f"{self.tag}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class ReductionSource:
    name: str
    digest: str
    params: Dict[str, int] = field(hash=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "digest": self.digest, "params": dict(self.params)}


@dataclass
class ReductionOutput:
    graph: Graph
    budget: int
    roles: Tuple[Role, ...]
    source: ReductionSource
    instance: Union[Graph, SetCoverInstance, None] = field(default=None, repr=False)
    _index: Dict[Role, int] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if len(self.roles) != self.graph.n:
            raise ParameterError(f"{len(self.roles)} roles for {self.graph.n} vertices")
        self._index = {role: v for v, role in enumerate(self.roles)}
        if len(self._index) != len(self.roles):
            raise ParameterError("role tags are not unique")

    def vertex(self, tag: str, *args: int) -> int:
        return self._index[Role(tag, tuple(args))]

    def tagged(self, tag: str) -> List[int]:
        return [v for v, role in enumerate(self.roles) if role.tag == tag]

    def role_counts(self) -> Dict[str, int]:
        return dict(Counter(role.tag for role in self.roles))


def _digest(payload: Dict[str, Any]) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def reduction_to_dict(out: ReductionOutput) -> Dict[str, Any]:
    return {
        "graph": graph_to_dict(out.graph),
        "budget": out.budget,
        "roles": [str(role) for role in out.roles],
        "source": out.source.to_dict(),
    }


class _Builder:
    """Accumulates role-tagged vertices and edges, then freezes them into a ReductionOutput."""

    def __init__(self):
        self.roles: List[Role] = []
        self.ids: Dict[Role, int] = {}
        self.edges: List[Tuple[int, int]] = []

    def add(self, tag: str, *args: int) -> int:
        role = Role(tag, tuple(args))
        self.ids[role] = len(self.roles)
        self.roles.append(role)
        return self.ids[role]

    def id(self, tag: str, *args: int) -> int:
        return self.ids[Role(tag, tuple(args))]

    def link(self, u: int, v: int):
        self.edges.append((u, v))

    def link_all(self, u: int, vs: Iterable[int]):
        for v in vs:
            self.link(u, v)

    def finish(self, budget: int, source: ReductionSource, instance, expected: Dict[str, int]) -> ReductionOutput:
        graph = Graph.from_edges(len(self.roles), self.edges, labels=[str(r) for r in self.roles], strict=False)
        out = ReductionOutput(graph, budget, tuple(self.roles), source, instance)
        counts = out.role_counts()
        for tag, count in expected.items():
            assert counts.get(tag, 0) == count, f"{source.name}: expected {count} {tag} vertices, built {counts.get(tag, 0)}"
        log.info(f"🏗️ {source.name}: {graph!r}, budget {budget}")
        return out


def _require_ell(inst: SetCoverInstance, ell: int):
    if inst.ell != ell:
        raise ParameterError(f"expected an Exact {ell}-Cover instance, got ell={inst.ell}")


def _require_within(out: ReductionOutput, f: RomanLabeling, mode: Mode = Mode.GRD):
    verdict = check(out.graph, f, mode)
    if not verdict.valid:
        raise ParameterError(f"labeling is not usable for extraction: {verdict.describe()}")
    if f.weight > out.budget:
        raise ParameterError(f"labeling weight {f.weight} exceeds the budget {out.budget}")


def _certified(out: ReductionOutput, f: RomanLabeling, mode: Mode, weight: int) -> RomanLabeling:
    verdict = check(out.graph, f, mode)
    assert verdict.valid, f"{out.source.name}: constructed labeling is not a {mode.value}: {verdict.describe()}"
    assert f.weight == weight, f"{out.source.name}: constructed labeling weighs {f.weight}, expected {weight}"
    return f


# =============================================================================
# Exact 3-Cover -> Exact 4-Cover
# =============================================================================

def x3c_to_x4c(inst: SetCoverInstance) -> SetCoverInstance:
    """
    Add q dummy elements 3q, ..., 4q-1 and extend every set by every dummy.

    The output set at index i*q + j is C_i plus the dummy 3q + j.
    """
    _require_ell(inst, 3)
    q = inst.q
    sets = [tuple(subset) + (3 * q + j,) for subset in inst.sets for j in range(q)]
    return SetCoverInstance.create(4, q, sets)


def x4c_cover_from_x3c(inst: SetCoverInstance, cover: Sequence[int]) -> Tuple[int, ...]:
    """Give the j-th chosen set (in index order) the j-th dummy."""
    chosen = require_exact_cover(inst, cover)
    return tuple(sorted(i * inst.q + j for j, i in enumerate(chosen)))


def x3c_cover_from_x4c(inst: SetCoverInstance, cover4: Sequence[int]) -> Tuple[int, ...]:
    """Drop the dummies: output index k came from source set k // q."""
    chosen = tuple(sorted({k // inst.q for k in cover4})) if inst.q else ()
    try:
        return require_exact_cover(inst, chosen)
    except InvalidCover as e:
        raise ExtractionFailed(f"sets {chosen} recovered from the 4-cover are not an exact 3-cover: {e}") from e


# =============================================================================
# DS on cubic graphs -> GRD on the three-copy class
# =============================================================================

def ds3reg_to_classF(g: Graph, k: int) -> ReductionOutput:
    """
    Three copies of the complement of g plus three hubs v1, v2, v3.

    Copy vertices u_i and w_j (any copies, u != w) are adjacent iff u-w is a non-edge
    of g; the three copies of one source vertex are pairwise non-adjacent. Each hub is
    adjacent to every copy vertex and to no other hub.
    """
    try:
        stats = degree_stats(g)
    except EmptyGraph as e:
        raise NotCubic(f"graph is not 3-regular: {e}") from e
    if stats.regular != 3:
        raise NotCubic(f"graph is not 3-regular: degrees range over [{stats.min_degree}, {stats.max_degree}]")
    n = g.n
    b = _Builder()
    for copy in (1, 2, 3):
        for u in range(n):
            b.add("copy", copy, u)
    hubs = [b.add(tag) for tag in ("v1", "v2", "v3")]
    for u, w in combinations(range(n), 2):
        if g.has_edge(u, w):
            continue
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                b.link(b.id("copy", i, u), b.id("copy", j, w))
    copies = range(3 * n)
    for hub in hubs:
        b.link_all(hub, copies)
    source = ReductionSource("classF", _digest(graph_to_dict(g)), {"n": n, "k": k})
    return b.finish(2 * k + 2, source, g, {"copy": 3 * n, "v1": 1, "v2": 1, "v3": 1})


def _classF_source(out: ReductionOutput) -> Graph:
    if out.source.name != "classF":
        raise ParameterError(f"expected a classF reduction, got {out.source.name}")
    return out.instance


def classF_labeling_from_ds(out: ReductionOutput, s: Iterable[int]) -> RomanLabeling:
    g = _classF_source(out)
    s = sorted(set(s))
    missing = first_undominated(g, s)
    if missing is not None:
        raise NotDominating(f"{s} does not dominate vertex {missing} of the source graph")
    twos = [out.vertex("copy", 1, u) for u in s] + [out.vertex("v1")]
    f = RomanLabeling.from_two_set(out.graph.n, twos)
    return _certified(out, f, Mode.GRD, 2 * len(s) + 2)


def ds_from_grdf_classF(out: ReductionOutput, f: RomanLabeling) -> FrozenSet[int]:
    """Source vertices with a label-2 copy."""
    g = _classF_source(out)
    _require_within(out, f)
    s = frozenset(out.roles[v].args[1] for v in f.vertices_with(2) if out.roles[v].tag == "copy")
    missing = first_undominated(g, s)
    if missing is not None:
        raise ExtractionFailed(f"projected set {sorted(s)} misses source vertex {missing}")
    if 2 * len(s) > out.budget - 2:
        raise ExtractionFailed(f"projected set {sorted(s)} is larger than {(out.budget - 2) // 2}")
    return s


def classF_canonical_rdf(out: ReductionOutput) -> RomanLabeling:
    """Weight 4: hub v1 and one copy vertex of the first copy labelled 2."""
    _classF_source(out)
    f = RomanLabeling.from_two_set(out.graph.n, [out.vertex("copy", 1, 0), out.vertex("v1")])
    return _certified(out, f, Mode.RD, 4)


def classF_structured_optimum(out: ReductionOutput) -> Tuple[int, RomanLabeling]:
    """
    Least GRDF weight among labelings with f(v1) = 2, f(v2) = f(v3) = 0 and only 0/2 on copies.

    Copy label-2 sets are scanned by increasing size, so the first hit is optimal
    within that shape.
    """
    g = _classF_source(out)
    hub = out.vertex("v1")
    copies = out.tagged("copy")
    for size in range(0, g.n + 1):
        for chosen in combinations(copies, size):
            d2 = list(chosen) + [hub]
            weight, forced = cost_given_two_set(out.graph, d2, Mode.GRD)
            if not forced:
                return weight, RomanLabeling.from_two_set(out.graph.n, d2)
    raise ExtractionFailed("no structured GRDF exists")  # unreachable: all copies of all vertices work


# =============================================================================
# Exact 4-Cover -> the gadget class
# =============================================================================

def x4c_to_classG(inst: SetCoverInstance) -> ReductionOutput:
    """
    Gadget graph on m + 30l + 4 vertices for an Exact 4-Cover instance with |X| = 4l, m = t.

    A is a clique of set vertices, B the element vertices (a_j - b_i iff x_i in C_j);
    v, w, x see all of A and u sees only v, w, x. Element i owns p_i, q_i^1, q_i^2, three
    s_i vertices and, for odd i, r_i; the q vertices form a ring through q_i^2 - q_{i+1}^1
    and v, x see all of P and Q.
    """
    _require_ell(inst, 4)
    if inst.t < 1:
        raise ParameterError("the gadget construction needs at least one set")
    l, m = inst.q, inst.t
    size = 4 * l
    b = _Builder()
    a_ids = [b.add("A", j) for j in range(1, m + 1)]
    b_ids = [b.add("B", i) for i in range(1, size + 1)]
    u, v, w, x = (b.add(tag) for tag in ("u", "v", "w", "x"))
    p_ids = [b.add("P", i) for i in range(1, size + 1)]
    q1_ids = [b.add("Q1", i) for i in range(1, size + 1)]
    q2_ids = [b.add("Q2", i) for i in range(1, size + 1)]
    r_ids = {i: b.add("R", i) for i in range(1, size + 1, 2)}
    s_ids = {(i, k): b.add("S", i, k) for i in range(1, size + 1) for k in (1, 2, 3)}

    for a1, a2 in combinations(a_ids, 2):
        b.link(a1, a2)
    for j, subset in enumerate(inst.sets):
        for element in subset:
            b.link(a_ids[j], b_ids[element])
    for hub in (v, w, x):
        b.link_all(hub, a_ids)
        b.link(u, hub)
    for i in range(1, size + 1):
        p, q1, q2 = p_ids[i - 1], q1_ids[i - 1], q2_ids[i - 1]
        b.link_all(p, (b_ids[i - 1], q1, q2))
        for k in (1, 2, 3):
            b.link_all(s_ids[i, k], (p, q1, q2))
        if i in r_ids:
            b.link_all(r_ids[i], (q1, q2))
        b.link(q2, q1_ids[i % size])  # ring, wrapping q_{4l}^2 - q_1^1
    for hub in (v, x):
        b.link_all(hub, p_ids + q1_ids + q2_ids)

    source = ReductionSource("classG", _digest(inst.to_dict()), {"l": l, "q": inst.q, "t": m})
    expected = {"A": m, "B": size, "P": size, "Q1": size, "Q2": size, "R": 2 * l, "S": 12 * l,
                "u": 1, "v": 1, "w": 1, "x": 1}
    out = b.finish(10 * l + 2, source, inst, expected)
    assert out.graph.n == m + 30 * l + 4
    return out


def _classG_source(out: ReductionOutput) -> SetCoverInstance:
    if out.source.name != "classG":
        raise ParameterError(f"expected a classG reduction, got {out.source.name}")
    return out.instance


def classG_canonical_rdf(out: ReductionOutput, cover: Sequence[int]) -> RomanLabeling:
    """2 on the cover's set vertices and every q_i^1, 1 on u: weight 10l + 1."""
    inst = _classG_source(out)
    chosen = require_exact_cover(inst, cover)
    twos = [out.vertex("A", j + 1) for j in chosen] + out.tagged("Q1")
    f = RomanLabeling.from_two_set(out.graph.n, twos, ones=[out.vertex("u")])
    return _certified(out, f, Mode.RD, 10 * inst.q + 1)


def classG_canonical_grdf(out: ReductionOutput, cover: Optional[Sequence[int]] = None) -> RomanLabeling:
    """
    Weight 10l + 2 GRDF.

    With a cover: 2 on w, the cover's set vertices and every q_i^1. Without one:
    2 on w and every p_i, 1 on every r_i.
    """
    inst = _classG_source(out)
    n = out.graph.n
    if cover is not None:
        chosen = require_exact_cover(inst, cover)
        twos = [out.vertex("w")] + [out.vertex("A", j + 1) for j in chosen] + out.tagged("Q1")
        f = RomanLabeling.from_two_set(n, twos)
    else:
        f = RomanLabeling.from_two_set(n, [out.vertex("w")] + out.tagged("P"), ones=out.tagged("R"))
    return _certified(out, f, Mode.GRD, 10 * inst.q + 2)


# =============================================================================
# Exact 3-Cover -> split graphs
# =============================================================================

def x3c_to_split(inst: SetCoverInstance) -> ReductionOutput:
    """
    Split graph with clique A = set vertices plus a dummy a_{t+1}, independent set B of
    element vertices, and a pendant p_j on every a_j. Budget q + t + 3.
    """
    _require_ell(inst, 3)
    t = inst.t
    b = _Builder()
    a_ids = [b.add("A", j) for j in range(1, t + 2)]
    b_ids = [b.add("B", i) for i in range(1, inst.universe_size + 1)]
    p_ids = [b.add("P", j) for j in range(1, t + 2)]
    for a1, a2 in combinations(a_ids, 2):
        b.link(a1, a2)
    for j, subset in enumerate(inst.sets):
        for element in subset:
            b.link(a_ids[j], b_ids[element])
    for a, p in zip(a_ids, p_ids):
        b.link(a, p)
    source = ReductionSource("split", _digest(inst.to_dict()), {"q": inst.q, "t": t})
    return b.finish(inst.q + t + 3, source, inst, {"A": t + 1, "B": inst.universe_size, "P": t + 1})


def _split_source(out: ReductionOutput) -> SetCoverInstance:
    if out.source.name != "split":
        raise ParameterError(f"expected a split reduction, got {out.source.name}")
    return out.instance


def split_labeling_from_cover(out: ReductionOutput, cover: Sequence[int]) -> RomanLabeling:
    """2 on p_{t+1} and the cover's set vertices; 1 on a_{t+1} and the pendants of unused sets."""
    inst = _split_source(out)
    chosen = require_exact_cover(inst, cover)
    t = inst.t
    twos = [out.vertex("P", t + 1)] + [out.vertex("A", j + 1) for j in chosen]
    ones = [out.vertex("A", t + 1)] + [out.vertex("P", j + 1) for j in range(t) if j not in chosen]
    f = RomanLabeling.from_two_set(out.graph.n, twos, ones)
    return _certified(out, f, Mode.GRD, inst.q + t + 3)


def cover_from_grdf_split(out: ReductionOutput, f: RomanLabeling) -> Tuple[int, ...]:
    """Sets whose clique vertex carries a 2 (the dummy excluded)."""
    inst = _split_source(out)
    _require_within(out, f)
    chosen = tuple(j for j in range(inst.t) if f.values[out.vertex("A", j + 1)] == 2)
    try:
        return require_exact_cover(inst, chosen)
    except InvalidCover as e:
        raise ExtractionFailed(f"clique vertices labelled 2 do not form an exact cover: {e}") from e


# =============================================================================
# DS -> pendant-tree gadget
# =============================================================================

def ds_to_treegadget(g: Graph, k: int) -> ReductionOutput:
    """
    Attach to every vertex v_i the tree v_i - a_i - b_i with leaves c_i, d_i on b_i
    and the pendant e_i on v_i. 6n vertices, budget 3n + k.
    """
    n = g.n
    b = _Builder()
    for tag in ("original", "a", "b", "c", "d", "e"):
        for i in range(1, n + 1):
            b.add(tag, i)
    for u, w in g.edges():
        b.link(u, w)
    for i in range(1, n + 1):
        b.link(b.id("original", i), b.id("a", i))
        b.link(b.id("original", i), b.id("e", i))
        b.link(b.id("a", i), b.id("b", i))
        b.link(b.id("b", i), b.id("c", i))
        b.link(b.id("b", i), b.id("d", i))
    source = ReductionSource("treegadget", _digest(graph_to_dict(g)), {"n": n, "k": k})
    expected = {tag: n for tag in ("original", "a", "b", "c", "d", "e")}
    return b.finish(3 * n + k, source, g, expected)


def _treegadget_source(out: ReductionOutput) -> Graph:
    if out.source.name != "treegadget":
        raise ParameterError(f"expected a treegadget reduction, got {out.source.name}")
    return out.instance


def treegadget_labeling_from_ds(out: ReductionOutput, s: Iterable[int]) -> RomanLabeling:
    """2 on every b_i and on v_i for i in s, 1 on e_i for i outside s."""
    g = _treegadget_source(out)
    if g.n < 2:
        raise ParameterError("the gadget labeling needs a source graph with at least two vertices")
    s = sorted(set(s))
    missing = first_undominated(g, s)
    if missing is not None:
        raise NotDominating(f"{s} does not dominate vertex {missing} of the source graph")
    twos = out.tagged("b") + [out.vertex("original", i + 1) for i in s]
    ones = [out.vertex("e", i + 1) for i in range(g.n) if i not in s]
    f = RomanLabeling.from_two_set(out.graph.n, twos, ones)
    return _certified(out, f, Mode.GRD, 3 * g.n + len(s))


def ds_from_grdf_treegadget(out: ReductionOutput, f: RomanLabeling) -> FrozenSet[int]:
    """
    Source vertices whose gadget pays for their domination.

    That is i with f(v_i) = 2, plus i with f(v_i) = 1 or with no label-2 original
    neighbour. Every such gadget weighs at least 4 and every other gadget at least 3,
    so the set has at most budget - 3n vertices; for labelings of the forward shape
    it is exactly {i : f(v_i) = 2}.
    """
    g = _treegadget_source(out)
    _require_within(out, f)
    label = [f.values[out.vertex("original", i + 1)] for i in range(g.n)]
    twos = frozenset(i for i in range(g.n) if label[i] == 2)
    s = set(twos)
    for i in range(g.n):
        if label[i] == 1 or (label[i] == 0 and not g.neighbors(i) & twos):
            s.add(i)
    s = frozenset(s)
    missing = first_undominated(g, s)
    if missing is not None:
        raise ExtractionFailed(f"extracted set {sorted(s)} misses source vertex {missing}")
    if len(s) > out.budget - 3 * g.n:
        raise ExtractionFailed(f"extracted set {sorted(s)} is larger than {out.budget - 3 * g.n}")
    return s
