"""
Roman Domination Engine
Cograph recognition (cotrees) and gamma_R / gamma_gR from cotree annotations
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

from .exceptions import GraphFormatError, NotACograph
from .graph import ComponentProfile, Graph, bits
from .labeling import Mode, RomanLabeling, check_grdf
from .solver import decide

log = logging.getLogger(__name__)


class NodeKind(str, Enum):
    LEAF = "leaf"
    UNION = "union"
    JOIN = "join"


@dataclass(frozen=True)
class NodeAnnotation:
    """Per-node values; `_co` fields describe the complement of the node's graph."""
    n: int
    max_degree: int
    min_degree: int
    gamma_r: int
    gamma_r_co: int
    profile: ComponentProfile
    profile_co: ComponentProfile
    gamma_gr: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "gamma_r": self.gamma_r,
            "gamma_r_co": self.gamma_r_co,
            "profile": self.profile.to_dict(),
            "profile_co": self.profile_co.to_dict(),
            "gamma_gr": self.gamma_gr,
        }


@dataclass(frozen=True)
class CoTree:
    """A cotree node: a leaf carrying a vertex id, or a union/join node with >= 2 children."""
    kind: NodeKind
    vertex: Optional[int] = None
    children: Tuple["CoTree", ...] = ()
    notes: Optional[NodeAnnotation] = None

    @classmethod
    def leaf(cls, vertex: int) -> "CoTree":
        return cls(NodeKind.LEAF, vertex=vertex)

    def leaves(self) -> List[int]:
        if self.kind == NodeKind.LEAF:
            return [self.vertex]
        out: List[int] = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    def walk(self):
        """Post-order traversal."""
        for child in self.children:
            yield from child.walk()
        yield self


@dataclass(frozen=True)
class CographValues:
    gamma_r: int
    gamma_r_co: int
    gamma_gr: int
    gamma_gr_co: int

    def to_dict(self) -> Dict[str, int]:
        return {
            "gamma_r": self.gamma_r,
            "gamma_r_complement": self.gamma_r_co,
            "gamma_gr": self.gamma_gr,
            "gamma_gr_complement": self.gamma_gr_co,
        }


# =============================================================================
# Recognition
# =============================================================================

def _split(subset: int, row: Callable[[int], int]) -> List[int]:
    """Connected parts of `subset` under the adjacency `row`, ordered by least vertex."""
    parts = []
    unseen = subset
    while unseen:
        part = unseen & -unseen
        frontier = part
        while frontier:
            reach = 0
            for u in bits(frontier):
                reach |= row(u)
            frontier = reach & subset & ~part
            part |= frontier
        unseen &= ~part
        parts.append(part)
    return parts


def build_cotree(g: Graph) -> CoTree:
    """
    Recursive partition: components give a union node, co-components a join node.

    The result is canonical because a component is connected (never a union) and a
    co-component is co-connected (never a join).
    """
    if g.n == 0:
        raise GraphFormatError("the empty graph has no cotree")
    full = g.full_mask
    co_rows = [full & ~g.closed_row(u) for u in range(g.n)]

    def build(subset: int) -> CoTree:
        if subset & (subset - 1) == 0:
            return CoTree.leaf(subset.bit_length() - 1)
        parts = _split(subset, lambda u: g.rows[u])
        if len(parts) > 1:
            return CoTree(NodeKind.UNION, children=tuple(build(p) for p in parts))
        parts = _split(subset, lambda u: co_rows[u])
        if len(parts) > 1:
            return CoTree(NodeKind.JOIN, children=tuple(build(p) for p in parts))
        raise NotACograph(f"vertices {list(bits(subset))} induce a connected and co-connected "
                          f"subgraph, so the graph has an induced P4")

    tree = build(full)
    log.debug(f"🌳 cotree built for {g!r}")
    return tree


def expand(tree: CoTree) -> Graph:
    """The graph a cotree encodes; leaves must carry the ids 0..n-1."""
    ids = sorted(tree.leaves())
    if ids != list(range(len(ids))):
        raise GraphFormatError(f"cotree leaves {ids} are not the ids 0..{len(ids) - 1}")
    rows = [0] * len(ids)
    for node in tree.walk():
        if node.kind != NodeKind.JOIN:
            continue
        groups = [child.leaves() for child in node.children]
        for i, group in enumerate(groups):
            others = 0
            for j, other in enumerate(groups):
                if j != i:
                    for v in other:
                        others |= 1 << v
            for u in group:
                rows[u] |= others
    return Graph(len(ids), tuple(rows))


# =============================================================================
# Annotation
# =============================================================================

def gamma_r_connected(n: int, max_degree: int) -> int:
    """gamma_R of a connected cograph from its order and maximum degree."""
    if n == 1:
        return 1
    if max_degree == n - 1:
        return 2
    if max_degree == n - 2:
        return 3
    return 4


def union_rule(profile: ComponentProfile, gamma_r: int, n: int,
               parts: List[NodeAnnotation]) -> int:
    """
    gamma_gR of a disconnected graph from its components.

    A GRDF puts 2s in at least two components (it is then an RDF of each), in
    exactly one component H (a GRDF of H, ones elsewhere) or nowhere (all ones).
    `parts` describes the components; only the order and gamma_gR of the single
    non-trivial one are consulted.
    """
    assert profile.k1 + profile.k2 + profile.k3 >= 2, "union rule needs two components"
    if profile.nontrivial >= 2:
        return gamma_r
    if profile.nontrivial == 0:
        return n
    big = next(part for part in parts if part.n >= 2)
    return min(gamma_r + 1, big.gamma_gr + n - big.n)


def _complement_part(note: NodeAnnotation) -> NodeAnnotation:
    # the complement of a co-component is a component of the join's complement;
    # it shares gamma_gR with the child itself
    return NodeAnnotation(note.n, note.n - 1 - note.min_degree, note.n - 1 - note.max_degree,
                          note.gamma_r_co, note.gamma_r, note.profile_co, note.profile, note.gamma_gr)


def _annotate_node(kind: NodeKind, notes: List[NodeAnnotation]) -> NodeAnnotation:
    n = sum(note.n for note in notes)
    if kind == NodeKind.UNION:
        max_degree = max(note.max_degree for note in notes)
        min_degree = min(note.min_degree for note in notes)
        profile = ComponentProfile()
        for note in notes:
            profile = profile + note.profile
        gamma_r = sum(note.gamma_r for note in notes)
        gamma_gr = union_rule(profile, gamma_r, n, notes)
        return NodeAnnotation(n, max_degree, min_degree, gamma_r,
                              gamma_r_connected(n, n - 1 - min_degree),
                              profile, ComponentProfile.of_order(n), gamma_gr)

    max_degree = max(note.max_degree + n - note.n for note in notes)
    min_degree = min(note.min_degree + n - note.n for note in notes)
    profile_co = ComponentProfile()
    for note in notes:
        profile_co = profile_co + note.profile_co
    gamma_r_co = sum(note.gamma_r_co for note in notes)
    gamma_gr = union_rule(profile_co, gamma_r_co, n, [_complement_part(note) for note in notes])
    return NodeAnnotation(n, max_degree, min_degree, gamma_r_connected(n, max_degree), gamma_r_co,
                          ComponentProfile.of_order(n), profile_co, gamma_gr)


_LEAF_NOTE = NodeAnnotation(1, 0, 0, 1, 1, ComponentProfile(1, 0, 0), ComponentProfile(1, 0, 0), 1)


def annotate(tree: CoTree) -> CoTree:
    """Bottom-up fold attaching a NodeAnnotation to every node; leaves must carry the ids 0..n-1 once each."""
    ids = sorted(tree.leaves())
    if ids != list(range(len(ids))):
        raise GraphFormatError(f"cotree leaves {ids} are not the ids 0..{len(ids) - 1} each used once")
    return _annotate(tree)


def _annotate(tree: CoTree) -> CoTree:
    if tree.kind == NodeKind.LEAF:
        if tree.children:
            raise GraphFormatError("a cotree leaf cannot have children")
        return replace(tree, notes=_LEAF_NOTE)
    if len(tree.children) < 2:
        raise GraphFormatError(f"{tree.kind.value} node needs at least two children")
    if any(child.kind == tree.kind for child in tree.children):
        raise GraphFormatError(f"{tree.kind.value} node has a {tree.kind.value} child; cotree is not canonical")
    children = tuple(_annotate(child) for child in tree.children)
    return replace(tree, children=children, notes=_annotate_node(tree.kind, [c.notes for c in children]))


# =============================================================================
# Entry points
# =============================================================================

def cograph_values(g: Graph) -> CographValues:
    if g.n == 0:
        return CographValues(0, 0, 0, 0)
    root = annotate(build_cotree(g)).notes
    return CographValues(root.gamma_r, root.gamma_r_co, root.gamma_gr, root.gamma_gr)


def gamma_gr_cograph(g: Graph, witness: bool = False,
                     witness_cap: int = 24) -> Tuple[int, Optional[RomanLabeling]]:
    """
    gamma_gR of a cograph read off the annotated cotree.

    With `witness`, a labeling of that weight is found by bounded search and
    certified, provided n <= witness_cap.
    """
    if g.n == 0:
        return 0, (RomanLabeling((), 0) if witness else None)
    value = annotate(build_cotree(g)).notes.gamma_gr
    if not witness or g.n > witness_cap:
        return value, None
    found = decide(g, Mode.GRD, value).witness
    if found is None or not check_grdf(g, found):
        raise NotACograph(f"cotree value {value} has no matching GRDF on {g!r}")
    log.info(f"✅ gamma_gR = {value} on cograph {g!r} (witness certified)")
    return value, found


# =============================================================================
# JSON
# =============================================================================

def cotree_to_dict(tree: CoTree, annotations: bool = True) -> Dict[str, Any]:
    if tree.kind == NodeKind.LEAF:
        data: Dict[str, Any] = {"kind": tree.kind.value, "vertex": tree.vertex}
    else:
        data = {"kind": tree.kind.value,
                "children": [cotree_to_dict(child, annotations) for child in tree.children]}
    if annotations and tree.notes is not None:
        data["annotations"] = tree.notes.to_dict()
    return data


def cotree_from_dict(data: Dict[str, Any]) -> CoTree:
    """Structure only; annotations in the input are ignored and recomputed by `annotate`."""
    try:
        kind = NodeKind(data["kind"])
        if kind == NodeKind.LEAF:
            return CoTree.leaf(int(data["vertex"]))
        return CoTree(kind, children=tuple(cotree_from_dict(child) for child in data["children"]))
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f"malformed cotree JSON: {e}") from e
