"""
Roman Domination Engine
Roman labelings and the RDF / GRDF validity checks
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple, Union

from .exceptions import LabelingMismatch
from .graph import Graph, bits, mask_of

log = logging.getLogger(__name__)


class Mode(str, Enum):
    """Which domination condition a labeling must satisfy."""
    RD = "rd"
    GRD = "grd"


class Side(str, Enum):
    """Where a 0-labelled vertex is missing its label-2 vertex."""
    GRAPH = "graph"
    COMPLEMENT = "complement"


@dataclass(frozen=True)
class RomanLabeling:
    """A vertex -> {0, 1, 2} assignment for a graph with `graph_n` vertices."""
    values: Tuple[int, ...]
    graph_n: int

    def __post_init__(self):
        if len(self.values) != self.graph_n:
            raise LabelingMismatch(f"labeling has {len(self.values)} values, graph has {self.graph_n} vertices")
        bad = [i for i, value in enumerate(self.values) if value not in (0, 1, 2)]
        if bad:
            raise LabelingMismatch(f"label of vertex {bad[0]} is {self.values[bad[0]]}, expected 0, 1 or 2")

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "RomanLabeling":
        return cls(tuple(int(v) for v in values), len(values))

    @classmethod
    def all_ones(cls, n: int) -> "RomanLabeling":
        return cls((1,) * n, n)

    @classmethod
    def from_two_set(cls, n: int, twos: Iterable[int], ones: Iterable[int] = ()) -> "RomanLabeling":
        values = [0] * n
        for v in ones:
            values[v] = 1
        for v in twos:
            values[v] = 2
        return cls(tuple(values), n)

    @property
    def weight(self) -> int:
        return sum(self.values)

    @property
    def two_mask(self) -> int:
        return mask_of(v for v, value in enumerate(self.values) if value == 2)

    def vertices_with(self, value: int) -> frozenset:
        return frozenset(v for v, label in enumerate(self.values) if label == value)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.graph_n, "labels": list(self.values)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RomanLabeling":
        try:
            values = tuple(int(v) for v in data["labels"])
            n = int(data.get("n", len(values)))
        except (KeyError, TypeError, ValueError) as e:
            raise LabelingMismatch(f"malformed labeling JSON: {e}") from e
        # weight is always recomputed from the labels, never read from the file
        return cls(values, n)


@dataclass(frozen=True)
class CheckVerdict:
    """Outcome of a validity check; `vertex` is the least-id violation when invalid."""
    mode: Mode
    valid: bool
    vertex: Optional[int] = None
    side: Optional[Side] = None

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        kind = "RDF" if self.mode == Mode.RD else "GRDF"
        if self.valid:
            return f"valid {kind}"
        return f"invalid {kind}: vertex {self.vertex} uncovered on the {self.side.value} side"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "valid": self.valid,
            "vertex": self.vertex,
            "side": self.side.value if self.side else None,
        }


def weight(f: RomanLabeling) -> int:
    return f.weight


def _require_length(g: Graph, f: RomanLabeling) -> None:
    if f.graph_n != g.n:
        raise LabelingMismatch(f"labeling is for {f.graph_n} vertices, graph has {g.n}")


def check_rdf(g: Graph, f: RomanLabeling) -> CheckVerdict:
    """Every 0-labelled vertex needs a label-2 neighbour."""
    _require_length(g, f)
    twos = f.two_mask
    for u, value in enumerate(f.values):
        if value == 0 and not g.rows[u] & twos:
            return CheckVerdict(Mode.RD, False, u, Side.GRAPH)
    return CheckVerdict(Mode.RD, True)


def check_grdf(g: Graph, f: RomanLabeling) -> CheckVerdict:
    """
    Every 0-labelled vertex needs a label-2 vertex in N(u) and another outside N[u].

    The complement side is answered from the 2-count outside the closed row,
    so the complement graph is never built.
    """
    _require_length(g, f)
    twos = f.two_mask
    total_twos = twos.bit_count()
    for u, value in enumerate(f.values):
        if value != 0:
            continue
        if not g.rows[u] & twos:
            return CheckVerdict(Mode.GRD, False, u, Side.GRAPH)
        if total_twos - (twos & g.closed_row(u)).bit_count() <= 0:
            return CheckVerdict(Mode.GRD, False, u, Side.COMPLEMENT)
    return CheckVerdict(Mode.GRD, True)


def check(g: Graph, f: RomanLabeling, mode: Mode) -> CheckVerdict:
    return check_grdf(g, f) if Mode(mode) == Mode.GRD else check_rdf(g, f)


def first_undominated(g: Graph, s: Iterable[int]) -> Optional[int]:
    """Least vertex neither in `s` nor adjacent to it, or None when `s` dominates g."""
    dominated = 0
    for v in s:
        dominated |= g.closed_row(v)
    missing = g.full_mask & ~dominated
    return next(bits(missing), None)


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    return first_undominated(g, s) is None


def load_labeling(path: Union[str, Path]) -> RomanLabeling:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise LabelingMismatch(f"invalid JSON in {path}: {e}") from e
    return RomanLabeling.from_dict(data)


def save_labeling(f: RomanLabeling, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(f.to_dict()))
    log.info(f"💾 Wrote labeling of weight {f.weight} to {path}")
