"""
Roman Domination Engine
Exact solvers: gamma_R, gamma_gR, the domination number and Exact l-Cover

The Roman solvers enumerate only the label-2 set d2. Given d2, the cheapest
completion labels exactly the d2-uncovered vertices with 1, so a labeling is
determined by d2 and the 3^n labelings collapse to 2^n set choices, searched by
increasing |d2| (then lexicographically) with the bound 2|d2| < best.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import DidNotFinish, InvalidCover, ParameterError
from .graph import Graph, bits, mask_of
from .labeling import Mode, RomanLabeling, check, first_undominated

log = logging.getLogger(__name__)

# leaves between two deadline checks
_CLOCK_STRIDE = 4096


class Objective(str, Enum):
    RD = "rd"
    GRD = "grd"
    DS = "ds"


@dataclass
class SolveStats:
    candidates: int = 0
    wall_time_s: float = 0.0
    levels: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {"candidates": self.candidates, "wall_time_s": round(self.wall_time_s, 6), "levels": self.levels}


@dataclass
class SolveResult:
    """Optimum and a witness (RomanLabeling for RD/GRD, vertex set for DS)."""
    objective: Objective
    optimum: int
    witness: Union[RomanLabeling, FrozenSet[int]]
    stats: SolveStats = field(default_factory=SolveStats)

    def to_dict(self) -> Dict[str, Any]:
        if isinstance(self.witness, RomanLabeling):
            witness: Any = list(self.witness.values)
        else:
            witness = sorted(self.witness)
        return {
            "objective": self.objective.value,
            "optimum": self.optimum,
            "witness": witness,
            "stats": self.stats.to_dict(),
        }


@dataclass
class DecisionResult:
    answer: bool
    budget: int
    witness: Optional[RomanLabeling] = None
    stats: SolveStats = field(default_factory=SolveStats)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "answer": "yes" if self.answer else "no",
            "budget": self.budget,
            "witness": list(self.witness.values) if self.witness else None,
            "stats": self.stats.to_dict(),
        }


# =============================================================================
# Exact l-Cover instances
# =============================================================================

@dataclass(frozen=True)
class SetCoverInstance:
    """Universe {0, ..., ell*q - 1} and a collection of ell-element subsets."""
    ell: int
    q: int
    sets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.ell < 1 or self.q < 0:
            raise ParameterError(f"need ell >= 1 and q >= 0, got ell={self.ell}, q={self.q}")
        size = self.universe_size
        for index, subset in enumerate(self.sets):
            if len(set(subset)) != self.ell or len(subset) != self.ell:
                raise ParameterError(f"set {index} {subset} does not have {self.ell} distinct elements")
            if any(not 0 <= x < size for x in subset):
                raise ParameterError(f"set {index} {subset} leaves the universe [0, {size})")

    @classmethod
    def create(cls, ell: int, q: int, sets: Iterable[Iterable[int]]) -> "SetCoverInstance":
        return cls(ell, q, tuple(tuple(sorted(int(x) for x in s)) for s in sets))

    @property
    def universe_size(self) -> int:
        return self.ell * self.q

    @property
    def t(self) -> int:
        return len(self.sets)

    def to_dict(self) -> Dict[str, Any]:
        return {"ell": self.ell, "q": self.q, "sets": [list(s) for s in self.sets]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SetCoverInstance":
        try:
            return cls.create(int(data["ell"]), int(data["q"]), data["sets"])
        except (KeyError, TypeError, ValueError) as e:
            raise ParameterError(f"malformed set-cover JSON: {e}") from e


@dataclass(frozen=True)
class CoverResult:
    answer: bool
    cover: Optional[Tuple[int, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"answer": "yes" if self.answer else "no", "cover": list(self.cover) if self.cover else None}


def is_exact_cover(inst: SetCoverInstance, cover: Sequence[int]) -> bool:
    covered = 0
    for index in cover:
        if not 0 <= index < inst.t:
            return False
        mask = mask_of(inst.sets[index])
        if covered & mask:
            return False
        covered |= mask
    return covered == (1 << inst.universe_size) - 1


def require_exact_cover(inst: SetCoverInstance, cover: Sequence[int]) -> Tuple[int, ...]:
    if not is_exact_cover(inst, cover):
        raise InvalidCover(f"{sorted(cover)} is not an exact cover of the {inst.universe_size}-element universe")
    return tuple(sorted(cover))


def solve_exact_cover(inst: SetCoverInstance) -> CoverResult:
    """Fail-first backtracking on the uncovered element with the fewest usable sets."""
    full = (1 << inst.universe_size) - 1
    masks: Dict[int, int] = {}
    for index, subset in enumerate(inst.sets):
        masks.setdefault(mask_of(subset), index)  # duplicate sets keep their first index
    by_element: List[List[Tuple[int, int]]] = [[] for _ in range(inst.universe_size)]
    for mask, index in sorted(masks.items(), key=lambda item: item[1]):
        for x in bits(mask):
            by_element[x].append((index, mask))

    def backtrack(covered: int, chosen: List[int]) -> Optional[List[int]]:
        if covered == full:
            return chosen
        best_options = None
        for x in bits(full & ~covered):
            options = [(i, m) for i, m in by_element[x] if not m & covered]
            if best_options is None or len(options) < len(best_options):
                best_options = options
                if not options:
                    return None
        for index, mask in best_options:
            found = backtrack(covered | mask, chosen + [index])
            if found is not None:
                return found
        return None

    cover = backtrack(0, [])
    if cover is None:
        return CoverResult(False)
    return CoverResult(True, tuple(sorted(cover)))


# =============================================================================
# Roman kernel
# =============================================================================

def _forced_mask(g: Graph, d2: int, nbr: int, co: int, mode: Mode) -> int:
    """
    Vertices outside d2 that d2 leaves uncovered.

    nbr = union of N(v) over d2 (vertices with a label-2 neighbour);
    co  = intersection of N[v] over d2 (vertices u with d2 inside N[u], i.e. no label-2
          vertex outside N[u]).
    """
    covered = nbr if mode == Mode.RD else nbr & ~co
    return g.full_mask & ~(covered | d2)


def cost_given_two_set(g: Graph, d2: Iterable[int], mode: Mode) -> Tuple[int, FrozenSet[int]]:
    """Weight of the labeling 2 on d2, 1 on the d2-uncovered rest, and that forced-one set."""
    mode = Mode(mode)
    d2 = list(d2)
    nbr, co = 0, g.full_mask
    for v in d2:
        nbr |= g.rows[v]
        co &= g.closed_row(v)
    forced = _forced_mask(g, mask_of(d2), nbr, co, mode)
    return 2 * len(set(d2)) + forced.bit_count(), frozenset(bits(forced))


class TwoSetSearch:
    """
    Lexicographic scan of the label-2 sets of one cardinality.

    `scan` keeps the cheapest set whose cost is below `bound` and stops as soon as a
    cost <= `stop_cost` is seen; ties keep the first set met in lexicographic order.
    """

    def __init__(self, g: Graph, mode: Mode, deadline: Optional[float] = None):
        self.g = g
        self.mode = Mode(mode)
        self.deadline = deadline
        self.candidates = 0
        self.cheapest: Optional[int] = None  # least cost of any leaf evaluated
        self.closed = tuple(g.closed_row(v) for v in range(g.n))

    def _tick(self):
        self.candidates += 1
        if self.deadline is not None and self.candidates % _CLOCK_STRIDE == 0 and time.monotonic() > self.deadline:
            raise DidNotFinish(f"time budget exhausted after {self.candidates} candidates")

    def scan(self, size: int, bound: int, stop_cost: int,
             first: Optional[int] = None) -> Optional[Tuple[int, Tuple[int, ...]]]:
        g, mode, rows, closed = self.g, self.mode, self.g.rows, self.closed
        n, full = g.n, g.full_mask
        best: List[Any] = [bound, None]

        def leaf(d2: int, nbr: int, co: int, chosen: List[int]) -> bool:
            self._tick()
            covered = nbr if mode == Mode.RD else nbr & ~co
            cost = 2 * size + (full & ~(covered | d2)).bit_count()
            if self.cheapest is None or cost < self.cheapest:
                self.cheapest = cost
            if cost < best[0]:
                best[0], best[1] = cost, tuple(chosen)
                return cost <= stop_cost
            return False

        def descend(start: int, depth: int, d2: int, nbr: int, co: int, chosen: List[int]) -> bool:
            if depth == size:
                return leaf(d2, nbr, co, chosen)
            stop = n - (size - depth) + 1
            for v in range(start, stop):
                chosen.append(v)
                done = descend(v + 1, depth + 1, d2 | (1 << v), nbr | rows[v], co & closed[v], chosen)
                chosen.pop()
                if done:
                    return True
            return False

        if size == 0:
            leaf(0, 0, full, [])
        elif first is not None:
            descend(first + 1, 1, 1 << first, rows[first], closed[first], [first])
        else:
            descend(0, 0, 0, 0, full, [])
        return None if best[1] is None else (best[0], best[1])


def _scan_block(g: Graph, mode_value: str, size: int, bound: int, stop_cost: int,
                first: int, deadline: Optional[float]):
    """Process-pool entry point: one first-vertex block of a cardinality level."""
    search = TwoSetSearch(g, Mode(mode_value), deadline)
    found = search.scan(size, bound, stop_cost, first=first)
    return found, search.candidates, search.cheapest


def _scan_level(search: TwoSetSearch, size: int, bound: int, stop_cost: int,
                pool: Optional[ProcessPoolExecutor]):
    if pool is None or size < 2:
        return search.scan(size, bound, stop_cost)
    firsts = range(0, search.g.n - size + 1)
    futures = [pool.submit(_scan_block, search.g, search.mode.value, size, bound, stop_cost,
                           first, search.deadline) for first in firsts]
    found_blocks = []
    for future in futures:
        found, candidates, cheapest = future.result()
        search.candidates += candidates
        if cheapest is not None and (search.cheapest is None or cheapest < search.cheapest):
            search.cheapest = cheapest
        if found is not None:
            found_blocks.append(found)
    if not found_blocks:
        return None
    if stop_cost >= bound - 1:
        # decision scan: the first block (in lexicographic order) that succeeded
        return found_blocks[0]
    return min(found_blocks)


def _deadline(time_budget_s: Optional[float]) -> Optional[float]:
    return time.monotonic() + time_budget_s if time_budget_s else None


def solve_exact(g: Graph, mode: Mode, time_budget_s: Optional[float] = None, jobs: int = 1) -> SolveResult:
    """gamma_R (mode RD) or gamma_gR (mode GRD) with a witness labeling."""
    mode = Mode(mode)
    started = time.monotonic()
    stats = SolveStats()
    objective = Objective(mode.value)
    if g.n == 0:
        return SolveResult(objective, 0, RomanLabeling((), 0), stats)

    search = TwoSetSearch(g, mode, _deadline(time_budget_s))
    best_cost, best_set = g.n + 1, None
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for size in range(0, g.n + 1):
            if 2 * size >= best_cost:
                log.debug(f"✂️ level {size} pruned (2*{size} >= {best_cost})")
                break
            stats.levels += 1
            found = _scan_level(search, size, best_cost, 2 * size, pool)
            if found is not None:
                best_cost, best_set = found
            log.info(f"🔍 {mode.value} level |d2|={size}: best so far {best_cost} "
                     f"({search.candidates} candidates)")
    except DidNotFinish as e:
        e.best_so_far = best_cost if best_set is not None else None
        raise
    finally:
        if pool is not None:
            pool.shutdown()

    weight, forced = cost_given_two_set(g, best_set, mode)
    witness = RomanLabeling.from_two_set(g.n, best_set, forced)
    stats.candidates = search.candidates
    stats.wall_time_s = time.monotonic() - started
    assert weight == best_cost and check(g, witness, mode).valid
    log.info(f"✅ gamma_{'gR' if mode == Mode.GRD else 'R'} = {best_cost} on {g!r}")
    return SolveResult(objective, best_cost, witness, stats)


def decide(g: Graph, mode: Mode, budget: int, time_budget_s: Optional[float] = None,
           jobs: int = 1) -> DecisionResult:
    """
    Is there a labeling of weight <= budget?

    Only |d2| <= budget // 2 is scanned: any labeling within budget has a label-2
    set that small, and its forced-one completion is no heavier.
    """
    mode = Mode(mode)
    if budget < 0:
        raise ParameterError(f"budget must be non-negative, got {budget}")
    started = time.monotonic()
    stats = SolveStats()
    search = TwoSetSearch(g, mode, _deadline(time_budget_s))
    found = None
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for size in range(0, min(g.n, budget // 2) + 1):
            stats.levels += 1
            found = _scan_level(search, size, budget + 1, budget, pool)
            if found is not None:
                break
    except DidNotFinish as e:
        e.best_so_far = search.cheapest
        raise
    finally:
        if pool is not None:
            pool.shutdown()
    stats.candidates = search.candidates
    stats.wall_time_s = time.monotonic() - started
    if found is None:
        log.info(f"❌ no {mode.value} labeling of weight <= {budget} on {g!r} ({stats.candidates} candidates)")
        return DecisionResult(False, budget, None, stats)
    _, d2 = found
    _, forced = cost_given_two_set(g, d2, mode)
    witness = RomanLabeling.from_two_set(g.n, d2, forced)
    log.info(f"✅ {mode.value} labeling of weight {witness.weight} <= {budget} found on {g!r}")
    return DecisionResult(True, budget, witness, stats)


# =============================================================================
# Domination number
# =============================================================================

def _greedy_dominating_set(g: Graph) -> List[int]:
    undominated = g.full_mask
    chosen: List[int] = []
    while undominated:
        v = max(range(g.n), key=lambda u: ((g.closed_row(u) & undominated).bit_count(), -u))
        chosen.append(v)
        undominated &= ~g.closed_row(v)
    return chosen


def solve_ds(g: Graph) -> SolveResult:
    """Minimum dominating set: greedy upper bound, then increasing-cardinality enumeration below it."""
    started = time.monotonic()
    stats = SolveStats()
    greedy = _greedy_dominating_set(g)
    best: FrozenSet[int] = frozenset(greedy)
    closed = [g.closed_row(v) for v in range(g.n)]
    for size in range(0, len(greedy)):
        stats.levels += 1
        hit = None
        for combo in combinations(range(g.n), size):
            stats.candidates += 1
            dominated = 0
            for v in combo:
                dominated |= closed[v]
            if dominated == g.full_mask:
                hit = combo
                break
        if hit is not None:
            best = frozenset(hit)
            break
    assert first_undominated(g, best) is None
    stats.wall_time_s = time.monotonic() - started
    log.info(f"✅ gamma = {len(best)} on {g!r} (greedy bound {len(greedy)})")
    return SolveResult(Objective.DS, len(best), best, stats)


# =============================================================================
# Brute-force oracle
# =============================================================================

def brute_force_optimum(g: Graph, mode: Mode, max_n: int = 12) -> int:
    """
    Minimum weight over all 3^n labelings that pass the mode's condition.

    Independent of the d2 kernel: every labeling is materialised as a row of a numpy
    array and checked with matrix products.
    """
    mode = Mode(mode)
    if g.n == 0:
        return 0
    if g.n > max_n:
        raise ParameterError(f"brute force is limited to n <= {max_n}, got {g.n}")
    n = g.n
    labels = np.array(np.unravel_index(np.arange(3 ** n), (3,) * n), dtype=np.int8).T
    adjacency = np.zeros((n, n), dtype=np.int32)
    for u, v in g.edges():
        adjacency[u, v] = adjacency[v, u] = 1
    twos = (labels == 2).astype(np.int32)
    zeros = labels == 0
    valid = ~(zeros & (twos @ adjacency == 0)).any(axis=1)
    if mode == Mode.GRD:
        outside = twos.sum(axis=1, keepdims=True) - twos @ (adjacency + np.eye(n, dtype=np.int32))
        valid &= ~(zeros & (outside == 0)).any(axis=1)
    weights = labels.sum(axis=1, dtype=np.int32)
    return int(weights[valid].min())
