"""
Roman Domination Engine
Lemma Suite - reproducible checks of the reductions and the cograph rules

Each check is a named action; the suite dispatches them through an action map,
runs them concurrently on an executor and collects one LemmaResult per row.
A failing check never aborts the suite: its exception becomes a failed row.
"""

import asyncio
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from datetime import datetime
from enum import Enum
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd

from . import catalogue
from .cograph import annotate, build_cotree, gamma_gr_cograph, gamma_r_connected
from .config import Settings, get_settings
from .generators import gen_bipartite, gen_cograph, gen_erdos, gen_exact_cover, spawn_seeds
from .graph import (complement, complete_graph, cycle_graph, degree_stats, is_bipartite,
                    is_chordal_bipartite, is_connected, path_graph)
from .labeling import Mode, check_rdf, is_dominating_set
from .reductions import (classF_canonical_rdf, classF_structured_optimum, classG_canonical_grdf,
                         classG_canonical_rdf, cover_from_grdf_split, ds3reg_to_classF,
                         ds_from_grdf_classF, ds_from_grdf_treegadget, ds_to_treegadget,
                         split_labeling_from_cover, treegadget_labeling_from_ds, x3c_cover_from_x4c,
                         x3c_to_split, x3c_to_x4c, x4c_cover_from_x3c, x4c_to_classG)
from .solver import SetCoverInstance, brute_force_optimum, decide, solve_ds, solve_exact, solve_exact_cover

log = logging.getLogger(__name__)


class Scale(str, Enum):
    """How large the sweeps are: `desk` is the full reproduction, `smoke` a quick pass."""
    DESK = "desk"
    SMOKE = "smoke"


# sweep sizes per scale
SWEEPS = {
    Scale.DESK: {"oracle": 200, "cographs": 200, "symmetry": 100, "bipartite": 20, "split_random": 6, "x4c_t": 4},
    Scale.SMOKE: {"oracle": 20, "cographs": 25, "symmetry": 10, "bipartite": 5, "split_random": 1, "x4c_t": 2},
}


CHECK_TITLES = {
    "oracle-agreement": "exact solver vs 3^n enumeration",
    "f1": "classF gamma_R",
    "f3": "classF GRD vs DS",
    "one2-f2": "classF structured optimum",
    "split1": "split GRD vs X3C",
    "chordal1": "tree gadget GRD vs DS",
    "graphclass-preserv": "tree gadget class preservation",
    "g1": "classG gamma_R",
    "grd-conclude": "classG gamma_gR",
    "x4cproof": "X3C vs X4C",
    "cograph-oracle": "cotree values vs exact solver",
    "symmetry": "gamma_gR complement symmetry",
}


class LemmaResult:
    """One row of the suite table."""

    def __init__(self, name: str, success: bool, params: str = "", expected: str = "",
                 computed: str = "", error: Optional[str] = None, seconds: float = 0.0):
        self.name = name
        self.success = success
        self.params = params
        self.expected = expected
        self.computed = computed
        self.error = error
        self.seconds = seconds
        self.timestamp = datetime.now().isoformat()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lemma": self.name,
            "status": "pass" if self.success else "FAIL",
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "error": self.error,
            "seconds": round(self.seconds, 3),
            "timestamp": self.timestamp,
        }


Outcome = Tuple[bool, str, str, str]  # success, params, expected, computed


class LemmaSuite:
    """
    Runs the lemma checks. Every check returns (success, params, expected, computed)
    and is reached through `_action_map`.
    """

    def __init__(self, scale: Scale = Scale.DESK, settings: Optional[Settings] = None):
        self.scale = Scale(scale)
        self.settings = settings or get_settings()
        self.sweeps = SWEEPS[self.scale]

        # keyed by lemma name; CHECK_TITLES says what each row checks
        self._action_map: Dict[str, Callable[[], Outcome]] = {
            "oracle-agreement": self.check_oracle_agreement,
            "f1": self.check_classF_rd_value,
            "f3": self.check_classF_ds_equivalence,
            "one2-f2": self.check_classF_structured_optimum,
            "split1": self.check_split_equivalence,
            "chordal1": self.check_treegadget_equivalence,
            "graphclass-preserv": self.check_treegadget_class_preservation,
            "g1": self.check_classG_rd_value,
            "grd-conclude": self.check_classG_grd_value,
            "x4cproof": self.check_x4c_equivalence,
            "cograph-oracle": self.check_cograph_oracle,
            "symmetry": self.check_complement_symmetry,
        }
        log.info(f"🧪 Lemma suite ready: {len(self._action_map)} checks at scale '{self.scale.value}'")

    @property
    def names(self) -> List[str]:
        return list(self._action_map)

    # --- dispatch -----------------------------------------------------------

    def run_one(self, name: str) -> LemmaResult:
        if name not in self._action_map:
            return LemmaResult(name, False, error=f"unknown check: {name}")
        started = time.monotonic()
        try:
            success, params, expected, computed = self._action_map[name]()
            params = f"{CHECK_TITLES[name]}: {params}"
            result = LemmaResult(name, success, params, expected, computed, seconds=time.monotonic() - started)
            if success:
                log.info(f"   ✅ {name} passed ({result.seconds:.2f}s)")
            else:
                log.error(f"   ❌ {name}: expected {expected}, computed {computed}")
            return result
        except Exception as e:
            log.error(f"   ❌ {name} failed: {e}")
            return LemmaResult(name, False, error=f"{type(e).__name__}: {e}", seconds=time.monotonic() - started)

    async def run(self, names: Optional[List[str]] = None, jobs: int = 1) -> List[LemmaResult]:
        """Run the selected checks on `jobs` workers; results come back in request order."""
        names = names or self.names
        loop = asyncio.get_running_loop()
        executor: Executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else ThreadPoolExecutor(max_workers=1)
        log.info(f"🔄 Running {len(names)} checks on {jobs} worker(s)")
        try:
            futures = [loop.run_in_executor(executor, _run_check, name, self.scale.value, self.settings)
                       for name in names]
            return list(await asyncio.gather(*futures))
        finally:
            executor.shutdown()

    def run_all(self, names: Optional[List[str]] = None, jobs: int = 1) -> List[LemmaResult]:
        return asyncio.run(self.run(names, jobs))

    # --- checks -------------------------------------------------------------

    def check_oracle_agreement(self) -> Outcome:
        count = self.sweeps["oracle"]
        mismatches = []
        for seed in spawn_seeds(self.settings.seed, count):
            g = gen_erdos(1 + seed % 10, 0.5, seed)
            for mode in (Mode.RD, Mode.GRD):
                exact, brute = solve_exact(g, mode).optimum, brute_force_optimum(g, mode)
                if exact != brute:
                    mismatches.append(f"seed={seed} {mode.value}: {exact} != {brute}")
        return not mismatches, f"{count} graphs, n<=10", "0 mismatches", f"{len(mismatches)} mismatches"

    def check_classF_rd_value(self) -> Outcome:
        values = {}
        for label, g in catalogue.cubic_sources().items():
            out = ds3reg_to_classF(g, 1)
            classF_canonical_rdf(out)
            values[label] = solve_exact(out.graph, Mode.RD).optimum
        computed = ",".join(f"{k}:{v}" for k, v in values.items())
        return all(v == 4 for v in values.values()), "K4, K3,3, Petersen", "gamma_R=4 each", computed

    def check_classF_ds_equivalence(self) -> Outcome:
        ok, rows = True, []
        for label, g in catalogue.cubic_sources().items():
            gamma = solve_ds(g).optimum
            for k in (gamma - 1, gamma):
                out = ds3reg_to_classF(g, k)
                answer = decide(out.graph, Mode.GRD, out.budget)
                ok &= answer.answer == (gamma <= k)
                if answer.answer:
                    ok &= len(ds_from_grdf_classF(out, answer.witness)) <= k
                rows.append(f"{label}/k={k}:{'yes' if answer.answer else 'no'}")
        return ok, "K4, K3,3, Petersen; k=gamma-1, gamma", "no, yes per graph", " ".join(rows)

    def check_classF_structured_optimum(self) -> Outcome:
        ok, rows = True, []
        for label, g in catalogue.cubic_sources().items():
            out = ds3reg_to_classF(g, 1)
            structured, _ = classF_structured_optimum(out)
            optimum = solve_exact(out.graph, Mode.GRD).optimum
            ok &= structured == optimum == 2 * solve_ds(g).optimum + 2
            rows.append(f"{label}:{structured}/{optimum}")
        return ok, "K4, K3,3, Petersen", "structured = gamma_gR = 2*gamma+2", " ".join(rows)

    def check_split_equivalence(self) -> Outcome:
        instances: List[Tuple[str, SetCoverInstance]] = [("yes", catalogue.SPLIT_YES_X3C), ("no", catalogue.SPLIT_NO_X3C)]
        for seed in spawn_seeds(self.settings.seed + 1, self.sweeps["split_random"]):
            instances.append((f"seed={seed % 1000}", gen_exact_cover(3, 2, 4, seed, planted=bool(seed % 2))))
        ok, rows = True, []
        for label, inst in instances:
            out = x3c_to_split(inst)
            truth = solve_exact_cover(inst).answer
            answer = decide(out.graph, Mode.GRD, out.budget)
            ok &= answer.answer == truth
            if answer.answer:
                cover_from_grdf_split(out, answer.witness)
            if truth:
                split_labeling_from_cover(out, solve_exact_cover(inst).cover)
            rows.append(f"{label}:{'yes' if answer.answer else 'no'}")
        return ok, f"{len(instances)} X3C instances, q=2, t=4", "decide = cover exists", " ".join(rows)

    def check_treegadget_equivalence(self) -> Outcome:
        ok, rows = True, []
        for label, g in (("P3", path_graph(3)), ("C4", cycle_graph(4))):
            ds = solve_ds(g)
            for k in (ds.optimum - 1, ds.optimum):
                out = ds_to_treegadget(g, k)
                answer = decide(out.graph, Mode.GRD, out.budget)
                ok &= answer.answer == (ds.optimum <= k)
                if answer.answer:
                    ok &= is_dominating_set(g, ds_from_grdf_treegadget(out, answer.witness))
                    treegadget_labeling_from_ds(out, ds.witness)
                rows.append(f"{label}/k={k}:{'yes' if answer.answer else 'no'}")
        return ok, "P3, C4; k=gamma-1, gamma", "no, yes per graph", " ".join(rows)

    def check_treegadget_class_preservation(self) -> Outcome:
        count, ok = self.sweeps["bipartite"], True
        for seed in spawn_seeds(self.settings.seed + 2, count):
            g = gen_bipartite(6 + seed % 5, 3, seed)
            out = ds_to_treegadget(g, 1)
            out_degree = degree_stats(out.graph).max_degree
            ok &= is_bipartite(out.graph) is not None
            ok &= out_degree == max(degree_stats(g).max_degree + 2, 3) and out_degree <= 5
        c4 = ds_to_treegadget(cycle_graph(4), 2)
        ok &= is_chordal_bipartite(c4.graph)
        return ok, f"{count} bipartite graphs, max degree <= 3", "bipartite, max degree <= 5", "ok" if ok else "violated"

    def check_classG_rd_value(self) -> Outcome:
        unit = x4c_to_classG(catalogue.GADGET_UNIT_X4C)
        optimum = solve_exact(unit.graph, Mode.RD).optimum
        small = classG_canonical_rdf(unit, catalogue.GADGET_UNIT_COVER)
        larger = classG_canonical_rdf(x4c_to_classG(catalogue.GADGET_YES_X4C), catalogue.GADGET_YES_COVER)
        ok = optimum == 11 and small.weight == 11 and larger.weight == 21
        ok &= bool(check_rdf(unit.graph, small))
        return ok, "l=1 (35 vertices), l=2 (68 vertices)", "gamma_R=11; labelings 11, 21", \
            f"gamma_R={optimum}; labelings {small.weight}, {larger.weight}"

    def check_classG_grd_value(self) -> Outcome:
        unit = x4c_to_classG(catalogue.GADGET_UNIT_X4C)
        optimum = solve_exact(unit.graph, Mode.GRD).optimum
        weights = [
            classG_canonical_grdf(unit, catalogue.GADGET_UNIT_COVER).weight,
            classG_canonical_grdf(x4c_to_classG(catalogue.GADGET_YES_X4C), catalogue.GADGET_YES_COVER).weight,
            classG_canonical_grdf(x4c_to_classG(catalogue.GADGET_NO_X4C)).weight,
        ]
        ok = optimum == 12 and weights == [12, 22, 22]
        return ok, "l=1 yes; l=2 yes and no", "gamma_gR=12; labelings 12, 22, 22", \
            f"gamma_gR={optimum}; labelings {', '.join(map(str, weights))}"

    def check_x4c_equivalence(self) -> Outcome:
        max_t = self.sweeps["x4c_t"]
        checked, disagreements = 0, 0
        for q in (1, 2):
            triples = list(combinations(range(3 * q), 3))
            for t in range(0, max_t + 1):
                for chosen in combinations(triples, t):
                    inst = SetCoverInstance.create(3, q, chosen)
                    lifted = x3c_to_x4c(inst)
                    source, target = solve_exact_cover(inst), solve_exact_cover(lifted)
                    checked += 1
                    if source.answer != target.answer:
                        disagreements += 1
                    elif source.answer:
                        x3c_cover_from_x4c(inst, target.cover)
                        x4c_cover_from_x3c(inst, source.cover)
        return disagreements == 0, f"{checked} X3C instances, q in {{1,2}}, t<={max_t}", \
            "0 disagreements", f"{disagreements} disagreements"

    def check_cograph_oracle(self) -> Outcome:
        count, mismatches = self.sweeps["cographs"], []
        for seed in spawn_seeds(self.settings.seed + 3, count):
            g = gen_cograph(1 + seed % 16, seed)
            root = annotate(build_cotree(g)).notes
            rd, grd = solve_exact(g, Mode.RD).optimum, solve_exact(g, Mode.GRD).optimum
            value, _ = gamma_gr_cograph(g)
            if value != grd or root.gamma_r != rd:
                mismatches.append(seed)
            if is_connected(g) and gamma_r_connected(g.n, degree_stats(g).max_degree) != rd:
                mismatches.append(seed)
        for n in range(1, 17):
            if gamma_gr_cograph(complete_graph(n))[0] != n:
                mismatches.append(f"K{n}")
        return not mismatches, f"{count} cographs n<=16, K_1..K_16", "0 mismatches", f"{len(mismatches)} mismatches"

    def check_complement_symmetry(self) -> Outcome:
        count, mismatches = self.sweeps["symmetry"], 0
        for seed in spawn_seeds(self.settings.seed + 4, count):
            g = gen_erdos(1 + seed % 12, 0.5, seed)
            if solve_exact(g, Mode.GRD).optimum != solve_exact(complement(g), Mode.GRD).optimum:
                mismatches += 1
        return mismatches == 0, f"{count} graphs, n<=12", "0 mismatches", f"{mismatches} mismatches"


def _run_check(name: str, scale: str, settings: Settings) -> LemmaResult:
    """Executor entry point; builds a fresh suite so worker processes share nothing."""
    return LemmaSuite(Scale(scale), settings).run_one(name)


def results_table(results: List[LemmaResult]) -> pd.DataFrame:
    columns = ["lemma", "status", "params", "expected", "computed", "error", "seconds"]
    return pd.DataFrame([r.to_dict() for r in results], columns=columns)


def all_passed(results: List[LemmaResult]) -> bool:
    return all(r.success for r in results)
