"""
Roman Domination Engine
Command-line interface

    python -m roman_domination_core solve   --objective grd --input g.txt
    python -m roman_domination_core decide  --objective grd --budget 9 --input g.json --format json
    python -m roman_domination_core cograph --input g.txt
    python -m roman_domination_core reduce  --name split --input x3c.json --output h.json
    python -m roman_domination_core verify  --labeling f.json --mode grd --input g.txt
    python -m roman_domination_core gen     --kind cubic --n 10 --seed 7
    python -m roman_domination_core lemmas  --scale desk

Results go to standard output (or --output); progress and logs go to standard error.
Exit codes: 0 success, 1 the answer is no, 2 usage or input error, 3 time budget
exhausted, 4 lemma-suite failure.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional

import pandas as pd

from .cograph import annotate, build_cotree, cograph_values, cotree_to_dict, gamma_gr_cograph
from .config import LOG_FORMAT, Settings, get_settings
from .exceptions import DidNotFinish, RomanDominationError
from .generators import GenKind, GenSpec, generate
from .graph import Graph, format_edgelist, graph_from_dict, parse_edgelist
from .labeling import Mode, check, load_labeling
from .lemmas import LemmaSuite, Scale, all_passed, results_table
from .reductions import (ds3reg_to_classF, ds_to_treegadget, reduction_to_dict, x3c_to_split,
                         x3c_to_x4c, x4c_to_classG)
from .solver import Objective, SetCoverInstance, decide, solve_ds, solve_exact

log = logging.getLogger(__name__)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_DNF, EXIT_LEMMA = 0, 1, 2, 3, 4

REDUCTIONS = ("x3c-to-x4c", "classF", "classG", "split", "treegadget")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="input file ('-' for stdin)")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("edgelist", "json"), default="edgelist",
                        help="graph input format; json also switches the report to JSON")
    common.add_argument("--seed", type=int, help="random seed (default ROMAN_SEED)")
    common.add_argument("--time-budget-ms", type=int, help="abort searches after this many milliseconds")
    common.add_argument("--jobs", type=int, help="worker processes (default ROMAN_JOBS)")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(prog="roman_domination_core",
                                     description="Exact Roman and global Roman domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="optimum and witness")
    p.add_argument("--objective", choices=[o.value for o in Objective], default="rd")

    p = sub.add_parser("decide", parents=[common], help="is there a labeling within the budget?")
    p.add_argument("--objective", choices=[m.value for m in Mode], default="rd")
    p.add_argument("--budget", type=int, required=True)

    p = sub.add_parser("cograph", parents=[common], help="gamma values from the cotree")
    p.add_argument("--witness", action="store_true", help="attach a certified GRDF")
    p.add_argument("--show-tree", action="store_true", help="print the annotated cotree as JSON")

    p = sub.add_parser("reduce", parents=[common], help="build a reduced instance")
    p.add_argument("--name", choices=REDUCTIONS, required=True)
    p.add_argument("--k", type=int, default=1, help="dominating-set size for classF/treegadget")

    p = sub.add_parser("verify", parents=[common], help="check a labeling")
    p.add_argument("--labeling", required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="grd")

    p = sub.add_parser("gen", parents=[common], help="generate a seeded instance")
    p.add_argument("--kind", choices=[k.value for k in GenKind], required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--unplanted", action="store_true", help="set-cover kinds: no planted cover")

    p = sub.add_parser("lemmas", parents=[common], help="run the lemma suite")
    p.add_argument("--scale", choices=[s.value for s in Scale], default="desk")
    p.add_argument("--only", action="append", help="run just this check (repeatable)")
    return parser


# =============================================================================
# I/O helpers
# =============================================================================

def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _read_graph(args) -> Graph:
    text = _read_text(args.input)
    if args.format == "json":
        try:
            return graph_from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise RomanDominationError(f"invalid JSON graph: {e}") from e
    return parse_edgelist(text)


def _read_instance(args) -> SetCoverInstance:
    try:
        return SetCoverInstance.from_dict(json.loads(_read_text(args.input)))
    except json.JSONDecodeError as e:
        raise RomanDominationError(f"invalid set-cover JSON: {e}") from e


def _emit(args, payload: Any, human: Optional[str] = None):
    """JSON when --format json or when there is no human rendering; --output redirects to a file."""
    text = json.dumps(payload, indent=2) if args.format == "json" or human is None else human
    if args.output:
        Path(args.output).write_text(text + "\n")
        log.info(f"💾 Wrote {args.command} result to {args.output}")
    else:
        print(text)


# =============================================================================
# Subcommands
# =============================================================================

def _cmd_solve(args, settings: Settings) -> int:
    g = _read_graph(args)
    if args.objective == Objective.DS.value:
        result = solve_ds(g)
    else:
        result = solve_exact(g, Mode(args.objective), settings.time_budget_s, settings.jobs)
    data = result.to_dict()
    _emit(args, data, f"{args.objective} optimum = {result.optimum}\nwitness: {data['witness']}")
    return EXIT_OK


def _cmd_decide(args, settings: Settings) -> int:
    g = _read_graph(args)
    result = decide(g, Mode(args.objective), args.budget, settings.time_budget_s, settings.jobs)
    if args.format == "json":
        _emit(args, result.to_dict())
    else:
        answer = "yes" if result.answer else "no"
        if result.answer and args.output:
            Path(args.output).write_text(json.dumps(result.witness.to_dict()) + "\n")
            answer += f"\nwitness: {args.output}"
        elif result.answer:
            answer += f"\nwitness: {list(result.witness.values)}"
        print(answer)
    return EXIT_OK if result.answer else EXIT_NO


def _cmd_cograph(args, settings: Settings) -> int:
    g = _read_graph(args)
    values = cograph_values(g)
    _, witness = gamma_gr_cograph(g, witness=args.witness, witness_cap=settings.witness_cap)
    data = {"values": values.to_dict(), "witness": list(witness.values) if witness else None}
    if args.show_tree:
        data["cotree"] = cotree_to_dict(annotate(build_cotree(g))) if g.n else None
    table = pd.DataFrame([{"graph": "G", "gamma_R": values.gamma_r, "gamma_gR": values.gamma_gr},
                          {"graph": "complement", "gamma_R": values.gamma_r_co, "gamma_gR": values.gamma_gr_co}])
    human = table.to_string(index=False)
    if witness is not None:
        human += f"\nwitness: {list(witness.values)}"
    if args.show_tree:
        human += "\n" + json.dumps(data["cotree"], indent=2)
    _emit(args, data, human)
    return EXIT_OK


def _cmd_reduce(args, settings: Settings) -> int:
    if args.name in ("classF", "treegadget"):
        g = _read_graph(args)
        out = ds3reg_to_classF(g, args.k) if args.name == "classF" else ds_to_treegadget(g, args.k)
    else:
        inst = _read_instance(args)
        if args.name == "x3c-to-x4c":
            _emit(args, x3c_to_x4c(inst).to_dict())
            return EXIT_OK
        out = x4c_to_classG(inst) if args.name == "classG" else x3c_to_split(inst)
    data = reduction_to_dict(out)
    if args.format == "edgelist" and not args.output:
        print(f"# {args.name}: budget {out.budget}, digest {out.source.digest}")
        print(format_edgelist(out.graph), end="")
    else:
        args.format = "json"
        _emit(args, data)
    return EXIT_OK


def _cmd_verify(args, settings: Settings) -> int:
    g = _read_graph(args)
    f = load_labeling(args.labeling)
    verdict = check(g, f, Mode(args.mode))
    _emit(args, {**verdict.to_dict(), "weight": f.weight}, f"{verdict.describe()} (weight {f.weight})")
    return EXIT_OK if verdict.valid else EXIT_NO


def _cmd_gen(args, settings: Settings) -> int:
    spec = GenSpec(GenKind(args.kind), n=args.n, q=args.q, t=args.t, p=args.p,
                   max_degree=args.max_degree, seed=settings.seed, planted=not args.unplanted)
    generated = generate(spec)
    if isinstance(generated.instance, Graph) and args.format == "edgelist":
        _emit(args, None, format_edgelist(generated.instance).rstrip("\n"))
    else:
        args.format = "json"
        _emit(args, generated.to_dict())
    return EXIT_OK


def _cmd_lemmas(args, settings: Settings) -> int:
    suite = LemmaSuite(Scale(args.scale), settings)
    results = suite.run_all(args.only, jobs=settings.jobs)
    table = results_table(results)
    _emit(args, table.to_dict(orient="records"),
          table.drop(columns=["error"]).to_string(index=False))
    return EXIT_OK if all_passed(results) else EXIT_LEMMA


COMMANDS = {
    "solve": _cmd_solve,
    "decide": _cmd_decide,
    "cograph": _cmd_cograph,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "lemmas": _cmd_lemmas,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        settings = get_settings().override(seed=args.seed, jobs=args.jobs, time_budget_ms=args.time_budget_ms)
    except RomanDominationError as e:
        logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)
        log.error(f"❌ invalid settings: {e}")
        return EXIT_USAGE
    level = logging.DEBUG if args.verbose else getattr(logging, settings.log_level, logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    if settings.jobs < 1 or settings.time_budget_ms < 0:
        log.error("❌ --jobs must be >= 1 and --time-budget-ms >= 0")
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args, settings)
    except DidNotFinish as e:
        log.error(f"⏱️ {e} (best so far: {e.best_so_far})")
        return EXIT_DNF
    except (RomanDominationError, OSError) as e:
        log.error(f"❌ {type(e).__name__}: {e}")
        return EXIT_USAGE


def main():
    sys.exit(run())
