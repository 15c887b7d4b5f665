"""Command-line entry point: deterministic, scriptable access to all modules.

Polynomials are passed as JSON arrays of coefficients ascending by degree
(integers or decimal strings).  Every run prints the resolved seed on stderr.
Exit codes: 0 success / verdict holds, 1 verdict violation, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import ensembles, experiments
from .bounds import (collected_bounds_check, ff_irreducible_count, lemma_sandwich,
                     product_bound)
from .control import Graph, godsil_cross_check
from .ensembles import SeedStream, sample, spec_from_json, spec_to_json
from .factor import (classify_irreducibility, low_degree_factors_enumerate,
                     low_degree_factors_subset)
from .intmatrix import IntMatrix, mat_charpoly_exact
from .intpoly import IntPoly


def _parse_poly(text: str) -> IntPoly:
    return IntPoly.from_json(json.loads(text))


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None,
                   help="master seed (default: POLYLAB_SEED env var, else 0)")
    p.add_argument("--format", choices=("csv", "json", "text"), default="json")
    p.add_argument("--out", default=None, help="write output to this path")


def _model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", required=True,
                   choices=sorted(ensembles._MODEL_CLASSES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--rho", type=float, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--B", type=int, default=None)
    p.add_argument("--mean-zero", action="store_true", default=None)


def _spec_from_args(args) -> ensembles.EnsembleSpec:
    data = {"model": args.model, "n": args.n}
    for key in ("N", "p", "rho", "m", "s", "B"):
        v = getattr(args, key, None)
        if v is not None:
            data[key] = v
    if getattr(args, "mean_zero", None) is not None:
        data["mean_zero"] = args.mean_zero
    cls = ensembles._MODEL_CLASSES[data.pop("model")]
    fields = cls.__dataclass_fields__
    extra = [k for k in data if k not in fields]
    if extra:
        raise SystemExit(f"error: flags {extra} do not apply to model {cls.model}")
    return cls(**data)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("POLYLAB_SEED")
    return int(env) if env else 0


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_factor(args) -> int:
    f = _parse_poly(args.poly)
    if args.method == "classify":
        report = classify_irreducibility(f)
    elif args.method == "enumerate":
        report = low_degree_factors_enumerate(f, args.k, args.M)
    else:
        report = low_degree_factors_subset(f, args.k)
    _emit(args, json.dumps(report.to_json(), indent=2) + "\n")
    return 0


def _cmd_charpoly(args) -> int:
    if args.matrix:
        a = IntMatrix.from_json(json.loads(args.matrix))
    else:
        spec = _spec_from_args(args)
        a = sample(spec, SeedStream(_resolve_seed(args)))
    f = mat_charpoly_exact(a)
    _emit(args, json.dumps(f.to_json()) + "\n")
    return 0


def _cmd_sample(args) -> int:
    spec = _spec_from_args(args)
    seed = _resolve_seed(args)
    out = []
    for i in range(args.count):
        value = sample(spec, SeedStream(seed, i))
        out.append(value.to_json())
    _emit(args, json.dumps({"spec": spec_to_json(spec), "seed": seed,
                            "samples": out}, indent=2) + "\n")
    return 0


def _cmd_experiment(args) -> int:
    seed = _resolve_seed(args)
    if args.validate:
        spec = _spec_from_args(args)
        excluded = tuple(args.exclude or ())
        report = experiments.validate_main_theorem(
            spec, args.k, args.trials, seed=seed, M=args.M, excluded=excluded)
        _emit(args, json.dumps(report, indent=2) + "\n")
        return 0 if report["holds"] else 1
    with open(args.config) as fh:
        data = json.load(fh)
    data.setdefault("seed", seed)
    config = experiments.config_from_json(data)
    record = experiments.mc_estimate(config, workers=args.workers)
    fmt = "csv" if args.format == "csv" else "json"
    _emit(args, experiments.render_report([record], fmt))
    return 0


def _cmd_bounds(args) -> int:
    if args.case:
        params = {}
        for key in ("p", "epsilon", "c", "cp", "C", "B", "m", "K", "k"):
            v = getattr(args, key, None)
            if v is not None:
                params[key] = v
        report = collected_bounds_check(args.case, params, args.n)
    else:
        report = lemma_sandwich(args.k, args.M)
        report = {k: (str(v) if k in ("product", "sum") else v)
                  for k, v in report.items()}
        report["M"] = str(args.M)
    if args.format == "text":
        lines = [f"{k:>12}: {v}" for k, v in report.items()]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps(report, indent=2) + "\n")
    return 0


def _cmd_ffcount(args) -> int:
    _emit(args, f"{ff_irreducible_count(args.q, args.n)}\n")
    return 0


def _cmd_control(args) -> int:
    seed = _resolve_seed(args)
    if args.graph:
        with open(args.graph) as fh:
            g = Graph.from_json(json.load(fh))
    else:
        if args.model != "erdos-renyi":
            raise SystemExit("error: only --model erdos-renyi is supported here")
        spec = ensembles.ErdosRenyi(args.n, args.p if args.p is not None else 0.5)
        g = Graph.from_matrix(sample(spec, SeedStream(seed)))
    verdict = godsil_cross_check(g)
    _emit(args, json.dumps(verdict, indent=2) + "\n")
    return 0 if verdict["verdict"] != "violation" else 1


def _cmd_census(args) -> int:
    result = experiments.exhaustive_reducibility(args.n)
    if args.format == "text":
        prob = result.probability
        _emit(args, f"n={result.n} reducible {result.reducible}/{result.total} "
                    f"= {prob} ({float(prob):.6f})\n")
    else:
        _emit(args, json.dumps(result.to_json(), indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polylab")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="find low-degree factors of an integer polynomial")
    p.add_argument("--poly", required=True, help="JSON coefficient array, ascending")
    p.add_argument("--k", type=int, default=2, help="max factor degree to search")
    p.add_argument("--M", type=float, default=None, help="root bound (default: Cauchy)")
    p.add_argument("--method", choices=("subset", "enumerate", "classify"),
                   default="subset")
    _common_flags(p)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    p.add_argument("--matrix", default=None, help="JSON matrix (rows or {n, entries})")
    _model_flags_optional(p)
    _common_flags(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("sample", help="draw reproducible ensemble samples")
    _model_flags(p)
    p.add_argument("--count", type=int, default=1)
    _common_flags(p)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("experiment", help="Monte Carlo estimates and theorem validation")
    p.add_argument("--config", default=None, help="JSON ExperimentConfig file")
    p.add_argument("--validate", action="store_true",
                   help="validate the probability budget instead")
    _model_flags_optional(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--M", type=float, default=None)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--exclude", type=int, action="append", default=None,
                   help="integer point excluded from the region (repeatable)")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                   help="parallel blocks (results are identical for any value)")
    _common_flags(p)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("bounds", help="closed-form bound evaluation")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--M", type=float, default=1)
    p.add_argument("--case", choices=("i", "ii", "iii", "iv"), default=None)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--cp", type=float, default=None)
    p.add_argument("--C", type=float, default=None)
    p.add_argument("--B", type=float, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--K", type=int, default=None)
    _common_flags(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("ffcount", help="irreducible polynomial count over F_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _common_flags(p)
    p.set_defaults(func=_cmd_ffcount)

    p = sub.add_parser("control", help="controllability / asymmetry cross-checks")
    p.add_argument("--graph", default=None, help="JSON edge-list file {n, edges}")
    p.add_argument("--model", default="erdos-renyi")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--p", type=float, default=None)
    _common_flags(p)
    p.set_defaults(func=_cmd_control)

    p = sub.add_parser("census", help="exact Rademacher reducibility census")
    p.add_argument("--n", type=int, required=True)
    _common_flags(p)
    p.set_defaults(func=_cmd_census)

    return parser


def _model_flags_optional(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", default=None, choices=sorted(ensembles._MODEL_CLASSES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--rho", type=float, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--B", type=int, default=None)
    p.add_argument("--mean-zero", action="store_true", default=None)


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    print(f"seed: {_resolve_seed(args)}", file=sys.stderr)
    return args.func(args)


def main() -> None:
    sys.exit(dispatch())
