"""Command line front end: ``superhowe hwv | verify | identities``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from .algebra import NotDivisible, OverBudget, term_ceiling, to_text
from .combinatorics import Partition
from .hwv import (
    AuxiliaryResidue,
    hwv_general,
    hwv_s2,
    verify_auxilary,
    verify_identity_cor,
    verify_keylemma,
    verify_maincor,
    verify_s2_relations,
)
from .operators import HookViolation, build_glmn, build_glpq, build_s2_glmn, diagram_to_hw, first_nonannihilating, weight_of
from .symfunc import verify_classical_quartet, verify_s2_characters, verify_super_cauchy, verify_super_dual_cauchy
from . import verify as V

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_HOOK = 3
EXIT_ARITH = 4
EXIT_BUDGET = 5

BUDGET_ENV = "SUPERHOWE_BUDGET"

THEOREMS = ("tensor-duality", "skew-duality", "s2-decomposition", "lambda-s2-decomposition", "hwv-tensor", "hwv-s2")
IDENTITIES = ("super-cauchy", "super-dual-cauchy", "classical-quartet", "s2", "determinants", "s2-relations")


@dataclass
class CliConfig:
    subcommand: str
    params: Dict[str, Optional[int]]
    partition: Optional[Partition] = None
    max_degree: Optional[int] = None
    max_size: Optional[int] = None
    name: Optional[str] = None
    model: Optional[str] = None
    fmt: str = "text"
    out: Optional[str] = None
    budget: Optional[int] = None


def _env_budget() -> Optional[int]:
    raw = os.environ.get(BUDGET_ENV, "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superhowe", description="Exact highest weight vectors and checks for super Howe dualities.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("p", "q", "m", "n"):
        common.add_argument(f"-{flag}", type=int, default=None)
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--budget", type=int, default=None,
                        help=f"term-count ceiling per polynomial (default: ${BUDGET_ENV}, else unlimited)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    h = sub.add_parser("hwv", parents=[common], help="construct a highest weight vector")
    h.add_argument("--model", choices=("tensor", "s2"), required=True)
    h.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 3,1")

    v = sub.add_parser("verify", parents=[common], help="run a theorem check or the default suite")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--theorem", default=None)
    g.add_argument("--suite", choices=("default",), default=None)
    v.add_argument("--max-degree", type=int, default=4)
    v.add_argument("--max-size", type=int, default=None, help="largest |lambda| for the hwv-* checks")

    i = sub.add_parser("identities", parents=[common], help="symmetric function and determinant identities")
    i.add_argument("--which", required=True)
    i.add_argument("--max-degree", type=int, default=4)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> CliConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: getattr(args, k) for k in "pqmn"}
    if any(v is not None and v < 0 for v in params.values()):
        parser.error("dimensions must be non-negative")
    cfg = CliConfig(args.subcommand, params, fmt=args.fmt, out=args.out,
                    budget=args.budget if args.budget is not None else _env_budget())
    if cfg.budget is not None and cfg.budget <= 0:
        parser.error("--budget must be positive")
    if args.subcommand == "hwv":
        cfg.model = args.model
        try:
            cfg.partition = Partition.parse(args.lam)
        except ValueError as exc:
            parser.error(f"bad --lambda: {exc}")
        _require(parser, cfg, "pqmn" if cfg.model == "tensor" else "mn")
    elif args.subcommand == "verify":
        cfg.name = args.theorem or f"suite-{args.suite}"
        cfg.max_degree = args.max_degree
        cfg.max_size = args.max_size
        if args.theorem is not None:
            if args.theorem not in THEOREMS:
                parser.error(f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREMS)}")
            need = "mn" if args.theorem in ("s2-decomposition", "lambda-s2-decomposition", "hwv-s2") else "pqmn"
            _require(parser, cfg, need)
        if cfg.max_degree < 0 or (cfg.max_size is not None and cfg.max_size < 0):
            parser.error("degree bounds must be non-negative")
    else:
        if args.which not in IDENTITIES:
            parser.error(f"unknown identity {args.which!r}; choose from {', '.join(IDENTITIES)}")
        cfg.name = args.which
        cfg.max_degree = args.max_degree
        need = {"super-cauchy": "pqmn", "super-dual-cauchy": "pqmn", "classical-quartet": "m",
                "s2": "mn", "determinants": "p", "s2-relations": "mn"}[args.which]
        _require(parser, cfg, need)
        if cfg.max_degree < 0:
            parser.error("--max-degree must be non-negative")
    return cfg


def _require(parser: argparse.ArgumentParser, cfg: CliConfig, names: str) -> None:
    missing = [f"-{k}" for k in names if cfg.params[k] is None]
    if missing:
        parser.error(f"missing {' '.join(missing)}")


def _emit(cfg: CliConfig, payload: dict, text: str) -> None:
    body = json.dumps(payload, indent=2, sort_keys=False) if cfg.fmt == "json" else text
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        sys.stdout.write(body + "\n")


def _fmt_weight(entries) -> str:
    return "(" + ",".join(str(e) for e in entries) + ")"


# ---------------------------------------------------------------------------
# hwv


def hwv_payload(cfg: CliConfig) -> dict:
    lam = cfg.partition
    P = cfg.params
    if cfg.model == "tensor":
        p, q, m, n = P["p"], P["q"], P["m"], P["n"]
        f = hwv_general(lam, p, q, m, n)
        Rs = [build_glpq(p, q, m, n, f.table), build_glmn(p, q, m, n, f.table)]
        expected = [diagram_to_hw(lam, p, q).entries(), diagram_to_hw(lam, m, n).entries()]
        params = {"p": p, "q": q, "m": m, "n": n}
    else:
        m, n = P["m"], P["n"]
        f = hwv_s2(lam, m, n)
        Rs = [build_s2_glmn(m, n, f.table)]
        expected = [diagram_to_hw(lam, m, n).entries()]
        params = {"m": m, "n": n}
    weights = []
    for R, want in zip(Rs, expected):
        got = weight_of(f, R).entries
        weights.append({"algebra": R.name, "weight": list(got), "expected": list(want)})
    bad = first_nonannihilating(f, Rs) if f else None
    ok = bool(f) and bad is None and all(w["weight"] == w["expected"] for w in weights)
    return {
        "version": __version__,
        "model": cfg.model,
        "params": params,
        "lambda": str(lam),
        "terms": len(f.terms),
        "vector": to_text(f),
        "weights": weights,
        "verdict": "pass" if ok else "fail",
        "counterexample": None if bad is None else {"operator": f"{bad[0]} {bad[1]}", "residual": to_text(bad[2])},
    }


def hwv_text(payload: dict) -> str:
    ps = ",".join(f"{k}={v}" for k, v in payload["params"].items())
    lines = [f"model    {payload['model']} ({ps})", f"lambda   {payload['lambda']}"]
    for w in payload["weights"]:
        lines.append(f"weight   {w['algebra']}: {_fmt_weight(w['weight'])}")
    lines.append(f"terms    {payload['terms']}")
    lines.append(f"vector   {payload['vector']}")
    lines.append(f"verdict  {payload['verdict']}")
    if payload["counterexample"]:
        ce = payload["counterexample"]
        lines.append(f"  {ce['operator']} leaves {ce['residual']}")
    return "\n".join(lines)


def cmd_hwv(cfg: CliConfig) -> int:
    payload = hwv_payload(cfg)
    _emit(cfg, payload, hwv_text(payload))
    return EXIT_OK if payload["verdict"] == "pass" else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify and identities


def _verify_report(cfg: CliConfig) -> V.VerificationReport:
    P, k, b = cfg.params, cfg.max_degree, cfg.budget
    if cfg.name == "suite-default":
        return V.run_default_suite(k, b)
    runners: Dict[str, Callable[[], V.VerificationReport]] = {
        "tensor-duality": lambda: V.verify_tensor_duality(P["p"], P["q"], P["m"], P["n"], k, b),
        "skew-duality": lambda: V.verify_skew_duality(P["p"], P["q"], P["m"], P["n"], k, b),
        "s2-decomposition": lambda: V.verify_s2_decomposition(P["m"], P["n"], k, b),
        "lambda-s2-decomposition": lambda: V.verify_lambda_s2_decomposition(P["m"], P["n"], k, b),
        "hwv-tensor": lambda: V.run_hwv_suite(V.CaseGrid(
            "tensor", [(P["p"], P["q"], P["m"], P["n"])], cfg.max_size if cfg.max_size is not None else V.TENSOR_MAX_SIZE), b),
        "hwv-s2": lambda: V.run_hwv_suite(V.CaseGrid(
            "s2", [(P["m"], P["n"])], cfg.max_size if cfg.max_size is not None else V.S2_MAX_SIZE), b),
    }
    return runners[cfg.name]()


def _bool_report(name: str, params: dict, results: Dict[str, bool]) -> V.VerificationReport:
    rep = V.VerificationReport(name, params, None, checks=len(results))
    failed = [k for k, ok in results.items() if not ok]
    if failed:
        rep.fail(failed=", ".join(failed))
    return rep


def _determinant_reports(p_max: int) -> List[V.VerificationReport]:
    out = []
    for p in range(1, p_max + 1):
        out.append(_bool_report("keylemma", {"p": p}, {"keylemma": verify_keylemma(p)}))
    subsets = [c for size in range(0, 3) for c in combinations(range(1, p_max + 1), size)]
    res = {}
    for I in subsets:
        for J in subsets:
            for part, ok in verify_maincor(p_max, list(I), list(J)).items():
                res[f"I={I},J={J},{part}"] = ok
    out.append(_bool_report("maincor", {"p": p_max}, res))
    res = {f"p={p},q={q},m={m}": verify_identity_cor(p, q, m)
           for p in range(1, p_max + 1) for q in range(1, p + 1) for m in range(0, q)}
    out.append(_bool_report("identity-cor", {"p": p_max}, res))
    out.append(_bool_report("auxiliary", {"m": min(p_max, 3)},
                            {f"m={m}": verify_auxilary(m) for m in range(1, min(p_max, 3) + 1)}))
    return out


def _identity_report(cfg: CliConfig) -> V.VerificationReport:
    P, k = cfg.params, cfg.max_degree
    top = V.VerificationReport(f"identities-{cfg.name}", {x: v for x, v in P.items() if v is not None}, k)
    with term_ceiling(cfg.budget):
        if cfg.name == "super-cauchy":
            children = [V.from_identity(verify_super_cauchy(P["p"], P["q"], P["m"], P["n"], k))]
        elif cfg.name == "super-dual-cauchy":
            children = [V.from_identity(verify_super_dual_cauchy(P["p"], P["q"], P["m"], P["n"], k))]
        elif cfg.name == "classical-quartet":
            children = [V.from_identity(r) for r in verify_classical_quartet(P["m"], k)]
        elif cfg.name == "s2":
            children = [V.from_identity(r) for r in verify_s2_characters(P["m"], P["n"], k)]
        elif cfg.name == "determinants":
            children = _determinant_reports(P["p"])
        else:
            m, n = P["m"], P["n"]
            children = [_bool_report("s2-relations", {"m": m, "n": n}, verify_s2_relations(m, n))]
    for c in children:
        top.absorb(c)
    return top


def _finish(cfg: CliConfig, rep: V.VerificationReport) -> int:
    header = f"superhowe {__version__}  {rep.theorem}  status={rep.status}  checks={rep.checks}"
    _emit(cfg, rep.as_dict(), "\n".join([header] + rep.summary_lines()))
    if rep.status == "over-budget":
        return EXIT_BUDGET
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify(cfg: CliConfig) -> int:
    return _finish(cfg, _verify_report(cfg))


def cmd_identities(cfg: CliConfig) -> int:
    return _finish(cfg, _identity_report(cfg))


COMMANDS = {"hwv": cmd_hwv, "verify": cmd_verify, "identities": cmd_identities}


def main(argv: Optional[Sequence[str]] = None) -> int:
    cfg = parse_config(argv)  # argparse exits with 2 on usage errors
    try:
        if cfg.subcommand == "hwv":
            with term_ceiling(cfg.budget):
                return cmd_hwv(cfg)
        return COMMANDS[cfg.subcommand](cfg)
    except HookViolation as exc:
        print(f"superhowe: hook violation: {exc}", file=sys.stderr)
        return EXIT_HOOK
    except (NotDivisible, AuxiliaryResidue) as exc:
        print(f"superhowe: internal arithmetic failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ARITH
    except OverBudget as exc:
        print(f"superhowe: over budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
