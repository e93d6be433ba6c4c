"""Command-line interface: ``tsigma {analyze,audit,witness,lemmas}``."""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from . import __version__, config
from .errors import GroupError
from .groups import perm_from_cycles
from .harness import (audit_many, corpus_builtin, load_group, subgroup_json,
                      verdict_json, violations_of)
from .lattice import generated_subgroup, is_normal
from .lemmas import run_lemmas
from .sigma import (is_sigma_nilpotent, is_sigma_subnormal, parse_sigma, sigma_of,
                    theorem_verdict)
from .structure import is_dedekind, is_t_group

log = logging.getLogger("tsigma")


def _dump(data, path):
    text = json.dumps(data, indent=2, ensure_ascii=False, sort_keys=False)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def parse_subgroup_arg(G, text: str):
    """Element indices ``"0,5"``, image lists ``"[1,0,2]"``, or cycles ``"(0 1);(2 3 4)"``."""
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
        if data and isinstance(data[0], int):
            data = [data]
        seed = [G.index_of(images) for images in data]
    elif text.startswith("("):
        seed = []
        for part in text.split(";"):
            cycles = [[int(v) for v in c.split()] for c in re.findall(r"\(([^)]*)\)", part)]
            seed.append(G.index_of(perm_from_cycles([c for c in cycles if c], G.degree)))
    else:
        seed = [int(v) for v in text.split(",") if v.strip()]
    return generated_subgroup(G, seed)


def _witness_json(G, H, sigma):
    ok, w = is_sigma_subnormal(G, H, sigma)
    out = {"group": G.name, "sigma": str(sigma), "subgroup": subgroup_json(H),
           "sigma_subnormal": ok, "normal": is_normal(G, H), "chain": None}
    if w is not None:
        out["chain"] = [subgroup_json(K) for K in w.chain]
        out["steps"] = [{"kind": s.kind, "block": s.block, "factor_order": s.factor_order}
                        for s in w.steps]
    return out


def cmd_analyze(args) -> int:
    G = load_group(args.group)
    sigma = parse_sigma(args.sigma)
    v = theorem_verdict(G, sigma)
    data = verdict_json(v)
    data["t_group"] = is_t_group(G)
    data["dedekind"] = is_dedekind(G)
    data["sigma_nilpotent"] = is_sigma_nilpotent(G, sigma)
    data["sigma_of_G"] = sorted(sigma_of(G, sigma))
    if v.t_counterexample is not None:
        data["detail"]["t_counterexample_witness"] = _witness_json(G, v.t_counterexample, sigma)
    violations = violations_of(data)
    data["violations"] = violations
    if args.json:
        _dump(data, args.json)
    if args.json != "-":
        print(f"group\t{G.name}\norder\t{G.order}\nsigma\t{sigma}")
        for key in ("sigma_soluble", "s1_t_sigma", "s2_r_all", "s3_structure",
                    "residual_order", "t_group", "dedekind", "sigma_nilpotent"):
            print(f"{key}\t{data[key]}")
        if v.t_counterexample is not None:
            w = data["detail"]["t_counterexample_witness"]
            print("counterexample\t" + " ".join(w["subgroup"]["generators"]))
            print("chain\t" + " <= ".join(str(K["order"]) for K in w["chain"]))
    return 1 if violations else 0


def cmd_witness(args) -> int:
    G = load_group(args.group)
    sigma = parse_sigma(args.sigma)
    H = parse_subgroup_arg(G, args.subgroup)
    data = _witness_json(G, H, sigma)
    if args.json:
        _dump(data, args.json)
        if args.json == "-":
            return 0
    print(f"subgroup\torder {H.order}\t{' '.join(data['subgroup']['generators'])}")
    print(f"sigma_subnormal\t{data['sigma_subnormal']}")
    print(f"normal\t{data['normal']}")
    if data["chain"]:
        print(f"chain_length\t{len(data['steps'])}")
        for k, (K, step) in enumerate(zip(data["chain"][1:], data["steps"]), 1):
            why = "normal" if step["kind"] == "normal" else \
                f"sigma-primary {step['block']} factor {step['factor_order']}"
            print(f"step {k}\t-> order {K['order']}\t{why}")
    return 0


def cmd_audit(args) -> int:
    corpus = corpus_builtin(args.max_order, skip_orders=set(args.skip_order or ()))
    sigmas = args.sigma or ["minimal"]
    reports = audit_many(corpus, sigmas, f"builtin:{args.max_order}", jobs=args.jobs)
    payload = [r.to_json() for r in reports]
    if args.json:
        _dump(payload[0] if len(payload) == 1 else payload, args.json)
    if args.json != "-":
        print("sigma\tgroups\tsigma_soluble\tviolations")
        for r in reports:
            s = r.to_json()["summary"]
            print(f"{r.sigma}\t{s['groups']}\t{s['sigma_soluble']}\t{s['violations']}")
            for viol in r.violations:
                print(f"  VIOLATION\t{viol['group']}\t{viol['pair']}\t{viol['values']}")
    if args.figures:
        from .plotting import render_audit_figures
        for path in render_audit_figures(reports, args.figures):
            log.info("wrote %s", path)
    return 0 if all(r.ok for r in reports) else 1


def cmd_lemmas(args) -> int:
    corpus = corpus_builtin(args.max_order, skip_orders=set(args.skip_order or ()))
    ok = True
    rows = []
    for spec in args.sigma or ["minimal"]:
        for res in run_lemmas(corpus, parse_sigma(spec)):
            ok = ok and res.passed
            rows.append({"sigma": spec, "lemma": res.name, "checks": res.checks,
                         "failures": res.failures})
    if args.json:
        _dump({"schema": 1, "tool_version": __version__, "corpus": f"builtin:{args.max_order}",
               "results": rows}, args.json)
    if args.json != "-":
        print("sigma\tlemma\tchecks\tfailures")
        for row in rows:
            print(f"{row['sigma']}\t{row['lemma']}\t{row['checks']}\t{len(row['failures'])}")
            for msg in row["failures"][:5]:
                print(f"  FAIL\t{msg}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tsigma", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--order-cap", type=int, default=None, help="group order cap (default 512)")
    parser.add_argument("--lattice-cap", type=int, default=None,
                        help="subgroup-lattice order cap (default 256)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full verdict for one group")
    p.add_argument("--group", required=True, help="group JSON file or family spec")
    p.add_argument("--sigma", required=True)
    p.add_argument("--json", metavar="OUT", help="write JSON report ('-' for stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("audit", help="audit the equivalence over the builtin corpus")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--sigma", action="append", help="repeatable")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--skip-order", type=int, action="append", help="exclude groups of this order")
    p.add_argument("--figures", metavar="DIR", help="render timing and verdict figures")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("witness", help="sigma-subnormality verdict with its chain")
    p.add_argument("--group", required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--subgroup", required=True,
                   help="element indices '0,5', image lists '[[1,0,2]]' or cycles '(0 1);(2 3)'")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("lemmas", help="run the lemma property suites")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--sigma", action="append", help="repeatable")
    p.add_argument("--skip-order", type=int, action="append")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config.set_caps(args.order_cap, args.lattice_cap)
    try:
        return args.func(args)
    except (GroupError, IndexError, json.JSONDecodeError) as exc:
        print(f"tsigma: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
