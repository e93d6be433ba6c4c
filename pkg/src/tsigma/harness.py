"""Corpus construction, group files, and the theorem audit."""
from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, config
from .errors import GroupFileError, GroupError
from .families import builder_family
from .groups import FiniteGroup, build_from_generators, cycle_notation, direct_product
from .lattice import Subgroup
from .sigma import SigmaPartition, TheoremVerdict, parse_sigma, theorem_verdict

log = logging.getLogger(__name__)

SCHEMA = 1

PAIRS = (("(1)", "s1_t_sigma"), ("(2)", "s2_r_all"), ("(3)", "s3_structure"))


# --- group input -----------------------------------------------------------------

def group_from_json(data, source: str = "<json>", cap: int | None = None) -> FiniteGroup:
    if not isinstance(data, dict):
        raise GroupFileError(f"{source}: top level must be an object")
    for key, kind in (("name", str), ("degree", int), ("generators", list)):
        if key not in data:
            raise GroupFileError(f"{source}: missing field {key!r}")
        if not isinstance(data[key], kind) or isinstance(data[key], bool):
            raise GroupFileError(f"{source}: field {key!r} must be {kind.__name__}")
    if data["degree"] < 1:
        raise GroupFileError(f"{source}: field 'degree' must be positive")
    gens = data["generators"]
    for k, g in enumerate(gens):
        if not isinstance(g, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in g):
            raise GroupFileError(f"{source}: generators[{k}] must be a list of integers")
    return build_from_generators(data["degree"], gens, data["name"], cap)


def ingest_group_file(path, cap: int | None = None) -> FiniteGroup:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return group_from_json(data, str(path), cap)


def load_group(ref: str, cap: int | None = None) -> FiniteGroup:
    """A path to a group file, or a family spec such as ``prod(sym:3,cyclic:5)``."""
    if ref.endswith(".json") or Path(ref).is_file():
        return ingest_group_file(ref, cap)
    return builder_family(ref, cap)


# --- corpus --------------------------------------------------------------------

_EXTRA = ("q8", "prod(sym:3,cyclic:5)", "semidirect(cyclic:3,cyclic:4,inv)",
          "semidirect(cyclic:7,cyclic:3,pow:2)", "semidirect(cyclic:5,cyclic:4,pow:2)")


def _family_orders(max_order: int) -> list[tuple[str, int]]:
    specs = [(f"cyclic:{n}", n) for n in range(2, max_order + 1)]
    specs += [(f"dihedral:{n}", n) for n in range(4, max_order + 1, 2)]
    for p in (2, 3, 5, 7, 11, 13):
        k = 2
        while p ** k <= max_order:
            specs.append((f"elem:{p}^{k}", p ** k))
            k += 1
    specs += [("sym:3", 6), ("sym:4", 24), ("alt:4", 12), ("alt:5", 60)]
    specs += [(s, n) for s, n in zip(_EXTRA, (8, 30, 12, 21, 20))]
    return [(s, n) for s, n in specs if n <= max_order]


def _corpus_plan(max_order: int) -> list[tuple]:
    base = _family_orders(max_order)
    plan = [("trivial", None)] + [(s, None) for s, _ in base]
    for i, (a, na) in enumerate(base):
        for b, nb in base[i:]:
            if na * nb <= max_order:
                plan.append((f"prod({a},{b})", (a, b)))
    return plan


def corpus_specs(max_order: int) -> list[str]:
    """Family specs of the builtin corpus, in corpus order."""
    return [spec for spec, _ in _corpus_plan(max_order)]


def corpus_builtin(max_order: int, skip_orders=()) -> list[FiniteGroup]:
    """Deterministic corpus: named families up to ``max_order`` and their pairwise products.

    Isomorphic duplicates are kept on purpose.
    """
    cap = config.lattice_cap()
    if max_order > cap:
        raise GroupError(f"max_order {max_order} exceeds lattice cap {cap}")
    built = {}
    groups = []
    for spec, factors in _corpus_plan(max_order):
        if factors is None:
            G = built[spec] = builder_family(spec)
        else:
            G = direct_product(built[factors[0]], built[factors[1]], name=spec)
        if G.order not in skip_orders:
            groups.append(G)
    return groups


# --- audit --------------------------------------------------------------------

def subgroup_json(H: Subgroup | None):
    if H is None:
        return None
    G = H.group
    return {"order": H.order, "elements": list(H.members),
            "generators": [cycle_notation(G.elements[g]) for g in H.generators]}


def verdict_json(v: TheoremVerdict) -> dict:
    s3 = v.statement3
    return {
        "group": v.group,
        "order": v.order,
        "sigma": v.sigma,
        "sigma_soluble": v.sigma_soluble,
        "s1_t_sigma": v.s1_t_sigma,
        "s2_r_all": v.s2_r_all,
        "s3_structure": v.s3_structure,
        "residual_order": v.residual_order,
        "detail": {
            "t_counterexample": subgroup_json(v.t_counterexample),
            "r_failures": {label: {"pi": list(f.primes), "hall": subgroup_json(f.hall),
                                   "subgroup": subgroup_json(f.subgroup)}
                           for label, f in sorted(v.r_failures.items())},
            "statement3": None if s3 is None else {
                "i": s3.i, "ii": s3.ii, "iii": s3.iii,
                "residual": subgroup_json(s3.residual),
                "complement": subgroup_json(s3.complement),
                "i_detail": s3.detail["i"],
                "iii_detail": {label: {k: (subgroup_json(x) if isinstance(x, Subgroup) else x)
                                       for k, x in info.items()}
                               for label, info in s3.detail["iii"].items()},
            },
        },
    }


def violations_of(v: dict) -> list[dict]:
    """Statement pairs that disagree on a sigma-soluble group."""
    if not v["sigma_soluble"]:
        return []
    out = []
    for i in range(3):
        for j in range(i + 1, 3):
            (na, ka), (nb, kb) = PAIRS[i], PAIRS[j]
            if v[ka] != v[kb]:
                out.append({"group": v["group"], "pair": f"{na}<=>{nb}",
                            "values": [v[ka], v[kb]], "witness": v["detail"]})
    return out


@dataclass
class AuditReport:
    sigma: str
    corpus: str
    verdicts: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    timing: list = field(default_factory=list)
    tool_version: str = __version__

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self, with_timing: bool = True) -> dict:
        out = {"schema": SCHEMA, "tool_version": self.tool_version, "sigma": self.sigma,
               "corpus": self.corpus, "verdicts": self.verdicts,
               "violations": self.violations,
               "summary": {"groups": len(self.verdicts),
                           "sigma_soluble": sum(v["sigma_soluble"] for v in self.verdicts),
                           "violations": len(self.violations)}}
        if with_timing:
            out["timing_ms"] = self.timing
        return out


def _analyze(payload):
    name, degree, gens, specs = payload
    G = build_from_generators(degree, gens, name, cap=config.order_cap())
    rows = []
    for spec in specs:
        t0 = time.perf_counter()
        v = verdict_json(theorem_verdict(G, parse_sigma(spec)))
        rows.append((v, (time.perf_counter() - t0) * 1000.0))
    return rows


def _payload(G: FiniteGroup, specs):
    return (G.name, G.degree, [G.elements[g] for g in G.generators], specs)


def audit_many(corpus, sigmas, corpus_label: str = "custom", jobs: int = 1) -> list[AuditReport]:
    """Audit every group against every partition; one report per partition.

    Groups are the unit of parallelism, so each group's lattice is shared by
    all partitions.  Results are assembled in corpus order.
    """
    sigmas = [s if isinstance(s, SigmaPartition) else parse_sigma(s) for s in sigmas]
    specs = [str(s) for s in sigmas]
    payloads = [_payload(G, specs) for G in corpus]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs,
                                 initializer=config.set_caps,
                                 initargs=(config.ORDER_CAP, config.LATTICE_CAP)) as pool:
            results = list(pool.map(_analyze, payloads, chunksize=1))
    else:
        results = [_analyze(p) for p in payloads]
    reports = [AuditReport(spec, corpus_label) for spec in specs]
    for G, rows in zip(corpus, results):
        for report, (v, ms) in zip(reports, rows):
            report.verdicts.append(v)
            report.violations.extend(violations_of(v))
            report.timing.append({"group": G.name, "order": G.order, "ms": round(ms, 3)})
    for report in reports:
        log.info("sigma %s: %d groups, %d violations", report.sigma, len(report.verdicts),
                 len(report.violations))
    return reports


def audit_theorem(corpus, sigma, corpus_label: str = "custom", jobs: int = 1) -> AuditReport:
    return audit_many(corpus, [sigma], corpus_label, jobs)[0]
