"""Command-line interface: JSON job configs in, JSON/TSV reports out.

Exit codes: 0 success, 1 config error, 2 precondition violation,
3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import __version__
from .cyclotomic import CyclotomicInteger
from .errors import (BoundExceededError, ConfigError, DisconnectedError,
                     GraphTowerError)
from .graphs import Multigraph, connected_components, is_connected
from .grouprings import Character, characters
from .jacobian import jacobian_structure, level_jacobian, picard_structure
from .voltage import (QuotientSpec, VoltageAssignment, derive,
                      quotient_assignment)
from .groups import TowerGroupSpec
from .zeta import (artin_l_inverse, factorization_check, ihara_zeta_inverse,
                   interpolation_check)
from .iwasawa import (fit_iwasawa, fitting_generators, lambda1_determinant,
                      mhg_check, tower_en)

_EDGE_LIST_LIMIT = 500


@dataclass(frozen=True)
class JobConfig:
    """Validated job description."""

    alpha: VoltageAssignment
    quotient: QuotientSpec | None
    max_level: int
    config_hash: str


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def parse_config(path: str | Path) -> JobConfig:
    """Load and cross-validate a JSON job config."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc

    try:
        graph_data = data["graph"]
        vertices = list(graph_data["vertices"])
        edges = [(e["id"], (e["ends"][0], e["ends"][1]))
                 for e in graph_data["edges"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise ConfigError(f"invalid graph description: {exc}") from exc
    try:
        graph = Multigraph.build(vertices, edges)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    group_data = data.get("group")
    if not isinstance(group_data, dict):
        raise ConfigError("missing group spec")
    p = group_data.get("p")
    if not isinstance(p, int) or not _is_prime(p):
        raise ConfigError(f"p must be prime, got {p!r}")
    kind = group_data.get("kind")
    try:
        if kind == "abelian":
            spec = TowerGroupSpec("abelian", p, rank=group_data.get("rank", 1))
        elif kind == "metacyclic":
            unit = group_data.get("action_unit")
            if isinstance(unit, str):
                unit = 1 + p if unit.replace(" ", "") == "1+p" else int(unit)
            spec = TowerGroupSpec("metacyclic", p, action_unit=unit)
        else:
            raise ConfigError(f"unknown group kind {kind!r}")
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    voltage_data = data.get("voltage")
    if not isinstance(voltage_data, dict):
        raise ConfigError("missing voltage map")
    voltages: dict[Any, list[list[int]]] = {}
    for eid, _ in graph.edges:
        key = str(eid)
        if key not in voltage_data:
            raise ConfigError(f"edge {eid} has no voltage")
        word = voltage_data[key]
        for pair in word:
            if (not isinstance(pair, list) or len(pair) != 2 or
                    not all(isinstance(x, int) for x in pair)):
                raise ConfigError(f"malformed voltage word for edge {eid}")
            if not 0 <= pair[0] < spec.num_generators:
                raise ConfigError(
                    f"voltage of edge {eid} uses unknown generator {pair[0]}")
        voltages[eid] = word
    unknown = set(voltage_data) - {str(eid) for eid, _ in graph.edges}
    if unknown:
        raise ConfigError(f"voltages for unknown edges: {sorted(unknown)}")
    try:
        alpha = VoltageAssignment.build(graph, spec, voltages)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    quotient = None
    if "quotient" in data:
        exps = data["quotient"].get("exponents")
        if (not isinstance(exps, list) or
                not all(isinstance(x, int) for x in exps)):
            raise ConfigError("quotient exponents must be a list of integers")
        quotient = QuotientSpec(tuple(exps))
        try:
            quotient.validate(spec)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    max_level = data.get("max_level", 3)
    if not isinstance(max_level, int) or max_level < 0:
        raise ConfigError("max_level must be a nonnegative integer")
    return JobConfig(alpha, quotient, max_level, digest)


def _cyc_json(x: CyclotomicInteger) -> dict:
    return {"conductor": x.conductor, "coeffs": list(x.coeffs)}


def _character_json(chi: Character) -> list[int]:
    return list(chi.exponents)


def _structure_json(structure) -> dict:
    return {"free_rank": structure.free_rank,
            "torsion": list(structure.torsion),
            "description": structure.describe()}


# ---------------------------------------------------------------------------
# subcommand handlers: each returns a JSON-ready dict


def _cmd_derive(job: JobConfig, args) -> dict:
    level = args.level if args.level is not None else 1
    cover = derive(job.alpha, level)
    g = cover.graph
    report = {
        "level": level,
        "num_vertices": g.num_vertices,
        "num_edges": g.num_edges,
        "connected": is_connected(g),
        "num_components": len(connected_components(g)),
    }
    if g.num_edges <= _EDGE_LIST_LIMIT:
        report["edges"] = [
            {"id": [str(e), list(ge.data)],
             "ends": [[str(v), list(gv.data)], [str(w), list(gw.data)]]}
            for (e, ge), ((v, gv), (w, gw)) in g.edges]
    return report


def _cmd_jacobian(job: JobConfig, args) -> dict:
    if args.level is None or args.level == 0:
        structure = jacobian_structure(job.alpha.base)
        pic = picard_structure(job.alpha.base)
        return {"level": 0,
                "jacobian": _structure_json(structure),
                "picard": _structure_json(pic),
                "order": structure.torsion_order}
    structure, e_n = level_jacobian(job.alpha, args.level)
    return {"level": args.level,
            "jacobian": _structure_json(structure),
            "order": structure.torsion_order,
            "e_n": e_n}


def _cmd_zeta(job: JobConfig, args) -> dict:
    if args.level is None or args.level == 0:
        graph = job.alpha.base
        level = 0
    else:
        graph = derive(job.alpha, args.level).graph
        level = args.level
    data = ihara_zeta_inverse(graph)
    return {"level": level, "chi": data.chi,
            "det_part": list(data.det_part.coeffs)}


def _cmd_lfun(job: JobConfig, args) -> dict:
    level = args.level if args.level is not None else 1
    out = []
    for chi in characters(job.alpha.spec, level):
        data = artin_l_inverse(job.alpha, level, chi)
        out.append({"character": _character_json(chi),
                    "chi_exponent": data.chi,
                    "det_part": [_cyc_json(c) for c in data.det_part]})
    return {"level": level, "l_functions": out}


def _cmd_check_interpolation(job: JobConfig, args) -> dict:
    level = args.level if args.level is not None else 1
    report = interpolation_check(job.alpha, level)
    return {"level": level,
            "all_pass": report.all_pass,
            "per_character": [{"character": _character_json(chi), "pass": ok}
                              for chi, ok in report.results]}


def _cmd_check_factorization(job: JobConfig, args) -> dict:
    level = args.level if args.level is not None else 1
    report = factorization_check(job.alpha, level)
    return {"level": level,
            "polynomial_match": report.polynomial_match,
            "exponent_match": report.exponent_match,
            "pass": report.passed}


def _cmd_tower(job: JobConfig, args) -> dict:
    max_level = args.max_level if args.max_level is not None else job.max_level
    report = tower_en(job.alpha, max_level)
    return {"p": report.p,
            "levels": list(report.levels),
            "e": list(report.e),
            "group_orders": list(report.group_orders),
            "jacobians": [list(t) for t in report.jacobians]}


def _cmd_iwasawa_fit(job: JobConfig, args) -> dict:
    out = _cmd_tower(job, args)
    fit = fit_iwasawa(tuple(out["e"]), out["p"])
    out["fit"] = {"mu": fit.mu, "lambda": fit.lam, "nu": fit.nu,
                  "stable": fit.stable, "residuals": list(fit.residuals)}
    return out


def _cmd_fitting(job: JobConfig, args) -> dict:
    level = args.level if args.level is not None else 1
    gens = fitting_generators(job.alpha, level)
    report: dict = {"level": level, "regular_det": gens.regular}
    if gens.components is not None:
        report["components"] = [
            {"character": _character_json(chi), "value": _cyc_json(value)}
            for chi, value in gens.components]
    return report


def _cmd_mhg_check(job: JobConfig, args) -> dict:
    if job.quotient is None:
        raise ConfigError("mhg-check requires a quotient spec in the config")
    verdict = mhg_check(job.alpha, job.quotient)
    det = lambda1_determinant(quotient_assignment(job.alpha, job.quotient))
    return {"verdict": verdict.verdict,
            "justification": verdict.justification,
            "mu1": verdict.mu1,
            "lambda1": verdict.lambda1,
            "mu_lower_bound": verdict.mu_lower_bound,
            "lambda1_det": {
                "gamma_low": det.gamma_det.low,
                "gamma_coeffs": list(det.gamma_det.coeffs),
                "cleared_power": det.cleared_power,
                "f_coeffs": list(det.f.coeffs)}}


_HANDLERS = {
    "derive": _cmd_derive,
    "jacobian": _cmd_jacobian,
    "zeta": _cmd_zeta,
    "lfun": _cmd_lfun,
    "check-interpolation": _cmd_check_interpolation,
    "check-factorization": _cmd_check_factorization,
    "tower": _cmd_tower,
    "iwasawa-fit": _cmd_iwasawa_fit,
    "fitting": _cmd_fitting,
    "mhg-check": _cmd_mhg_check,
}


def _to_tsv(report: dict, prefix: str = "") -> list[str]:
    """Flatten a JSON report into aligned key/value TSV lines."""
    lines = []
    for key, value in report.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            lines.extend(_to_tsv(value, prefix=name + "."))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                lines.extend(_to_tsv(item, prefix=f"{name}[{i}]."))
        else:
            lines.append(f"{name}\t{json.dumps(value)}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphtower",
        description="Exact voltage-cover computations over p-group towers")
    parser.add_argument("subcommand", choices=sorted(_HANDLERS))
    parser.add_argument("--config", required=True, help="JSON job config path")
    parser.add_argument("--level", type=int, default=None)
    parser.add_argument("--max-level", type=int, default=None)
    parser.add_argument("--out", default=None, help="directory for report files")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized suites (reserved)")
    parser.add_argument("--format", choices=["json", "tsv"], default="json")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = parse_config(args.config)
        body = _HANDLERS[args.subcommand](job, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except BoundExceededError as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return 3
    except (DisconnectedError, GraphTowerError, ValueError) as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return 2
    report = {"subcommand": args.subcommand,
              "config_hash": job.config_hash,
              "version": __version__,
              **body}
    json_text = json.dumps(report, indent=2, sort_keys=True)
    tsv_text = "\n".join(_to_tsv(report))
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / f"{args.subcommand}.json").write_text(json_text + "\n")
        (out_dir / f"{args.subcommand}.tsv").write_text(tsv_text + "\n")
    print(tsv_text if args.format == "tsv" else json_text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
