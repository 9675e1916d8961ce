"""Command-line front end.

Every command prints one JSON document (or CSV for ``char --format csv``).
Rationals are written as "p/q" strings and partitions as "a,b,c".

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a resource
cap or budget was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import characters, engine, genfun, oracle, ribbon, symfun
from . import class_algebra as ca
from .core import Partition, ResourceLimitError, parse_profiles, parse_rational
from .engine import HurwitzQuery, SurfaceSignature

SCHEMA = "hurwitz-atlas/1"
EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    command: str
    surface: Optional[SurfaceSignature] = None
    profiles: list = field(default_factory=list)
    degree: Optional[int] = None
    budget: Optional[int] = None
    char_cap: Optional[int] = None
    degree_cap: Optional[int] = None
    output_format: str = "json"
    suite: str = "all"
    options: dict = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hurwitz-atlas", description="Exact Hurwitz numbers of closed surfaces.")
    ap.add_argument("--char-cap", type=int, help="largest d for character tables (env HZ_CHAR_CAP)")
    ap.add_argument("--degree-cap", type=int, help="largest tracked series degree (env HZ_DEGREE_CAP)")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    h = sub.add_parser("hurwitz", help="character formula for H")
    h.add_argument("--surface", required=True)
    h.add_argument("--profiles", default="")
    h.add_argument("--degree", type=int)
    h.add_argument("--max-length", type=int)
    h.add_argument("--weight-file", help="JSON object mapping partitions to rational weights")
    h.add_argument("--exponent", type=int, help="power of dim/d! used with --weight-file")

    o = sub.add_parser("oracle", help="count factorizations in S_d")
    o.add_argument("--surface", required=True)
    o.add_argument("--profiles", default="")
    o.add_argument("--degree", type=int)
    o.add_argument("--naive", action="store_true")
    o.add_argument("--budget", type=int, help="enumeration budget (env HZ_BUDGET)")

    c = sub.add_parser("char", help="character table of S_d")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--format", choices=("json", "csv"), default="json")

    m = sub.add_parser("classmul", help="product of two class sums")
    m.add_argument("--d", type=int, required=True)
    m.add_argument("--a", required=True)
    m.add_argument("--b", required=True)
    m.add_argument("--brute-force", action="store_true")

    g = sub.add_parser("map", help="inspect a ribbon graph given by its face cycles")
    g.add_argument("--faces", required=True)
    g.add_argument("action", nargs="?", choices=("verify", "dual", "euler"), default="verify")

    w = sub.add_parser("wick", help="count coverings of a ribbon graph")
    w.add_argument("--faces", required=True)
    w.add_argument("--degree", type=int, required=True)
    w.add_argument("--profiles", required=True, help="star profiles")
    w.add_argument("--face-profiles")
    w.add_argument("--budget", type=int)

    s = sub.add_parser("series", help="generating functions")
    s.add_argument("--kind", choices=("bkp", "rp2", "simple"), required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--max-u", type=int, default=3)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all")
    v.add_argument("--max-degree", type=int, default=4)
    return ap


def parse_config(argv: Sequence[str]) -> CliConfig:
    ns = build_parser().parse_args(list(argv))
    cfg = CliConfig(ns.command, char_cap=ns.char_cap, degree_cap=ns.degree_cap)
    if getattr(ns, "surface", None):
        cfg.surface = SurfaceSignature.parse(ns.surface)
    if ns.command in ("hurwitz", "oracle", "wick"):
        cfg.profiles = parse_profiles(ns.profiles)
    cfg.degree = getattr(ns, "degree", None)
    cfg.budget = getattr(ns, "budget", None)
    cfg.output_format = getattr(ns, "format", "json")
    cfg.suite = getattr(ns, "suite", "all")
    cfg.options = {k: v for k, v in vars(ns).items() if k not in ("command", "surface", "profiles", "degree", "budget")}
    for name in ("char_cap", "degree_cap", "budget", "degree"):
        value = getattr(cfg, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
    if ns.command in ("hurwitz", "oracle"):
        # validates weights and degree before any computation
        HurwitzQuery(cfg.surface, tuple(cfg.profiles), cfg.degree)
    return cfg


# -- output ------------------------------------------------------------------


def emit(result: dict) -> str:
    return json.dumps({"schema": SCHEMA, **result}, indent=2, ensure_ascii=False) + "\n"


def _profiles_json(profiles) -> list[str]:
    return [str(Partition(p)) for p in profiles]


def _load_weights(path: str) -> dict:
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise UsageError("weight file must hold a JSON object")
    return {Partition.parse(k): parse_rational(str(v)) for k, v in raw.items()}


# -- commands ----------------------------------------------------------------


def _cmd_hurwitz(cfg: CliConfig) -> tuple[int, str]:
    q = HurwitzQuery(cfg.surface, tuple(cfg.profiles), cfg.degree)
    opts = cfg.options
    out = {
        "command": "hurwitz",
        "surface": str(q.surface),
        "euler_char": q.euler_char,
        "degree": q.degree,
        "profiles": _profiles_json(q.profiles),
    }
    if opts.get("weight_file"):
        exponent = q.euler_char if opts.get("exponent") is None else opts["exponent"]
        weights = _load_weights(opts["weight_file"])
        value = engine.weighted_hurwitz(exponent, weights, q.profiles, q.degree, opts.get("max_length"))
        out["exponent"] = exponent
    else:
        if opts.get("exponent") is not None:
            raise UsageError("--exponent needs --weight-file")
        value = engine.hurwitz(q, opts.get("max_length"))
    if opts.get("max_length") is not None:
        out["max_length"] = opts["max_length"]
    out["value"] = str(value)
    return EXIT_OK, emit(out)


def _cmd_oracle(cfg: CliConfig) -> tuple[int, str]:
    prob = oracle.FactorizationProblem(cfg.surface, tuple(cfg.profiles), cfg.degree)
    naive = cfg.options.get("naive", False)
    count = oracle.oracle_count(prob, naive=naive, budget=cfg.budget)
    value = Fraction(count, math.factorial(prob.degree))
    return EXIT_OK, emit(
        {
            "command": "oracle",
            "surface": str(prob.surface),
            "euler_char": prob.surface.euler_char,
            "degree": prob.degree,
            "profiles": _profiles_json(prob.profiles),
            "naive": naive,
            "count": count,
            "value": str(value),
        }
    )


def _cmd_char(cfg: CliConfig) -> tuple[int, str]:
    d = cfg.options["d"]
    table = characters.character_table(d, cfg.char_cap)
    labels = [str(p) for p in table.partitions]
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda", "dim", *labels])
        for lam, dim, row in zip(labels, table.dims, table.chi):
            writer.writerow([lam, dim, *row])
        return EXIT_OK, buf.getvalue()
    rows = {lam: {"dim": dim, "chi": dict(zip(labels, row))} for lam, dim, row in zip(labels, table.dims, table.chi)}
    return EXIT_OK, emit({"command": "char", "degree": d, "classes": labels, "rows": rows})


def _cmd_classmul(cfg: CliConfig) -> tuple[int, str]:
    d = cfg.options["d"]
    a, b = Partition.parse(cfg.options["a"]), Partition.parse(cfg.options["b"])
    for p in (a, b):
        if p.weight != d:
            raise UsageError(f"class {p} is not a partition of {d}")
    x, y = ca.ClassAlgebraElement.class_sum(a), ca.ClassAlgebraElement.class_sum(b)
    product = ca.brute_force_multiply(x, y) if cfg.options.get("brute_force") else ca.class_multiply(x, y)
    return EXIT_OK, emit(
        {"command": "classmul", "degree": d, "a": str(a), "b": str(b), "product": product.to_json()}
    )


def _cmd_map(cfg: CliConfig) -> tuple[int, str]:
    g = ribbon.from_face_text(cfg.options["faces"])
    action = cfg.options["action"]
    out = {
        "command": "map",
        "action": action,
        "edges": g.n,
        "faces": ribbon.format_cycles(g.faces),
        "stars": ribbon.format_cycles(g.stars),
        "V": g.V,
        "F": g.F,
        "euler_char": g.euler_char,
        "connected": g.is_connected(),
    }
    if action == "euler":
        return EXIT_OK, emit(out)
    if action == "dual":
        words = ribbon.dual_words(g)
        out["face_words"] = [list(w) for w in words.face_words]
        out["star_words"] = [list(w) for w in words.star_words]
        return EXIT_OK, emit(out)
    ok = g.map_identity_holds() and g.euler_char == g.V - g.n + g.F
    try:
        ribbon.dual_words(g)
        out["duality"] = True
    except ribbon.ConventionError:
        out["duality"] = ok = False
    out["ok"] = ok
    return (EXIT_OK if ok else EXIT_FAILED), emit(out)


def _cmd_wick(cfg: CliConfig) -> tuple[int, str]:
    g = ribbon.from_face_text(cfg.options["faces"])
    d = cfg.degree
    stars = cfg.profiles
    out = {"command": "wick", "faces": ribbon.format_cycles(g.faces), "degree": d, "profiles": _profiles_json(stars)}
    for p in stars:
        if p.weight != d:
            raise UsageError(f"profile {p} is not a partition of {d}")
    if cfg.options.get("face_profiles"):
        fprofs = parse_profiles(cfg.options["face_profiles"])
        if len(fprofs) != g.F or any(p.weight != d for p in fprofs):
            raise UsageError(f"need {g.F} face profiles of weight {d}")
        value = ribbon.wick_hurwitz_with_face_profiles(g, d, fprofs, stars, cfg.budget)
        out["face_profiles"] = _profiles_json(fprofs)
        out["engine_value"] = str(engine.hurwitz_e(g.euler_char, list(fprofs) + list(stars), d))
    else:
        value = ribbon.wick_hurwitz(g, d, stars, cfg.budget)
        out["engine_value"] = str(engine.hurwitz_e(g.euler_char, stars, d))
    out["euler_char"] = g.euler_char
    out["value"] = str(value)
    out["agrees"] = out["value"] == out["engine_value"]
    return (EXIT_OK if out["agrees"] else EXIT_FAILED), emit(out)


def _cmd_series(cfg: CliConfig) -> tuple[int, str]:
    kind, top = cfg.options["kind"], cfg.options["max_degree"]
    out = {"command": "series", "kind": kind}
    if kind == "bkp":
        out["series"] = genfun.bkp_vacuum_series(top).to_json()
    elif kind == "rp2":
        table = genfun.rp2_single_branch_table(top)
        out["entries"] = [
            {
                "degree": e.degree,
                "profile": str(e.profile),
                "value": str(e.value),
                "c_power": e.c_power,
                "inverse_h_power": e.inverse_h_power,
                "branched": e.branched,
            }
            for e in table.values()
        ]
    else:
        out["series"] = genfun.simple_hurwitz_series(top, cfg.options["max_u"]).to_json()
    return EXIT_OK, emit(out)


def _cmd_verify(cfg: CliConfig) -> tuple[int, str]:
    from .verify import SUITES, run_suites

    names = list(SUITES) if cfg.suite == "all" else cfg.suite.split(",")
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {list(SUITES)} or 'all'")
    results = run_suites(names, cfg.options["max_degree"])
    ok = all(r.ok for r in results)
    out = {"command": "verify", "max_degree": cfg.options["max_degree"], "ok": ok, "suites": [r.to_json() for r in results]}
    return (EXIT_OK if ok else EXIT_FAILED), emit(out)


COMMANDS = {
    "hurwitz": _cmd_hurwitz,
    "oracle": _cmd_oracle,
    "char": _cmd_char,
    "classmul": _cmd_classmul,
    "map": _cmd_map,
    "wick": _cmd_wick,
    "series": _cmd_series,
    "verify": _cmd_verify,
}


_CAP_HOMES = {
    "char_cap": ((characters, "DEFAULT_CHAR_CAP"), (engine, "DEFAULT_CHAR_CAP")),
    "degree_cap": ((symfun, "DEFAULT_DEGREE_CAP"), (genfun, "DEFAULT_DEGREE_CAP")),
}


def _apply_caps(cfg: CliConfig) -> list:
    """Override the module-level caps; returns what is needed to restore them."""
    saved = []
    for name, homes in _CAP_HOMES.items():
        value = getattr(cfg, name)
        if value is None:
            continue
        for module, attr in homes:
            saved.append((module, attr, getattr(module, attr)))
            setattr(module, attr, value)
    return saved


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    saved = []
    try:
        cfg = parse_config(argv)
        saved = _apply_caps(cfg)
        code, text = COMMANDS[cfg.command](cfg)
    except ResourceLimitError as exc:
        stderr.write(f"resource limit: {exc}\n")
        return EXIT_LIMIT
    except (ValueError, KeyError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    finally:
        for module, attr, value in saved:
            setattr(module, attr, value)
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
