"""Command line front end.

    gradedposets count --family graded_interval --kind labeled_egf --method transfer --n-max 6
    gradedposets crosscheck --n-max 6
    gradedposets bfile --family graded_semiorder --kind unlabeled_ogf --method closed_form --n-max 20
    gradedposets cache build --n-max 6

Exit status is 0 on success, 1 when a crosscheck finds a mismatch and 2 for
configuration errors.  A JSON file given with ``--config`` supplies defaults
for any flag; ``GRADEDPOSETS_CACHE_DIR`` sets where the census cache lives.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import oracle, reference
from .routes import FAMILIES, KINDS, TRICTIONARY, Engine, RunConfig, UnsupportedMethod, available_methods
from .series import NonIntegralCoefficient

OK, MISMATCH, CONFIG_ERROR = 0, 1, 2
CACHE_ENV = "GRADEDPOSETS_CACHE_DIR"
CACHE_FILE = "census.json"


class ConfigError(ValueError):
    pass


def default_cache() -> str | None:
    d = os.environ.get(CACHE_ENV)
    return str(Path(d) / CACHE_FILE) if d else None


# -- rendering --------------------------------------------------------------------


def render(values: list[int], config: RunConfig) -> str:
    if config.format == "bfile":
        return "".join(f"{n + config.offset} {v}\n" for n, v in enumerate(values))
    if config.format == "json":
        doc = {
            "family": config.family,
            "kind": config.kind,
            "method": config.method,
            "n_max": config.n_max,
            "height": config.height,
            "offset": config.offset,
            "values": values,
        }
        return json.dumps(doc) + "\n"
    width = max([len(str(n + config.offset)) for n in range(len(values))] + [1])
    return "".join(f"{n + config.offset:>{width}}  {v}\n" for n, v in enumerate(values))


def cmd_count(config: RunConfig, engine: Engine | None = None) -> str:
    engine = engine or Engine(config.cache, config.workers)
    return render(engine.counts(config), config)


def cmd_bfile(config: RunConfig, engine: Engine | None = None) -> str:
    if config.format != "bfile":
        config = RunConfig(**{**config.__dict__, "format": "bfile"})
    return cmd_count(config, engine)


# -- crosscheck -------------------------------------------------------------------


@dataclass
class Check:
    family: str
    kind: str
    values: dict[str, list[int]]
    mismatches: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _compare(check: Check, name_a: str, a: list[int], name_b: str, b: list[int]):
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            check.mismatches.append(f"{name_a} vs {name_b} at n={n}: {x} != {y}")


def crosscheck_one(engine: Engine, family: str, kind: str, n_max: int, oracle_n_max: int) -> Check:
    values = {}
    for m in available_methods(family, kind):
        order = min(n_max, oracle_n_max) if m == "oracle" else n_max
        if order < 0:
            continue
        if m.startswith(TRICTIONARY):
            src = m[len(TRICTIONARY):]
            if engine.source_method(family, src) == "oracle":
                order = min(order, oracle_n_max)
        s = engine.series(family, kind, m, order)
        values[m] = s.ogf_counts() if kind == "unlabeled_ogf" else s.egf_counts()
    check = Check(family, kind, values)
    names = list(values)
    for other in names[1:]:
        _compare(check, names[0], values[names[0]], other, values[other])
    ref = reference.reference_counts(family, kind)
    if ref is not None and names:
        _compare(check, names[0], values[names[0]], "reference", ref)
        printed_kind = kind if kind != "seed_egf" else None
        for (f, k, n), v in reference.CORRECTED.items():
            if f == family and k == printed_kind:
                check.notes.append(f"reference prints {reference.PRINTED[(f, k)][n]} at n={n}; correct value is {v}")
    return check


def cmd_crosscheck(families: list[str], n_max: int, *, oracle_n_max: int = 6, engine: Engine | None = None) -> list[Check]:
    engine = engine or Engine()
    out = []
    for fam in families:
        for kind in KINDS:
            if available_methods(fam, kind):
                out.append(crosscheck_one(engine, fam, kind, n_max, oracle_n_max))
    return out


def render_crosscheck(checks: list[Check], fmt: str) -> str:
    if fmt == "json":
        doc = [
            {
                "family": c.family,
                "kind": c.kind,
                "ok": c.ok,
                "values": c.values,
                "mismatches": c.mismatches,
                "notes": c.notes,
            }
            for c in checks
        ]
        return json.dumps(doc, indent=1) + "\n"
    lines = []
    for c in checks:
        status = "agree" if c.ok else "MISMATCH"
        lines.append(f"{c.family} {c.kind}: {status} ({', '.join(c.values)})")
        lines += [f"    {m}" for m in c.mismatches]
        lines += [f"    note: {m}" for m in c.notes]
    return "\n".join(lines) + "\n"


# -- argument handling ------------------------------------------------------------


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"config file {path} not found") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("config file must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in doc.items()}


def _sequence_args(p: argparse.ArgumentParser):
    p.add_argument("--family", help="poset family; all_graded is an alias for graded")
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--method", help="transfer, closed_form, oracle or trictionary-from:<kind>")
    p.add_argument("--n-max", type=int)
    p.add_argument("--height", type=int, help="count only posets with this many levels")
    p.add_argument("--offset", type=int, help="index of the first term in the output")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default flag values")
    common.add_argument("--cache", help=f"census cache file (default: ${CACHE_ENV}/{CACHE_FILE})")
    common.add_argument("--workers", type=int, help="processes for the labeled oracle")

    ap = argparse.ArgumentParser(prog="gradedposets", description="Count graded posets by several independent methods.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="print a sequence")
    _sequence_args(p)
    p.add_argument("--format", choices=("table", "json", "bfile"))

    p = sub.add_parser("bfile", parents=[common], help="print an OEIS-style b-file")
    _sequence_args(p)

    p = sub.add_parser("crosscheck", parents=[common], help="compare every method with every other")
    p.add_argument("--family", action="append", dest="families", help="repeatable; default all")
    p.add_argument("--n-max", type=int)
    p.add_argument("--oracle-n-max", type=int, help="largest n for oracle participation (default 6)")
    p.add_argument("--format", choices=("table", "json"))

    p = sub.add_parser("cache", parents=[common], help="build or inspect the census cache")
    p.add_argument("action", choices=("build", "show", "verify"))
    p.add_argument("--n-max", type=int)
    p.add_argument("--format", choices=("table", "json"))

    sub.add_parser("methods", parents=[common], help="list the methods available per family and kind")
    return ap


def _merged(args: argparse.Namespace) -> dict:
    opts = _load_config(args.config)
    for k, v in vars(args).items():
        if v is not None:
            opts[k] = v
    opts.setdefault("cache", default_cache())
    opts.setdefault("workers", 1)
    return opts


def _run_config(opts: dict, fmt: str | None = None) -> RunConfig:
    missing = [k for k in ("family", "kind", "n_max") if opts.get(k) is None]
    if missing:
        raise ConfigError("missing " + ", ".join("--" + k.replace("_", "-") for k in missing))
    method = opts.get("method") or available_methods(opts["family"], opts["kind"])[0]
    return RunConfig(
        family=opts["family"],
        kind=opts["kind"],
        method=method,
        n_max=int(opts["n_max"]),
        height=opts.get("height"),
        format=fmt or opts.get("format", "table"),
        cache=opts.get("cache"),
        offset=int(opts.get("offset", 0)),
        workers=int(opts["workers"]),
    )


def _cache_command(opts: dict) -> str:
    path = opts.get("cache")
    if not path:
        raise ConfigError(f"no cache path; pass --cache or set {CACHE_ENV}")
    if opts["action"] == "build":
        n = int(opts.get("n_max", 6))
        table = oracle.census(n, workers=int(opts["workers"]))
        oracle.save(table, path)
        return f"wrote census n=0..{n} to {path}\n"
    table = oracle.load(path)
    if opts["action"] == "verify":
        return f"{path}: census n=0..{table.n_max} ok ({table.method}, {table.timestamp})\n"
    if opts.get("format") == "json":
        return json.dumps(table.to_json(), indent=1) + "\n"
    lines = [f"# census n=0..{table.n_max}, {table.method}, {table.timestamp}"]
    for fam in oracle.FAMILIES:
        for kind in oracle.KINDS:
            lines.append(f"{fam:20} {kind:14} " + " ".join(map(str, table.sequence(fam, kind))))
    return "\n".join(lines) + "\n"


def _methods_listing() -> str:
    lines = []
    for fam in FAMILIES:
        for kind in KINDS:
            ms = available_methods(fam, kind)
            if ms:
                lines.append(f"{fam:22} {kind:14} {' '.join(ms)}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        opts = _merged(args)
        if args.command == "count":
            sys.stdout.write(cmd_count(_run_config(opts)))
        elif args.command == "bfile":
            sys.stdout.write(cmd_bfile(_run_config(opts, "bfile")))
        elif args.command == "crosscheck":
            fams = opts.get("families") or list(FAMILIES)
            engine = Engine(opts.get("cache"), int(opts["workers"]))
            checks = cmd_crosscheck(
                fams, int(opts.get("n_max", 6)), oracle_n_max=int(opts.get("oracle_n_max", 6)), engine=engine
            )
            sys.stdout.write(render_crosscheck(checks, opts.get("format", "table")))
            return OK if all(c.ok for c in checks) else MISMATCH
        elif args.command == "cache":
            sys.stdout.write(_cache_command(opts))
        else:
            sys.stdout.write(_methods_listing())
    except (ConfigError, UnsupportedMethod, oracle.LimitExceeded, oracle.CorruptCache, oracle.CacheNotFound) as exc:
        print(f"gradedposets: {exc}", file=sys.stderr)
        return CONFIG_ERROR
    except NonIntegralCoefficient as exc:
        # a count that is not an integer means something upstream is broken
        print(f"gradedposets: integrality check failed: {exc}", file=sys.stderr)
        return MISMATCH
    return OK


if __name__ == "__main__":
    sys.exit(main())
