"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 resource
limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import engine, ppcore, stats, verify
from .engine import TooLarge, default_limit
from .ppcore import BoxDims

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    dims: BoxDims | None
    command: str
    seed: int = 0
    fmt: str = "json"
    limit: int = engine.DEFAULT_LIMIT
    force: bool = False
    add_float: bool = False

    def __post_init__(self):
        if self.limit < 1:
            raise UsageError("--limit must be at least 1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dims(ns) -> BoxDims:
    try:
        return BoxDims(ns.a, ns.b, ns.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _rat(value: Fraction, add_float: bool) -> dict | str:
    if add_float:
        return {"exact": str(value), "float": float(value)}
    return str(value)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def cmd_count(cfg: RunConfig) -> tuple[str, int]:
    n = engine.count_box(cfg.dims, limit=cfg.limit, force=cfg.force)
    if cfg.fmt == "json":
        a, b, c = cfg.dims
        return _dump({"schema": f"hexamoment.count/{SCHEMA_VERSION}", "a": a, "b": b, "c": c, "count": str(n)}), EXIT_OK
    return f"{n}\n", EXIT_OK


def cmd_prob_table(cfg: RunConfig) -> tuple[str, int]:
    dims = cfg.dims
    a, b, c = dims
    marg = engine.cell_marginals(dims, limit=cfg.limit, force=cfg.force)
    table = stats.prob_table(dims, marginals=marg)
    total = table.total()
    rows = table.items()
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "c", "x", "y", "p_num", "p_den"])
        for (x, y), p in rows:
            w.writerow([a, b, c, x, y, p.numerator, p.denominator])
        w.writerow([a, b, c, "*", "*", total.numerator, total.denominator])
        return buf.getvalue(), EXIT_OK
    if cfg.fmt == "text":
        lines = [f"{x} {y} {p}" for (x, y), p in rows]
        lines.append(f"total {total}")
        return "\n".join(lines) + "\n", EXIT_OK
    doc = {
        "schema": f"hexamoment.prob-table/{SCHEMA_VERSION}",
        "a": a, "b": b, "c": c,
        "rows": [{"x": x, "y": y, "p": _rat(p, cfg.add_float)} for (x, y), p in rows],
        "total": _rat(total, cfg.add_float),
    }
    return _dump(doc), EXIT_OK


def cmd_moments(cfg: RunConfig) -> tuple[str, int]:
    engine.dp_table(cfg.dims, limit=cfg.limit, force=cfg.force)
    rep = stats.moment_report(cfg.dims)
    d = rep.as_dict()
    if cfg.fmt == "text":
        lines = [f"{k} {v}" for k, v in d.items() if k not in ("a", "b", "c")]
        return "\n".join(lines) + "\n", EXIT_OK
    doc = {"schema": f"hexamoment.moments/{SCHEMA_VERSION}"}
    for k, v in d.items():
        doc[k] = _rat(Fraction(v), cfg.add_float) if isinstance(v, str) else v
    return _dump(doc), (EXIT_OK if rep.consistent else EXIT_VERIFY)


def cmd_verify(cfg: RunConfig, max_side: int, fault: bool) -> tuple[str, int]:
    dims_list = [tuple(cfg.dims)] if cfg.dims is not None else verify.sweep(max_side)
    for d in dims_list:
        engine.dp_table(d, limit=cfg.limit, force=cfg.force)
    checks = verify.run(dims_list, fault=fault)
    ok = all(ch.passed for ch in checks)
    if cfg.fmt == "text":
        lines = []
        for ch in checks:
            where = "" if ch.dims is None else " " + ",".join(map(str, ch.dims))
            line = f"{'PASS' if ch.passed else 'FAIL'} {ch.name}{where}"
            if not ch.passed:
                line += f" expected={ch.expected} actual={ch.actual} {ch.detail}".rstrip()
            lines.append(line)
        lines.append("ALL PASS" if ok else "FAILURES")
        out = "\n".join(lines) + "\n"
    else:
        out = _dump({
            "schema": f"hexamoment.verify/{SCHEMA_VERSION}",
            "passed": ok,
            "checks": [ch.as_dict() for ch in sorted(checks, key=lambda ch: (tuple(ch.dims or ()), ch.name))],
        })
    return out, (EXIT_OK if ok else EXIT_VERIFY)


def cmd_sample(cfg: RunConfig, count: int, render: str | None) -> tuple[str, int]:
    if count < 1:
        raise UsageError("--count must be at least 1")
    engine.dp_table(cfg.dims, limit=cfg.limit, force=cfg.force)
    pps = [engine.sample_uniform(cfg.dims, cfg.seed, stream=k) for k in range(count)]
    if render == "svg":
        if count != 1:
            raise UsageError("--render svg writes a single document; use --count 1")
        return ppcore.render_svg(ppcore.tiling_from_pp(pps[0])), EXIT_OK
    if render == "ascii":
        return "\n".join(ppcore.render_ascii(ppcore.tiling_from_pp(pp)) for pp in pps), EXIT_OK
    a, b, c = cfg.dims
    doc = {
        "schema": f"hexamoment.sample/{SCHEMA_VERSION}",
        "a": a, "b": b, "c": c, "seed": cfg.seed,
        "samples": [
            {
                "index": k,
                "entries": pp.to_lists(),
                "horizontals": [list(p) for p in sorted(ppcore.horizontal_positions(pp))],
            }
            for k, pp in enumerate(pps)
        ],
    }
    return _dump(doc), EXIT_OK


def _common(sub: bool) -> argparse.ArgumentParser:
    # subcommand copies must not clobber values given before the subcommand
    dflt = (lambda v: argparse.SUPPRESS) if sub else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=dflt(None),
                        help="enumeration / state-grid size limit (default: $HEXAMOMENT_LIMIT or 10^7)")
    common.add_argument("--force", action="store_true", default=dflt(False), help="ignore the size limit")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default=dflt(None))
    common.add_argument("--float", dest="add_float", action="store_true", default=dflt(False),
                        help="add a decimal field next to every exact rational in JSON")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hexamoment", description="Exact lozenge-tiling statistics for the a,b,c,a,b,c hexagon.", parents=[_common(False)])
    common = _common(True)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_dims(name, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        for side in ("a", "b", "c"):
            sp.add_argument(side, type=int)
        return sp

    with_dims("count", "number of plane partitions in the box")
    with_dims("prob-table", "exact placement probabilities of horizontal lozenges")
    with_dims("moments", "horizontal and vertical moments of inertia")

    v = sub.add_parser("verify", help="check every identity against the DP and brute force", parents=[common])
    v.add_argument("sides", type=int, nargs="*", metavar="A B C")
    v.add_argument("--max", type=int, default=3, help="sweep all boxes with sides up to MAX")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    s = with_dims("sample", "uniform random plane partitions / tilings")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--render", choices=("ascii", "svg"), default=None)
    return p


_DEFAULT_FORMAT = {"count": "text"}


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        dims = None
        if ns.command == "verify":
            if ns.sides:
                if len(ns.sides) != 3:
                    raise UsageError("verify takes either A B C or --max N")
                ns.a, ns.b, ns.c = ns.sides
                dims = _dims(ns)
            elif ns.max < 1:
                raise UsageError("--max must be at least 1")
        else:
            dims = _dims(ns)
        cfg = RunConfig(
            dims=dims,
            command=ns.command,
            seed=getattr(ns, "seed", 0),
            fmt=ns.fmt or _DEFAULT_FORMAT.get(ns.command, "json"),
            limit=default_limit() if ns.limit is None else ns.limit,
            force=ns.force,
            add_float=ns.add_float,
        )
        if cfg.fmt == "csv" and ns.command != "prob-table":
            raise UsageError("csv output is only available for prob-table")
        if ns.command == "count":
            out, code = cmd_count(cfg)
        elif ns.command == "prob-table":
            out, code = cmd_prob_table(cfg)
        elif ns.command == "moments":
            out, code = cmd_moments(cfg)
        elif ns.command == "verify":
            out, code = cmd_verify(cfg, ns.max, ns.inject_fault)
        else:
            out, code = cmd_sample(cfg, ns.count, ns.render)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hexamoment: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"hexamoment: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
