"""Command-line front end.

  segrecodes points --kind space --s 3 --q 2
  segrecodes code   --x torus:3 --q 3 --d 1
  segrecodes segre  --q 2 --x1 space:2 --x2 space:2 --d 1
  segrecodes sweep  configs.json --format csv --cache runs.jsonl
  segrecodes selftest

Exit codes: 0 ok, 1 a verified clause failed (or a selftest check),
2 bad arguments or input, 3 budget exceeded under --strict.
Errors print one line ``error: <Kind>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .errors import SegreCodesError
from .gf import make_field
from .matcodes import default_budgets, write_matrix
from .projgeom import format_pointset
from .rmtype import code_parameters, evaluation_code
from .verify import (
    CSV_COLUMNS,
    FAIL,
    PASS,
    SKIP,
    ERROR,
    SegreConfig,
    build_set,
    csv_row,
    load_configs,
    verify_segre,
)

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--budget-dist", type=_positive, help="max messages for minimum distance")
    p.add_argument("--budget-subspaces", type=_positive, help="max subspaces for delta_2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true", help="treat budget overruns as errors")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="segrecodes", description="Projective Segre codes over finite fields.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    pp = sub.add_parser("points", help="build a point set and write it")
    pp.add_argument("--kind", required=True, choices=("space", "torus", "param", "random", "file"))
    pp.add_argument("--q", type=int)
    pp.add_argument("--s", type=int)
    pp.add_argument("--exps", help='exponent rows, e.g. "1,1,0;0,1,1;1,0,1"')
    pp.add_argument("--count", type=int, help="points in a random subset")
    pp.add_argument("--file")
    _common(pp)

    pc = sub.add_parser("code", help="parameters of C_X(d)")
    pc.add_argument("--x", help="point set as kind:params (space:3, torus:3, param:..., file:PATH)")
    pc.add_argument("--kind", choices=("space", "torus", "param", "random", "file"))
    pc.add_argument("--q", type=int)
    pc.add_argument("--s", type=int)
    pc.add_argument("--exps")
    pc.add_argument("--count", type=int)
    pc.add_argument("--file")
    pc.add_argument("--d", type=int, required=True)
    pc.add_argument("--matrix", help="also write the generator matrix here (plus a .json sidecar)")
    _common(pc)

    ps = sub.add_parser("segre", help="check the direct-product structure for one configuration")
    ps.add_argument("--q", type=int, required=True)
    ps.add_argument("--x1", required=True)
    ps.add_argument("--x2", required=True)
    ps.add_argument("--d", type=int, required=True)
    _common(ps)

    pw = sub.add_parser("sweep", help="run segre checks for every config in a JSON file")
    pw.add_argument("config", help="JSON list of {q, x1, x2, d, ...} records")
    pw.add_argument("--cache", help="JSON-lines cache of finished configs")
    _common(pw)

    pt = sub.add_parser("selftest", help="run the invariant checks")
    _common(pt)
    return p


def _set_spec(args) -> str:
    if getattr(args, "x", None):
        return args.x
    kind = args.kind
    if kind is None:
        raise UsageError("give --x or --kind")
    if kind == "file":
        if not args.file:
            raise UsageError("--kind file needs --file")
        return f"file:{args.file}"
    if kind == "param":
        if not args.exps:
            raise UsageError("--kind param needs --exps")
        return f"param:{args.exps}"
    if args.s is None:
        raise UsageError(f"--kind {kind} needs --s")
    if kind == "random":
        if args.count is None:
            raise UsageError("--kind random needs --count")
        return f"random:{args.s}:{args.count}"
    return f"{kind}:{args.s}"


def _load_set(args):
    spec = _set_spec(args)
    if spec.startswith("file:"):
        from .projgeom import read_pointset

        X = read_pointset(spec[5:])
        if args.q is not None and args.q != X.field.q:
            raise UsageError(f"--q {args.q} disagrees with file field q={X.field.q}")
        return X
    if args.q is None:
        raise UsageError("--q is required")
    return build_set(spec, make_field(args.q), args.seed)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _budgets(args) -> tuple[int, int]:
    dist, sub = default_budgets()
    return args.budget_dist or dist, args.budget_subspaces or sub


def _text_record(rec: dict) -> str:
    return "".join(f"{k}={_fmt(v)}\n" for k, v in rec.items())


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_points(args) -> int:
    X = _load_set(args)
    if args.out:
        Path(args.out).write_text(format_pointset(X))
        print(f"size={len(X)} label={X.label}")
    else:
        sys.stdout.write(format_pointset(X))
        print(f"size={len(X)} label={X.label}", file=sys.stderr)
    return 0


def cmd_code(args) -> int:
    if args.d < 0:
        raise UsageError("--d must be nonnegative")
    X = _load_set(args)
    dist, _ = _budgets(args)
    rec = {"label": X.label, "q": X.field.q, "s": X.ambient_dim, "d": args.d}
    rec.update(code_parameters(X, args.d, dist))
    over = rec["delta"] is None
    if over:
        rec["delta"] = "budget"
    if args.matrix:
        C = evaluation_code(X, args.d)
        write_matrix(C.generators, args.matrix)
        Path(args.matrix + ".json").write_text(json.dumps(C.sidecar(), indent=2) + "\n")
    if args.format == "json":
        text = json.dumps(rec, indent=2) + "\n"
    elif args.format == "csv":
        flat = {k: _fmt(v) for k, v in rec.items()}
        text = _csv(list(flat), [list(flat.values())])
    else:
        text = _text_record(rec)
    _emit(args, text)
    if over and args.strict:
        print("error: BudgetExceeded: minimum distance enumeration over budget", file=sys.stderr)
        return EXIT_BUDGET
    return 0


def _config(args, q, x1, x2, d) -> SegreConfig:
    dist, sub = _budgets(args)
    return SegreConfig(q, x1, x2, d, budget_dist=dist, budget_subspaces=sub, seed=args.seed)


def _render_reports(args, recs: list[dict]) -> str:
    if args.format == "json":
        return json.dumps(recs, indent=2) + "\n"
    if args.format == "csv":
        return _csv(CSV_COLUMNS, [csv_row(r) for r in recs])
    lines = []
    for r in recs:
        cfg = r["config"]
        lines.append(f"config q={cfg['q']} x1={cfg['x1']} x2={cfg['x2']} d={cfg['d']} status={r['status']}")
        if r.get("error"):
            lines.append(f"  error: {r['error']}")
        m = r["measured"]
        if m:
            lines.append("  " + " ".join(f"{k}={_fmt(v)}" for k, v in m.items() if v is not None))
        for c in r["clauses"]:
            extra = f" predicted={c['predicted']} measured={c['measured']}" if c["status"] != SKIP else ""
            note = f" ({c['note']})" if c["note"] else ""
            lines.append(f"  clause {c['clause']}: {c['status']}{extra}{note}")
    return "\n".join(lines) + "\n"


def _exit_for(args, recs: list[dict]) -> int:
    if any(r["status"] == ERROR for r in recs):
        for r in recs:
            if r["status"] == ERROR:
                print(f"error: {r['error']}", file=sys.stderr)
                break
        return EXIT_USAGE
    if any(r["status"] == FAIL for r in recs):
        print("error: ClauseFailed: at least one clause failed", file=sys.stderr)
        return EXIT_FAIL
    if args.strict:
        for r in recs:
            for c in r["clauses"]:
                if c["status"] == SKIP and "budget" in c["note"]:
                    print(f"error: BudgetExceeded: clause {c['clause']}: {c['note']}", file=sys.stderr)
                    return EXIT_BUDGET
    return 0


def cmd_segre(args) -> int:
    make_field(args.q)
    rep = verify_segre(_config(args, args.q, args.x1, args.x2, args.d))
    recs = [rep.to_dict()]
    if args.d < 1:
        print("note: clause checks need d >= 1; all clauses skipped", file=sys.stderr)
    _emit(args, _render_reports(args, recs))
    return _exit_for(args, recs)


def _read_cache(path) -> dict[str, dict]:
    out = {}
    p = Path(path)
    if not p.exists():
        return out
    for line in p.read_text().splitlines():
        if line.strip():
            rec = json.loads(line)
            out[rec["key"]] = rec["report"]
    return out


def cmd_sweep(args) -> int:
    configs = load_configs(args.config)
    if not configs:
        raise UsageError(f"{args.config}: no configs")
    dist, sub = _budgets(args)
    configs = [
        SegreConfig(c.q, c.x1, c.x2, c.d, c.budget_dist or dist, c.budget_subspaces or sub,
                    c.seed if c.seed else args.seed)
        for c in configs
    ]
    cache = _read_cache(args.cache) if args.cache else {}
    recs, hits = [], 0
    new_lines = []
    for c in configs:
        key = c.key()
        if key in cache:
            recs.append(cache[key])
            hits += 1
            continue
        # normalize through JSON so fresh and cached records render identically
        rec = json.loads(json.dumps(verify_segre(c).to_dict(), sort_keys=True))
        recs.append(rec)
        if args.cache and rec["status"] != ERROR:
            new_lines.append(json.dumps({"key": key, "report": rec}, sort_keys=True))
            cache[key] = rec
    if args.cache:
        if new_lines:
            with open(args.cache, "a") as fh:
                fh.write("\n".join(new_lines) + "\n")
        print(f"cache: {hits} hits, {len(configs) - hits} computed", file=sys.stderr)
    _emit(args, _render_reports(args, recs))
    counts = {s: sum(r["status"] == s for r in recs) for s in (PASS, FAIL, SKIP, ERROR)}
    print("summary: " + " ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return _exit_for(args, recs)


def cmd_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(seed=args.seed)
    if args.format == "json":
        text = json.dumps([r.__dict__ for r in results], indent=2) + "\n"
    elif args.format == "csv":
        text = _csv(["name", "ok", "detail", "seconds"],
                    [[r.name, r.ok, r.detail, f"{r.seconds:.3f}"] for r in results])
    else:
        text = "".join(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}\n" for r in results)
    _emit(args, text)
    return 0 if all(r.ok for r in results) else EXIT_FAIL


COMMANDS = {
    "points": cmd_points,
    "code": cmd_code,
    "segre": cmd_segre,
    "sweep": cmd_sweep,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"error: UsageError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SegreCodesError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
