"""Command-line entry point binding all modules.

Subcommand tree mirrors the library: `ring verify`, `ssets complete`,
`orbits census`, `autocorr`, `hadamard check|search-circulant|paley|verdict`,
plus `reproduce-paper`, which runs the bundled acceptance suite and writes
one JSON report per module.

Every subcommand accepts --workers, --seed, --format and --out after its
name.  SCHUR_WORKERS sets the default worker count.  Exit codes: 0 on
success, 1 when a verification fails (non-Hadamard input, failed suite
criteria, ring violations), 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import autocorr as ac
from . import hadamard as hd
from . import orbits as ob
from . import reproduce as rp
from . import ssets as ss
from . import weight_ring as wr
from .errors import Z2SchurError
from .sequences import make_sequence

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    command: str
    workers: int
    seed: int
    format: str
    out: str | None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            workers=args.workers,
            seed=args.seed,
            format=args.format,
            out=args.out,
        )


def _default_workers() -> int:
    env = os.environ.get("SCHUR_WORKERS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, default=_default_workers())
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--out", default=None)


def _deliver(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    else:
        print(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2)


def _text(payload, indent: str = "") -> str:
    if isinstance(payload, dict):
        lines = []
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(
            _text(v, indent) if isinstance(v, (dict, list))
            else f"{indent}- {v}"
            for v in payload
        )
    return f"{indent}{payload}"


def _csv_rows(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _no_csv(cfg: RunConfig) -> int:
    print(f"error: --format csv is not available for '{cfg.command}'",
          file=sys.stderr)
    return 2


# ----------------------------------------------------------- subcommands

def cmd_ring_verify(args, cfg: RunConfig) -> int:
    rep = wr.verify_ring(args.n)
    payload = {
        "n": args.n,
        "product_ok": rep["product_ok"],
        "lambda_ok": rep["lambda_ok"],
        "counterexamples": rep["counterexamples"],
    }
    if cfg.format == "csv":
        return _no_csv(cfg)
    _deliver(_json(payload) if cfg.format == "json" else _text(payload), cfg)
    return 0 if rep["product_ok"] and rep["lambda_ok"] else 1


def cmd_ssets_complete(args, cfg: RunConfig) -> int:
    targets = [args.a] if args.a is not None else list(range(args.n + 1))
    found = []
    for a in targets:
        found += [s.as_dict() for s in ss.find_complete_ssets(args.n, a)]
    if cfg.format == "csv":
        rows = [[s["a"], s["parity"], s["order"],
                 " ".join(map(str, s["members"]))] for s in found]
        _deliver(_csv_rows(["a", "parity", "order", "members"], rows), cfg)
    else:
        _deliver(_json(found) if cfg.format == "json" else _text(found), cfg)
    return 0


def cmd_orbits_census(args, cfg: RunConfig) -> int:
    rep = ob.census(args.n, args.group)
    if cfg.format == "csv":
        rows = [[r["period"], r["count"], r["sym"], r["asym"]]
                for r in rep["rows"]]
        _deliver(_csv_rows(["period", "count", "sym", "asym"], rows), cfg)
        return 0
    payload = {
        "n": rep["n"],
        "group": rep["group"],
        "total": rep["total"],
        "by_period": rep["by_period"],
        "sym": rep["sym"],
        "asym": rep["asym"],
        "nonsym": rep["nonsym"],
        "delta_invariant": rep["delta_invariant"],
    }
    _deliver(_json(payload) if cfg.format == "json" else _text(payload), cfg)
    return 0


def cmd_autocorr(args, cfg: RunConfig) -> int:
    x = make_sequence(args.seq)
    vec = ac.theta(x)
    payload = {
        "seq": str(x),
        "n": x.n,
        "theta": list(vec.values),
        "weight": x.weight,
        "sum_check": "(2a-n)^2",
        "sum_ok": ac.sum_identity(x)["ok"],
    }
    if cfg.format == "csv":
        return _no_csv(cfg)
    _deliver(_json(payload) if cfg.format == "json" else _text(payload), cfg)
    return 0


def _orthogonality_witness(mat) -> dict | None:
    for i in range(mat.m):
        for j in range(i + 1, mat.m):
            dot = mat.m - 2 * (mat.rows[i] ^ mat.rows[j]).bit_count()
            if dot:
                return {"rows": [i, j], "dot": dot}
    return None


def cmd_hadamard_check(args, cfg: RunConfig) -> int:
    if args.builtin:
        mat = hd.BUILTIN_H12
    else:
        mat = hd.SignMatrix.from_text(Path(args.file).read_text())
    ok = hd.is_hadamard(mat)
    payload = {"m": mat.m, "hadamard": ok}
    if not ok:
        payload["witness"] = _orthogonality_witness(mat)
    if cfg.format == "csv":
        return _no_csv(cfg)
    _deliver(_json(payload) if cfg.format == "json" else _text(payload), cfg)
    return 0 if ok else 1


def cmd_hadamard_search(args, cfg: RunConfig) -> int:
    res = hd.search_circulant_hadamard(args.order, workers=cfg.workers)
    payload = res.as_dict()
    if cfg.format == "csv":
        return _no_csv(cfg)
    _deliver(_json(payload) if cfg.format == "json" else _text(payload), cfg)
    return 0


def cmd_hadamard_paley(args, cfg: RunConfig) -> int:
    mat = hd.border_core(hd.paley_core(args.p))
    _deliver(mat.render(), cfg)
    return 0


def cmd_hadamard_verdict(args, cfg: RunConfig) -> int:
    v = hd.partition_parity_verdict(args.n, args.r, args.a, args.kind)
    payload = v.as_dict()
    if cfg.format == "csv":
        return _no_csv(cfg)
    _deliver(_json(payload) if cfg.format == "json" else _text(payload), cfg)
    return 0


def cmd_reproduce(args, cfg: RunConfig) -> int:
    outcome = rp.run_all(max_n=args.max_n, seed=cfg.seed, workers=cfg.workers)
    out_dir = cfg.out or "z2schur-reports"
    written = rp.write_reports(outcome, out_dir)
    for line in rp.format_lines(outcome):
        print(line)
    print(f"reports written to {out_dir} ({len(written)} files)")
    return 0 if outcome["passed"] else 1


# ----------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2schur",
        description="Weight-class Schur rings, circulant orbits, and "
                    "Hadamard matrix searches over Z_2^n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="weight-class ring checks")
    ring_sub = ring.add_subparsers(dest="subcommand", required=True)
    p = ring_sub.add_parser("verify", help="compare closed forms with oracles")
    p.add_argument("--n", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_ring_verify, command="ring verify")

    ssets_p = sub.add_parser("ssets", help="complete S-set discovery")
    ssets_sub = ssets_p.add_subparsers(dest="subcommand", required=True)
    p = ssets_sub.add_parser("complete", help="maximal complete S-sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=None)
    _common(p)
    p.set_defaults(fn=cmd_ssets_complete, command="ssets complete")

    orbits_p = sub.add_parser("orbits", help="orbit enumeration")
    orbits_sub = orbits_p.add_subparsers(dest="subcommand", required=True)
    p = orbits_sub.add_parser("census", help="orbit census under a group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", choices=ob.GROUPS, required=True)
    _common(p)
    p.set_defaults(fn=cmd_orbits_census, command="orbits census")

    p = sub.add_parser("autocorr", help="periodic autocorrelation of a literal")
    p.add_argument("--seq", required=True)
    _common(p)
    p.set_defaults(fn=cmd_autocorr, command="autocorr")

    had = sub.add_parser("hadamard", help="Hadamard verification and search")
    had_sub = had.add_subparsers(dest="subcommand", required=True)

    p = had_sub.add_parser("check", help="verify a row-text matrix file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--builtin", choices=["h12"])
    _common(p)
    p.set_defaults(fn=cmd_hadamard_check, command="hadamard check")

    p = had_sub.add_parser("search-circulant",
                           help="exhaustive circulant search at one order")
    p.add_argument("--order", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_hadamard_search, command="hadamard search-circulant")

    p = had_sub.add_parser("paley", help="bordered quadratic-residue matrix")
    p.add_argument("--p", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_hadamard_paley, command="hadamard paley")

    p = had_sub.add_parser("verdict",
                           help="parity verdict for a partitioned first row")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--kind", choices=hd.PARTITION_KINDS, required=True)
    _common(p)
    p.set_defaults(fn=cmd_hadamard_verdict, command="hadamard verdict")

    p = sub.add_parser("reproduce-paper",
                       help="run the acceptance suite, write module reports")
    p.add_argument("--max-n", type=int, default=16, dest="max_n")
    _common(p)
    p.set_defaults(fn=cmd_reproduce, command="reproduce-paper")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        return args.fn(args, cfg)
    except Z2SchurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
