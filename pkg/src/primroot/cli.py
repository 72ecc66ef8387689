"""Command-line entry point.

Exit status: 0 success, 1 a verified violation (or oracle mismatch),
2 configuration or argument error, 3 a search stopped by its budget.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .bounds import crossover_p
from .config import BoundConfig, load_config, parse_integer
from .errors import ConfigError, PrimrootError
from .reports import (
    class_record,
    dumps_jsonl,
    fmt_real,
    provenance_line,
    table_csv,
    write_text,
)
from .roots import below_power, floor_power
from .screen import Mode, omega_exception_table
from .sieve import sieve_exception_table
from .tree import run_tree
from .verify import least_roots, run_oracles

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_INCOMPLETE = 3

COMMANDS = ("table1", "table2", "compare-bounds", "tree", "verify-small", "oracle-tests")
DEFAULT_ALPHAS = {
    "table1": "0.8,0.75,0.7,0.65,0.6309",
    "table2": "0.69,0.68,0.65,0.6309",
    "compare-bounds": "0.55,0.6,0.625,0.63,0.7",
    "tree": "0.68",
    "verify-small": "0.68,0.6309",
    "oracle-tests": "0.68",
}


@dataclass(frozen=True)
class RunManifest:
    command: str
    alphas: tuple[float, ...]
    config_path: str | None = None
    out: str | None = None
    mode: Mode = Mode.RAW
    omega: int | None = None
    max_enum: int | None = None
    checkpoint: str | None = None
    resume: str | None = None
    limit: int = 10**6
    seed: int = 0
    max_nodes: int | None = None
    max_seconds: float | None = None
    pmax: int = 2000
    efree_pmax: int = 500

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if not self.alphas:
            raise ConfigError("at least one alpha is required")
        for a in self.alphas:
            if not 0.5 < a < 1:
                raise ConfigError(f"alpha={a} outside (0.5, 1)")


def parse_alphas(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ConfigError(f"cannot read alpha list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primroot", description="Least primitive roots below p**alpha.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--alpha", help="comma-separated exponents in (0.5, 1)")
    parser.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.RAW.value,
                        help="table1: count classes from their smallest member (raw) or from the verified cutoff")
    parser.add_argument("--omega", help="tree: omega(p-1) class")
    parser.add_argument("--max-enum", help="tree: enumerate a node once it has at most this many candidates")
    parser.add_argument("--checkpoint", help="tree: write resumable state here")
    parser.add_argument("--resume", help="tree: continue from this checkpoint")
    parser.add_argument("--limit", default="1e6", help="verify-small: scan primes below this")
    parser.add_argument("--pmax", default="2000", help="oracle-tests: primes below this")
    parser.add_argument("--efree-pmax", default="500", help="oracle-tests: e-free checks for primes below this")
    parser.add_argument("--seed", default="0", help="seed for randomized factoring")
    parser.add_argument("--config", help="TOML file of constants")
    parser.add_argument("--out", help="output path (stdout when omitted)")
    parser.add_argument("--max-nodes", help="tree: node budget")
    parser.add_argument("--max-seconds", type=float, help="tree: wall-clock budget")
    return parser


def manifest_from_args(ns: argparse.Namespace) -> RunManifest:
    def opt_int(value, name):
        return None if value is None else parse_integer(value, name)

    return RunManifest(
        command=ns.command,
        alphas=parse_alphas(ns.alpha or DEFAULT_ALPHAS[ns.command]),
        config_path=ns.config,
        out=ns.out,
        mode=Mode(ns.mode),
        omega=opt_int(ns.omega, "--omega"),
        max_enum=opt_int(ns.max_enum, "--max-enum"),
        checkpoint=ns.checkpoint,
        resume=ns.resume,
        limit=parse_integer(ns.limit, "--limit"),
        seed=parse_integer(ns.seed, "--seed"),
        max_nodes=opt_int(ns.max_nodes, "--max-nodes"),
        max_seconds=ns.max_seconds,
        pmax=parse_integer(ns.pmax, "--pmax"),
        efree_pmax=parse_integer(ns.efree_pmax, "--efree-pmax"),
    )


def _sibling(out: str | None, suffix: str) -> Path | None:
    return None if out is None else Path(out).with_suffix(suffix)


def _emit_table(m: RunManifest, cfg: BoundConfig, table) -> int:
    digest = cfg.digest()
    write_text(m.out, table_csv(table.rows, digest, m.seed), sys.stdout)
    records = dumps_jsonl(class_record(k, digest, m.seed) for k in table.classes)
    write_text(_sibling(m.out, ".jsonl"), records)
    if m.out is not None:
        for row in table.rows:
            span = "-" if row.omega_lower is None else f"[{row.omega_lower}, {row.omega_upper}]"
            print(f"alpha={row.alpha}: exception classes {span}")
    return EXIT_OK


def _table1(m: RunManifest, cfg: BoundConfig) -> int:
    return _emit_table(m, cfg, omega_exception_table(list(m.alphas), cfg, m.mode))


def _table2(m: RunManifest, cfg: BoundConfig) -> int:
    return _emit_table(m, cfg, sieve_exception_table(list(m.alphas), cfg))


def _compare_bounds(m: RunManifest, cfg: BoundConfig) -> int:
    c2 = cfg.burgess_constants[2]
    lines = [provenance_line(cfg.digest(), m.seed),
             f"# C(2)={fmt_real(c2.value)} ({c2.provenance})",
             "alpha,burgess_c2,log10_crossover_p"]
    for a in m.alphas:
        p = crossover_p(a, cfg)
        lines.append(f"{fmt_real(a)},{fmt_real(c2.value)},{'' if p is None else fmt_real(p.log10)}")
    write_text(m.out, "\n".join(lines) + "\n", sys.stdout)
    return EXIT_OK


def _tree(m: RunManifest, cfg: BoundConfig) -> int:
    if m.omega is None:
        raise ConfigError("tree needs --omega")
    if len(m.alphas) != 1:
        raise ConfigError("tree takes a single --alpha")
    if m.max_enum is not None:
        cfg = dataclasses.replace(cfg, enumeration_threshold=m.max_enum)
    report = run_tree(
        m.alphas[0], m.omega, cfg,
        seed=m.seed, max_nodes=m.max_nodes, max_seconds=m.max_seconds,
        checkpoint=m.checkpoint, resume=m.resume,
    )
    write_text(m.out, json.dumps(report.to_json(), sort_keys=True, indent=1) + "\n", sys.stdout)
    summary = report.summary()
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if report.violations:
        return EXIT_VIOLATION
    if report.verdict == "incomplete":
        return EXIT_INCOMPLETE
    return EXIT_OK


def _verify_small(m: RunManifest, cfg: BoundConfig) -> int:
    found: dict[float, list[dict]] = {a: [] for a in m.alphas}
    for p, g in least_roots(m.limit):
        for a in m.alphas:
            if not below_power(g, p, a):
                found[a].append({"alpha": fmt_real(a), "p": str(p), "least_root": str(g),
                                 "bound": str(floor_power(p, a)), "limit": str(m.limit),
                                 "config_sha256": cfg.digest(), "seed": str(m.seed)})
    records = [r for a in m.alphas for r in found[a]]
    write_text(m.out, dumps_jsonl(records), sys.stdout if records else None)
    for a in m.alphas:
        ps = [r["p"] for r in found[a]]
        print(f"alpha={a} limit={m.limit}: {len(ps)} violation(s) {ps[:10]}", file=sys.stderr)
    return EXIT_VIOLATION if records else EXIT_OK


def _oracle_tests(m: RunManifest, cfg: BoundConfig) -> int:
    rep = run_oracles(m.pmax, m.efree_pmax)
    result = {
        "pmax": str(m.pmax),
        "efree_pmax": str(m.efree_pmax),
        "primes_checked": str(rep.primes_checked),
        "indicator_checks": str(rep.indicator_checks),
        "efree_checks": str(rep.efree_checks),
        "failures": rep.failures,
        "config_sha256": cfg.digest(),
        "seed": str(m.seed),
    }
    write_text(m.out, json.dumps(result, sort_keys=True) + "\n", sys.stdout)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


_DISPATCH = {
    "table1": _table1,
    "table2": _table2,
    "compare-bounds": _compare_bounds,
    "tree": _tree,
    "verify-small": _verify_small,
    "oracle-tests": _oracle_tests,
}


def run_command(m: RunManifest) -> int:
    cfg = BoundConfig() if m.config_path is None else load_config(m.config_path)
    return _DISPATCH[m.command](m, cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)  # exits with status 2 on bad usage
    try:
        return run_command(manifest_from_args(ns))
    except (PrimrootError, OSError) as exc:
        # bad constants, out-of-range inputs and unwritable paths all land here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
