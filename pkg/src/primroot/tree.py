"""Prime divisor tree over one omega(p-1) class.

Each node fixes which of the primes ``2, 3, 5, ..., next_prime - 1`` divide
``p - 1`` (``known_divisors``) and which do not (``excluded_primes``). The
worst divisor set consistent with that state is the known divisors plus the
smallest undecided primes; the sieve threshold for it caps the interval of
primes still in doubt. Nodes split on whether ``next_prime`` divides ``p-1``
until the interval is empty or small enough to enumerate ``p = k*m + 1`` and
check least primitive roots directly.

One tree is grown per omega class.
"""

from __future__ import annotations

import enum
import json
import math
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable

import numpy as np

from .config import BoundConfig
from .errors import IncompleteFactorizationError, InfeasibleSieveError
from .primes import factorize, is_prime, next_prime, sieve
from .roots import below_power, floor_power, least_primitive_root
from .screen import reference_constant
from .sieve import divisor_set_threshold

ESTIMATE_SAFETY = 2
_PRESIEVE_PRIMES = sieve(10_000).tolist()


class NodeStatus(str, enum.Enum):
    OPEN = "open"
    CLOSED_EMPTY = "closed-empty"
    CLOSED_ENUMERATED = "closed-enumerated"
    BRANCHED = "branched"


@dataclass(frozen=True)
class TreeNode:
    depth: int
    known_divisors: tuple[int, ...]
    excluded_primes: tuple[int, ...]
    next_prime: int
    omega: int
    lo: int
    hi: int
    status: NodeStatus = NodeStatus.OPEN

    @property
    def k(self) -> int:
        return math.prod(self.known_divisors)

    @property
    def key(self) -> tuple[int, ...]:
        """Canonical position: the sequence of decided primes, negative when excluded."""
        decided = [(q, 1) for q in self.known_divisors] + [(q, -1) for q in self.excluded_primes]
        return tuple(sign * q for q, sign in sorted(decided))

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "known_divisors": [str(q) for q in self.known_divisors],
            "excluded_primes": [str(q) for q in self.excluded_primes],
            "next_prime": str(self.next_prime),
            "omega": self.omega,
            "lo": str(self.lo),
            "hi": str(self.hi),
            "status": self.status.value,
        }

    @classmethod
    def from_json(cls, d: dict) -> TreeNode:
        return cls(
            int(d["depth"]),
            tuple(int(q) for q in d["known_divisors"]),
            tuple(int(q) for q in d["excluded_primes"]),
            int(d["next_prime"]),
            int(d["omega"]),
            int(d["lo"]),
            int(d["hi"]),
            NodeStatus(d["status"]),
        )


@dataclass(frozen=True)
class ExceptionRecord:
    """Least primitive root of one enumerated prime.

    ``least_root`` is None when ``p - 1`` could not be factored; such records
    are unresolved and never count as verified.
    """

    p: int
    least_root: int | None
    bound: int
    within_bound: bool

    @property
    def resolved(self) -> bool:
        return self.least_root is not None

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "least_root": None if self.least_root is None else str(self.least_root),
            "bound": str(self.bound),
            "within_bound": self.within_bound,
        }

    @classmethod
    def from_json(cls, d: dict) -> ExceptionRecord:
        root = d["least_root"]
        return cls(int(d["p"]), None if root is None else int(root), int(d["bound"]), bool(d["within_bound"]))


def worst_divisor_set(node: TreeNode) -> list[int] | None:
    """Known divisors plus the smallest undecided primes, ``omega`` in all; None if impossible."""
    slots = node.omega - len(node.known_divisors)
    if slots < 0:
        return None
    fill, q = [], node.next_prime
    while len(fill) < slots:
        fill.append(q)
        q = next_prime(q)
    return sorted(node.known_divisors) + fill


def recompute_interval(node: TreeNode, alpha: float, cfg: BoundConfig, c: float | None = None) -> TreeNode:
    """Tighten ``[lo, hi]`` from the node's worst-case divisor set.

    ``hi`` drops to the sieve threshold, ``lo`` rises to the smallest
    admissible ``p``. If the sieve is infeasible the bounds are kept.
    """
    divs = worst_divisor_set(node)
    if divs is None:
        return replace(node, status=NodeStatus.CLOSED_EMPTY)
    try:
        p_u, _ = divisor_set_threshold(alpha, divs, cfg, c)
    except InfeasibleSieveError:
        return node
    hi = min(node.hi, p_u.ceil_int())
    lo = max(node.lo, cfg.verified_cutoff + 1, math.prod(divs) + 1)
    status = NodeStatus.CLOSED_EMPTY if lo > hi else NodeStatus.OPEN
    return replace(node, lo=lo, hi=hi, status=status)


def root_node(alpha: float, omega: int, cfg: BoundConfig, c: float | None = None) -> TreeNode:
    start = TreeNode(0, (2,), (), 3, omega, cfg.verified_cutoff + 1, 1 << 4096)
    return recompute_interval(start, alpha, cfg, c)


def split(node: TreeNode) -> tuple[TreeNode, TreeNode]:
    """The two children on ``next_prime``, with the parent's interval left as is."""
    if node.status is not NodeStatus.OPEN:
        raise ValueError(f"cannot branch a {node.status.value} node")
    q = node.next_prime
    base = replace(node, depth=node.depth + 1, next_prime=next_prime(q))
    yes = replace(base, known_divisors=node.known_divisors + (q,))
    no = replace(base, excluded_primes=node.excluded_primes + (q,))
    return yes, no


def branch(node: TreeNode, alpha: float, cfg: BoundConfig, c: float | None = None) -> tuple[TreeNode, TreeNode]:
    """Split on whether ``next_prime`` divides ``p - 1``: ``(divides_child, not_divides_child)``."""
    yes, no = split(node)
    return recompute_interval(yes, alpha, cfg, c), recompute_interval(no, alpha, cfg, c)


def estimate_candidates(node: TreeNode) -> int:
    """Number of ``m`` with ``k*m + 1`` in ``[lo, hi]``; an upper bound on the primes to check."""
    if node.lo > node.hi:
        return 0
    k = node.k
    return max(0, (node.hi - 1) // k - (node.lo - 2) // k)


def should_enumerate(node: TreeNode, cfg: BoundConfig) -> bool:
    return ESTIMATE_SAFETY * estimate_candidates(node) <= cfg.enumeration_threshold


def _m_range(node: TreeNode) -> tuple[int, int]:
    k = node.k
    return -(-(node.lo - 1) // k), (node.hi - 1) // k


def enumerate_candidates(node: TreeNode) -> list[int]:
    """Every prime ``p`` in ``[lo, hi]`` with ``k | p - 1`` and no excluded prime dividing ``p - 1``.

    The progression ``k*m + 1`` is pre-sieved by primes below 10**4 and the
    survivors are tested with :func:`is_prime`.
    """
    k = node.k
    m_lo, m_hi = _m_range(node)
    if m_lo > m_hi:
        return []
    if node.hi >= 1 << 62:
        ms: Iterable[int] = (m for m in range(m_lo, m_hi + 1) if all(m % q for q in node.excluded_primes))
        return [k * m + 1 for m in ms if is_prime(k * m + 1)]
    m = np.arange(m_lo, m_hi + 1, dtype=np.int64)
    keep = np.ones(len(m), dtype=bool)
    for q in node.excluded_primes:
        # q does not divide k, so q | k*m iff q | m
        keep &= m % q != 0
    for q in _PRESIEVE_PRIMES:
        if k % q == 0:
            continue
        # k*m + 1 == 0 (mod q)  <=>  m == -k^-1 (mod q); spare p == q itself
        bad = (-pow(k, -1, q)) % q
        start = (bad - m_lo) % q
        idx = np.arange(start, len(m), q)
        keep[idx[k * m[idx] + 1 != q]] = False
    return [p for p in (k * int(x) + 1 for x in m[keep]) if is_prime(p)]


def smooth_candidates(node: TreeNode) -> list[int]:
    """Primes ``p`` in ``[lo, hi]`` with ``p - 1`` composed of exactly the known divisors.

    Used once all ``omega`` prime divisors are known, where stepping through
    ``k*m + 1`` cannot shrink further.
    """
    primes = sorted(node.known_divisors)
    lo, hi = node.lo - 1, node.hi - 1
    out = []

    def walk(i: int, acc: int) -> None:
        if acc > hi:
            return
        if i == len(primes):
            if acc >= lo and is_prime(acc + 1):
                out.append(acc + 1)
            return
        q = primes[i]
        acc *= q
        while acc <= hi:
            walk(i + 1, acc)
            acc *= q

    walk(0, 1)
    return sorted(out)


def verify_candidates(
    primes: list[int], alpha: float, known: Iterable[int] = (), seed: int = 0, omega: int | None = None
) -> list[ExceptionRecord]:
    """Least primitive root of each prime against ``p**alpha``, ascending in ``p``.

    ``within_bound`` is the exact test ``least_root < p**alpha``. With
    ``omega`` set, primes whose ``p - 1`` has a different number of prime
    factors are skipped. ``known`` lists primes to divide out first.
    """
    known = tuple(known)
    out = []
    for p in sorted(primes):
        try:
            f = factorize(p - 1, seed=seed, hint=known)
        except IncompleteFactorizationError:
            out.append(ExceptionRecord(p, None, floor_power(p, alpha), False))
            continue
        if omega is not None and len(f.factors) != omega:
            continue
        bound = floor_power(p, alpha)
        g = least_primitive_root(p, f)
        out.append(ExceptionRecord(p, g, bound, below_power(g, p, alpha)))
    return out


@dataclass
class TreeReport:
    alpha: float
    omega: int
    config_hash: str
    seed: int
    nodes: int = 0
    closed_empty: int = 0
    closed_enumerated: int = 0
    branched: int = 0
    candidates: int = 0
    verified: int = 0
    max_root: int = 0
    records: list[ExceptionRecord] = field(default_factory=list)
    complete: bool = False
    frontier: list[TreeNode] = field(default_factory=list)

    @property
    def violations(self) -> list[ExceptionRecord]:
        return [r for r in self.records if r.resolved and not r.within_bound]

    @property
    def unresolved(self) -> list[ExceptionRecord]:
        return [r for r in self.records if not r.resolved]

    @property
    def verdict(self) -> str:
        if self.violations:
            return "violations"
        if not self.complete or self.unresolved:
            return "incomplete"
        return "holds"

    def summary(self) -> dict:
        return {
            "alpha": self.alpha,
            "omega": self.omega,
            "config_hash": self.config_hash,
            "seed": self.seed,
            "nodes": self.nodes,
            "closed_empty": self.closed_empty,
            "closed_enumerated": self.closed_enumerated,
            "branched": self.branched,
            "candidates": self.candidates,
            "verified": self.verified,
            "max_least_root": str(self.max_root),
            "complete": self.complete,
            "verdict": self.verdict,
            "violations": len(self.violations),
            "unresolved": len(self.unresolved),
        }

    def to_json(self, include_records: str = "flagged") -> dict:
        """``include_records``: "all", or "flagged" for violations and unresolved only."""
        recs = self.records if include_records == "all" else [r for r in self.records if not r.within_bound]
        return {
            "summary": self.summary(),
            "records": [r.to_json() for r in recs],
            "frontier": [n.to_json() for n in self.frontier],
        }


_COUNTERS = ("nodes", "closed_empty", "closed_enumerated", "branched", "candidates", "verified", "max_root")


def write_checkpoint(path: str | Path, report: TreeReport, stack: list[TreeNode]) -> None:
    """JSON lines: one header, then every flagged record, then every open node (top of stack last)."""
    header = {"kind": "header", "alpha": report.alpha, "omega": report.omega,
              "config_hash": report.config_hash, "seed": report.seed}
    header.update({name: getattr(report, name) for name in _COUNTERS})
    lines = [json.dumps(header, sort_keys=True)]
    lines += [json.dumps({"kind": "record", **r.to_json()}, sort_keys=True) for r in report.records]
    lines += [json.dumps({"kind": "node", **n.to_json()}, sort_keys=True) for n in stack]
    tmp = Path(str(path) + ".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    tmp.replace(path)


def read_checkpoint(path: str | Path) -> tuple[TreeReport, list[TreeNode]]:
    report, stack = None, []
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        d = json.loads(line)
        kind = d.pop("kind")
        if kind == "header":
            report = TreeReport(d["alpha"], d["omega"], d["config_hash"], d["seed"])
            for name in _COUNTERS:
                setattr(report, name, int(d[name]))
        elif kind == "record":
            report.records.append(ExceptionRecord.from_json(d))
        elif kind == "node":
            stack.append(TreeNode.from_json(d))
    if report is None:
        raise ValueError(f"{path}: no header line")
    return report, stack


def run_tree(
    alpha: float,
    omega: int,
    cfg: BoundConfig,
    *,
    seed: int = 0,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
    checkpoint: str | Path | None = None,
    checkpoint_every: int = 1000,
    resume: str | Path | None = None,
    keep_records: bool = False,
) -> TreeReport:
    """Depth-first traversal of the divisor tree for class ``omega``.

    Children are visited divides-first. Only enumerated primes in the class
    (``omega(p-1) == omega``) are verified. Those that satisfy the bound are
    only counted unless ``keep_records``; violations and
    unresolved primes are always kept. ``max_nodes`` and ``max_seconds``
    cap the work; when either is hit the report is marked incomplete and
    carries the open frontier.
    """
    c = reference_constant(cfg)
    if resume is not None:
        report, stack = read_checkpoint(resume)
        if (report.alpha, report.omega, report.config_hash) != (alpha, omega, cfg.digest()):
            raise ValueError("checkpoint was written for a different alpha, omega or config")
    else:
        report = TreeReport(alpha, omega, cfg.digest(), seed)
        stack = [root_node(alpha, omega, cfg, c)]
    started = time.monotonic()
    processed = 0
    while stack:
        if max_nodes is not None and processed >= max_nodes:
            break
        if max_seconds is not None and time.monotonic() - started > max_seconds:
            break
        node = stack.pop()
        processed += 1
        report.nodes += 1
        if node.status is NodeStatus.CLOSED_EMPTY:
            report.closed_empty += 1
        elif should_enumerate(node, cfg) or len(node.known_divisors) >= node.omega:
            if len(node.known_divisors) >= node.omega:
                found = smooth_candidates(node)
            else:
                found = enumerate_candidates(node)
            records = verify_candidates(found, alpha, node.known_divisors, seed, omega)
            report.closed_enumerated += 1
            report.candidates += len(found)
            report.verified += len(records)
            for r in records:
                if r.least_root is not None:
                    report.max_root = max(report.max_root, r.least_root)
                if keep_records or not r.within_bound:
                    report.records.append(r)
        else:
            report.branched += 1
            yes, no = branch(node, alpha, cfg, c)
            stack.append(no)
            stack.append(yes)
        if checkpoint is not None and report.nodes % checkpoint_every == 0:
            write_checkpoint(checkpoint, report, stack)
    report.records.sort(key=lambda r: r.p)
    report.complete = not stack
    report.frontier = list(reversed(stack))
    if checkpoint is not None:
        write_checkpoint(checkpoint, report, stack)
    return report
