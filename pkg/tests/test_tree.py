import dataclasses
import json
import math
import random

import pytest

from primroot.primes import is_prime, primes_up_to
from primroot.screen import reference_constant
from primroot.sieve import optimal_sieve_context, sieve_holds
from primroot.tree import (
    ExceptionRecord,
    NodeStatus,
    TreeNode,
    branch,
    enumerate_candidates,
    estimate_candidates,
    read_checkpoint,
    recompute_interval,
    root_node,
    run_tree,
    smooth_candidates,
    split,
    verify_candidates,
    worst_divisor_set,
)

SMALL_PRIMES = primes_up_to(60)


def brute_force(node):
    return [
        p for p in range(max(node.lo, 2), node.hi + 1)
        if (p - 1) % node.k == 0 and all((p - 1) % q for q in node.excluded_primes) and is_prime(p)
    ]


def random_node(rng, width=10**7, base=0):
    """A synthetic node: decided primes are a prefix of the primes, as in the tree."""
    depth = rng.randint(0, 6)
    decided = SMALL_PRIMES[1 : depth + 1]
    known = (2,) + tuple(q for q in decided if rng.random() < 0.5)
    excluded = tuple(q for q in decided if q not in known)
    lo = base + rng.randint(2, width)
    hi = lo + rng.randint(0, width)
    return TreeNode(depth, known, excluded, SMALL_PRIMES[depth + 1], 8, lo, hi)


def test_enumerate_example():
    node = TreeNode(0, (2, 3), (), 5, 3, 7, 50)
    assert enumerate_candidates(node) == [7, 13, 19, 31, 37, 43]
    node = TreeNode(0, (2, 3), (5,), 7, 3, 7, 50)
    assert enumerate_candidates(node) == [7, 13, 19, 37, 43]


def test_enumerate_matches_brute_force_on_random_nodes():
    rng = random.Random(20240601)
    for _ in range(100):
        node = random_node(rng, width=10**5)
        assert enumerate_candidates(node) == brute_force(node)


def test_enumerate_beyond_int64():
    rng = random.Random(7)
    for _ in range(5):
        node = random_node(rng, width=2000, base=1 << 64)
        expected = [p for p in range(node.lo, node.hi + 1)
                    if (p - 1) % node.k == 0 and all((p - 1) % q for q in node.excluded_primes) and is_prime(p)]
        assert enumerate_candidates(node) == expected


def test_estimate_counts_progression_terms():
    rng = random.Random(3)
    for _ in range(50):
        node = random_node(rng, width=10**4)
        expected = sum(1 for p in range(node.lo, node.hi + 1) if (p - 1) % node.k == 0)
        assert estimate_candidates(node) == expected


def test_smooth_candidates_match_brute_force():
    node = TreeNode(3, (2, 3, 7), (5,), 11, 3, 2, 10**6)
    expected = [p for p in brute_force(node) if set(_prime_set(p - 1)) == {2, 3, 7}]
    assert smooth_candidates(node) == expected


def _prime_set(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def test_split_partitions_parent():
    rng = random.Random(11)
    for _ in range(100):
        node = random_node(rng, width=2 * 10**4)
        yes, no = split(node)
        parent, a, b = set(brute_force(node)), set(brute_force(yes)), set(brute_force(no))
        assert a | b == parent and not a & b


def test_split_example(cfg):
    root = root_node(0.68, 13, cfg)
    assert (root.k, root.next_prime) == (2, 3)
    yes, no = branch(root, 0.68, cfg)
    assert yes.k == 6 and yes.excluded_primes == ()
    assert no.k == 2 and no.excluded_primes == (3,)
    for child in (yes, no):
        assert child.lo >= root.lo and child.hi <= root.hi
        assert child.next_prime == 5 and child.depth == 1


def test_excluding_three_lowers_the_ceiling(cfg):
    root = root_node(0.68, 13, cfg)
    _, no = branch(root, 0.68, cfg)
    assert no.hi < root.hi


def test_recompute_idempotent_and_closing(cfg):
    node = root_node(0.68, 13, cfg)
    for _ in range(6):
        again = recompute_interval(node, 0.68, cfg)
        assert again == node
        node = branch(node, 0.68, cfg)[0]
    # product of forced divisors above the ceiling
    big = TreeNode(5, (2, 3, 5, 7, 11, 13), (), 17, 6, 10, 10**6)
    assert recompute_interval(big, 0.68, cfg).status is NodeStatus.CLOSED_EMPTY
    too_many = TreeNode(5, (2, 3, 5, 7), (), 11, 3, 10, 10**30)
    assert recompute_interval(too_many, 0.68, cfg).status is NodeStatus.CLOSED_EMPTY


def test_worst_divisor_set():
    node = TreeNode(3, (2, 5), (3,), 7, 5, 1, 10)
    assert worst_divisor_set(node) == [2, 5, 7, 11, 13]


def test_eliminated_points_satisfy_the_sieve(cfg):
    # every p above a node's ceiling passes the sieve test in the node's worst case
    c = reference_constant(cfg)
    rng = random.Random(5)
    nodes = [root_node(0.68, 13, cfg)]
    for _ in range(40):
        node = rng.choice([n for n in nodes if n.status is NodeStatus.OPEN])
        nodes.extend(branch(node, 0.68, cfg, c))
    open_nodes = [n for n in nodes if n.status is NodeStatus.OPEN]
    contexts = {n: optimal_sieve_context(worst_divisor_set(n), c) for n in open_nodes}
    for _ in range(1000):
        node = rng.choice(open_nodes)
        L = math.log(node.hi) + rng.expovariate(0.2)
        assert sieve_holds(0.68, L, contexts[node], c, cfg.safety_margin)


def test_verify_examples():
    (rec,) = verify_candidates([2311], 0.68)
    assert (rec.least_root, rec.bound, rec.within_bound) == (3, 193, True)
    (rec,) = verify_candidates([3], 0.6309)
    assert rec.within_bound is False and rec.least_root == 2
    assert verify_candidates([], 0.68) == []
    recs = verify_candidates([13, 7, 11], 0.8)
    assert [r.p for r in recs] == [7, 11, 13]


def test_verify_filters_class():
    # 2311 - 1 has five prime factors
    assert verify_candidates([2311], 0.68, omega=4) == []
    assert len(verify_candidates([2311], 0.68, omega=5)) == 1


def test_json_round_trips():
    node = TreeNode(4, (2, 5, 7), (3,), 11, 13, 2500000000000001, 10**40, NodeStatus.OPEN)
    assert TreeNode.from_json(json.loads(json.dumps(node.to_json()))) == node
    rec = ExceptionRecord(10**30 + 57, None, 12345, False)
    assert ExceptionRecord.from_json(json.loads(json.dumps(rec.to_json()))) == rec


def test_small_tree_completes(cfg):
    rep = run_tree(0.68, 10, cfg)
    assert rep.complete and rep.verdict == "holds"
    assert rep.nodes == rep.closed_empty + rep.closed_enumerated + rep.branched
    assert rep.violations == []


def test_budget_gives_incomplete(cfg):
    rep = run_tree(0.68, 13, cfg, max_nodes=5)
    assert not rep.complete and rep.verdict == "incomplete"
    assert rep.frontier


def test_runs_are_deterministic(cfg):
    a = run_tree(0.68, 15, cfg, keep_records=True)
    b = run_tree(0.68, 15, cfg, keep_records=True)
    assert json.dumps(a.to_json("all")) == json.dumps(b.to_json("all"))


def test_checkpoint_resume_matches_straight_run(cfg, tmp_path):
    straight = run_tree(0.68, 15, cfg)
    ck = tmp_path / "tree.jsonl"
    part = run_tree(0.68, 15, cfg, max_nodes=9, checkpoint=ck, checkpoint_every=4)
    assert not part.complete
    _, stack = read_checkpoint(ck)
    assert stack
    resumed = run_tree(0.68, 15, cfg, resume=ck, checkpoint=ck)
    assert resumed.complete
    assert json.dumps(resumed.to_json()) == json.dumps(straight.to_json())


def test_resume_rejects_other_parameters(cfg, tmp_path):
    ck = tmp_path / "tree.jsonl"
    run_tree(0.68, 15, cfg, max_nodes=3, checkpoint=ck)
    with pytest.raises(ValueError):
        run_tree(0.69, 15, cfg, resume=ck)
    other = dataclasses.replace(cfg, enumeration_threshold=5000)
    with pytest.raises(ValueError):
        run_tree(0.68, 15, other, resume=ck)
