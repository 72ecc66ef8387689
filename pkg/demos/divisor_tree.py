"""Clearing one exception class with the prime divisor tree.

The tree splits on whether 3, 5, 7, ... divide p - 1, tightens the interval
at each node with the sieve, and enumerates p = k*m + 1 once few remain.
The class omega = 10 at alpha = 0.68 takes about a second. The class 13 run
(python -m primroot tree --alpha 0.68 --omega 13) takes several minutes.

Run: python demos/divisor_tree.py
"""

import tempfile
from pathlib import Path

from primroot.config import BoundConfig
from primroot.tree import branch, root_node, run_tree

cfg = BoundConfig()
root = root_node(0.68, 13, cfg)
yes, no = branch(root, 0.68, cfg)
print(f"class 13 root: {root.lo:.3e} <= p <= {root.hi:.3e}")
print(f"  3 divides p-1:   {yes.lo:.3e} <= p <= {yes.hi:.3e}")
print(f"  3 does not:      {no.lo:.3e} <= p <= {no.hi:.3e}")

with tempfile.TemporaryDirectory() as tmp:
    ck = Path(tmp) / "tree.jsonl"
    partial = run_tree(0.68, 10, cfg, max_nodes=10, checkpoint=ck)
    print(f"after 10 nodes: {partial.verdict}, {len(partial.frontier)} open nodes saved")
    done = run_tree(0.68, 10, cfg, resume=ck)
    print(done.summary())
