#!/usr/bin/env python
# What happens to nodes with no out-edges.
#
# Run from the repository root:  python3 demos/03_dangling_policies.py

import numpy as np

import fjrank

np.set_printoptions(precision=4, suppress=True)

# b has no out-edges
A = fjrank.build_adjacency([("a", "b"), ("c", "a"), ("c", "b")])
print("out-degrees:", dict(zip(A.labels, fjrank.out_degrees(A).tolist())))

# The default refuses to guess
try:
    fjrank.row_normalize(A)
except fjrank.DanglingNode as exc:
    print("reject:", exc)

for policy in ("teleport", "self-loop"):
    W = fjrank.row_normalize(A, policy)
    print(policy, "W:")
    print(W.entries)
    pr = fjrank.pagerank(A, 0.85, form="normalized", policy=policy)
    print(policy, "PageRank:", dict(zip(pr.labels, np.round(pr.values, 4).tolist())))

# A self-loop keeps mass at b, so b dominates; teleporting spreads it evenly
V = fjrank.influence_direct(fjrank.row_normalize(A, "self-loop"), 0.85)
print("self-loop influence of b on itself: %.4f" % V.entries[1, 1])
V = fjrank.influence_direct(fjrank.row_normalize(A, "teleport"), 0.85)
print("teleport influence of b on itself:  %.4f" % V.entries[1, 1])
