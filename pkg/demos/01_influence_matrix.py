#!/usr/bin/env python
# Influence matrix of a small graph, computed three ways.
#
# Run from the repository root:  python3 demos/01_influence_matrix.py

import numpy as np

import fjrank

np.set_printoptions(precision=5, suppress=True)

# A 3-cycle a -> b -> c -> a with one extra edge a -> c
A = fjrank.build_adjacency([("a", "b"), ("b", "c"), ("c", "a"), ("a", "c")])
print("adjacency (rows are sources):")
print(A.entries)

W = fjrank.row_normalize(A)
print("row-normalized W:")
print(W.entries)

alpha = 0.85

# Dense solve of (1 - alpha) (I - alpha W)^-1
V = fjrank.influence_direct(W, alpha)
print("influence matrix V, direct solve:")
print(V.entries)
print("row sums:", V.entries.sum(axis=1))

# Truncated series; the tail is bounded by alpha^(k+1)
for tol in (1e-2, 1e-6, 1e-10):
    Vs = fjrank.influence_series(W, alpha, tol=tol, max_iter=1000)
    err = np.abs(Vs.entries - V.entries).sum(axis=1).max()
    print("tol=%-6g terms=%3d  row-sum error=%.3e  bound=%.3e" % (tol, Vs.terms, err, Vs.error_bound))

# Partial sums grow toward V one walk length at a time
sums = fjrank.iter_partial_sums(W, alpha)
for k in range(4):
    S = next(sums)
    print("k=%d  mass so far per row:" % k, S.sum(axis=1))

# Column averages of V give total-effect centrality
c = fjrank.total_effect_centrality(V)
for label, value, rank in zip(c.labels, c.values, c.ranks()):
    print("%s  %.6f  rank %d" % (label, value, rank))
print("sum:", c.values.sum())
