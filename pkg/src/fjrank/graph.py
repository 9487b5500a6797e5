"""Directed graphs: construction, file formats and row normalization."""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DanglingNode, DimensionMismatch, EmptyGraph, InputError, ParseError

ROW_SUM_TOL = 1e-12


class DanglingPolicy(str, enum.Enum):
    """What :func:`row_normalize` does with a row that has no out-links."""

    REJECT = "reject"
    UNIFORM_TELEPORT = "teleport"
    SELF_LOOP = "self-loop"


class SelfLoopWarning(UserWarning):
    pass


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """0/1 link structure; ``entries[i, j] == 1`` iff node i links to node j."""

    entries: np.ndarray
    labels: tuple[str, ...] = ()
    has_self_loops: bool = field(default=False, init=False)

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int8, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"adjacency must be square, got shape {a.shape}")
        if a.shape[0] == 0:
            raise EmptyGraph("graph has no nodes")
        if not np.isin(a, (0, 1)).all():
            raise InputError("adjacency entries must be 0 or 1")
        labels = tuple(self.labels) if self.labels else _default_labels(a.shape[0])
        if len(labels) != a.shape[0]:
            raise DimensionMismatch(f"{len(labels)} labels for {a.shape[0]} nodes")
        if len(set(labels)) != len(labels):
            raise InputError("node labels must be unique")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "has_self_loops", bool(np.diagonal(a).any()))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def in_neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.entries[:, i])

    def __eq__(self, other):
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.entries, other.entries)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class RowStochasticMatrix:
    """Nonnegative square matrix whose rows each sum to one."""

    entries: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        w = np.array(self.entries, dtype=float, copy=True)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] == 0:
            raise DimensionMismatch(f"expected a nonempty square matrix, got shape {w.shape}")
        if not np.isfinite(w).all() or (w < 0).any() or (w > 1).any():
            raise InputError("row-stochastic entries must lie in [0, 1]")
        dev = np.abs(w.sum(axis=1) - 1.0)
        if dev.max() > ROW_SUM_TOL:
            bad = int(dev.argmax())
            raise InputError(f"row {bad} sums to {w[bad].sum()!r}, not 1")
        labels = tuple(self.labels) if self.labels else _default_labels(w.shape[0])
        if len(labels) != w.shape[0]:
            raise DimensionMismatch(f"{len(labels)} labels for {w.shape[0]} nodes")
        w.setflags(write=False)
        object.__setattr__(self, "entries", w)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def build_adjacency(
    edges: Iterable[tuple[str, str]],
    explicit_nodes: Sequence[str] | None = None,
) -> AdjacencyMatrix:
    """Build an adjacency matrix from (source, target) label pairs.

    Nodes are indexed by first appearance: ``explicit_nodes`` first, then
    sources and targets in edge order. Repeated edges collapse to a single
    link. Self-loops are kept and flagged with a :class:`SelfLoopWarning`.
    """
    index: dict[str, int] = {}

    def intern(label):
        if not isinstance(label, str) or not label:
            raise InputError(f"node labels must be nonempty strings, got {label!r}")
        if label not in index:
            index[label] = len(index)
        return index[label]

    for label in explicit_nodes or ():
        intern(label)
    pairs = [(intern(s), intern(t)) for s, t in edges]
    if not index:
        raise EmptyGraph("no nodes in edge list")

    a = np.zeros((len(index), len(index)), dtype=np.int8)
    for s, t in pairs:
        a[s, t] = 1
    adj = AdjacencyMatrix(a, tuple(index))
    if adj.has_self_loops:
        loops = [adj.labels[i] for i in np.flatnonzero(np.diagonal(a))]
        warnings.warn(f"self-loops kept on nodes {loops}", SelfLoopWarning, stacklevel=2)
    return adj


def out_degrees(A: AdjacencyMatrix) -> np.ndarray:
    return A.entries.sum(axis=1, dtype=np.int64)


def row_normalize(
    A: AdjacencyMatrix, policy: DanglingPolicy | str = DanglingPolicy.REJECT
) -> RowStochasticMatrix:
    """Divide each row by its out-degree, repairing empty rows per ``policy``."""
    policy = DanglingPolicy(policy)
    od = out_degrees(A)
    n = A.n
    dangling = np.flatnonzero(od == 0)
    if len(dangling) and policy is DanglingPolicy.REJECT:
        i = int(dangling[0])
        raise DanglingNode(i, A.labels[i])

    w = np.zeros((n, n))
    live = od > 0
    w[live] = A.entries[live] / od[live, None]
    if policy is DanglingPolicy.UNIFORM_TELEPORT:
        w[dangling] = 1.0 / n
    elif policy is DanglingPolicy.SELF_LOOP:
        w[dangling, dangling] = 1.0
    return RowStochasticMatrix(w, A.labels)


def relabel(A: AdjacencyMatrix, order: Sequence[int]) -> AdjacencyMatrix:
    """Return the same graph with nodes re-indexed so that new node k is old ``order[k]``."""
    order = np.asarray(order)
    return AdjacencyMatrix(
        A.entries[np.ix_(order, order)], tuple(A.labels[i] for i in order)
    )


def random_digraph(n: int, p: float, seed=None) -> AdjacencyMatrix:
    """Directed G(n, p) graph without self-loops."""
    rng = np.random.default_rng(seed)
    a = (rng.random((n, n)) < p).astype(np.int8)
    np.fill_diagonal(a, 0)
    return AdjacencyMatrix(a)


# -- file formats -----------------------------------------------------------


def parse_edge_list(text: str, path=None) -> AdjacencyMatrix:
    """Parse ``source<TAB>target`` lines.

    ``#`` comments and blank lines are skipped. A line holding a single
    label declares an isolated node. Node order is first appearance in the
    file.
    """
    edges = []
    order: dict[str, None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in raw.rstrip("\r\n").split("\t")]
        if len(fields) > 2 or not all(fields):
            raise ParseError(
                f"expected 'source<TAB>target', got {raw!r}", line=lineno, path=path
            )
        order.update(dict.fromkeys(fields))
        if len(fields) == 2:
            edges.append((fields[0], fields[1]))
    if not order:
        raise EmptyGraph("edge list contains no nodes")
    return build_adjacency(edges, explicit_nodes=list(order))


def parse_dense_matrix(text: str, path=None) -> AdjacencyMatrix:
    lines = [(i, l) for i, l in enumerate(text.splitlines(), start=1) if l.strip()]
    if not lines:
        raise EmptyGraph("dense matrix file is empty")
    lineno, head = lines[0]
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"first line must be the node count, got {head!r}", lineno, path)
    if n <= 0:
        raise EmptyGraph("node count must be positive")
    rows = lines[1:]
    if len(rows) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(rows)}", lineno, path)
    a = np.zeros((n, n), dtype=np.int8)
    for i, (lineno, line) in enumerate(rows):
        tokens = line.split()
        if len(tokens) != n or any(t not in ("0", "1") for t in tokens):
            raise ParseError(f"row must hold {n} space-separated 0/1 values", lineno, path)
        a[i] = [int(t) for t in tokens]
    return AdjacencyMatrix(a)


def format_dense_matrix(A: AdjacencyMatrix) -> str:
    rows = "\n".join(" ".join(str(int(v)) for v in row) for row in A.entries)
    return f"{A.n}\n{rows}\n"


def read_graph(path, fmt: str = "edgelist") -> AdjacencyMatrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if fmt == "edgelist":
        return parse_edge_list(text, path)
    if fmt == "dense":
        return parse_dense_matrix(text, path)
    raise InputError(f"unknown input format {fmt!r}")
