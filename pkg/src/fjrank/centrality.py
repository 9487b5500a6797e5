"""Total-effect centrality and PageRank.

Both measures are the solution of ``c = b + alpha W^T c`` for a constant
vector ``b``: ``b = (1 - alpha)/n`` gives the normalized measure (column
averages of the influence matrix, summing to one) and ``b = 1 - alpha``
gives the unnormalized one (column sums, summing to n).  PageRank with
damping ``d`` is the same system with ``alpha = d``; the functions here do
not distinguish the two beyond naming.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import DegenerateSize, InputError, IterationCapExceeded, NumericalFailure, ProblemTooLarge
from .graph import AdjacencyMatrix, DanglingPolicy, row_normalize
from .influence import (
    DEFAULT_ALPHA,
    DIRECT_MAX_N,
    InfluenceMatrix,
    Method,
    SolverConfig,
    as_stochastic,
    check_alpha,
    influence_series,
)

RANK_DIGITS = 12


class Scale(str, enum.Enum):
    NORMALIZED = "normalized"
    UNNORMALIZED = "unnormalized"


class PageRankForm(str, enum.Enum):
    """``ORIGINAL`` has constant term ``1 - d``; ``NORMALIZED`` has ``(1 - d)/n``."""

    ORIGINAL = "original"
    NORMALIZED = "normalized"

    @property
    def scale(self) -> Scale:
        return Scale.UNNORMALIZED if self is PageRankForm.ORIGINAL else Scale.NORMALIZED


@dataclass(frozen=True, eq=False)
class CentralityVector:
    """Centrality values in internal node order.

    ``divisor`` is the number each column sum was divided by (``n``,
    ``n - 1`` when the diagonal is excluded, or 1 for plain sums).
    ``iterations`` and ``residual`` are filled in by the fixed-point solver.
    """

    values: np.ndarray
    scale: Scale
    alpha: float
    labels: tuple[str, ...]
    method: Method = Method.DIRECT
    divisor: int = 1
    iterations: int | None = None
    residual: float | None = None

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def label_map(self) -> dict[str, float]:
        return dict(zip(self.labels, self.values.tolist()))

    def ranks(self) -> np.ndarray:
        return dense_rank(self.values)


@dataclass(frozen=True)
class EquivalenceReport:
    n: int
    alpha: float
    max_abs_diff_normalized: float
    max_abs_diff_scale_relation: float
    passed: bool
    tol: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "max_abs_diff_normalized": self.max_abs_diff_normalized,
            "max_abs_diff_scale_relation": self.max_abs_diff_scale_relation,
            "pass": self.passed,
            "tol": self.tol,
        }


def dense_rank(values, digits: int = RANK_DIGITS) -> np.ndarray:
    """Dense ranks, largest value first.

    Values that agree to ``digits`` significant digits share a rank, so
    roundoff between symmetric nodes does not split a tie.
    """
    keys = np.array([float(f"{v:.{digits}g}") for v in np.asarray(values, dtype=float)])
    distinct = np.unique(keys)[::-1]
    return np.searchsorted(-distinct, -keys) + 1


def _constant_term(n: int, alpha: float, scale: Scale) -> float:
    return (1.0 - alpha) / n if scale is Scale.NORMALIZED else 1.0 - alpha


def total_effect_centrality(
    V: InfluenceMatrix, exclude_diagonal: bool = False, renormalize: bool = False
) -> CentralityVector:
    """Average the columns of the influence matrix.

    With ``exclude_diagonal`` each column average skips the node's influence
    on itself and divides by ``n - 1``. Those averages do not sum to one, so
    they are tagged unnormalized unless ``renormalize`` rescales them.
    """
    n = V.n
    col = V.entries.sum(axis=0)
    if not exclude_diagonal:
        values, divisor, scale = col / n, n, Scale.NORMALIZED
    else:
        if n == 1:
            raise DegenerateSize("excluding the diagonal needs at least two nodes")
        values = (col - np.diagonal(V.entries)) / (n - 1)
        divisor, scale = n - 1, Scale.UNNORMALIZED
        if renormalize:
            values, scale = values / values.sum(), Scale.NORMALIZED
    return CentralityVector(values, scale, V.alpha, V.labels, V.method, divisor)


def centrality_direct(
    W, alpha: float = DEFAULT_ALPHA, scale: Scale | str = Scale.NORMALIZED
) -> CentralityVector:
    """Solve ``(I - alpha W^T) c = b`` with one dense LU solve."""
    W = as_stochastic(W)
    alpha = check_alpha(alpha)
    scale = Scale(scale)
    n = W.n
    if n > DIRECT_MAX_N:
        raise ProblemTooLarge(
            f"dense solve refused for n={n} > {DIRECT_MAX_N}; use the fixed-point method"
        )
    m = np.eye(n) - alpha * W.entries.T
    try:
        x = np.linalg.solve(m, np.full(n, _constant_term(n, alpha, scale)))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"I - alpha W^T reported singular: {exc}") from exc
    divisor = n if scale is Scale.NORMALIZED else 1
    return CentralityVector(x, scale, alpha, W.labels, Method.DIRECT, divisor)


def centrality_fixed_point(
    W, config: SolverConfig | None = None, scale: Scale | str = Scale.NORMALIZED
) -> CentralityVector:
    """Iterate ``c <- b + alpha W^T c`` from ``c = b``.

    The iterate after ``t`` steps equals the first ``t + 1`` terms of the
    Neumann series applied to ``b``. Iteration stops when the max-norm
    change between iterates is at most ``tol * (1 - alpha)`` and the 1-norm
    change is at most ``tol * sum(b)``. The second test bounds the mass
    still missing from the iterate: normalized output then sums to one
    within ``tol``, and its max-norm error is at most ``tol``.
    """
    W = as_stochastic(W)
    config = config or SolverConfig()
    scale = Scale(scale)
    alpha, n = config.alpha, W.n
    wt = sparse.csr_matrix(W.entries.T)
    b = np.full(n, _constant_term(n, alpha, scale))
    threshold = config.tol * (1.0 - alpha)
    mass_threshold = config.tol * b.sum()

    c = b.copy()
    diff = math.inf
    for it in range(1, config.max_iter + 1):
        nxt = b + alpha * (wt @ c)
        step = np.abs(nxt - c)
        diff = float(step.max())
        c = nxt
        if diff <= threshold and step.sum() <= mass_threshold:
            divisor = n if scale is Scale.NORMALIZED else 1
            return CentralityVector(
                c, scale, alpha, W.labels, Method.FIXED_POINT, divisor, it, diff
            )
    raise IterationCapExceeded(
        f"fixed point not reached in {config.max_iter} iterations "
        f"(last change {diff:.3g}, need <= {threshold:.3g})",
        last=c,
        residual=diff,
    )


def centrality(W, config: SolverConfig, scale: Scale | str = Scale.NORMALIZED) -> CentralityVector:
    """Dispatch on ``config.method``."""
    scale = Scale(scale)
    if config.method is Method.FIXED_POINT:
        return centrality_fixed_point(W, config, scale)
    if config.method is Method.DIRECT:
        return centrality_direct(W, config.alpha, scale)
    c = total_effect_centrality(influence_series(W, config.alpha, config.tol, config.max_iter))
    if scale is Scale.UNNORMALIZED:
        c = dataclasses.replace(c, values=c.values * c.n, scale=scale, divisor=1)
    return c


def pagerank(
    A: AdjacencyMatrix,
    d: float = DEFAULT_ALPHA,
    form: PageRankForm | str = PageRankForm.NORMALIZED,
    policy: DanglingPolicy | str = DanglingPolicy.REJECT,
    config: SolverConfig | None = None,
) -> CentralityVector:
    """PageRank of an adjacency matrix.

    ``form="original"`` solves ``PR(i) = (1 - d) + d * sum_j PR(j)/od(j)``
    over in-neighbors j, whose values sum to n; ``form="normalized"`` uses
    ``(1 - d)/n`` and sums to one. Uses the fixed-point solver unless
    ``config.method`` says otherwise. ``d`` overrides ``config.alpha``.
    """
    form = PageRankForm(form)
    config = dataclasses.replace(config, alpha=d) if config else SolverConfig(alpha=d)
    W = row_normalize(A, policy)
    return centrality(W, config, form.scale)


def verify_equivalence(
    A: AdjacencyMatrix,
    alpha: float = DEFAULT_ALPHA,
    policy: DanglingPolicy | str = DanglingPolicy.REJECT,
    tol: float = 1e-9,
    max_iter: int = 10_000,
) -> EquivalenceReport:
    """Check PageRank against column-averaged influence on one graph.

    Compares normalized PageRank (fixed point) with the direct solve of the
    averaged-influence system, and original-form PageRank with ``n`` times
    the normalized one. The fixed-point solves run at ``tol / (10 n)`` so
    that solver error stays well inside ``tol`` after scaling by ``n``.
    """
    alpha = check_alpha(alpha)
    if not tol > 0:
        raise InputError(f"tol must be positive, got {tol!r}")
    n = A.n
    config = SolverConfig(alpha=alpha, tol=tol / (10 * n), max_iter=max_iter)
    W = row_normalize(A, policy)
    pr_norm = centrality_fixed_point(W, config, Scale.NORMALIZED)
    fj_norm = centrality_direct(W, alpha, Scale.NORMALIZED)
    pr_orig = centrality_fixed_point(W, config, Scale.UNNORMALIZED)
    d_norm = float(np.abs(pr_norm.values - fj_norm.values).max())
    d_scale = float(np.abs(pr_orig.values - n * pr_norm.values).max())
    return EquivalenceReport(n, alpha, d_norm, d_scale, d_norm <= tol and d_scale <= tol, tol)
