"""Total-influence matrix ``V = (1 - alpha) (I - alpha W)^{-1}``.

Two routes are provided: a dense LU solve, and a truncated Neumann series
``(1 - alpha) * sum_j alpha^j W^j``.  Because every power of a row-stochastic
``W`` is row-stochastic, the tail of the series after ``k`` terms has max
row-sum norm exactly ``alpha^(k+1)``, which fixes the truncation length
in advance.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InputError,
    IterationCapExceeded,
    NumericalFailure,
    ProblemTooLarge,
)
from .graph import RowStochasticMatrix

DEFAULT_ALPHA = 0.85
DIRECT_MAX_N = 2000
CLAMP_FLOOR = -1e-14


class Method(str, enum.Enum):
    DIRECT = "direct"
    SERIES = "series"
    FIXED_POINT = "fixed-point"


def check_alpha(alpha) -> float:
    """Validate a damping factor, which must lie strictly inside (0, 1)."""
    try:
        a = float(alpha)
    except (TypeError, ValueError):
        raise InputError(f"damping factor must be a real number, got {alpha!r}") from None
    if not 0.0 < a < 1.0:
        raise InputError(f"damping factor must satisfy 0 < alpha < 1, got {a!r}")
    return a


@dataclass(frozen=True)
class SolverConfig:
    alpha: float = DEFAULT_ALPHA
    tol: float = 1e-10
    max_iter: int = 1000
    method: Method = Method.FIXED_POINT

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        object.__setattr__(self, "method", Method(self.method))
        if not self.tol > 0:
            raise InputError(f"tol must be positive, got {self.tol!r}")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise InputError(f"max_iter must be a positive integer, got {self.max_iter!r}")
        object.__setattr__(self, "max_iter", int(self.max_iter))


@dataclass(frozen=True, eq=False)
class InfluenceMatrix:
    """Dense ``V`` plus how it was obtained.

    ``terms`` is the truncation index ``k`` for series output (``None`` for
    a direct solve). ``raw_min`` is the smallest entry before roundoff
    clamping.
    """

    entries: np.ndarray
    alpha: float
    method: Method
    labels: tuple[str, ...]
    terms: int | None = None
    raw_min: float = 0.0

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def method_tag(self) -> str:
        if self.method is Method.SERIES:
            return f"series({self.terms})"
        return self.method.value

    @property
    def error_bound(self) -> float:
        """Max row-sum distance to the exact ``V`` (zero up to roundoff for direct)."""
        if self.method is Method.SERIES:
            return self.alpha ** (self.terms + 1)
        return 0.0


def as_stochastic(W) -> RowStochasticMatrix:
    if isinstance(W, RowStochasticMatrix):
        return W
    return RowStochasticMatrix(np.asarray(W, dtype=float))


def _clamp(v: np.ndarray) -> tuple[np.ndarray, float]:
    raw_min = float(v.min())
    if raw_min < CLAMP_FLOOR:
        raise NumericalFailure(f"influence matrix has negative entry {raw_min!r}")
    if raw_min < 0:
        v = np.where(v < 0, 0.0, v)
    return v, raw_min


def influence_direct(W, alpha: float = DEFAULT_ALPHA) -> InfluenceMatrix:
    """Exact ``V`` by LU factorization with partial pivoting."""
    W = as_stochastic(W)
    alpha = check_alpha(alpha)
    n = W.n
    if n > DIRECT_MAX_N:
        raise ProblemTooLarge(
            f"dense solve refused for n={n} > {DIRECT_MAX_N}; use the series or "
            "fixed-point method"
        )
    m = np.eye(n) - alpha * W.entries
    try:
        v = np.linalg.solve(m, (1.0 - alpha) * np.eye(n))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"I - alpha W reported singular: {exc}") from exc
    if not np.isfinite(v).all():
        raise NumericalFailure("non-finite entries in influence matrix")
    v, raw_min = _clamp(v)
    return InfluenceMatrix(v, alpha, Method.DIRECT, W.labels, raw_min=raw_min)


def series_terms(alpha: float, tol: float) -> int:
    """Smallest ``k`` with ``alpha^(k+1) <= tol`` (the series then has k + 1 terms)."""
    alpha = check_alpha(alpha)
    if not tol > 0:
        raise InputError(f"tol must be positive, got {tol!r}")
    # log estimate, then walk to the exact float boundary
    k = max(0, math.ceil(math.log(tol) / math.log(alpha)) - 1)
    while k > 0 and alpha ** k <= tol:
        k -= 1
    while alpha ** (k + 1) > tol:
        k += 1
    return k


def iter_partial_sums(W, alpha: float):
    """Yield ``(1 - alpha) * sum_{j=0..k} alpha^j W^j`` for k = 0, 1, 2, ..."""
    W = as_stochastic(W)
    alpha = check_alpha(alpha)
    w = W.entries
    term = np.eye(W.n)
    total = term.copy()
    while True:
        yield (1.0 - alpha) * total
        term = alpha * (term @ w)
        total += term


def series_partial_sum(W, alpha: float, k: int) -> np.ndarray:
    """``(1 - alpha) * sum_{j=0..k} alpha^j W^j`` as a dense array."""
    if k < 0:
        raise InputError(f"truncation index must be >= 0, got {k}")
    return next(itertools.islice(iter_partial_sums(W, alpha), k, None))


def influence_series(
    W, alpha: float = DEFAULT_ALPHA, tol: float = 1e-10, max_iter: int = 1000
) -> InfluenceMatrix:
    """Truncated Neumann series within max row-sum distance ``tol`` of ``V``.

    Raises :class:`IterationCapExceeded` when the truncation index needed
    for ``tol`` exceeds ``max_iter``.
    """
    W = as_stochastic(W)
    alpha = check_alpha(alpha)
    k = series_terms(alpha, tol)
    if k > max_iter:
        raise IterationCapExceeded(
            f"series needs k={k} for tol={tol!r} at alpha={alpha!r}, max_iter={max_iter}",
            required=k,
        )
    v, raw_min = _clamp(series_partial_sum(W, alpha, k))
    return InfluenceMatrix(v, alpha, Method.SERIES, W.labels, terms=k, raw_min=raw_min)


def influence_matrix(W, config: SolverConfig) -> InfluenceMatrix:
    if config.method is Method.DIRECT:
        return influence_direct(W, config.alpha)
    if config.method is Method.SERIES:
        return influence_series(W, config.alpha, config.tol, config.max_iter)
    raise InputError("the influence matrix needs the direct or series method")

