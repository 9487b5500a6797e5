from fractions import Fraction

import numpy as np
import pytest

import fjrank.influence as influence
from conftest import random_stochastic
from fjrank import (
    InputError,
    IterationCapExceeded,
    Method,
    NumericalFailure,
    ProblemTooLarge,
    SolverConfig,
    check_alpha,
    influence_direct,
    influence_matrix,
    influence_series,
    series_partial_sum,
    series_terms,
)
from oracles import exact_influence, walk_mass_loops

SWAP = [[0, 1], [1, 0]]
CYCLE3 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]

# frozen from oracles.exact_influence(..., Fraction(1, 2))
SWAP_V = np.array([[2, 1], [1, 2]]) / 3
CYCLE3_V = np.array([[4, 2, 1], [1, 4, 2], [2, 1, 4]]) / 7


def cycle(n):
    return np.roll(np.eye(n), 1, axis=1)


def row_sum_norm(m):
    return np.abs(m).sum(axis=1).max()


def test_frozen_values_match_oracle():
    for W, V in [(SWAP, SWAP_V), (CYCLE3, CYCLE3_V)]:
        exact = exact_influence(W, Fraction(1, 2))
        np.testing.assert_allclose(np.array(exact, dtype=float), V, atol=1e-15, rtol=0)


class TestDirect:
    def test_identity(self):
        V = influence_direct(np.eye(2), 0.5)
        np.testing.assert_allclose(V.entries, np.eye(2), atol=1e-15, rtol=0)
        assert V.method is Method.DIRECT and V.method_tag == "direct"

    @pytest.mark.parametrize("W, expected", [(SWAP, SWAP_V), (CYCLE3, CYCLE3_V)])
    def test_closed_forms(self, W, expected):
        np.testing.assert_allclose(influence_direct(W, 0.5).entries, expected, atol=1e-12, rtol=0)

    def test_cycle_closed_form_general_alpha(self):
        # W^3 = I gives V = (1 - a)/(1 - a^3) (I + aW + a^2 W^2)
        W = np.array(CYCLE3, dtype=float)
        for a in (0.1, 0.5, 0.9):
            expected = (1 - a) / (1 - a**3) * (np.eye(3) + a * W + a * a * W @ W)
            np.testing.assert_allclose(influence_direct(W, a).entries, expected, atol=1e-13, rtol=0)

    def test_random_rows_sum_to_one(self):
        rng = np.random.default_rng(0)
        for _ in range(30):
            n = int(rng.integers(2, 60))
            V = influence_direct(random_stochastic(rng, n, density=0.2), rng.uniform(0.05, 0.95))
            np.testing.assert_allclose(V.entries.sum(axis=1), 1.0, atol=1e-10, rtol=0)
            assert V.entries.min() >= 0.0
            assert V.raw_min >= -1e-14

    def test_labels_carried(self):
        from fjrank import RowStochasticMatrix

        W = RowStochasticMatrix(np.array(SWAP, dtype=float), ("x", "y"))
        assert influence_direct(W, 0.3).labels == ("x", "y")

    def test_refuses_large(self, monkeypatch):
        monkeypatch.setattr(influence, "DIRECT_MAX_N", 2)
        with pytest.raises(ProblemTooLarge, match="series"):
            influence.influence_direct(CYCLE3, 0.5)

    def test_not_square(self):
        with pytest.raises(InputError):
            influence_direct(np.ones((2, 3)) / 3, 0.5)


class TestClamp:
    def test_tiny_negative_clamped(self):
        v, raw = influence._clamp(np.array([[1.0, -5e-15], [0.0, 1.0]]))
        assert raw == -5e-15
        assert v.min() == 0.0

    def test_real_negative_is_failure(self):
        with pytest.raises(NumericalFailure):
            influence._clamp(np.array([[1.0, -1e-9]]))


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2, 1.5, float("nan"), "x"])
def test_alpha_bounds(alpha):
    with pytest.raises(InputError):
        check_alpha(alpha)


def test_solver_config_validation():
    with pytest.raises(InputError):
        SolverConfig(tol=0)
    with pytest.raises(InputError):
        SolverConfig(max_iter=0)
    assert SolverConfig(method="series").method is Method.SERIES


class TestSeries:
    def test_term_count(self):
        # 0.5^20 <= 1e-6 < 0.5^19: k = 19, i.e. 20 terms
        assert series_terms(0.5, 1e-6) == 19
        assert series_terms(0.5, 0.5) == 0
        assert series_terms(0.5, 0.25) == 1

    @pytest.mark.parametrize("alpha", [0.05, 0.3, 0.5, 0.85, 0.99])
    @pytest.mark.parametrize("tol", [1e-3, 1e-8, 1e-12])
    def test_term_count_is_minimal(self, alpha, tol):
        k = series_terms(alpha, tol)
        assert alpha ** (k + 1) <= tol
        assert k == 0 or alpha**k > tol

    def test_identity_geometric(self):
        V = influence_series(np.eye(3), 0.5, 1e-12)
        k = V.terms
        np.testing.assert_allclose(np.diagonal(V.entries), 1 - 0.5 ** (k + 1), rtol=0, atol=1e-15)
        assert np.count_nonzero(V.entries - np.diag(np.diagonal(V.entries))) == 0
        assert V.method_tag == f"series({k})"

    def test_swap_against_direct(self):
        V = influence_series(SWAP, 0.5, 1e-10)
        np.testing.assert_allclose(V.entries, SWAP_V, atol=1e-10, rtol=0)

    def test_cap(self):
        with pytest.raises(IterationCapExceeded) as info:
            influence_series(SWAP, 0.5, 1e-6, max_iter=10)
        assert info.value.required == 19

    def test_random_agreement(self):
        rng = np.random.default_rng(1)
        for tol in (1e-4, 1e-8, 1e-11):
            for _ in range(10):
                W = random_stochastic(rng, int(rng.integers(2, 30)), density=0.3)
                alpha = rng.uniform(0.1, 0.9)
                diff = influence_series(W, alpha, tol).entries - influence_direct(W, alpha).entries
                assert np.abs(diff).max() <= tol + 1e-10
                assert row_sum_norm(diff) <= tol + 1e-10

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.85])
    def test_cycle_bound_is_tight(self, alpha):
        W = cycle(5)
        exact = influence_direct(W, alpha).entries
        for k in range(0, 25):
            err = row_sum_norm(series_partial_sum(W, alpha, k) - exact)
            assert err == pytest.approx(alpha ** (k + 1), abs=1e-12)

    def test_error_bound_property(self):
        V = influence_series(SWAP, 0.5, 1e-3)
        assert V.error_bound == 0.5 ** (V.terms + 1) <= 1e-3

    def test_negative_k(self):
        with pytest.raises(InputError):
            series_partial_sum(SWAP, 0.5, -1)


def test_walk_interpretation_small_graphs():
    rng = np.random.default_rng(7)
    for _ in range(25):
        n = int(rng.integers(1, 6))
        A = (rng.random((n, n)) < 0.5).astype(float)
        A[np.arange(n), rng.integers(0, n, n)] = 1.0
        W = A / A.sum(axis=1, keepdims=True)
        alpha = rng.uniform(0.1, 0.9)
        masses = [walk_mass_loops(W, length) for length in range(7)]
        for k in range(7):
            expected = sum(alpha**l * masses[l] for l in range(k + 1))
            got = series_partial_sum(W, alpha, k) / (1 - alpha)
            np.testing.assert_allclose(got, expected, atol=1e-12, rtol=0)


def test_influence_matrix_dispatch():
    assert influence_matrix(SWAP, SolverConfig(0.5, method="direct")).method is Method.DIRECT
    assert influence_matrix(SWAP, SolverConfig(0.5, method="series")).method is Method.SERIES
    with pytest.raises(InputError):
        influence_matrix(SWAP, SolverConfig(0.5, method="fixed-point"))
