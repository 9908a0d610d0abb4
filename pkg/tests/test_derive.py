import numpy as np
import pytest

from groupahp import (
    ConvergenceError,
    PriorityVector,
    consistent_matrix_from_priorities,
    evm_priorities,
    gmm_priorities,
    pcm_from_upper_triangle,
)
from tests.test_core import random_pcm


class TestGMM:
    def test_known_3x3(self):
        # row geometric means of [[1,2,4],[1/2,1,2],[1/4,1/2,1]] are 2, 1, 1/2,
        # so the normalized priorities are 4/7, 2/7, 1/7
        m = pcm_from_upper_triangle(3, [2.0, 4.0, 2.0])
        w = gmm_priorities(m)
        assert np.allclose(w.weights, [4 / 7, 2 / 7, 1 / 7], atol=1e-14)

    def test_identity_comparisons_give_uniform(self):
        m = pcm_from_upper_triangle(3, [1.0, 1.0, 1.0])
        assert np.allclose(gmm_priorities(m).weights, 1 / 3)

    def test_matches_direct_product_formula(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = random_pcm(5, rng)
            direct = np.prod(m.values, axis=1) ** (1 / 5)
            direct /= direct.sum()
            assert np.max(np.abs(gmm_priorities(m).weights - direct)) <= 1e-12

    def test_scale_free_in_row_permutation(self):
        rng = np.random.default_rng(3)
        m = random_pcm(4, rng)
        perm = np.array([2, 0, 3, 1])
        permuted = m.values[np.ix_(perm, perm)]
        w = gmm_priorities(m).weights
        from groupahp import PCMatrix

        w_p = gmm_priorities(PCMatrix(permuted)).weights
        assert np.allclose(w_p, w[perm])


class TestEVM:
    def test_consistent_matrix_recovers_vector_and_lambda_n(self):
        w = PriorityVector.from_raw([5.0, 2.0, 1.0, 3.0])
        m = consistent_matrix_from_priorities(w)
        v, lam = evm_priorities(m)
        assert np.max(np.abs(v.weights - w.weights)) <= 1e-10
        assert lam == pytest.approx(4.0, abs=1e-10)

    def test_lambda_max_matches_eigendecomposition(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            m = random_pcm(5, rng)
            _, lam = evm_priorities(m)
            eigs = np.linalg.eigvals(m.values)
            assert lam == pytest.approx(float(np.max(eigs.real)), abs=1e-8)

    def test_vector_matches_principal_eigenvector(self):
        rng = np.random.default_rng(13)
        m = random_pcm(6, rng)
        v, _ = evm_priorities(m)
        vals, vecs = np.linalg.eig(m.values)
        principal = np.abs(vecs[:, np.argmax(vals.real)].real)
        principal /= principal.sum()
        assert np.max(np.abs(v.weights - principal)) <= 1e-8

    def test_agrees_with_gmm_on_consistent_matrices(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            w = PriorityVector(rng.dirichlet(np.ones(5)))
            m = consistent_matrix_from_priorities(w)
            v, _ = evm_priorities(m)
            assert np.max(np.abs(v.weights - gmm_priorities(m).weights)) <= 1e-10

    def test_raises_when_iteration_budget_exhausted(self):
        rng = np.random.default_rng(19)
        m = random_pcm(5, rng)
        with pytest.raises(ConvergenceError):
            evm_priorities(m, tol=1e-300, max_iter=3)
