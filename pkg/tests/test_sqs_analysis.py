"""
Tests for synchronized-state certification.
"""

import unittest
from itertools import product
import numpy as np
from numpy.testing import assert_allclose
from qssr.bench.sampling import haar_state, random_density_matrix, substream
from qssr.builder.embedding import embed_antisymmetric, embed_symmetric, sym_basis, asym_basis
from qssr.errors import ArgumentError, InvariantError
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState
from qssr.tensor_core import partial_trace
from qssr.verification.sqs import (
    decompose_pair,
    is_sqs_mixed,
    is_sqs_pure,
    is_sqs_purified,
    mixed_symmetry_nullspace_dim,
    prop1_residual,
    purify,
    reduced_cross_term,
    single_party_reductions,
)


def random_symmetric_state(shape: SystemShape, rng: np.random.Generator) -> PureState:
    basis = [embed_symmetric(shape, 0, idx).amplitudes for idx in sym_basis(shape)]
    weights = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
    return PureState.normalized(sum(w * b for w, b in zip(weights, basis)))


class TestPureStates(unittest.TestCase):
    """Test the pairwise cross-term criterion on pure states."""

    def test_entangled_example(self):
        """(|01> + i|10>)/sqrt(2) is synchronized with maximally mixed reductions."""
        shape = SystemShape.of(2, 2)
        psi = PureState(np.array([0, 1, 1j, 0]) / np.sqrt(2))
        verdict = is_sqs_pure(psi, shape)
        self.assertTrue(verdict.is_sqs)
        self.assertLess(verdict.max_pair_residual, 1e-12)
        for rho in single_party_reductions(psi, shape):
            assert_allclose(rho, np.eye(2) / 2, atol=1e-12)

    def test_product_of_different_states(self):
        shape = SystemShape.of(2, 2)
        psi = PureState([0, 1, 0, 0])
        verdict = is_sqs_pure(psi, shape)
        self.assertFalse(verdict)
        self.assertAlmostEqual(verdict.per_pair_residuals[(1, 2)], 0.5)
        self.assertIn("VIOLATED", str(verdict))

    def test_decomposition(self):
        shape = SystemShape.of(3, 2)
        psi = haar_state(8, substream(1))
        parts = decompose_pair(psi, shape, 1, 3)
        assert_allclose(parts.sym_part + parts.anti_part, psi.amplitudes, atol=1e-15)
        self.assertAlmostEqual(abs(np.vdot(parts.sym_part, parts.anti_part)), 0.0, places=12)

    def test_cross_term_measures_the_difference(self):
        """rho_i - rho_j is twice the cross term, which flips sign on subsystem j."""
        for n, N in [(2, 2), (2, 3), (3, 2)]:
            shape = SystemShape.of(n, N)
            psi = haar_state(shape.system_dim, substream(n, N))
            reductions = single_party_reductions(psi, shape)
            for i, j in shape.pairs():
                cross_i = reduced_cross_term(psi, shape, i, j)
                cross_j = reduced_cross_term(psi, shape, i, j, subsystem=j)
                assert_allclose(reductions[i - 1] - reductions[j - 1], 2 * cross_i, atol=1e-12)
                assert_allclose(cross_j, -cross_i, atol=1e-12)

    def test_agrees_with_reduced_state_comparison(self):
        """Pair test and direct reduction comparison agree on random and symmetric states."""
        for n, N in [(2, 2), (2, 3), (3, 2)]:
            shape = SystemShape.of(n, N)
            rng = substream(5, n, N)
            for k in range(500):
                if k % 2:
                    psi = random_symmetric_state(shape, rng)
                else:
                    psi = haar_state(shape.system_dim, rng)
                pure = is_sqs_pure(psi, shape, tol=1e-10)
                direct = is_sqs_mixed(psi.density(), shape, tol=1e-10)
                self.assertEqual(pure.is_sqs, direct.is_sqs)
                self.assertEqual(pure.is_sqs, bool(k % 2))

    def test_ghz(self):
        shape = SystemShape.of(3, 2)
        ghz = PureState(np.array([1, 0, 0, 0, 0, 0, 0, 1]) / np.sqrt(2))
        self.assertTrue(is_sqs_pure(ghz, shape))

    def test_phased_superpositions_are_synchronized(self):
        """Non-symmetric SQSs: exchanged basis states with arbitrary relative phases."""
        rng = substream(6)
        for k in range(50):
            phases = np.exp(1j * rng.uniform(0, 2 * np.pi, 2))
            two = np.zeros(9, dtype=complex)
            two[1], two[3] = 1, phases[0]  # |01> + e^{ia}|10>
            three = np.zeros(8, dtype=complex)
            three[1], three[2], three[4] = 1, phases[0], phases[1]  # |001> + e^{ia}|010> + e^{ib}|100>
            for vector, shape in ((two, SystemShape.of(2, 3)), (three, SystemShape.of(3, 2))):
                psi = PureState.normalized(vector)
                self.assertTrue(is_sqs_pure(psi, shape, tol=1e-10))
                self.assertTrue(is_sqs_mixed(psi.density(), shape, tol=1e-10))

    def test_antisymmetric_states_are_synchronized(self):
        shape = SystemShape.of(3, 3)
        psi = embed_antisymmetric(shape, 0, asym_basis(shape)[0])
        self.assertTrue(is_sqs_pure(psi, shape))

    def test_state_with_ancilla(self):
        """The ancilla is traced out together with the other subsystems."""
        shape = SystemShape.of(2, 2, 2)
        vector = np.zeros(8, dtype=complex)
        vector[1] = vector[6] = 1 / np.sqrt(2)  # |0;01> + |1;10>
        self.assertTrue(is_sqs_pure(PureState(vector), shape))
        vector = np.zeros(8, dtype=complex)
        vector[1] = vector[5] = 1 / np.sqrt(2)  # |0;01> + |1;01>
        self.assertGreater(prop1_residual(PureState(vector), shape, 1, 2), 0.4)

    def test_invalid_subsystem(self):
        shape = SystemShape.of(2, 2)
        with self.assertRaises(ArgumentError):
            reduced_cross_term(PureState([1, 0, 0, 0]), shape, 1, 2, subsystem=3)


class TestMixedStates(unittest.TestCase):
    """Test mixed states directly and through purification."""

    def test_maximally_mixed(self):
        shape = SystemShape.of(3, 2)
        self.assertTrue(is_sqs_mixed(DensityMatrix.maximally_mixed(8), shape))

    def test_noisy_ghz(self):
        shape = SystemShape.of(3, 2)
        ghz = PureState(np.array([1, 0, 0, 0, 0, 0, 0, 1]) / np.sqrt(2))
        rho = DensityMatrix(0.5 * ghz.density().matrix + 0.5 * np.eye(8) / 8)
        self.assertTrue(is_sqs_mixed(rho, shape))
        self.assertTrue(is_sqs_purified(rho, shape))

    def test_fixed_and_mixed_parties(self):
        """|0><0| (x) I/2 has different reductions."""
        rho = DensityMatrix(np.kron(np.diag([1.0, 0.0]), np.eye(2) / 2))
        verdict = is_sqs_mixed(rho, SystemShape.of(2, 2))
        self.assertFalse(verdict.is_sqs)
        self.assertFalse(is_sqs_purified(rho, SystemShape.of(2, 2)).is_sqs)

    def test_non_physical_input(self):
        with self.assertRaises(InvariantError):
            is_sqs_mixed(np.diag([1.5, -0.5, 0, 0]), SystemShape.of(2, 2))

    def test_purification(self):
        """Tracing out the purifying register recovers the state."""
        shape = SystemShape.of(2, 2)
        rho = random_density_matrix(4, substream(3), rank=3)
        psi, purified_shape = purify(rho, shape)
        self.assertEqual(purified_shape.ancilla_dim, 3)
        assert_allclose(partial_trace(psi, [3, 4], [1]).matrix, rho.matrix, atol=1e-12)

    def test_purified_route_agrees(self):
        shape = SystemShape.of(2, 2)
        rng = substream(11)
        for k in range(20):
            if k % 2:
                states = [random_symmetric_state(shape, rng).density().matrix for _ in range(3)]
                rho = DensityMatrix(sum(states) / 3)
            else:
                rho = random_density_matrix(4, rng)
            self.assertEqual(is_sqs_purified(rho, shape).is_sqs, is_sqs_mixed(rho, shape).is_sqs)
            self.assertEqual(is_sqs_purified(rho, shape).is_sqs, bool(k % 2))


class TestSimultaneousEigenspaces(unittest.TestCase):
    """Test the dimension of joint P_ij eigenspaces."""

    def test_two_parties(self):
        shape = SystemShape.of(2, 2)
        self.assertEqual(mixed_symmetry_nullspace_dim(shape, {(1, 2): 1}), 3)
        self.assertEqual(mixed_symmetry_nullspace_dim(shape, {(1, 2): -1}), 1)

    def test_consistent_signs(self):
        self.assertEqual(mixed_symmetry_nullspace_dim(SystemShape.of(3, 2), {(1, 2): 1, (2, 3): 1}), 4)
        self.assertEqual(mixed_symmetry_nullspace_dim(SystemShape.of(3, 3), {(1, 2): -1, (2, 3): -1}), 1)

    def test_conflicting_signs_leave_nothing(self):
        """Any sign conflict among the pairs of three parties empties the eigenspace."""
        for N in (2, 3):
            shape = SystemShape.of(3, N)
            pairs = shape.pairs()
            for signs in product((1, -1), repeat=len(pairs)):
                if len(set(signs)) == 1:
                    continue
                self.assertEqual(mixed_symmetry_nullspace_dim(shape, dict(zip(pairs, signs))), 0)
            for signs in [(1, -1), (-1, 1)]:
                self.assertEqual(mixed_symmetry_nullspace_dim(shape, dict(zip([(1, 2), (2, 3)], signs))), 0)

    def test_invalid_signs(self):
        with self.assertRaises(ArgumentError):
            mixed_symmetry_nullspace_dim(SystemShape.of(2, 2), {(1, 2): 2})
        with self.assertRaises(ArgumentError):
            mixed_symmetry_nullspace_dim(SystemShape.of(2, 2), {})


if __name__ == '__main__':
    unittest.main()
