"""
Tests for Kraus channels, dilations and synchronizer certification.
"""

import unittest
import numpy as np
from numpy.testing import assert_allclose
from qssr.bench.bloch import reduced_bloch_vectors
from qssr.bench.sampling import haar_product_state, haar_state, haar_unitary, random_density_matrix, substream
from qssr.builder.build import build
from qssr.builder.modes import SymmetryMode
from qssr.builder.presets import (
    sign_flipped_synchronizer,
    triplet_singlet_channel,
    twisted_exchange_channel,
    two_qubit_synchronizer,
)
from qssr.channel import (
    KrausChannel,
    complete_dilation,
    compose,
    from_unitary_columns,
    mix_outputs,
    replacement_channel,
    stinespring_apply,
)
from qssr.errors import ArgumentError, CompletenessError, DimensionError, OrthonormalityError
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState
from qssr.utils.numpy import hermiticity_deviation
from qssr.verification.certification import certify_qssr, synchronization_defect
from qssr.verification.sqs import is_sqs_mixed, single_party_reductions

TWO_QUBIT = SystemShape.of(2, 2, 2)


class TestApply(unittest.TestCase):
    """Test channel application to states."""

    def test_identity(self):
        rho = random_density_matrix(4, substream(1))
        assert_allclose(KrausChannel.identity(2, 2).apply(rho).matrix, rho.matrix, atol=1e-15)

    def test_two_qubit_synchronizer_on_product(self):
        """|01> is mapped to a state with equal reductions and equal z components."""
        output = two_qubit_synchronizer().apply(PureState([0, 1, 0, 0]))
        rho_a, rho_b = single_party_reductions(output, SystemShape.of(2, 2))
        assert_allclose(rho_a, rho_b, atol=1e-12)
        bloch_a, bloch_b = reduced_bloch_vectors(output, SystemShape.of(2, 2))
        self.assertAlmostEqual(bloch_a.z, bloch_b.z, places=12)

    def test_two_qubit_synchronizer_on_singlet(self):
        singlet = PureState(np.array([0, 1, -1, 0]) / np.sqrt(2))
        output = two_qubit_synchronizer().apply(singlet)
        for rho in single_party_reductions(output, SystemShape.of(2, 2)):
            assert_allclose(rho, np.eye(2) / 2, atol=1e-12)

    def test_synchronized_products_are_fixed(self):
        """|phi>|phi> is left unchanged."""
        channel = two_qubit_synchronizer()
        for k in range(10):
            phi = haar_state(2, substream(2, k)).amplitudes
            psi = PureState(np.kron(phi, phi))
            assert_allclose(channel.apply(psi).matrix, psi.density().matrix, atol=1e-12)

    def test_trace_and_hermiticity(self):
        channel = build(TWO_QUBIT, SymmetryMode.symmetric(), "random(3)")
        for k in range(20):
            output = channel.apply(random_density_matrix(4, substream(4, k))).matrix
            self.assertAlmostEqual(np.trace(output).real, 1.0, places=12)
            self.assertLess(hermiticity_deviation(output), 1e-12)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            KrausChannel.identity(2, 2).apply(DensityMatrix.maximally_mixed(8))

    def test_completeness_is_enforced(self):
        with self.assertRaises(CompletenessError) as context:
            KrausChannel(SystemShape.of(2, 2), [2 * np.eye(4)])
        self.assertAlmostEqual(context.exception.deviation, 3.0)

    def test_operator_count_must_match(self):
        with self.assertRaises(DimensionError):
            KrausChannel(TWO_QUBIT, [np.eye(4)])


class TestDilation(unittest.TestCase):
    """Test the isometry/unitary picture of channels."""

    def test_standard_columns(self):
        columns = np.eye(8, dtype=complex)[:, :4]
        channel = from_unitary_columns(columns, TWO_QUBIT)
        assert_allclose(channel.operators[0], np.eye(4))
        assert_allclose(channel.operators[1], np.zeros((4, 4)))

    def test_haar_columns(self):
        columns = haar_unitary(8, substream(9))[:, :4]
        self.assertLess(from_unitary_columns(columns, TWO_QUBIT).completeness_deviation(), 1e-10)

    def test_non_orthonormal_columns(self):
        columns = np.ones((8, 4)) / np.sqrt(8)
        with self.assertRaises(OrthonormalityError):
            from_unitary_columns(columns, TWO_QUBIT)

    def test_identity_dilation(self):
        assert_allclose(complete_dilation(KrausChannel.identity(2, 2)), np.eye(4), atol=1e-15)

    def test_two_qubit_dilation(self):
        """The completed 8x8 unitary reproduces the channel on random states."""
        channel = two_qubit_synchronizer()
        unitary = complete_dilation(channel)
        self.assertEqual(unitary.shape, (8, 8))
        assert_allclose(unitary.conj().T @ unitary, np.eye(8), atol=1e-10)
        assert_allclose(unitary[:, :4], channel.stacked(), atol=1e-15)
        for k in range(100):
            rho = random_density_matrix(4, substream(10, k))
            assert_allclose(stinespring_apply(unitary, channel.shape, rho).matrix,
                            channel.apply(rho).matrix, atol=1e-10)

    def test_random_built_channels(self):
        """Unitarity and state-level agreement for twenty built channels."""
        shapes = [SystemShape.of(2, 2, 2), SystemShape.of(2, 3, 2), SystemShape.of(3, 2, 2), SystemShape.of(2, 2, 3)]
        for k in range(20):
            shape = shapes[k % len(shapes)]
            channel = build(shape, SymmetryMode.symmetric(), f"random({k})")
            unitary = complete_dilation(channel)
            size = shape.total_dim
            assert_allclose(unitary.conj().T @ unitary, np.eye(size), atol=1e-10)
            for m in range(100):
                rho = random_density_matrix(shape.system_dim, substream(12, k, m))
                assert_allclose(stinespring_apply(unitary, shape, rho).matrix,
                                channel.apply(rho).matrix, atol=1e-10)


class TestTraceSlack(unittest.TestCase):
    """A channel within the completeness tolerance gives valid outputs on every route."""

    def setUp(self):
        self.shape = SystemShape.of(2, 2)
        self.channel = KrausChannel(self.shape, [np.sqrt(1 + 4e-11) * np.eye(4)])
        self.rho = DensityMatrix.maximally_mixed(4)

    def test_apply(self):
        assert_allclose(self.channel.apply(self.rho).matrix, np.eye(4) / 4, atol=1e-10)

    def test_mixture(self):
        output = mix_outputs(0.5, self.channel, self.channel, self.rho)
        assert_allclose(output.matrix, np.eye(4) / 4, atol=1e-10)

    def test_stinespring(self):
        unitary = complete_dilation(self.channel)
        output = stinespring_apply(unitary, self.channel.shape, self.rho)
        assert_allclose(output.matrix, self.channel.apply(self.rho).matrix, atol=1e-12)


class TestCertification(unittest.TestCase):
    """Test sampling-based and exact synchronizer certification."""

    def test_two_qubit_synchronizer(self):
        verdict = certify_qssr(two_qubit_synchronizer(), samples=500, exact=True)
        self.assertTrue(verdict.is_qssr)
        self.assertLess(verdict.worst_residual, 1e-10)
        self.assertEqual(verdict.samples_tested, 504)
        self.assertLess(verdict.mixed_residual, 1e-10)
        self.assertTrue(verdict.certified_exactly)
        self.assertTrue(str(verdict).startswith("QSSR: yes"))

    def test_identity_is_not_a_synchronizer(self):
        """The first failing basis input |01> is the witness."""
        verdict = certify_qssr(KrausChannel.identity(2, 2), samples=20)
        self.assertFalse(verdict.is_qssr)
        assert_allclose(verdict.witness_state.amplitudes, [0, 1, 0, 0])
        self.assertAlmostEqual(verdict.worst_residual, 1.0)
        self.assertAlmostEqual(synchronization_defect(KrausChannel.identity(2, 2)), 1.0)

    def test_mixed_symmetry_channels(self):
        for channel in (triplet_singlet_channel(), twisted_exchange_channel(), sign_flipped_synchronizer()):
            verdict = certify_qssr(channel, samples=500)
            self.assertTrue(verdict.is_qssr, str(verdict))
            self.assertLess(verdict.worst_residual, 1e-10)
            self.assertLess(synchronization_defect(channel), 1e-12)

    def test_argument_checks(self):
        channel = two_qubit_synchronizer()
        with self.assertRaises(ArgumentError):
            certify_qssr(channel, samples=0)
        with self.assertRaises(ArgumentError):
            certify_qssr(channel, samples=10, seed=-1)

    def test_worker_count_does_not_change_the_result(self):
        channel = build(SystemShape.of(3, 2, 2), SymmetryMode.symmetric(), "random(4)")
        serial = certify_qssr(channel, samples=40, seed=3)
        threaded = certify_qssr(channel, samples=40, seed=3, workers=4)
        self.assertEqual(serial.worst_residual, threaded.worst_residual)

    def test_replacement_channels(self):
        """Replacing every input with a fixed synchronized state synchronizes."""
        bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2))
        for sigma in (DensityMatrix.maximally_mixed(4), bell.density()):
            channel = replacement_channel(2, 2, sigma)
            self.assertTrue(certify_qssr(channel, samples=20).is_qssr)
            assert_allclose(channel.apply(PureState([0, 1, 0, 0])).matrix, sigma.matrix, atol=1e-12)


class TestClosure(unittest.TestCase):
    """Synchronizers are closed under concatenation and convex combination."""

    def setUp(self):
        self.first = build(TWO_QUBIT, SymmetryMode.symmetric(), "random(21)")
        self.second = build(TWO_QUBIT, SymmetryMode.symmetric(), "random(22)")
        self.inputs = [haar_product_state(SystemShape.of(2, 2), substream(23, k)) for k in range(100)]
        self.inputs += [random_density_matrix(4, substream(24, k)) for k in range(100)]

    def test_concatenation(self):
        composed = compose(self.second, self.first)
        self.assertEqual(composed.shape.ancilla_dim, 4)
        self.assertTrue(certify_qssr(composed, samples=100).is_qssr)
        for rho in self.inputs:
            self.assertTrue(is_sqs_mixed(composed.apply(rho), SystemShape.of(2, 2), tol=1e-10))

    def test_convex_mixture(self):
        for p in (0.25, 0.5, 0.75):
            for rho in self.inputs:
                output = mix_outputs(p, self.first, self.second, rho)
                self.assertTrue(is_sqs_mixed(output, SystemShape.of(2, 2), tol=1e-10))

    def test_invalid_weight(self):
        with self.assertRaises(ArgumentError):
            mix_outputs(1.5, self.first, self.second, self.inputs[0])


if __name__ == '__main__':
    unittest.main()
