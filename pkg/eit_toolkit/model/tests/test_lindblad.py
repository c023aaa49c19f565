import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from eit_toolkit.model.basis import build_basis
from eit_toolkit.model.lindblad import (
	ChannelKind,
	LindbladChannel,
	apply_gamma,
	lindblad_channels,
	lindblad_superoperator,
	rule_based_gamma,
)
from eit_toolkit.model.types import DecoherenceSpec, Scheme, SystemSpec
from eit_toolkit.tests.utils import TestCase, random_hermitian
from eit_toolkit.utils.errors import ValidationError

rates = st.floats(min_value=0.0, max_value=3.0, allow_nan=False)
rate_maps = st.dictionaries(st.integers(min_value=1, max_value=4), rates, max_size=4)


def _basis(scheme, atom_count=1, dual_rail=False):
	spec = SystemSpec.from_parameters(scheme, rabi={}, atom_count=atom_count, dual_rail=dual_rail)
	return build_basis(spec)


class TestLindbladSuperoperator(TestCase):
	def test_empty_channel_list(self):
		gamma = lindblad_superoperator([], dimension=3)
		rho = random_hermitian(np.random.default_rng(1), 3)
		self.assertMatrixAlmostEqual(gamma(rho), np.zeros((3, 3)))

	def test_single_lowering(self):
		"""requirement: lowering 2 -> e moves population at gamma'_2"""
		channel = LindbladChannel.lowering(3, source=1, environment=2, rate=0.7)
		gamma = lindblad_superoperator([channel])

		out = gamma(np.diag([0, 1, 0]).astype(complex))
		self.assertMatrixAlmostEqual(out, np.diag([0, 0.7, -0.7]))

	def test_channel_shapes(self):
		lowering = LindbladChannel.lowering(4, source=1, environment=2, rate=1.0)
		self.assertEqual(lowering.kind, ChannelKind.LOWERING)
		self.assertEqual(np.count_nonzero(lowering.matrix), 1)
		self.assertEqual(lowering.matrix[2, 1], 1)

		dephasing = LindbladChannel.dephasing(4, target=1, rate=1.0)
		expected = (np.eye(4) - 2 * np.diag([0, 1, 0, 0])) / np.sqrt(2)
		self.assertMatrixAlmostEqual(dephasing.matrix, expected)
		# environment row included
		self.assertAlmostEqual(dephasing.matrix[2, 2], 1 / np.sqrt(2))

	def test_explicit_two_level_form(self):
		"""requirement: operator form reproduces the explicit two-level decoherence matrix"""
		depop2, dephase1, dephase2 = 1.3, 0.2, 0.45
		spec = DecoherenceSpec(depop={2: depop2}, dephase={1: dephase1, 2: dephase2})
		basis = _basis(Scheme.TWO_LEVEL)
		gamma = lindblad_superoperator(lindblad_channels(spec, basis))

		g21 = 0.5 * depop2 + dephase1 + dephase2
		g1e = dephase1
		g2e = 0.5 * depop2 + dephase2
		rng = np.random.default_rng(3)
		for _ in range(10):
			rho = random_hermitian(rng, 3)
			expected = np.array(
				[
					[0, g21 * rho[0, 1], g1e * rho[0, 2]],
					[g21 * rho[1, 0], depop2 * rho[1, 1], g2e * rho[1, 2]],
					[g1e * rho[2, 0], g2e * rho[2, 1], -depop2 * rho[1, 1]],
				]
			)
			self.assertMatrixAlmostEqual(gamma(rho), expected)

	def test_dimension_mismatch(self):
		with self.assertRaises(ValidationError):
			lindblad_superoperator(
				[
					LindbladChannel.lowering(3, source=1, environment=2, rate=1.0),
					LindbladChannel.dephasing(4, target=1, rate=1.0),
				]
			)

		gamma = lindblad_superoperator([LindbladChannel.dephasing(3, target=1, rate=1.0)])
		with self.assertRaises(ValidationError):
			gamma(np.eye(4))


class TestRuleBasedGamma(TestCase):
	def test_zero_rates(self):
		coeffs = rule_based_gamma(DecoherenceSpec(), _basis(Scheme.FOUR_LEVEL))
		self.assertMatrixAlmostEqual(coeffs.matrix, np.zeros((5, 5)))

	def test_four_level_pattern(self):
		coeffs = rule_based_gamma(DecoherenceSpec(depop={2: 1.0, 4: 1.0}), _basis(Scheme.FOUR_LEVEL))
		g = coeffs.matrix

		self.assertAlmostEqual(g[1, 0], 0.5)  # gamma_21
		self.assertAlmostEqual(g[3, 0], 0.5)  # gamma_41
		self.assertAlmostEqual(g[3, 1], 1.0)  # gamma_42
		self.assertAlmostEqual(g[2, 0], 0.0)  # gamma_31
		self.assertMatrixAlmostEqual(g, g.T)

	def test_excited_population(self):
		coeffs = rule_based_gamma(DecoherenceSpec(depop={2: 2.0}), _basis(Scheme.TWO_LEVEL))
		out = apply_gamma(coeffs, np.diag([0, 1, 0]).astype(complex))
		self.assertMatrixAlmostEqual(out, np.diag([0, 2.0, -2.0]))

	def test_zero_state(self):
		coeffs = rule_based_gamma(DecoherenceSpec(depop={2: 2.0}), _basis(Scheme.TWO_LEVEL))
		self.assertMatrixAlmostEqual(apply_gamma(coeffs, np.zeros((3, 3))), np.zeros((3, 3)))

	def test_requires_environment(self):
		basis = [label for label in _basis(Scheme.TWO_LEVEL) if not label.is_environment]
		with self.assertRaises(ValidationError):
			rule_based_gamma(DecoherenceSpec(), basis)

	def test_apply_dimension_mismatch(self):
		coeffs = rule_based_gamma(DecoherenceSpec(), _basis(Scheme.TWO_LEVEL))
		with self.assertRaises(ValidationError):
			apply_gamma(coeffs, np.eye(4))

	@settings(max_examples=30, deadline=None)
	@given(
		depop=rate_maps,
		dephase=rate_maps,
		scheme=st.sampled_from(list(Scheme)),
		atom_count=st.integers(min_value=1, max_value=3),
		dual_rail=st.booleans(),
		seed=st.integers(min_value=0, max_value=2 ** 31),
	)
	def test_rules_match_operator_form(self, depop, dephase, scheme, atom_count, dual_rail, seed):
		"""requirement: rule-based coefficients equal the Lindblad operator form entrywise"""
		spec = DecoherenceSpec(depop=depop, dephase=dephase)
		basis = _basis(scheme, atom_count, dual_rail)
		coeffs = rule_based_gamma(spec, basis)
		gamma = lindblad_superoperator(lindblad_channels(spec, basis), dimension=len(basis))

		rng = np.random.default_rng(seed)
		for _ in range(5):
			rho = random_hermitian(rng, len(basis))
			self.assertMatrixAlmostEqual(apply_gamma(coeffs, rho), gamma(rho))

	@settings(max_examples=30, deadline=None)
	@given(depop=rate_maps, dephase=rate_maps, seed=st.integers(min_value=0, max_value=2 ** 31))
	def test_trace_zero_and_adjoint(self, depop, dephase, seed):
		"""requirement: tr Gamma(rho) = 0 and Gamma(rho)^+ = Gamma(rho^+) for arbitrary rho"""
		basis = _basis(Scheme.FOUR_LEVEL, atom_count=2, dual_rail=True)
		coeffs = rule_based_gamma(DecoherenceSpec(depop=depop, dephase=dephase), basis)

		rng = np.random.default_rng(seed)
		d = len(basis)
		rho = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
		out = apply_gamma(coeffs, rho)

		self.assertLess(abs(np.trace(out)), 1e-12)
		self.assertMatrixAlmostEqual(out.conj().T, apply_gamma(coeffs, rho.conj().T))
