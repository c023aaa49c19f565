import cmath

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from eit_toolkit.dynamics.integrator import evolve_master
from eit_toolkit.model.basis import build_basis, derived_gammas
from eit_toolkit.model.hamiltonian import build_hamiltonian
from eit_toolkit.model.lindblad import rule_based_gamma
from eit_toolkit.model.states import dual_rail_state
from eit_toolkit.model.types import DecoherenceSpec, Scheme, SystemSpec
from eit_toolkit.steadystate.dual_rail import dual_rail_w10, w10_four_level_simplified
from eit_toolkit.steadystate.qss import qss_two_level, semiclassical_shift
from eit_toolkit.tests.utils import TestCase
from eit_toolkit.utils.errors import SingularParameters

positive = st.floats(min_value=0.01, max_value=10.0)


def _shift(scheme, rabi, detuning=None, decoherence=None, atom_count=1):
	spec = SystemSpec.from_parameters(
		scheme, rabi=rabi, detuning=detuning, decoherence=decoherence, atom_count=atom_count, dual_rail=True
	)
	gammas = derived_gammas(spec.decoherence, spec.scheme)
	return dual_rail_w10(spec.scheme, spec.drives, gammas, spec.atom_count)


class TestTwoLevelShift(TestCase):
	def test_far_detuned_phase_rate(self):
		"""requirement: nu_a >> gamma_20 gives a phase rate close to -|Omega_a|^2 / nu_a"""
		shift = _shift(Scheme.TWO_LEVEL, {"a": 0.1}, {"a": 100.0}, DecoherenceSpec(depop={2: 2.0}))
		self.assertRelativeClose(shift.phase_rate, -0.01 / 100.0, 2e-4)
		self.assertGreater(shift.w10.imag, 0)

	def test_initial_coherence(self):
		shift = _shift(Scheme.TWO_LEVEL, {"a": 0.1}, {"a": 3.0}, DecoherenceSpec(depop={2: 2.0}))
		self.assertAlmostEqual(shift.rho10(0.0), 0.5)

	def test_matches_semiclassical_rate(self):
		"""requirement: with n_a = 1 the dual-rail shift equals the semiclassical W_a"""
		decoherence = DecoherenceSpec(depop={2: 2.0})
		shift = _shift(Scheme.TWO_LEVEL, {"a": 0.05}, {"a": 4.0}, decoherence, atom_count=3)
		qss = qss_two_level(0.05, 4.0, gamma21=1.0, gamma22=2.0, atom_count=3)

		self.assertAlmostEqual(shift.w10, semiclassical_shift(qss, 0.05, 1).w_a)

	def test_atom_number(self):
		one = _shift(Scheme.TWO_LEVEL, {"a": 0.2}, {"a": 5.0}, DecoherenceSpec(depop={2: 2.0}))
		four = _shift(Scheme.TWO_LEVEL, {"a": 0.1}, {"a": 5.0}, DecoherenceSpec(depop={2: 2.0}), atom_count=4)

		self.assertAlmostEqual(one.w10, four.w10)
		self.assertEqual(one.gamma10, 0.0)
		self.assertAlmostEqual(four.gamma10, 4 * 2.0 / 4)

	def test_singular(self):
		with self.assertRaises(SingularParameters):
			_shift(Scheme.TWO_LEVEL, {"a": 0.1})

	def test_phase_against_integration(self):
		"""requirement: numeric arg rho_10 follows the closed form within 1% once transients decay"""
		spec = SystemSpec.from_parameters(
			Scheme.TWO_LEVEL,
			rabi={"a": 0.1},
			detuning={"a": 10.0},
			decoherence=DecoherenceSpec(depop={2: 2.0}),
			dual_rail=True,
		)
		basis = build_basis(spec)
		trajectory = evolve_master(
			build_hamiltonian(spec, basis), rule_based_gamma(spec.decoherence, basis), dual_rail_state(basis), 200.0
		)
		shift = dual_rail_w10(spec.scheme, spec.drives, derived_gammas(spec.decoherence, spec.scheme))

		late = trajectory.times > 10.0
		numeric = np.angle(trajectory.element("1", "0")[late])
		analytic = np.angle(shift.rho10(trajectory.times[late]))
		error = np.max(np.abs(numeric - analytic) / np.abs(analytic))
		self.assertLess(error, 0.01)


class TestGamma21Reading(TestCase):
	config = {"dual_rail_gamma10_rate": "gamma21"}

	def test_n_atom_dephasing(self):
		decoherence = DecoherenceSpec(depop={2: 2.0}, dephase={1: 0.1})
		shift = _shift(Scheme.TWO_LEVEL, {"a": 0.1}, {"a": 5.0}, decoherence, atom_count=8)
		self.assertAlmostEqual(shift.gamma10, 8 * 1.1 / 4)


class TestLadderShift(TestCase):
	def test_three_level_reduces_to_two_level(self):
		decoherence = DecoherenceSpec(depop={2: 2.0})
		three = _shift(Scheme.THREE_LEVEL, {"a": 0.1, "b": 0.0}, {"a": 3.0, "b": 1.0}, decoherence)
		two = _shift(Scheme.TWO_LEVEL, {"a": 0.1}, {"a": 3.0}, decoherence)
		self.assertAlmostEqual(three.w10, two.w10, places=14)

	def test_reductions_without_metastable_decay(self):
		"""requirement: dropping a rung at nu_a = nu_b and gamma_30 = gamma_40 = 0 stays finite"""
		decoherence = DecoherenceSpec(depop={2: 2.0})
		three = _shift(Scheme.THREE_LEVEL, {"a": 0.1, "b": 0.0}, {"a": 3.0, "b": 3.0}, decoherence)
		two = _shift(Scheme.TWO_LEVEL, {"a": 0.1}, {"a": 3.0}, decoherence)
		self.assertAlmostEqual(three.w10, two.w10, places=14)

		four = _shift(Scheme.FOUR_LEVEL, {"a": 0.1, "b": 0.3, "c": 0.0}, None, decoherence)
		three = _shift(Scheme.THREE_LEVEL, {"a": 0.1, "b": 0.3}, None, decoherence)
		self.assertEqual(four.w10, three.w10)
		self.assertAlmostEqual(four.w10, 0j, places=15)

	def test_four_level_full_equals_simplified(self):
		"""requirement: with gamma_30 = 0 and nu_a = nu_b = 0 the full and simplified W_10 agree"""
		for nu_c in (0.5, 5.0, 30.0):
			for rabi_b, rabi_c in [(0.1, 0.1), (0.3, 0.05j), (1.0 + 1j, 2.0)]:
				decoherence = DecoherenceSpec(depop={2: 2.0, 4: 1.0}, dephase={2: 0.01, 4: 0.02})
				full = _shift(Scheme.FOUR_LEVEL, {"a": 0.02, "b": rabi_b, "c": rabi_c}, {"c": nu_c}, decoherence)
				gammas = derived_gammas(decoherence, Scheme.FOUR_LEVEL)
				simple = w10_four_level_simplified(0.02, rabi_b, rabi_c, nu_c, gammas[(2, 0)], gammas[(4, 0)])

				self.assertRelativeClose(simple.product_form, full.w10, 1e-6)
				self.assertRelativeClose(simple.tilde_form, full.w10, 1e-6)

	@settings(max_examples=50, deadline=None)
	@given(
		rabi_a=positive, rabi_b=positive, rabi_c=positive, nu_c=positive, gamma20=positive, gamma40=positive
	)
	def test_simplified_forms_identical(self, rabi_a, rabi_b, rabi_c, nu_c, gamma20, gamma40):
		simple = w10_four_level_simplified(rabi_a, rabi_b, rabi_c, nu_c, gamma20, gamma40)
		self.assertRelativeClose(simple.product_form, simple.tilde_form, 1e-12)
		self.assertAlmostEqual(simple.nu_c_tilde, rabi_b ** 2 / rabi_c ** 2 * nu_c)

	def test_simplified_needs_control(self):
		with self.assertRaises(SingularParameters):
			w10_four_level_simplified(0.02, 0.1, 0.0, 1.0, 1.0, 1.0)

	def test_four_level_rho10_has_no_transient(self):
		shift = _shift(
			Scheme.FOUR_LEVEL,
			{"a": 0.02, "b": 0.1, "c": 0.1},
			{"c": 3.0},
			DecoherenceSpec(depop={2: 2.0, 4: 2.0}),
		)
		t = 50.0
		expected = 0.5 * cmath.exp((-shift.gamma10 + 1j * shift.w10) * t)
		self.assertAlmostEqual(shift.rho10(t), expected)
