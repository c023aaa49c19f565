import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from eit_toolkit.optics.susceptibility import (
	kerr_susceptibility_shape,
	phase_switch_curve,
	susceptibility_four_level,
	susceptibility_three_level,
	susceptibility_two_level,
)
from eit_toolkit.steadystate.qss import qss_four_level, qss_three_level
from eit_toolkit.tests.utils import TestCase
from eit_toolkit.utils.errors import ValidationError

rate = st.floats(min_value=0.0, max_value=5.0)
detuning = st.floats(min_value=-20.0, max_value=20.0)


class TestTwoLevel(TestCase):
	def test_normalization(self):
		curve = susceptibility_two_level([0.0, 1.0], gamma21=1.0)
		self.assertAlmostEqual(curve.chi[0], 1j)
		self.assertAlmostEqual(curve.chi[1], (-1 + 1j) / 2)
		self.assertEqual(curve.normalization, "two-level kappa(nu_a=0)=1")

	def test_symmetry(self):
		"""requirement: Re chi is odd and Im chi even about nu_a = 0"""
		axis = np.linspace(-10, 10, 201)
		curve = susceptibility_two_level(axis, gamma21=2.0)

		self.assertMatrixAlmostEqual(curve.real, -curve.real[::-1], atol=1e-15)
		self.assertMatrixAlmostEqual(curve.imag, curve.imag[::-1], atol=1e-15)
		self.assertAlmostEqual(curve.at(0.0), 1j)

	def test_requires_linewidth(self):
		with self.assertRaises(ValidationError):
			susceptibility_two_level([0.0], gamma21=0.0)
		with self.assertRaises(ValidationError):
			susceptibility_two_level([], gamma21=1.0)


class TestThreeLevel(TestCase):
	axis = np.linspace(-5, 5, 101)

	def test_reduces_to_two_level(self):
		three = susceptibility_three_level(self.axis, nu_b=0.7, rabi_b=0.0, gamma21=1.0, gamma31=0.2)
		two = susceptibility_two_level(self.axis, gamma21=1.0)
		self.assertMatrixAlmostEqual(three.chi, two.chi)

	def test_reduces_to_two_level_without_metastable_decay(self):
		"""requirement: |Omega_b| = 0 is the bare two-level line even at nu_a = nu_b, gamma_31 = 0"""
		curve = susceptibility_three_level([-1.0, 0.0, 1.0], nu_b=0.0, rabi_b=0.0, gamma21=1.0, gamma31=0.0)
		two = susceptibility_two_level([-1.0, 0.0, 1.0], gamma21=1.0)

		self.assertFalse(np.any(curve.poles))
		self.assertAlmostEqual(curve.chi[1], 1j)
		self.assertMatrixAlmostEqual(curve.chi, two.chi)

	def test_transparency(self):
		"""requirement: absorption vanishes exactly at two-photon resonance when gamma_31 = 0"""
		for rabi_b in (0.01, 0.1, 1.0 + 2j):
			for nu_b in (0.0, 1.5):
				curve = susceptibility_three_level([nu_b], nu_b=nu_b, rabi_b=rabi_b, gamma21=1.0, gamma31=0.0)
				self.assertLessEqual(abs(curve.imag[0]), 1e-12)

	def test_half_absorption(self):
		curve = susceptibility_three_level([0.0], nu_b=0.0, rabi_b=0.1, gamma21=1.0, gamma31=0.01)
		self.assertAlmostEqual(curve.imag[0], 0.5, places=12)

	def test_matches_quasi_steady_state(self):
		rabi_a = 0.01
		curve = susceptibility_three_level(self.axis, nu_b=0.3, rabi_b=0.4, gamma21=1.0, gamma31=0.05)
		for nu_a, chi in zip(self.axis[::10], curve.chi[::10]):
			qss = qss_three_level(rabi_a, 0.4, nu_a, 0.3, gamma21=1.0, gamma31=0.05)
			self.assertAlmostEqual(chi, qss.elements["21"] / rabi_a, places=12)

	def test_pole_is_nan(self):
		# dressed resonances at nu_a = +/-|Omega_b| with a vanishing linewidth
		with self.assertLogs("eit_toolkit.optics.utils", level="WARNING"):
			curve = susceptibility_three_level([-1.0, 0.0, 1.0], nu_b=0.0, rabi_b=1.0, gamma21=1e-20, gamma31=0.0)
		self.assertTrue(curve.poles[0])
		self.assertTrue(curve.poles[2])
		self.assertFalse(curve.poles[1])

	@settings(max_examples=100, deadline=None)
	@given(nu_b=detuning, rabi_b=st.floats(0, 5), gamma21=st.floats(0.01, 5), gamma31=rate)
	def test_passive(self, nu_b, rabi_b, gamma21, gamma31):
		"""requirement: Im chi >= 0 for non-negative rates"""
		curve = susceptibility_three_level(self.axis, nu_b, rabi_b, gamma21, gamma31)
		finite = curve.imag[~curve.poles]
		self.assertTrue(np.all(finite >= -1e-12))


class TestFourLevel(TestCase):
	axis = np.linspace(-3, 3, 61)

	def test_reduces_to_three_level(self):
		four = kerr_susceptibility_shape(self.axis, 0.0, 2.0, rabi_b=0.1, gamma21=1.0, gamma31=0.0, gamma41=1.0)
		three = susceptibility_three_level(self.axis, 0.0, 0.1, 1.0, 0.0)
		self.assertMatrixAlmostEqual(four.chi, three.chi)

	def test_reductions_without_metastable_decay(self):
		"""requirement: vanishing drives reduce the four-level curve at gamma_31 = gamma_41 = 0"""
		four = susceptibility_four_level(self.axis, 0.0, 0.0, 0.3, 0.0, 1.0, 0.0, 0.0)
		three = susceptibility_three_level(self.axis, 0.0, 0.3, 1.0, 0.0)
		self.assertFalse(np.any(four.poles))
		self.assertMatrixAlmostEqual(four.chi, three.chi)
		self.assertLessEqual(abs(four.at(0.0)), 1e-12)

		bare = susceptibility_four_level(self.axis, 0.0, 0.0, 0.0, 0.3, 1.0, 0.0, 0.0)
		two = susceptibility_two_level(self.axis, 1.0)
		self.assertMatrixAlmostEqual(bare.chi, two.chi)
		self.assertMatrixAlmostEqual(bare.third_order, np.zeros_like(self.axis))

	def test_switch_closed_on_resonance(self):
		curve = kerr_susceptibility_shape(
			[0.0], 0.0, 0.0, rabi_b=0.1, gamma21=1.0, gamma31=0.0, gamma41=1.0, rabi_c=0.1
		)
		self.assertGreater(curve.imag[0], 0.1)

	def test_matches_quasi_steady_state(self):
		rabi_a = 0.01
		curve = susceptibility_four_level(self.axis, 0.2, 1.5, 0.3, 0.2j, 1.0, 0.01, 0.5)
		for nu_a, chi in zip(self.axis[::6], curve.chi[::6]):
			qss = qss_four_level(rabi_a, 0.3, 0.2j, nu_a, 0.2, 1.5, 1.0, 0.01, 0.5)
			self.assertAlmostEqual(chi, qss.elements["21"] / rabi_a, places=12)

	def test_third_order_series(self):
		"""requirement: (total - linear) / |Omega_c|^2 follows the third-order shape within 1%"""
		rabi_c = 1e-3
		for nu_c in (0.0, 1.0, 30.0):
			total = kerr_susceptibility_shape(
				self.axis, 0.0, nu_c, rabi_b=0.1, gamma21=1.0, gamma31=0.0, gamma41=1.0, rabi_c=rabi_c
			)
			linear = susceptibility_three_level(self.axis, 0.0, 0.1, 1.0, 0.0)
			finite_difference = (total.chi - linear.chi) / rabi_c ** 2

			error = np.abs(finite_difference - total.third_order) / np.abs(total.third_order)
			self.assertLess(np.max(error), 0.01)

	def test_phase_switch(self):
		axis = np.array([0.0, 30.0])
		curve = phase_switch_curve(axis, 0.0, rabi_b=0.1, rabi_c=0.1, gamma21=1.0, gamma31=0.0, gamma41=1.0)

		self.assertEqual(curve.axis_label, "nu_c")
		absorbing, shifting = curve.chi
		self.assertGreater(absorbing.imag, 10 * shifting.imag)
		self.assertGreater(abs(shifting.real), shifting.imag)

	def test_reproducible(self):
		first = phase_switch_curve(self.axis, 0.0, 0.1, 0.1, 1.0, 0.0, 1.0)
		second = phase_switch_curve(self.axis, 0.0, 0.1, 0.1, 1.0, 0.0, 1.0)
		self.assertEqual(first.chi.tobytes(), second.chi.tobytes())
