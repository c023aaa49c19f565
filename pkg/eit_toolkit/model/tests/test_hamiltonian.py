import math

import numpy as np

from eit_toolkit.model.basis import build_basis
from eit_toolkit.model.constants import SI_SPONTANEOUS_PREFACTOR
from eit_toolkit.model.hamiltonian import (
	build_hamiltonian,
	control_rabi_for_window,
	rabi_from_experiment,
	spontaneous_rate,
)
from eit_toolkit.model.types import Scheme, SystemSpec
from eit_toolkit.tests.utils import TestCase
from eit_toolkit.utils.errors import ValidationError


class TestBuildHamiltonian(TestCase):
	def test_two_level_environment(self):
		spec = SystemSpec.from_parameters(Scheme.TWO_LEVEL, rabi={"a": 0.1}, detuning={"a": 3.0})
		hamiltonian = build_hamiltonian(spec)

		expected = np.array([[0, 0.1, 0], [0.1, 3.0, 0], [0, 0, 0]])
		self.assertMatrixAlmostEqual(hamiltonian.data, expected)

	def test_zero_drives_diagonal(self):
		spec = SystemSpec.from_parameters(
			Scheme.FOUR_LEVEL, rabi={}, detuning={"a": 1.0, "b": 0.25, "c": 2.0}
		)
		hamiltonian = build_hamiltonian(spec)
		self.assertMatrixAlmostEqual(hamiltonian.data, np.diag([0, 1.0, 0.75, 2.75, 0]))

	def test_four_level_layout(self):
		spec = SystemSpec.from_parameters(
			Scheme.FOUR_LEVEL,
			rabi={"a": 0.1 + 0.2j, "b": 1.5j, "c": 0.3 - 0.4j},
			detuning={"a": 0.5, "b": 0.1, "c": -0.2},
		)
		h = build_hamiltonian(spec).data

		self.assertEqual(h[0, 1], 0.1 - 0.2j)
		self.assertEqual(h[1, 0], 0.1 + 0.2j)
		self.assertEqual(h[1, 2], 1.5j)
		self.assertEqual(h[2, 1], -1.5j)
		self.assertEqual(h[2, 3], 0.3 + 0.4j)
		self.assertEqual(h[3, 2], 0.3 - 0.4j)
		self.assertAlmostEqual(h[3, 3], 0.5 - 0.1 - 0.2)
		self.assertFalse(np.any(h[4]))
		self.assertFalse(np.any(h[:, 4]))

	def test_four_level_two_atoms_dual_rail(self):
		"""requirement: each atom's excited block repeats and couples to the ground row"""
		spec = SystemSpec.from_parameters(
			Scheme.FOUR_LEVEL,
			rabi={"a": 0.2, "b": 1.0, "c": 0.5j},
			detuning={"a": 2.0, "c": 0.3},
			atom_count=2,
			dual_rail=True,
		)
		h = build_hamiltonian(spec).data

		self.assertEqual(h.shape, (9, 9))
		self.assertMatrixAlmostEqual(h[1:4, 1:4], h[4:7, 4:7])
		self.assertEqual(h[0, 1], 0.2)
		self.assertEqual(h[0, 4], 0.2)
		self.assertFalse(np.any(h[1:4, 4:7]))
		self.assertFalse(np.any(h[7:]))

	def test_four_level_without_control_reduces_to_three_level(self):
		rabi = {"a": 0.3 - 0.1j, "b": 2.0}
		detuning = {"a": 0.7, "b": -0.4}
		three = build_hamiltonian(SystemSpec.from_parameters(Scheme.THREE_LEVEL, rabi, detuning))
		four = build_hamiltonian(
			SystemSpec.from_parameters(Scheme.FOUR_LEVEL, {**rabi, "c": 0}, {**detuning, "c": 0.0})
		)

		shared = [0, 1, 2, 4]
		self.assertMatrixAlmostEqual(four.data[np.ix_(shared, shared)], three.data)

	def test_single_atom_n_atom_builder_agree(self):
		spec = SystemSpec.from_parameters(Scheme.THREE_LEVEL, {"a": 0.1, "b": 1.0}, {"a": 0.2})
		self.assertEqual([label.symbol for label in build_hamiltonian(spec).basis], ["1", "2", "3", "e"])

	def test_hermitian(self):
		rng = np.random.default_rng(11)
		for scheme in Scheme:
			for atom_count in (1, 2, 3):
				rabi = {k: complex(*rng.normal(size=2)) for k in "abc"}
				detuning = {k: float(rng.normal()) for k in "abc"}
				spec = SystemSpec.from_parameters(scheme, rabi, detuning, atom_count=atom_count, dual_rail=True)
				self.assertLess(build_hamiltonian(spec).hermiticity_error(), 1e-14)

	def test_basis_mismatch(self):
		spec = SystemSpec.from_parameters(Scheme.TWO_LEVEL, rabi={"a": 0.1})
		other = build_basis(SystemSpec.from_parameters(Scheme.TWO_LEVEL, rabi={"a": 0.1}, dual_rail=True))
		with self.assertRaises(ValidationError):
			build_hamiltonian(spec, other)


class TestExperimentalRates(TestCase):
	def test_free_space_control_ratio(self):
		"""requirement: sigma/A = 0.2 needs |Omega_b| of about 11.2 |Omega_a| / sqrt(n_a)"""
		rabi_a_sq, n_a = 1e-4, 4
		omega_b = control_rabi_for_window(0.2, A21=1.0, gamma21=1.0, rabi_a_sq=rabi_a_sq, n_a=n_a)

		self.assertAlmostEqual(omega_b * math.sqrt(n_a) / math.sqrt(rabi_a_sq), 11.21, places=2)
		# round trip through the forward relation
		self.assertAlmostEqual(rabi_from_experiment(0.2, 1.0, omega_b ** 2, n_a), rabi_a_sq)

	def test_waveguide_factor(self):
		free = control_rabi_for_window(0.2, 1.0, 1.0, 1e-4, 1)
		guide = control_rabi_for_window(1.0, 1.0, 1.0, 1e-4, 1)
		self.assertAlmostEqual(free / guide, math.sqrt(5))

	def test_no_photons(self):
		self.assertEqual(rabi_from_experiment(0.2, 1.0, 1.0, 0), 0.0)

	def test_invalid_inputs(self):
		for args in [(0, 1, 1, 1), (0.2, -1, 1, 1), (0.2, 1, 0, 1), (0.2, 1, 1, -1), (0.2, 1, 1, 1.5)]:
			with self.assertRaises(ValidationError):
				rabi_from_experiment(*args)

	def test_spontaneous_rate_scaling(self):
		self.assertEqual(spontaneous_rate(1.0, 1.0), 1.0)
		self.assertAlmostEqual(spontaneous_rate(2.0, 1.3) / spontaneous_rate(1.0, 1.3), 8.0)
		self.assertAlmostEqual(spontaneous_rate(1.7, 2.0) / spontaneous_rate(1.7, 1.0), 2.0)

		with self.assertRaises(ValidationError):
			spontaneous_rate(0.0, 1.0)
		with self.assertRaises(ValidationError):
			spontaneous_rate(1.0, -1.0)

	def test_si_prefactor(self):
		rate = spontaneous_rate(1.0, 1.0, prefactor=SI_SPONTANEOUS_PREFACTOR)
		self.assertGreater(rate, 0)
		self.assertAlmostEqual(rate, SI_SPONTANEOUS_PREFACTOR)
