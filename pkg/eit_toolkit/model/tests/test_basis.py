import numpy as np

from eit_toolkit.model.basis import build_basis, derived_gammas, permute_atoms
from eit_toolkit.model.hamiltonian import build_hamiltonian
from eit_toolkit.model.types import DecoherenceSpec, Scheme, SystemSpec
from eit_toolkit.tests.utils import TestCase
from eit_toolkit.utils.errors import BasisTooLarge


def _spec(scheme, atom_count=1, dual_rail=False):
	rabi = {"a": 0.1 + 0.05j, "b": 1.0, "c": 0.7 - 0.2j}
	detuning = {"a": 3.0, "b": 0.5, "c": -1.0}
	return SystemSpec.from_parameters(
		scheme, rabi=rabi, detuning=detuning, atom_count=atom_count, dual_rail=dual_rail
	)


class TestBuildBasis(TestCase):
	def test_two_level_dual_rail_order(self):
		"""requirement: two-level dual-rail basis is ground, excited, environment, rail"""
		basis = build_basis(_spec(Scheme.TWO_LEVEL, dual_rail=True))

		self.assertEqual([label.symbol for label in basis], ["1", "2", "e", "0"])
		self.assertEqual(basis[0].photon_record, (0, 0, 0))
		self.assertEqual(basis[1].photon_record, (-1, 0, 0))
		self.assertTrue(basis[2].is_environment)
		self.assertTrue(basis[3].is_rail)

	def test_three_level_single_atom(self):
		basis = build_basis(_spec(Scheme.THREE_LEVEL))
		self.assertEqual([label.symbol for label in basis], ["1", "2", "3", "e"])
		self.assertEqual(basis[2].photon_record, (-1, 1, 0))

	def test_four_level_three_atoms(self):
		"""requirement: N-atom dimension is 1 + (levels - 1) N + environment"""
		basis = build_basis(_spec(Scheme.FOUR_LEVEL, atom_count=3))

		self.assertEqual(len(basis), 11)
		self.assertEqual(
			[label.symbol for label in basis],
			["1", "2_1", "3_1", "4_1", "2_2", "3_2", "4_2", "2_3", "3_3", "4_3", "e"],
		)
		self.assertEqual(len(set(basis)), len(basis))

	def test_deterministic(self):
		first = [str(label) for label in build_basis(_spec(Scheme.FOUR_LEVEL, 2, True))]
		second = [str(label) for label in build_basis(_spec(Scheme.FOUR_LEVEL, 2, True))]
		self.assertEqual(first, second)

	def test_basis_too_large(self):
		with self.assertRaises(BasisTooLarge):
			build_basis(_spec(Scheme.FOUR_LEVEL, atom_count=2000))


class TestSmallBasisLimit(TestCase):
	config = {"max_dimension": 8}

	def test_configured_limit(self):
		build_basis(_spec(Scheme.TWO_LEVEL, atom_count=6))
		with self.assertRaises(BasisTooLarge):
			build_basis(_spec(Scheme.TWO_LEVEL, atom_count=7))


class TestDerivedGammas(TestCase):
	def test_two_level_depopulation(self):
		gammas = derived_gammas(DecoherenceSpec(depop={2: 1.0}), Scheme.TWO_LEVEL)

		self.assertAlmostEqual(gammas[(2, 1)], 0.5)
		self.assertAlmostEqual(gammas[(2, 0)], 0.5)
		self.assertAlmostEqual(gammas[(1, 0)], 0.0)
		self.assertAlmostEqual(gammas[(2, 2)], 1.0)

	def test_dephasing_sum(self):
		gammas = derived_gammas(DecoherenceSpec(dephase={1: 0.1, 3: 0.2}), Scheme.THREE_LEVEL)
		self.assertAlmostEqual(gammas[(3, 1)], 0.3)

	def test_four_level_rail_pair(self):
		gammas = derived_gammas(DecoherenceSpec(depop={4: 2.0}, dephase={4: 0.5}), Scheme.FOUR_LEVEL)
		self.assertAlmostEqual(gammas[(4, 0)], 1.5)

	def test_symmetric_and_monotone(self):
		"""requirement: gamma_ij = gamma_ji and raising any rate never lowers a coefficient"""
		rng = np.random.default_rng(7)
		for _ in range(20):
			depop = {j: float(rng.uniform(0, 2)) for j in range(1, 5)}
			dephase = {j: float(rng.uniform(0, 2)) for j in range(1, 5)}
			base = derived_gammas(DecoherenceSpec(depop, dephase), Scheme.FOUR_LEVEL)
			for (i, j), value in base.items():
				self.assertEqual(value, base[(j, i)])

			level = int(rng.integers(1, 5))
			raised = dict(dephase)
			raised[level] += 0.3
			bumped = derived_gammas(DecoherenceSpec(depop, raised), Scheme.FOUR_LEVEL)
			for key, value in base.items():
				self.assertGreaterEqual(bumped[key], value)


class TestPermuteAtoms(TestCase):
	def test_permutation_commutes_with_hamiltonian(self):
		"""requirement: relabelling identical atoms leaves H invariant"""
		spec = _spec(Scheme.FOUR_LEVEL, atom_count=3, dual_rail=True)
		hamiltonian = build_hamiltonian(spec)
		p = permute_atoms(hamiltonian.basis, [2, 0, 1])

		self.assertMatrixAlmostEqual(p @ p.T, np.eye(len(hamiltonian.basis)))
		self.assertMatrixAlmostEqual(p @ hamiltonian.data @ p.T, hamiltonian.data)
		self.assertFalse(np.allclose(p, np.eye(len(hamiltonian.basis))))
