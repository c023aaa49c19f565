import json
import os
import unittest

import numpy as np

from eit_toolkit.settings import update_settings

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "runner", "tests", "fixtures")


class TestCase(unittest.TestCase):
	config = {}

	@classmethod
	def setUpClass(cls):
		# change config, remember the old values
		cls.old_config = update_settings(**cls.config)

	@classmethod
	def tearDownClass(cls):
		# restore config
		update_settings(**cls.old_config)

	def load_fixture(self, name):
		with open(os.path.join(FIXTURE_DIR, f"{name}.json"), "rb") as f:
			data = f.read()
		return json.loads(data)

	def fixture_path(self, name) -> str:
		return os.path.join(FIXTURE_DIR, f"{name}.json")

	def assertMatrixAlmostEqual(self, actual, expected, atol=1e-12, msg=None):
		actual = np.asarray(actual)
		expected = np.asarray(expected)
		self.assertEqual(actual.shape, expected.shape, msg)
		error = float(np.max(np.abs(actual - expected))) if actual.size else 0.0
		self.assertLessEqual(error, atol, msg or f"max abs error {error:.3e} > {atol:.1e}")

	def assertRelativeClose(self, actual, expected, rtol, msg=None):
		self.assertLessEqual(
			abs(actual - expected), rtol * abs(expected), msg or f"{actual!r} != {expected!r} within {rtol}"
		)


def random_hermitian(rng: np.random.Generator, dimension: int) -> np.ndarray:
	a = rng.normal(size=(dimension, dimension)) + 1j * rng.normal(size=(dimension, dimension))
	return 0.5 * (a + a.conj().T)


def random_density_matrix(rng: np.random.Generator, dimension: int) -> np.ndarray:
	a = rng.normal(size=(dimension, dimension)) + 1j * rng.normal(size=(dimension, dimension))
	rho = a @ a.conj().T
	return rho / np.trace(rho)
