from typing import Optional

import numpy as np
import scipy.linalg

from eit_toolkit.settings import get_settings
from eit_toolkit.utils.errors import NumericalError, ValidationError, throw


def as_square(matrix, name: str = "matrix") -> np.ndarray:
	data = np.asarray(matrix, dtype=complex)
	if data.ndim != 2 or data.shape[0] != data.shape[1]:
		throw(f"{name} must be a square matrix, got shape {data.shape}", field=name)
	return data


def check_same_dimension(expected: int, matrix: np.ndarray, name: str = "matrix") -> None:
	if matrix.shape != (expected, expected):
		throw(
			f"dimension mismatch: {name} has shape {matrix.shape}, expected ({expected}, {expected})",
			field=name,
		)


def hermiticity_error(matrix: np.ndarray) -> float:
	return float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0


def hermitian_part(matrix: np.ndarray) -> np.ndarray:
	return 0.5 * (matrix + matrix.conj().T)


def min_eigenvalue(matrix: np.ndarray) -> float:
	return float(scipy.linalg.eigvalsh(hermitian_part(matrix))[0])


def clipped_eigh(matrix: np.ndarray, name: str = "density matrix", tolerance: Optional[float] = None):
	"""Hermitian eigendecomposition with small negative eigenvalues set to zero.

	Eigenvalues below -tolerance mean the input is not positive semidefinite.
	"""
	if tolerance is None:
		tolerance = get_settings().eigenvalue_tolerance

	values, vectors = scipy.linalg.eigh(hermitian_part(matrix))
	if values.size and values[0] < -tolerance:
		raise NumericalError(
			f"{name} is not positive semidefinite (min eigenvalue {values[0]:.3e})", field=name
		)
	return np.clip(values, 0.0, None), vectors


def check_density_matrix(matrix: np.ndarray, name: str = "rho") -> None:
	"""Hermiticity, unit trace and positivity within the configured tolerances."""
	settings = get_settings()

	herm = hermiticity_error(matrix)
	if herm > settings.hermiticity_tolerance:
		raise ValidationError(f"{name} is not Hermitian (error {herm:.3e})", field=name)

	trace = np.trace(matrix)
	if abs(trace - 1.0) > settings.trace_tolerance:
		raise ValidationError(f"{name} does not have unit trace (trace {trace:.12g})", field=name)

	lowest = min_eigenvalue(matrix)
	if lowest < -settings.eigenvalue_tolerance:
		raise ValidationError(
			f"{name} has a negative eigenvalue {lowest:.3e}", field=name,
		)
