"""State-distance and mixedness metrics on density matrices."""

import math
from typing import Union

import numpy as np
from scipy.special import entr

from eit_toolkit.model.types import DensityMatrix
from eit_toolkit.utils.errors import throw
from eit_toolkit.utils.linalg import as_square, check_same_dimension, clipped_eigh

MatrixLike = Union[DensityMatrix, np.ndarray]

NORM_TOLERANCE = 1e-9


def fidelity(rho1: MatrixLike, rho2: MatrixLike) -> float:
	"""F = Tr sqrt(rho1^(1/2) rho2 rho1^(1/2)), with square roots taken through eigendecompositions."""
	first = _matrix(rho1, "rho1")
	second = _matrix(rho2, "rho2")
	check_same_dimension(first.shape[0], second, "rho2")

	values, vectors = clipped_eigh(first, "rho1")
	root = (vectors * np.sqrt(values)) @ vectors.conj().T
	inner, _ = clipped_eigh(root @ second @ root, "rho1^(1/2) rho2 rho1^(1/2)")
	return float(min(1.0, np.sum(np.sqrt(inner))))


def fidelity_pure(psi: np.ndarray, rho: MatrixLike) -> float:
	"""F = sqrt(<psi| rho |psi>) for a normalised state vector."""
	matrix = _matrix(rho, "rho")
	vector = np.asarray(psi, dtype=complex).reshape(-1)
	if vector.shape[0] != matrix.shape[0]:
		throw(f"dimension mismatch: psi has {vector.shape[0]} amplitudes, rho {matrix.shape[0]}", field="psi")
	norm = np.linalg.norm(vector)
	if abs(norm - 1) > NORM_TOLERANCE:
		throw(f"psi is not normalised (norm {norm:.12g})", field="psi")

	overlap = float(np.real(np.vdot(vector, matrix @ vector)))
	return min(1.0, math.sqrt(max(overlap, 0.0)))


def entropy(rho: MatrixLike) -> float:
	"""Von Neumann entropy in bits; eigenvalues within tolerance below zero count as zero."""
	values, _ = clipped_eigh(_matrix(rho, "rho"), "rho")
	return float(np.sum(entr(values)) / math.log(2))


def _matrix(rho: MatrixLike, name: str) -> np.ndarray:
	if isinstance(rho, DensityMatrix):
		return np.asarray(rho.data)
	return as_square(rho, name)
