import math
from typing import Mapping, Sequence

import numpy as np

from eit_toolkit.model.constants import GROUND_SYMBOL, RAIL_SYMBOL
from eit_toolkit.model.types import BasisLabel, DensityMatrix
from eit_toolkit.utils.errors import throw


def pure_state(basis: Sequence[BasisLabel], amplitudes: Mapping[str, complex]) -> DensityMatrix:
	"""|psi><psi| for psi given as amplitudes keyed by label symbol."""
	index = {label.symbol: i for i, label in enumerate(basis)}
	psi = np.zeros(len(basis), dtype=complex)
	for symbol, amplitude in amplitudes.items():
		if symbol not in index:
			throw(f"basis has no label {symbol!r}", field="initial_state")
		psi[index[symbol]] = amplitude

	norm = np.linalg.norm(psi)
	if not math.isclose(norm, 1.0, rel_tol=1e-12):
		throw(f"state vector must be normalised, got norm {norm:.12g}", field="initial_state")
	return DensityMatrix(basis, np.outer(psi, psi.conj()))


def ground_state(basis: Sequence[BasisLabel]) -> DensityMatrix:
	return pure_state(basis, {GROUND_SYMBOL: 1.0})


def dual_rail_state(basis: Sequence[BasisLabel]) -> DensityMatrix:
	"""Equal superposition of the empty rail and the ground manifold state."""
	if not any(label.is_rail for label in basis):
		throw("dual-rail state needs a basis with an empty-rail label", field="dual_rail")
	amplitude = 1 / math.sqrt(2)
	return pure_state(basis, {RAIL_SYMBOL: amplitude, GROUND_SYMBOL: amplitude})
