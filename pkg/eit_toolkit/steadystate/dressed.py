import math
from dataclasses import dataclass
from typing import Dict, Tuple, Union

import numpy as np

TimeLike = Union[float, np.ndarray]


def dressed_splitting(rabi_a: complex, rabi_b: complex) -> float:
	"""Omega_R = sqrt(|Omega_a|^2 + |Omega_b|^2) of the resonant three-level ladder."""
	return math.hypot(abs(rabi_a), abs(rabi_b))


@dataclass(frozen=True, eq=False)
class DressedStates:
	"""Eigenstates of the resonant three-level Hamiltonian in the (1, 2, 3, e) basis.

	Energies are eigenvalues of H / hbar: 0 for the dark state and -/+ Omega_R
	for the bright pair.
	"""

	splitting: float
	energies: Dict[str, float]
	vectors: Dict[str, np.ndarray]
	rabi_a: complex
	degenerate: bool = False

	@property
	def eigenvalues(self) -> Tuple[float, float, float]:
		return tuple(sorted(self.energies.values()))

	def excited_population(self, t: TimeLike) -> TimeLike:
		if self.degenerate:
			return np.zeros_like(t, dtype=float) if isinstance(t, np.ndarray) else 0.0
		return abs(self.rabi_a / self.splitting) ** 2 * np.sin(self.splitting * np.asarray(t)) ** 2


def dressed_states_three_level(rabi_a: complex, rabi_b: complex) -> DressedStates:
	rabi_a, rabi_b = complex(rabi_a), complex(rabi_b)
	splitting = dressed_splitting(rabi_a, rabi_b)

	if splitting == 0:
		unit = np.eye(4, dtype=complex)
		return DressedStates(
			splitting=0.0,
			energies={"0": 0.0, "-": 0.0, "+": 0.0},
			vectors={"0": unit[0], "-": unit[1], "+": unit[2]},
			rabi_a=rabi_a,
			degenerate=True,
		)

	a, b = rabi_a / splitting, rabi_b / splitting
	vectors = {
		"0": np.array([-b, 0, a, 0], dtype=complex),
		"-": np.array([a.conjugate(), 1, b.conjugate(), 0], dtype=complex) / math.sqrt(2),
		"+": np.array([a.conjugate(), -1, b.conjugate(), 0], dtype=complex) / math.sqrt(2),
	}
	return DressedStates(
		splitting=splitting,
		energies={"0": 0.0, "-": -splitting, "+": splitting},
		vectors=vectors,
		rabi_a=rabi_a,
	)
