import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from eit_toolkit.model.basis import build_basis, excited_indices
from eit_toolkit.model.types import BasisLabel, SystemSpec
from eit_toolkit.settings import get_settings
from eit_toolkit.utils.errors import throw
from eit_toolkit.utils.linalg import as_square, hermiticity_error


@dataclass(frozen=True, eq=False)
class Hamiltonian:
	"""Total Hamiltonian stored as H / (-hbar) in units of the reference rate.

	Entries are the Rabi frequencies and detunings themselves; the
	integrator puts the sign back.
	"""

	basis: Tuple[BasisLabel, ...]
	data: np.ndarray

	def __post_init__(self):
		basis = tuple(self.basis)
		data = as_square(self.data, "hamiltonian").copy()
		if data.shape[0] != len(basis):
			throw(
				f"hamiltonian has dimension {data.shape[0]} but basis has {len(basis)} labels",
				field="hamiltonian",
			)
		data.setflags(write=False)
		object.__setattr__(self, "basis", basis)
		object.__setattr__(self, "data", data)

	@property
	def dimension(self) -> int:
		return len(self.basis)

	@property
	def max_abs(self) -> float:
		return float(np.max(np.abs(self.data))) if self.data.size else 0.0

	def hermiticity_error(self) -> float:
		return hermiticity_error(self.data)


def build_hamiltonian(spec: SystemSpec, basis: Optional[Sequence[BasisLabel]] = None) -> Hamiltonian:
	"""Bracketed matrix of the single-atom, N-atom, environment and dual-rail Hamiltonians.

	Each atom's excited block carries the detunings nu_a, nu_a - nu_b,
	nu_a - nu_b + nu_c on its diagonal and the ladder couplings Omega_b,
	Omega_c; the ground row couples to level 2 of every atom through
	Omega_a. Environment and rail rows stay zero.
	"""
	expected = build_basis(spec)
	if basis is None:
		basis = expected
	elif tuple(basis) != tuple(expected):
		throw("basis does not match the system spec", field="basis")

	levels = spec.scheme.levels
	nu_a, nu_b, nu_c = (spec.detuning(label) for label in ("a", "b", "c"))
	omega_a, omega_b, omega_c = (spec.rabi(label) for label in ("a", "b", "c"))
	diagonal = {2: nu_a, 3: nu_a - nu_b, 4: nu_a - nu_b + nu_c}

	data = np.zeros((len(basis), len(basis)), dtype=complex)
	ground = 0
	blocks = [excited_indices(basis, level) for level in range(2, levels + 1)]

	for atom in zip(*blocks):
		for level, i in enumerate(atom, start=2):
			data[i, i] = diagonal[level]

		i2 = atom[0]
		data[ground, i2] = omega_a.conjugate()
		data[i2, ground] = omega_a
		if levels >= 3:
			i3 = atom[1]
			data[i2, i3] = omega_b
			data[i3, i2] = omega_b.conjugate()
		if levels >= 4:
			i4 = atom[2]
			data[i3, i4] = omega_c.conjugate()
			data[i4, i3] = omega_c

	return Hamiltonian(basis=tuple(basis), data=data)


def rabi_from_experiment(sigma_over_area: float, A21: float, bandwidth: float, n_a: int) -> float:
	"""|Omega_a|^2 = (sigma_a / area) A21 bandwidth n_a / (8 pi)."""
	_check_positive(sigma_over_area=sigma_over_area, A21=A21, bandwidth=bandwidth)
	if int(n_a) != n_a or n_a < 0:
		throw(f"n_a must be a non-negative integer, got {n_a}", field="n_a")

	return sigma_over_area * A21 * bandwidth * n_a / (8 * math.pi)


def control_rabi_for_window(
	sigma_over_area: float, A21: float, gamma21: float, rabi_a_sq: float, n_a: int
) -> float:
	"""|Omega_b| whose transparency window |Omega_b|^2 / gamma21 matches the bandwidth of drive a.

	Inverts `rabi_from_experiment` with bandwidth = |Omega_b|^2 / gamma21.
	"""
	_check_positive(sigma_over_area=sigma_over_area, A21=A21, gamma21=gamma21, n_a=n_a)
	if rabi_a_sq < 0:
		throw("rabi_a_sq must be non-negative", field="rabi_a_sq")

	return math.sqrt(8 * math.pi * gamma21 * rabi_a_sq / (sigma_over_area * A21 * n_a))


def spontaneous_rate(omega21: float, dipole_sq: float, prefactor: Optional[float] = None) -> float:
	"""A21 = prefactor * omega21^3 * |d21|^2.

	The default prefactor is 1 (reduced units); pass
	`SI_SPONTANEOUS_PREFACTOR` for SI inputs.
	"""
	_check_positive(omega21=omega21, dipole_sq=dipole_sq)
	if prefactor is None:
		prefactor = get_settings().spontaneous_prefactor
	_check_positive(prefactor=prefactor)

	return prefactor * omega21 ** 3 * dipole_sq


def _check_positive(**values) -> None:
	for name, value in values.items():
		if not (math.isfinite(value) and value > 0):
			throw(f"{name} must be positive, got {value}", field=name)
