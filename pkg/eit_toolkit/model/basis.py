from typing import Dict, List, Sequence, Tuple

import numpy as np

from eit_toolkit.model.constants import (
	ENVIRONMENT_PHOTON_OFFSET,
	LEVEL_PHOTON_OFFSETS,
	RAIL_LEVEL,
	RAIL_PHOTON_OFFSET,
)
from eit_toolkit.model.types import BasisLabel, DecoherenceSpec, LevelPair, Scheme, SystemSpec
from eit_toolkit.settings import get_settings
from eit_toolkit.utils.errors import BasisTooLarge, throw


def basis_dimension(spec: SystemSpec) -> int:
	"""ground + (levels - 1) per atom + environment (+ empty rail)."""
	return 1 + (spec.scheme.levels - 1) * spec.atom_count + 1 + int(spec.dual_rail)


def build_basis(spec: SystemSpec) -> List[BasisLabel]:
	"""Extended product-state basis of `spec`.

	Order is ground manifold state, the excited states atom by atom, the
	environment, then the empty rail for dual-rail systems.
	"""
	dimension = basis_dimension(spec)
	limit = get_settings().max_dimension
	if dimension > limit:
		throw(
			f"basis too large: {dimension} labels for {spec.atom_count} atoms exceeds the limit of {limit}",
			exc=BasisTooLarge,
			field="atom_count",
		)

	n_atoms = spec.atom_count
	ground = (1,) * n_atoms

	labels = [BasisLabel(atom_state=ground, photon_record=LEVEL_PHOTON_OFFSETS[1])]
	for k in range(n_atoms):
		for level in range(2, spec.scheme.levels + 1):
			atom_state = ground[:k] + (level,) + ground[k + 1 :]
			labels.append(BasisLabel(atom_state=atom_state, photon_record=LEVEL_PHOTON_OFFSETS[level]))

	labels.append(BasisLabel(atom_state=ground, photon_record=ENVIRONMENT_PHOTON_OFFSET, env_flag=1))
	if spec.dual_rail:
		labels.append(BasisLabel(atom_state=ground, photon_record=RAIL_PHOTON_OFFSET, rail_flag=True))

	return labels


def label_index(basis: Sequence[BasisLabel]) -> Dict[str, int]:
	return {label.symbol: i for i, label in enumerate(basis)}


def environment_index(basis: Sequence[BasisLabel]) -> int:
	for i, label in enumerate(basis):
		if label.is_environment:
			return i
	throw("basis has no environment label", field="basis")


def derived_gammas(spec: DecoherenceSpec, scheme: Scheme) -> Dict[LevelPair, float]:
	"""Pairwise decoherence coefficients gamma_ij keyed by level indices.

	Level 0 is the empty rail. Off-diagonal entries follow
	gamma_ij = (gamma'_i + gamma'_j) / 2 + gamma''_i + gamma''_j and the
	diagonal gamma_jj is the depopulation rate gamma'_j.
	"""
	levels = range(RAIL_LEVEL, Scheme(scheme).levels + 1)
	return {(i, j): spec.pair_rate(i, j) for i in levels for j in levels}


def permute_atoms(basis: Sequence[BasisLabel], permutation: Sequence[int]) -> np.ndarray:
	"""Permutation matrix P sending every label to the label with atom k moved to permutation[k]."""
	n_atoms = len(basis[0].atom_state)
	if sorted(permutation) != list(range(n_atoms)):
		throw(f"{list(permutation)} is not a permutation of {n_atoms} atoms", field="permutation")

	index = {label: i for i, label in enumerate(basis)}
	matrix = np.zeros((len(basis), len(basis)))
	for i, label in enumerate(basis):
		atom_state = [0] * n_atoms
		for k, level in enumerate(label.atom_state):
			atom_state[permutation[k]] = level
		moved = BasisLabel(
			atom_state=tuple(atom_state),
			photon_record=label.photon_record,
			env_flag=label.env_flag,
			rail_flag=label.rail_flag,
		)
		matrix[index[moved], i] = 1.0
	return matrix


def excited_indices(basis: Sequence[BasisLabel], level: int) -> Tuple[int, ...]:
	"""Indices of the labels where one atom sits in `level`, in atom order."""
	return tuple(
		i
		for i, label in enumerate(basis)
		if label.decays and label.excited_atom is not None and label.level == level
	)
