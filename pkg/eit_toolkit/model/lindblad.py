"""Decoherence operator Gamma(rho), built from Lindblad channels or from pairwise rate rules.

Both forms describe the same dissipator

	Gamma(rho) = 1/2 sum_m gamma_m (L_m^+ L_m rho + rho L_m^+ L_m - 2 L_m rho L_m^+)

which enters the equation of motion with a minus sign. The rule-based
coefficients are the production path; channels exist to check them.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from eit_toolkit.model.basis import environment_index
from eit_toolkit.model.types import BasisLabel, DecoherenceSpec, DensityMatrix
from eit_toolkit.utils.errors import throw
from eit_toolkit.utils.linalg import as_square, check_same_dimension

MatrixLike = Union[DensityMatrix, np.ndarray]


class ChannelKind(str, Enum):
	LOWERING = "lowering"
	DEPHASING = "dephasing"


@dataclass(frozen=True, eq=False)
class LindbladChannel:
	kind: ChannelKind
	rate: float
	matrix: np.ndarray
	source: int

	def __post_init__(self):
		if not math.isfinite(self.rate) or self.rate < 0:
			throw(f"channel rate must be finite and non-negative, got {self.rate}", field="rate")
		matrix = as_square(self.matrix, "channel").copy()
		matrix.setflags(write=False)
		object.__setattr__(self, "matrix", matrix)

	@property
	def dimension(self) -> int:
		return self.matrix.shape[0]

	@classmethod
	def lowering(cls, dimension: int, source: int, environment: int, rate: float) -> "LindbladChannel":
		"""L = |e><j|, the photon scattered out of mode a into the environment."""
		matrix = np.zeros((dimension, dimension), dtype=complex)
		matrix[environment, source] = 1.0
		return cls(kind=ChannelKind.LOWERING, rate=rate, matrix=matrix, source=source)

	@classmethod
	def dephasing(cls, dimension: int, target: int, rate: float) -> "LindbladChannel":
		"""L = (I - 2 |j><j|) / sqrt(2); the identity includes the environment row."""
		matrix = np.eye(dimension, dtype=complex)
		matrix[target, target] = -1.0
		return cls(kind=ChannelKind.DEPHASING, rate=rate, matrix=matrix / math.sqrt(2), source=target)


def lindblad_channels(spec: DecoherenceSpec, basis: Sequence[BasisLabel]) -> List[LindbladChannel]:
	"""One lowering and one dephasing channel per decaying product-state label.

	Channels with zero rate are left out.
	"""
	dimension = len(basis)
	environment = environment_index(basis)

	channels = []
	for j, label in enumerate(basis):
		if not label.decays:
			continue
		depop = spec.depop_rate(label.level)
		dephase = spec.dephase_rate(label.level)
		if depop > 0:
			channels.append(LindbladChannel.lowering(dimension, j, environment, depop))
		if dephase > 0:
			channels.append(LindbladChannel.dephasing(dimension, j, dephase))
	return channels


def lindblad_superoperator(
	channels: Sequence[LindbladChannel], dimension: Optional[int] = None
) -> Callable[[MatrixLike], np.ndarray]:
	dimensions = {channel.dimension for channel in channels}
	if dimension is not None:
		dimensions.add(dimension)
	if len(dimensions) > 1:
		throw(f"dimension mismatch between channels: {sorted(dimensions)}", field="channels")

	terms: List[Tuple[float, np.ndarray, np.ndarray, np.ndarray]] = []
	for channel in channels:
		op = channel.matrix
		op_dag = op.conj().T
		terms.append((channel.rate, op, op_dag, op_dag @ op))

	def gamma(rho: MatrixLike) -> np.ndarray:
		data = _as_data(rho)
		if dimensions:
			check_same_dimension(next(iter(dimensions)), data, "rho")

		out = np.zeros_like(data)
		for rate, op, op_dag, number in terms:
			out += 0.5 * rate * (number @ data + data @ number - 2 * op @ data @ op_dag)
		return out

	return gamma


@dataclass(frozen=True, eq=False)
class GammaCoefficients:
	"""gamma_ij over the basis; the (e, e) entry is filled in by `apply`."""

	basis: Tuple[BasisLabel, ...]
	matrix: np.ndarray
	environment: int

	def __post_init__(self):
		matrix = np.asarray(self.matrix, dtype=float).copy()
		matrix.setflags(write=False)
		object.__setattr__(self, "basis", tuple(self.basis))
		object.__setattr__(self, "matrix", matrix)

	@property
	def dimension(self) -> int:
		return self.matrix.shape[0]

	@property
	def max_rate(self) -> float:
		return float(np.max(self.matrix)) if self.matrix.size else 0.0

	def apply(self, data: np.ndarray) -> np.ndarray:
		out = self.matrix * data
		e = self.environment
		out[e, e] = -np.dot(np.diagonal(self.matrix), np.diagonal(data))
		return out


def rule_based_gamma(spec: DecoherenceSpec, basis: Sequence[BasisLabel]) -> GammaCoefficients:
	"""Coefficients from the pairwise rules, applied per product-state label.

	gamma_jj = gamma'_j, gamma_ij = (gamma'_i + gamma'_j) / 2 + gamma''_i + gamma''_j
	with environment and rail labels carrying no rates of their own, so
	gamma_ej = gamma'_j / 2 + gamma''_j.
	"""
	environment = environment_index(basis)

	depop = np.array([spec.depop_rate(label.level) if label.decays else 0.0 for label in basis])
	dephase = np.array([spec.dephase_rate(label.level) if label.decays else 0.0 for label in basis])

	matrix = 0.5 * (depop[:, None] + depop[None, :]) + dephase[:, None] + dephase[None, :]
	np.fill_diagonal(matrix, depop)

	return GammaCoefficients(basis=tuple(basis), matrix=matrix, environment=environment)


def apply_gamma(coeffs: GammaCoefficients, rho: MatrixLike) -> np.ndarray:
	data = _as_data(rho)
	check_same_dimension(coeffs.dimension, data, "rho")
	return coeffs.apply(data)


def _as_data(rho: MatrixLike) -> np.ndarray:
	if isinstance(rho, DensityMatrix):
		return np.array(rho.data)
	return as_square(rho, "rho")
