import cmath
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from eit_toolkit.model.constants import (
	DRIVE_LABELS,
	ENVIRONMENT_SYMBOL,
	GROUND_SYMBOL,
	RAIL_LEVEL,
	RAIL_SYMBOL,
)
from eit_toolkit.utils.errors import throw
from eit_toolkit.utils.linalg import as_square, check_density_matrix

LevelPair = Tuple[int, int]


class Scheme(str, Enum):
	TWO_LEVEL = "two-level"
	THREE_LEVEL = "three-level"
	FOUR_LEVEL = "four-level"

	@property
	def levels(self) -> int:
		return {"two-level": 2, "three-level": 3, "four-level": 4}[self.value]

	@property
	def drive_labels(self) -> Tuple[str, ...]:
		return DRIVE_LABELS[: self.levels - 1]


@dataclass(frozen=True)
class FockCount:
	n: int

	def __post_init__(self):
		if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
			throw(f"photon number must be a non-negative integer, got {self.n}", field="n")
		object.__setattr__(self, "n", int(self.n))

	@property
	def mean_photons(self) -> float:
		return float(self.n)


@dataclass(frozen=True)
class Coherent:
	alpha_sq: float

	def __post_init__(self):
		if not math.isfinite(self.alpha_sq) or self.alpha_sq < 0:
			throw(f"alpha_sq must be finite and non-negative, got {self.alpha_sq}", field="alpha_sq")
		object.__setattr__(self, "alpha_sq", float(self.alpha_sq))

	@property
	def mean_photons(self) -> float:
		return self.alpha_sq


PhotonOccupancy = Union[FockCount, Coherent]


def occupancy_factor(label: str, occupancy: PhotonOccupancy) -> float:
	"""Ratio |rabi|^2 / |vacuum_rabi|^2 for a drive with the given photon occupancy.

	Mode b couples through the emitted photon, so its Fock factor is n + 1.
	"""
	if isinstance(occupancy, FockCount):
		return occupancy.n + 1 if label == "b" else occupancy.n
	return occupancy.alpha_sq


@dataclass(frozen=True)
class FieldDrive:
	label: str
	rabi: complex = 0j
	detuning: float = 0.0
	photon_occupancy: Optional[PhotonOccupancy] = None
	vacuum_rabi: Optional[complex] = None

	def __post_init__(self):
		if self.label not in DRIVE_LABELS:
			throw(f"drive label must be one of {DRIVE_LABELS}, got {self.label!r}", field="label")

		object.__setattr__(self, "rabi", complex(self.rabi))
		object.__setattr__(self, "detuning", float(self.detuning))
		if not cmath.isfinite(self.rabi):
			throw("rabi frequency must be finite", field=f"drives.{self.label}.rabi")
		if not math.isfinite(self.detuning):
			throw("detuning must be finite", field=f"drives.{self.label}.detuning")

		if self.vacuum_rabi is None:
			return

		object.__setattr__(self, "vacuum_rabi", complex(self.vacuum_rabi))
		if isinstance(self.photon_occupancy, FockCount):
			expected = occupancy_factor(self.label, self.photon_occupancy) * abs(self.vacuum_rabi) ** 2
			if abs(self.rabi_sq - expected) > 1e-9 * max(1.0, expected):
				throw(
					f"|rabi|^2 = {self.rabi_sq:.12g} inconsistent with vacuum rabi and photon number "
					f"(expected {expected:.12g})",
					field=f"drives.{self.label}.rabi",
				)

	@classmethod
	def from_vacuum_rabi(
		cls,
		label: str,
		vacuum_rabi: complex,
		photon_occupancy: PhotonOccupancy,
		detuning: float = 0.0,
	) -> "FieldDrive":
		rabi = complex(vacuum_rabi) * math.sqrt(occupancy_factor(label, photon_occupancy))
		return cls(
			label=label,
			rabi=rabi,
			detuning=detuning,
			photon_occupancy=photon_occupancy,
			vacuum_rabi=vacuum_rabi,
		)

	@property
	def rabi_sq(self) -> float:
		return abs(self.rabi) ** 2


def _frozen_rates(rates: Mapping, name: str) -> Mapping[int, float]:
	result: Dict[int, float] = {}
	for level, rate in dict(rates or {}).items():
		try:
			level = int(level)
		except (TypeError, ValueError):
			throw(f"level index must be an integer, got {level!r}", field=name)
		if level not in (1, 2, 3, 4):
			throw(f"level index must be between 1 and 4, got {level}", field=f"{name}.{level}")
		rate = float(rate)
		if not math.isfinite(rate) or rate < 0:
			throw(f"rate must be finite and non-negative, got {rate}", field=f"{name}.{level}")
		result[level] = rate
	return MappingProxyType(result)


@dataclass(frozen=True)
class DecoherenceSpec:
	"""Per-level depopulation rates (gamma') and pure dephasing rates (gamma'')."""

	depop: Mapping[int, float] = field(default_factory=dict)
	dephase: Mapping[int, float] = field(default_factory=dict)

	def __post_init__(self):
		object.__setattr__(self, "depop", _frozen_rates(self.depop, "depop"))
		object.__setattr__(self, "dephase", _frozen_rates(self.dephase, "dephase"))

	def depop_rate(self, level: int) -> float:
		return self.depop.get(level, 0.0)

	def dephase_rate(self, level: int) -> float:
		return self.dephase.get(level, 0.0)

	def pair_rate(self, i: int, j: int) -> float:
		"""gamma_ij for levels i, j (0 is the empty rail, which never decays)."""
		if i == j:
			return self.depop_rate(i)
		return (
			0.5 * (self.depop_rate(i) + self.depop_rate(j))
			+ self.dephase_rate(i)
			+ self.dephase_rate(j)
		)

	def to_dict(self) -> Dict[str, Dict[str, float]]:
		return {
			"depop": {str(k): v for k, v in sorted(self.depop.items())},
			"dephase": {str(k): v for k, v in sorted(self.dephase.items())},
		}


@dataclass(frozen=True)
class BasisLabel:
	"""One product state of atoms, field modes a/b/c, environment and empty rail."""

	atom_state: Tuple[int, ...]
	photon_record: Tuple[int, int, int]
	env_flag: int = 0
	rail_flag: bool = False

	@property
	def is_environment(self) -> bool:
		return bool(self.env_flag)

	@property
	def is_rail(self) -> bool:
		return self.rail_flag

	@property
	def excited_atom(self) -> Optional[int]:
		"""Zero-based index of the atom outside level 1, if any."""
		for k, level in enumerate(self.atom_state):
			if level != 1:
				return k
		return None

	@property
	def level(self) -> int:
		"""Atomic level carried by the label (rail labels report level 0)."""
		if self.rail_flag:
			return RAIL_LEVEL
		k = self.excited_atom
		return 1 if k is None else self.atom_state[k]

	@property
	def decays(self) -> bool:
		"""Environment and rail labels carry no decoherence channel of their own."""
		return not (self.is_environment or self.is_rail)

	@property
	def symbol(self) -> str:
		if self.is_rail:
			return RAIL_SYMBOL
		if self.is_environment:
			return ENVIRONMENT_SYMBOL
		k = self.excited_atom
		if k is None:
			return GROUND_SYMBOL
		if len(self.atom_state) == 1:
			return str(self.level)
		return f"{self.level}_{k + 1}"

	def __str__(self) -> str:
		atoms = ",".join(str(level) for level in self.atom_state)
		photons = ",".join(
			f"{mode}{offset:+d}" for mode, offset in zip(("a", "b", "c"), self.photon_record)
		)
		return f"|{atoms}; {photons}; env={self.env_flag}; rail={int(self.rail_flag)}>"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
	basis: Tuple[BasisLabel, ...]
	data: np.ndarray

	def __post_init__(self):
		basis = tuple(self.basis)
		data = as_square(self.data, "rho").copy()
		if data.shape[0] != len(basis):
			throw(
				f"density matrix has dimension {data.shape[0]} but basis has {len(basis)} labels",
				field="rho",
			)
		data.setflags(write=False)
		object.__setattr__(self, "basis", basis)
		object.__setattr__(self, "data", data)

	@property
	def dimension(self) -> int:
		return len(self.basis)

	@property
	def trace(self) -> complex:
		return complex(np.trace(self.data))

	@property
	def purity(self) -> float:
		return float(np.real(np.trace(self.data @ self.data)))

	def validate(self) -> "DensityMatrix":
		check_density_matrix(self.data)
		return self

	def index(self, symbol: str) -> int:
		for i, label in enumerate(self.basis):
			if label.symbol == symbol:
				return i
		throw(f"no basis label with symbol {symbol!r}", field="element")

	def element(self, row: str, col: str) -> complex:
		return complex(self.data[self.index(row), self.index(col)])

	def with_data(self, data: np.ndarray) -> "DensityMatrix":
		return DensityMatrix(self.basis, data)


@dataclass(frozen=True)
class SystemSpec:
	scheme: Scheme
	drives: Tuple[FieldDrive, ...]
	decoherence: DecoherenceSpec = field(default_factory=DecoherenceSpec)
	atom_count: int = 1
	dual_rail: bool = False
	reference_rate: float = 1.0

	def __post_init__(self):
		scheme = Scheme(self.scheme)
		drives = tuple(sorted(self.drives, key=lambda d: d.label))
		labels = tuple(d.label for d in drives)
		if labels != scheme.drive_labels:
			throw(
				f"{scheme.value} scheme needs drives {scheme.drive_labels}, got {labels}",
				field="drives",
			)
		if isinstance(self.atom_count, bool) or int(self.atom_count) != self.atom_count or self.atom_count < 1:
			throw(f"atom_count must be an integer >= 1, got {self.atom_count}", field="atom_count")
		if not self.reference_rate > 0:
			throw("reference_rate must be positive", field="reference_rate")

		object.__setattr__(self, "scheme", scheme)
		object.__setattr__(self, "drives", drives)
		object.__setattr__(self, "atom_count", int(self.atom_count))
		object.__setattr__(self, "dual_rail", bool(self.dual_rail))

	@classmethod
	def from_parameters(
		cls,
		scheme: Union[Scheme, str],
		rabi: Mapping[str, complex],
		detuning: Optional[Mapping[str, float]] = None,
		decoherence: Optional[DecoherenceSpec] = None,
		atom_count: int = 1,
		dual_rail: bool = False,
	) -> "SystemSpec":
		scheme = Scheme(scheme)
		detuning = detuning or {}
		drives = [
			FieldDrive(label=label, rabi=rabi.get(label, 0j), detuning=detuning.get(label, 0.0))
			for label in scheme.drive_labels
		]
		return cls(
			scheme=scheme,
			drives=tuple(drives),
			decoherence=decoherence or DecoherenceSpec(),
			atom_count=atom_count,
			dual_rail=dual_rail,
		)

	def drive(self, label: str) -> FieldDrive:
		for drive in self.drives:
			if drive.label == label:
				return drive
		throw(f"{self.scheme.value} scheme has no drive {label!r}", field="drives")

	def rabi(self, label: str) -> complex:
		return self.drive(label).rabi if label in self.scheme.drive_labels else 0j

	def detuning(self, label: str) -> float:
		return self.drive(label).detuning if label in self.scheme.drive_labels else 0.0

	def replace(self, **changes) -> "SystemSpec":
		return replace(self, **changes)

	def with_drives(self, drives: Sequence[FieldDrive]) -> "SystemSpec":
		return replace(self, drives=tuple(drives))
