import json
import math
from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, model_validator
from pydantic import ValidationError as SchemaError

from eit_toolkit.model.types import DecoherenceSpec, Scheme, SystemSpec
from eit_toolkit.utils.errors import throw

TaskName = Literal[
	"evolve", "steady", "spectrum", "gate-metrics", "kerr-overlap", "dressed", "milestones"
]

# parameters a task cannot run without
REQUIRED_PARAMETERS = {
	"evolve": ("t_end",),
	"spectrum": ("grid",),
	"kerr-overlap": ("grid",),
}

TASK_SCHEMES = {
	"gate-metrics": (Scheme.TWO_LEVEL, Scheme.FOUR_LEVEL),
	"dressed": (Scheme.THREE_LEVEL,),
	"milestones": (Scheme.TWO_LEVEL,),
}

# top-level sections a sweep may not touch
FIXED_SECTIONS = ("name", "task", "sweep", "output")


class ScenarioModel(BaseModel):
	model_config = ConfigDict(extra="forbid")


class Grid(ScenarioModel):
	"""Closed interval sampled by point count or by step; log spacing needs a point count."""

	start: FiniteFloat
	stop: FiniteFloat
	points: Optional[int] = Field(default=None, ge=1)
	step: Optional[FiniteFloat] = Field(default=None, gt=0)
	spacing: Literal["linear", "log"] = "linear"

	@model_validator(mode="after")
	def check_resolution(self) -> "Grid":
		if (self.points is None) == (self.step is None):
			raise ValueError("give exactly one of points or step")
		if self.stop < self.start:
			raise ValueError("stop must not be below start")
		if self.spacing == "log":
			if self.step is not None:
				raise ValueError("log spacing is set by points, not step")
			if not self.start > 0:
				raise ValueError("log spacing needs a positive start")
		return self

	def values(self) -> np.ndarray:
		if self.spacing == "log":
			return np.geomspace(self.start, self.stop, self.points)
		if self.step is not None:
			# small slack so that stop lands on the grid despite rounding
			count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
			return self.start + self.step * np.arange(count)
		return np.linspace(self.start, self.stop, self.points)


class DriveConfig(ScenarioModel):
	rabi: FiniteFloat = 0.0
	rabi_im: FiniteFloat = 0.0
	detuning: FiniteFloat = 0.0

	@property
	def complex_rabi(self) -> complex:
		return complex(self.rabi, self.rabi_im)


class SystemConfig(ScenarioModel):
	scheme: Scheme
	drives: Dict[Literal["a", "b", "c"], DriveConfig] = Field(default_factory=dict)
	depop: Dict[int, FiniteFloat] = Field(default_factory=dict)
	dephase: Dict[int, FiniteFloat] = Field(default_factory=dict)
	atom_count: int = Field(default=1, ge=1)
	dual_rail: bool = False

	def to_spec(self) -> SystemSpec:
		return SystemSpec.from_parameters(
			self.scheme,
			rabi={label: drive.complex_rabi for label, drive in self.drives.items()},
			detuning={label: drive.detuning for label, drive in self.drives.items()},
			decoherence=DecoherenceSpec(depop=self.depop, dephase=self.dephase),
			atom_count=self.atom_count,
			dual_rail=self.dual_rail,
		)


class TaskParameters(ScenarioModel):
	# evolve
	t_end: Optional[FiniteFloat] = Field(default=None, gt=0)
	step: Optional[FiniteFloat] = Field(default=None, gt=0)
	snapshot_stride: Optional[int] = Field(default=None, ge=1)
	adaptive: bool = False
	method: Literal["auto", "propagator", "stepwise"] = "auto"
	initial_state: Literal["ground", "dual-rail"] = "ground"
	elements: Optional[List[Tuple[str, str]]] = None

	# steady, dressed
	times: Optional[Grid] = None

	# spectrum (detuning axis) and kerr-overlap (alpha_sq axis)
	grid: Optional[Grid] = None
	axis: Literal["nu_a", "nu_c"] = "nu_a"

	# gate-metrics
	target_phase: FiniteFloat = -math.pi

	# kerr-overlap
	photons_a: int = Field(default=1, ge=0)
	photons_c: int = Field(default=1, ge=0)
	phase: FiniteFloat = math.pi
	target: Optional[float] = Field(default=None, gt=0, lt=1)

	# milestones
	q_max: int = Field(default=5, ge=1)


class SweepConfig(ScenarioModel):
	parameter: str
	values: Optional[List[FiniteFloat]] = Field(default=None, min_length=1)
	range: Optional[Grid] = None

	@model_validator(mode="after")
	def check_source(self) -> "SweepConfig":
		if (self.values is None) == (self.range is None):
			raise ValueError("give exactly one of values or range")
		return self

	def points(self) -> List[float]:
		if self.values is not None:
			return list(self.values)
		return [float(value) for value in self.range.values()]


class OutputConfig(ScenarioModel):
	format: Literal["csv", "json"] = "csv"
	path: str


class Scenario(ScenarioModel):
	name: str
	system: SystemConfig
	task: TaskName
	parameters: TaskParameters = Field(default_factory=TaskParameters)
	sweep: Optional[SweepConfig] = None
	output: OutputConfig

	def check(self) -> "Scenario":
		"""Cross-field rules the schema alone cannot express."""
		scheme = self.system.scheme
		for label in self.system.drives:
			if label not in scheme.drive_labels:
				throw(f"{scheme.value} scheme has no drive {label!r}", field=f"system.drives.{label}")

		for name in REQUIRED_PARAMETERS.get(self.task, ()):
			if getattr(self.parameters, name) is None:
				throw(f"{self.task} task needs parameters.{name}", field=f"parameters.{name}")

		schemes = TASK_SCHEMES.get(self.task)
		if schemes and scheme not in schemes:
			allowed = ", ".join(s.value for s in schemes)
			throw(f"{self.task} task runs on {allowed}, not {scheme.value}", field="system.scheme")

		if self.task == "spectrum" and self.parameters.axis == "nu_c" and scheme != Scheme.FOUR_LEVEL:
			throw("the nu_c axis needs the four-level scheme", field="parameters.axis")

		if self.parameters.initial_state == "dual-rail" and not self.system.dual_rail:
			throw("dual-rail initial state needs system.dual_rail", field="parameters.initial_state")

		if self.sweep is not None:
			check_sweep_path(self, self.sweep.parameter)
		return self


def parse_scenario(data: Dict[str, Any]) -> Scenario:
	"""Validate a scenario document; every failure names the offending field path."""
	try:
		scenario = Scenario.model_validate(data)
	except SchemaError as e:
		error = e.errors()[0]
		field = ".".join(str(part) for part in error["loc"]) or None
		throw(error["msg"], field=field)
	return scenario.check()


def load_scenario(path: str) -> Tuple[Scenario, bytes]:
	"""Read and validate a scenario file; returns the scenario and the raw bytes for hashing.

	OSError propagates so that callers can tell I/O failures from bad input.
	"""
	with open(path, "rb") as f:
		raw = f.read()

	try:
		data = json.loads(raw)
	except ValueError as e:
		throw(f"scenario is not valid JSON: {e}")
	if not isinstance(data, dict):
		throw("scenario must be a JSON object")

	return parse_scenario(data), raw


def check_sweep_path(scenario: Scenario, path: str) -> None:
	parts = path.split(".")
	if parts[0] in FIXED_SECTIONS:
		throw(f"{parts[0]} cannot be swept", field="sweep.parameter")

	node: Any = scenario.model_dump(mode="json")
	for part in parts:
		key = _key(node, part)
		if key is None:
			throw(f"{path} does not reference a scenario field", field="sweep.parameter")
		node = node[key]
	if isinstance(node, (dict, list)):
		throw(f"{path} references a section, not a value", field="sweep.parameter")


def with_value(scenario: Scenario, path: str, value: float) -> Scenario:
	"""Copy of the scenario with one dotted field replaced, validated again."""
	data = scenario.model_dump(mode="json")
	node = data
	*parents, leaf = path.split(".")
	for part in parents:
		node = node[_key(node, part)]
	node[_key(node, leaf)] = value
	return parse_scenario(data)


def _key(node: Any, part: str) -> Optional[Any]:
	# integer-keyed maps (level rates) may dump with int keys
	if not isinstance(node, dict):
		return None
	if part in node:
		return part
	if part.isdigit() and int(part) in node:
		return int(part)
	return None
