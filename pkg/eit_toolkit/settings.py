import json
import os
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict
from pydantic import ValidationError as SchemaError
from pydantic import model_validator

from eit_toolkit.utils.errors import ValidationError, throw

SETTINGS_ENV_VAR = "EIT_TOOLKIT_SETTINGS"


class ToolkitSettings(BaseModel):
	"""Numerical knobs shared by every module.

	Defaults reproduce the documented behaviour; a JSON file named by the
	`EIT_TOOLKIT_SETTINGS` environment variable can override any of them.
	"""

	model_config = ConfigDict(extra="forbid", frozen=True)

	max_dimension: int = 4096
	validity_margin: float = 10.0
	weak_field_ratio: float = 0.3
	singular_threshold: float = 1e-12

	step_factor: float = 1e-3
	snapshot_stride: int = 100
	max_snapshots: int = 10000
	adaptive_tolerance: float = 1e-10
	propagator_max_dimension: int = 16

	hermiticity_tolerance: float = 1e-12
	trace_tolerance: float = 1e-9
	eigenvalue_tolerance: float = 1e-9

	dual_rail_gamma10_rate: Literal["depop", "gamma21"] = "depop"
	spontaneous_prefactor: float = 1.0

	poisson_window: float = 10.0
	overlap_bracket: Tuple[float, float] = (10.0, 1e8)

	log_path: Optional[str] = None

	@model_validator(mode="after")
	def validate_ranges(self) -> "ToolkitSettings":
		positive = (
			"validity_margin",
			"weak_field_ratio",
			"singular_threshold",
			"step_factor",
			"adaptive_tolerance",
			"hermiticity_tolerance",
			"trace_tolerance",
			"eigenvalue_tolerance",
			"spontaneous_prefactor",
			"poisson_window",
		)
		for key in positive:
			if not getattr(self, key) > 0:
				raise ValueError(f"{key} must be positive")

		for key in ("max_dimension", "snapshot_stride", "max_snapshots", "propagator_max_dimension"):
			if getattr(self, key) < 1:
				raise ValueError(f"{key} must be at least 1")

		low, high = self.overlap_bracket
		if not 0 < low < high:
			raise ValueError("overlap_bracket must be an increasing pair of positive numbers")
		return self


_settings: Optional[ToolkitSettings] = None


def _build(values: Dict[str, Any]) -> ToolkitSettings:
	try:
		return ToolkitSettings.model_validate(values)
	except SchemaError as e:
		error = e.errors()[0]
		field = ".".join(str(part) for part in error["loc"]) or None
		throw(error["msg"], field=field)


def _load_initial() -> ToolkitSettings:
	path = os.environ.get(SETTINGS_ENV_VAR)
	if not path:
		return ToolkitSettings()

	try:
		with open(path) as f:
			values = json.load(f)
	except (OSError, json.JSONDecodeError) as e:
		raise ValidationError(f"could not read settings file {path}: {e}", field=SETTINGS_ENV_VAR)

	return _build(values)


def get_settings() -> ToolkitSettings:
	global _settings

	if _settings is None:
		_settings = _load_initial()
	return _settings


def update_settings(**values) -> Dict[str, Any]:
	"""Apply new values and return the previous values of the changed keys.

	The returned dict can be passed back to `update_settings` to restore.
	"""
	global _settings

	current = get_settings()
	previous = {key: getattr(current, key) for key in values if key in type(current).model_fields}
	_settings = _build({**current.model_dump(), **values})
	return previous


def reset_settings() -> None:
	global _settings
	_settings = None
