import logging
import math

import numpy as np

from eit_toolkit.optics.constants import MODULE_NAME
from eit_toolkit.settings import get_settings
from eit_toolkit.simulation_log import create_log
from eit_toolkit.utils.errors import throw

logger = logging.getLogger(__name__)


def create_optics_log(**kwargs):
	return create_log(module_def=MODULE_NAME, **kwargs)


def check_linewidth(gamma21: float) -> None:
	if not (math.isfinite(gamma21) and gamma21 > 0):
		throw(f"gamma21 must be positive, got {gamma21}", field="gamma21")


def check_rates(**rates) -> None:
	for name, rate in rates.items():
		if not (math.isfinite(rate) and rate >= 0):
			throw(f"{name} must be finite and non-negative, got {rate}", field=name)


def as_grid(values, name: str) -> np.ndarray:
	grid = np.atleast_1d(np.asarray(values, dtype=float))
	if grid.ndim != 1 or grid.size == 0:
		throw(f"{name} must be a non-empty one-dimensional grid", field=name)
	if not np.all(np.isfinite(grid)):
		throw(f"{name} must be finite", field=name)
	return grid


def mask_poles(numerator: np.ndarray, denominator: np.ndarray, scale: np.ndarray, what: str) -> np.ndarray:
	"""numerator / denominator with NaN wherever the denominator vanishes relative to `scale`."""
	poles = np.abs(denominator) <= get_settings().singular_threshold * scale
	if np.any(poles):
		logger.warning("%s: %d grid point(s) sit on a pole and are set to NaN", what, int(poles.sum()))
	with np.errstate(divide="ignore", invalid="ignore"):
		result = numerator / np.where(poles, 1.0, denominator)
	return np.where(poles, np.nan + 0j, result)
