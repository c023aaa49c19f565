from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from eit_toolkit.runner.constants import GRID_INDEX_COLUMN, SWEEP_INDEX_COLUMN
from eit_toolkit.runner.scenario import Scenario, with_value
from eit_toolkit.runner.tasks import run_task
from eit_toolkit.runner.utils import available_threads, create_runner_log
from eit_toolkit.settings import get_settings, update_settings

SweepPoint = Tuple[Optional[float], Scenario]


def sweep_points(scenario: Scenario) -> List[SweepPoint]:
	"""(sweep value, scenario with that value applied) in sweep order."""
	if scenario.sweep is None:
		return [(None, scenario)]

	path = scenario.sweep.parameter
	return [(value, with_value(scenario, path, value)) for value in scenario.sweep.points()]


def run_sweep(scenario: Scenario, threads: Optional[int] = None) -> pd.DataFrame:
	"""Run every sweep point and stack the results, ordered by sweep index then grid index.

	Points are independent; with more than one worker they go to a process
	pool whose map keeps submission order.
	"""
	points = sweep_points(scenario)
	workers = min(available_threads(threads), len(points))
	create_runner_log(
		status="Queued",
		method="run_sweep",
		message=f"{scenario.name}: {scenario.task} over {len(points)} point(s) on {workers} worker(s)",
	)

	scenarios = [point for _, point in points]
	if workers > 1:
		# spawned workers start from the defaults, not from this process's settings
		snapshot = get_settings().model_dump()
		with Pool(processes=workers, initializer=_apply_settings, initargs=(snapshot,)) as pool:
			frames = pool.map(run_task, scenarios)
	else:
		frames = [run_task(point) for point in scenarios]

	tables = []
	for index, ((value, _), frame) in enumerate(zip(points, frames)):
		frame = frame.copy()
		frame.insert(0, GRID_INDEX_COLUMN, np.arange(len(frame)))
		if scenario.sweep is not None:
			frame.insert(0, scenario.sweep.parameter, value)
		frame.insert(0, SWEEP_INDEX_COLUMN, index)
		tables.append(frame)
	return pd.concat(tables, ignore_index=True)


def _apply_settings(values: Dict[str, Any]) -> None:
	update_settings(**values)
