import logging
import os
from typing import Optional

from eit_toolkit.runner.constants import MODULE_NAME
from eit_toolkit.simulation_log import create_log

logger = logging.getLogger(__name__)


def create_runner_log(**kwargs):
	return create_log(module_def=MODULE_NAME, **kwargs)


def available_threads(threads: Optional[int] = None) -> int:
	"""Worker count for a sweep; defaults to the CPUs this process may run on."""
	if threads is not None:
		return max(1, int(threads))
	if hasattr(os, "sched_getaffinity"):
		return max(1, len(os.sched_getaffinity(0)))
	return os.cpu_count() or 1
