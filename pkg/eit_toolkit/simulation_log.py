import json
import logging
import traceback
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any, Optional

from eit_toolkit.settings import get_settings

logger = logging.getLogger("eit_toolkit")

ERROR_STATUSES = ("Error", "Failure")


@dataclass
class SimulationLog:
	module_def: str
	status: str
	message: str
	method: Optional[str] = None
	request_data: Optional[str] = None
	response_data: Optional[str] = None
	traceback: Optional[str] = None
	created: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

	@property
	def title(self) -> str:
		title = self.message
		if title in ("", "None") and self.method:
			title = self.method.split(".")[-1]
		return title if len(title) < 100 else title[:100] + "..."


def create_log(
	module_def=None,
	status="Queued",
	response_data=None,
	request_data=None,
	exception=None,
	method=None,
	message=None,
) -> SimulationLog:
	"""Record a run-level event on the package logger and the optional log file."""

	if response_data is not None and not isinstance(response_data, str):
		response_data = json.dumps(response_data, sort_keys=True, indent=4, default=_jsonable)

	if request_data is not None and not isinstance(request_data, str):
		request_data = json.dumps(request_data, sort_keys=True, indent=4, default=_jsonable)

	log = SimulationLog(
		module_def=str(module_def),
		status=status,
		message=message or _get_message(exception),
		method=method,
		request_data=request_data,
		response_data=response_data,
		traceback=_get_traceback(exception),
	)

	level = logging.ERROR if status in ERROR_STATUSES else logging.INFO
	logging.getLogger(f"eit_toolkit.{log.module_def}").log(level, "[%s] %s", status, log.title)

	log_path = get_settings().log_path
	if log_path:
		try:
			with open(log_path, "a") as f:
				f.write(json.dumps(asdict(log), sort_keys=True) + "\n")
		except OSError:
			logger.exception("could not append to log file %s", log_path)

	return log


def _get_message(exception) -> str:
	if exception is None:
		return "None"
	if hasattr(exception, "message"):
		return str(exception.message)
	return str(exception) or type(exception).__name__


def _get_traceback(exception) -> Optional[str]:
	if getattr(exception, "__traceback__", None) is None:
		return None
	return "".join(traceback.format_exception(type(exception), exception, exception.__traceback__))


def _jsonable(value: Any):
	if isinstance(value, complex):
		return {"re": value.real, "im": value.imag}
	if hasattr(value, "tolist"):
		return value.tolist()
	return str(value)
