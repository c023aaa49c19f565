import contextlib
import hashlib
import json
import math
import os
import tempfile
from dataclasses import asdict, dataclass
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from eit_toolkit.runner.constants import COMPLEX_SUFFIXES, MANIFEST_PREFIX, OUTPUT_FORMATS
from eit_toolkit.utils.errors import throw


@dataclass(frozen=True)
class RunManifest:
	"""Provenance written next to every result table.

	wall_time_s is the only field that differs between runs of the same file.
	"""

	scenario: str
	task: str
	input_sha256: str
	tool_version: str
	wall_time_s: float

	def header_lines(self) -> List[str]:
		return [f"{MANIFEST_PREFIX}{key}: {value}\n" for key, value in asdict(self).items()]


def input_hash(raw: bytes) -> str:
	return hashlib.sha256(raw).hexdigest()


def split_complex(frame: pd.DataFrame) -> pd.DataFrame:
	"""Replace every complex column by <name>_re and <name>_im, keeping column order."""
	columns: Dict[str, Any] = {}
	re_suffix, im_suffix = COMPLEX_SUFFIXES
	for name in frame.columns:
		values = frame[name].to_numpy()
		if np.iscomplexobj(values):
			columns[f"{name}{re_suffix}"] = values.real
			columns[f"{name}{im_suffix}"] = values.imag
		else:
			columns[name] = values
	return pd.DataFrame(columns)


def render_table(frame: pd.DataFrame, fmt: str, manifest: RunManifest) -> str:
	if fmt not in OUTPUT_FORMATS:
		throw(f"output format must be one of {OUTPUT_FORMATS}, got {fmt!r}", field="output.format")

	table = split_complex(frame)
	if fmt == "csv":
		return "".join(manifest.header_lines()) + table.to_csv(index=False, lineterminator="\n")

	document = {
		"manifest": asdict(manifest),
		"columns": [str(name) for name in table.columns],
		"rows": [
			[_json_cell(value) for value in row]
			for row in table.itertuples(index=False, name=None)
		],
	}
	return json.dumps(document, indent=1, allow_nan=False) + "\n"


def write_table(frame: pd.DataFrame, path: str, fmt: str, manifest: RunManifest) -> None:
	"""Write through a temporary file in the target directory, then rename over `path`."""
	text = render_table(frame, fmt, manifest)

	directory = os.path.dirname(os.path.abspath(path))
	fd, temp_path = tempfile.mkstemp(prefix=".eit-", suffix=".tmp", dir=directory)
	try:
		with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
			f.write(text)
		os.replace(temp_path, path)
	except BaseException:
		with contextlib.suppress(OSError):
			os.unlink(temp_path)
		raise


def _json_cell(value: Any) -> Any:
	if isinstance(value, np.generic):
		value = value.item()
	if isinstance(value, float) and not math.isfinite(value):
		# JSON has no inf or nan
		if math.isnan(value):
			return None
		return "Infinity" if value > 0 else "-Infinity"
	return value
