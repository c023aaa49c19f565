import argparse
import json
import sys
import time
from typing import List, Optional

from eit_toolkit import __version__
from eit_toolkit.runner.constants import (
	EXIT_CHECK_FAILED,
	EXIT_IO,
	EXIT_OK,
	TASK_COLUMNS,
	VERIFY_SUITES,
)
from eit_toolkit.runner.output import RunManifest, input_hash, write_table
from eit_toolkit.runner.scenario import Scenario, load_scenario
from eit_toolkit.runner.sweep import run_sweep
from eit_toolkit.runner.utils import create_runner_log
from eit_toolkit.runner.verify import run_suite
from eit_toolkit.utils.errors import SimulationError


def run(args: argparse.Namespace) -> int:
	started = time.perf_counter()
	scenario, raw = load_scenario(args.scenario)
	path = args.output or scenario.output.path

	frame = run_sweep(scenario, threads=args.threads)
	manifest = RunManifest(
		scenario=scenario.name,
		task=scenario.task,
		input_sha256=input_hash(raw),
		tool_version=__version__,
		wall_time_s=round(time.perf_counter() - started, 3),
	)
	write_table(frame, path, scenario.output.format, manifest)

	create_runner_log(
		status="Success",
		method="run",
		message=f"{scenario.name}: wrote {len(frame)} rows to {path}",
		request_data={"scenario": args.scenario, "threads": args.threads, "seed": args.seed},
	)
	return EXIT_OK


def verify(args: argparse.Namespace) -> int:
	checks = run_suite(args.suite, seed=args.seed)
	for check in checks:
		print(check.report())

	failed = [check.name for check in checks if not check.passed]
	print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
	create_runner_log(
		status="Failure" if failed else "Success",
		method="verify",
		message=f"{args.suite}: {len(failed)} failed",
		response_data={"failed": failed},
	)
	return EXIT_CHECK_FAILED if failed else EXIT_OK


def schema(args: argparse.Namespace) -> int:
	print(json.dumps(Scenario.model_json_schema(), indent=2, sort_keys=True))
	return EXIT_OK


COMMANDS = {"run": run, "verify": verify, "schema": schema}


def _task_columns() -> str:
	lines = ["task output columns (after sweep_index, <sweep parameter>, grid_index):"]
	lines += [f"  {task}: {columns}" for task, columns in TASK_COLUMNS.items()]
	lines.append("complex columns are written as <name>_re and <name>_im.")
	return "\n".join(lines)


def _positive_int(value: str) -> int:
	number = int(value)
	if number < 1:
		raise argparse.ArgumentTypeError(f"must be at least 1, got {number}")
	return number


def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(
		prog="eit-toolkit",
		description="Run EIT master-equation scenarios and acceptance checks.",
		formatter_class=argparse.RawDescriptionHelpFormatter,
		epilog=_task_columns(),
	)
	parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
	commands = parser.add_subparsers(dest="command", required=True)

	run_parser = commands.add_parser(
		"run",
		help="run a scenario file and write its result table",
		formatter_class=argparse.RawDescriptionHelpFormatter,
		epilog=_task_columns(),
	)
	run_parser.add_argument("scenario", help="scenario JSON file")
	run_parser.add_argument("--output", default=None, help="write here instead of output.path")
	run_parser.add_argument(
		"--threads", type=_positive_int, default=None, help="sweep workers (default: available CPUs)"
	)
	run_parser.add_argument(
		"--seed", type=int, default=None, help="accepted for interface stability; runs are deterministic"
	)

	verify_parser = commands.add_parser("verify", help="run an acceptance suite")
	verify_parser.add_argument("suite", help=f"one of: {', '.join(VERIFY_SUITES)}")
	verify_parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

	commands.add_parser("schema", help="print the scenario JSON schema")
	return parser


def main(argv: Optional[List[str]] = None) -> int:
	args = build_parser().parse_args(argv)
	try:
		return COMMANDS[args.command](args)
	except SimulationError as e:
		create_runner_log(status="Error", exception=e, method=args.command)
		print(f"error: {e}", file=sys.stderr)
		return e.exit_code
	except OSError as e:
		create_runner_log(status="Error", exception=e, method=args.command)
		print(f"error: {e}", file=sys.stderr)
		return EXIT_IO


if __name__ == "__main__":
	sys.exit(main())
