"""One function per scenario task, each returning the rows of a single sweep point.

Complex values stay complex here; `output.split_complex` turns them into
_re/_im columns when the table is written.
"""

from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from eit_toolkit.dynamics.integrator import IntegratorOptions, evolve_master
from eit_toolkit.model.basis import build_basis, derived_gammas
from eit_toolkit.model.hamiltonian import build_hamiltonian
from eit_toolkit.model.lindblad import rule_based_gamma
from eit_toolkit.model.states import dual_rail_state, ground_state
from eit_toolkit.model.types import Scheme, SystemSpec
from eit_toolkit.optics.diagnostics import eta_kappa
from eit_toolkit.optics.susceptibility import (
	phase_switch_curve,
	susceptibility_four_level,
	susceptibility_three_level,
	susceptibility_two_level,
)
from eit_toolkit.qip.gates import (
	dual_rail_metrics_four_level,
	dual_rail_metrics_two_level,
	phase_milestones,
)
from eit_toolkit.qip.kerr import coherent_overlap, conditional_gate_error, overlap_threshold
from eit_toolkit.runner.scenario import Scenario
from eit_toolkit.steadystate.dressed import dressed_states_three_level
from eit_toolkit.steadystate.dual_rail import dual_rail_w10
from eit_toolkit.steadystate.qss import qss_for_system

Row = Dict[str, Any]


def run_task(scenario: Scenario) -> pd.DataFrame:
	return TASK_RUNNERS[scenario.task](scenario)


def run_evolve(scenario: Scenario) -> pd.DataFrame:
	spec = scenario.system.to_spec()
	params = scenario.parameters

	basis = build_basis(spec)
	rho0 = dual_rail_state(basis) if params.initial_state == "dual-rail" else ground_state(basis)
	options = IntegratorOptions(
		step=params.step,
		snapshot_stride=params.snapshot_stride,
		adaptive=params.adaptive,
		method=params.method,
	)
	trajectory = evolve_master(
		build_hamiltonian(spec, basis),
		rule_based_gamma(spec.decoherence, basis),
		rho0,
		params.t_end,
		options,
	)

	columns: Dict[str, Any] = {"t": trajectory.times}
	for row, col in params.elements or _default_elements(spec):
		columns[f"rho_{row}_{col}"] = trajectory.element(row, col)
	for name in ("trace_deviation", "min_eigenvalue", "purity", "hermiticity"):
		columns[name] = [getattr(d, name) for d in trajectory.diagnostics]
	return pd.DataFrame(columns)


def run_steady(scenario: Scenario) -> pd.DataFrame:
	spec = scenario.system.to_spec()
	solution = qss_for_system(spec)

	row: Row = {
		"tau_a": solution.tau_a,
		"validity_lower": solution.validity.lower,
		"validity_upper": solution.validity.upper,
		"validity_satisfiable": solution.validity.satisfiable,
	}
	for key, value in solution.elements.items():
		row[f"qss_{key}"] = value

	if spec.dual_rail:
		shift = dual_rail_w10(
			spec.scheme, spec.drives, derived_gammas(spec.decoherence, spec.scheme), spec.atom_count
		)
		row["w10"] = shift.w10
		row["gamma10"] = shift.gamma10

	series = None
	if scenario.parameters.times is not None:
		t = scenario.parameters.times.values()
		series = {"t": t, "rho_11": solution.rho11(t)}
		for key in solution.elements:
			series[f"rho_{key}"] = solution.rho_k1(key, t)
	return _table(row, series)


def run_spectrum(scenario: Scenario) -> pd.DataFrame:
	spec = scenario.system.to_spec()
	params = scenario.parameters
	gammas = derived_gammas(spec.decoherence, spec.scheme)
	grid = params.grid.values()

	if params.axis == "nu_c":
		curve = phase_switch_curve(
			grid,
			spec.detuning("b"),
			spec.rabi("b"),
			spec.rabi("c"),
			gammas[(2, 1)],
			gammas[(3, 1)],
			gammas[(4, 1)],
		)
	elif spec.scheme == Scheme.TWO_LEVEL:
		curve = susceptibility_two_level(grid, gammas[(2, 1)])
	elif spec.scheme == Scheme.THREE_LEVEL:
		curve = susceptibility_three_level(
			grid, spec.detuning("b"), spec.rabi("b"), gammas[(2, 1)], gammas[(3, 1)]
		)
	else:
		curve = susceptibility_four_level(
			grid,
			spec.detuning("b"),
			spec.detuning("c"),
			spec.rabi("b"),
			spec.rabi("c"),
			gammas[(2, 1)],
			gammas[(3, 1)],
			gammas[(4, 1)],
		)

	optics = eta_kappa(curve)
	columns = {
		curve.axis_label: curve.axis,
		"chi": curve.chi,
		"eta": optics.eta,
		"kappa": optics.kappa,
		"group_slope": optics.group_slope,
	}
	if curve.third_order is not None:
		columns["chi3"] = curve.third_order
	return pd.DataFrame(columns)


def run_gate_metrics(scenario: Scenario) -> pd.DataFrame:
	spec = scenario.system.to_spec()
	gammas = derived_gammas(spec.decoherence, spec.scheme)
	target_phase = scenario.parameters.target_phase

	if spec.scheme == Scheme.TWO_LEVEL:
		metrics = dual_rail_metrics_two_level(
			spec.detuning("a"),
			gammas[(2, 0)],
			gammas[(1, 0)],
			spec.rabi("a"),
			spec.atom_count,
			target_phase,
		)
	else:
		metrics = dual_rail_metrics_four_level(
			spec.rabi("a"),
			spec.rabi("b"),
			spec.rabi("c"),
			spec.detuning("c"),
			gammas[(2, 0)],
			gammas[(4, 0)],
			spec.atom_count,
			target_phase,
		)

	row: Row = {
		"phase": metrics.phase,
		"phase_rate": metrics.phase_rate,
		"t_for_pi": metrics.t_for_pi,
		"fidelity": metrics.fidelity,
		"entropy": metrics.entropy,
	}
	for flag, value in sorted(metrics.regime_flags.items()):
		row[f"regime_{flag}"] = value
	row["in_regime"] = metrics.in_regime
	return _table(row)


def run_kerr_overlap(scenario: Scenario) -> pd.DataFrame:
	params = scenario.parameters
	alpha_sq = params.grid.values()
	args = (params.photons_a, params.photons_c, params.phase)

	frame = pd.DataFrame(
		{
			"alpha_sq": alpha_sq,
			"overlap": [coherent_overlap(*args, value) for value in alpha_sq],
			"gate_error": [conditional_gate_error(*args, value) for value in alpha_sq],
		}
	)
	if params.target is not None:
		frame["threshold_alpha_sq"] = overlap_threshold(*args, target=params.target)
	return frame


def run_dressed(scenario: Scenario) -> pd.DataFrame:
	spec = scenario.system.to_spec()
	states = dressed_states_three_level(spec.rabi("a"), spec.rabi("b"))

	row: Row = {
		"splitting": states.splitting,
		"energy_dark": states.energies["0"],
		"energy_minus": states.energies["-"],
		"energy_plus": states.energies["+"],
	}
	series = None
	if scenario.parameters.times is not None:
		t = scenario.parameters.times.values()
		series = {"t": t, "excited_population": states.excited_population(t)}
	return _table(row, series)


def run_milestones(scenario: Scenario) -> pd.DataFrame:
	rabi_a = abs(scenario.system.to_spec().rabi("a"))
	milestones = [phase_milestones(rabi_a, q) for q in range(1, scenario.parameters.q_max + 1)]
	return pd.DataFrame(
		{
			"q": [m.q for m in milestones],
			"detuning_a": [m.detuning_a for m in milestones],
			"time": [m.time for m in milestones],
			"phase": [m.phase for m in milestones],
		}
	)


TASK_RUNNERS: Dict[str, Callable[[Scenario], pd.DataFrame]] = {
	"evolve": run_evolve,
	"steady": run_steady,
	"spectrum": run_spectrum,
	"gate-metrics": run_gate_metrics,
	"kerr-overlap": run_kerr_overlap,
	"dressed": run_dressed,
	"milestones": run_milestones,
}


def _default_elements(spec: SystemSpec) -> List[Tuple[str, str]]:
	excited = "2" if spec.atom_count == 1 else "2_1"
	elements = [("1", "1"), (excited, "1")]
	if spec.dual_rail:
		elements.append(("1", "0"))
	return elements


def _table(row: Row, series: Optional[Dict[str, np.ndarray]] = None) -> pd.DataFrame:
	"""A single row of scalars, or the scalars repeated alongside time series."""
	if not series:
		return pd.DataFrame([row])

	frame = pd.DataFrame(series)
	for name, value in row.items():
		frame[name] = [value] * len(frame)
	return frame
