"""Acceptance checks runnable from the command line.

Each suite returns a list of `Check`s carrying the measured value, the
reference and how they are compared; nothing is asserted here.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Literal

import numpy as np

from eit_toolkit.dynamics.closed_form import evolve_unitary_two_level, generalized_rabi
from eit_toolkit.dynamics.integrator import Trajectory, evolve_master
from eit_toolkit.model.basis import build_basis
from eit_toolkit.model.hamiltonian import build_hamiltonian
from eit_toolkit.model.lindblad import (
	apply_gamma,
	lindblad_channels,
	lindblad_superoperator,
	rule_based_gamma,
)
from eit_toolkit.model.states import dual_rail_state, ground_state
from eit_toolkit.model.types import DecoherenceSpec, Scheme, SystemSpec
from eit_toolkit.optics.diagnostics import resonant_diagnostics, transparency_fwhm
from eit_toolkit.optics.susceptibility import (
	susceptibility_four_level,
	susceptibility_three_level,
	susceptibility_two_level,
)
from eit_toolkit.qip.gates import dual_rail_metrics_two_level
from eit_toolkit.qip.kerr import coherent_overlap, overlap_threshold
from eit_toolkit.runner.constants import VERIFY_SUITES
from eit_toolkit.steadystate.dressed import dressed_states_three_level
from eit_toolkit.steadystate.dual_rail import w10_four_level_simplified
from eit_toolkit.steadystate.qss import qss_for_system, qss_three_level, qss_two_level
from eit_toolkit.utils.errors import throw

Comparison = Literal["abs", "rel", "max", "min"]


@dataclass(frozen=True)
class Check:
	"""One measured quantity against its reference.

	abs/rel compare to `expected` within `tolerance`; max and min treat
	`expected` as an upper or lower bound.
	"""

	name: str
	measured: float
	expected: float
	tolerance: float = 0.0
	comparison: Comparison = "abs"

	@property
	def passed(self) -> bool:
		if not math.isfinite(self.measured):
			return False
		if self.comparison == "max":
			return self.measured <= self.expected
		if self.comparison == "min":
			return self.measured >= self.expected
		limit = self.tolerance * abs(self.expected) if self.comparison == "rel" else self.tolerance
		return abs(self.measured - self.expected) <= limit

	def report(self) -> str:
		status = "PASS" if self.passed else "FAIL"
		if self.comparison == "max":
			reference = f"<= {self.expected:.6g}"
		elif self.comparison == "min":
			reference = f">= {self.expected:.6g}"
		else:
			reference = f"{self.expected:.6g} ({self.comparison} tol {self.tolerance:.1e})"
		return f"{status} {self.name}: measured {self.measured:.6g}, expected {reference}"


def upper_bound(name: str, measured: float, bound: float) -> Check:
	return Check(name, measured, bound, comparison="max")


def run_suite(name: str, seed: int = 0) -> List[Check]:
	if name not in SUITES:
		throw(f"suite must be one of {VERIFY_SUITES}, got {name!r}", field="suite")
	return SUITES[name](seed)


def anchor_values(seed: int = 0) -> List[Check]:
	lifetime = qss_two_level(0.3, 3.0, 1.0, 2.0).tau_a
	transparent = susceptibility_three_level(np.array([0.0]), 0.0, 0.1, 1.0, 0.0)
	diagnostics = resonant_diagnostics(0.1, 1.0, 0.01)
	at_optimum = resonant_diagnostics(diagnostics.optimal_rabi_b, 1.0, 0.01)
	ideal = resonant_diagnostics(0.1, 1.0, 0.0)
	coarse = dual_rail_metrics_two_level(30.0, 1.0, 0.0, 0.2)
	fine = dual_rail_metrics_two_level(4000.0, 1.0, 0.0, 0.2)
	simple = w10_four_level_simplified(0.02, 0.3, 0.2, 1.0, 1.0, 0.5)

	return [
		Check("two-level lifetime gamma21 tau_a", lifetime, 55.6, 0.005, "rel"),
		Check("absorption at two-photon resonance", float(transparent.imag[0]), 0.0, 1e-12),
		Check("kappa ratio at |Omega_b| = 0.1", diagnostics.kappa_ratio, 0.5, 1e-12),
		Check("optimal control rabi", diagnostics.optimal_rabi_b, 0.101, 1e-4),
		Check(
			"dispersion at optimum over ideal",
			at_optimum.dispersion_shape / ideal.dispersion_shape,
			0.25,
			0.02,
			"rel",
		),
		Check("transparency width, weak control", transparency_fwhm(0.05, 1.0), 0.005, 0.01, "rel"),
		Check("gate fidelity, nu_a / gamma_20 = 30", coarse.fidelity, 0.9503, 1e-4),
		Check("gate entropy, nu_a / gamma_20 = 30", coarse.entropy, 0.492, 1e-3),
		Check("gate fidelity, nu_a / gamma_20 = 4000", fine.fidelity, 0.99961, 1e-5),
		Check("gate entropy, nu_a / gamma_20 = 4000", fine.entropy, 0.00923, 1e-4),
		Check("coherent overlap threshold", overlap_threshold(1, 5, math.pi), 2.5e4, 0.1, "rel"),
		upper_bound("coherent overlap at alpha_sq = 1000", coherent_overlap(1, 5, math.pi, 1000.0), 0.99),
		Check("dressed splitting for 3 and 4", dressed_states_three_level(3.0, 4.0).eigenvalues[2], 5.0, 1e-12),
		upper_bound(
			"simplified four-level forms agree",
			abs(simple.product_form - simple.tilde_form) / abs(simple.tilde_form),
			1e-12,
		),
	]


def invariants(seed: int = 0) -> List[Check]:
	rng = np.random.default_rng(seed)
	checks = []

	for scheme in Scheme:
		basis = build_basis(SystemSpec.from_parameters(scheme, rabi={}, dual_rail=True))
		decoherence = _random_decoherence(rng, scheme)
		coeffs = rule_based_gamma(decoherence, basis)
		gamma = lindblad_superoperator(lindblad_channels(decoherence, basis), dimension=len(basis))
		error = 0.0
		for _ in range(100):
			rho = _random_hermitian(rng, len(basis))
			error = max(error, _max_gap(apply_gamma(coeffs, rho), gamma(rho)))
		checks.append(upper_bound(f"{scheme.value} rules against operator form", error, 1e-12))

	t_end = 20.0
	for scheme in Scheme:
		labels = scheme.drive_labels
		spec = SystemSpec.from_parameters(
			scheme,
			rabi={label: complex(*rng.uniform(-0.5, 0.5, size=2)) for label in labels},
			detuning={label: float(rng.uniform(-1.0, 1.0)) for label in labels},
			decoherence=_random_decoherence(rng, scheme),
			dual_rail=True,
		)
		trajectory = _evolve(spec, t_end, dual_rail=True)
		hermiticity = max(d.hermiticity for d in trajectory.diagnostics)
		purity = max(d.purity for d in trajectory.diagnostics)
		checks += [
			upper_bound(f"{scheme.value} trace drift per unit time", trajectory.max_trace_deviation / t_end, 1e-9),
			upper_bound(f"{scheme.value} hermiticity", hermiticity, 1e-10),
			Check(f"{scheme.value} min eigenvalue", trajectory.min_eigenvalue, -1e-8, comparison="min"),
			upper_bound(f"{scheme.value} purity", purity, 1 + 1e-9),
		]

	grid = np.linspace(-5.0, 5.0, 101)
	# nu_b on the grid with no metastable decay, where the dropped rung shares a zero factor
	four = susceptibility_four_level(grid, 0.0, 0.0, 0.7, 0.0, 1.0, 0.0, 0.0)
	three = susceptibility_three_level(grid, 0.0, 0.7, 1.0, 0.0)
	checks.append(upper_bound("four-level without control is three-level", _max_gap(four.chi, three.chi), 1e-12))

	three = susceptibility_three_level(grid, 0.0, 0.0, 1.0, 0.0)
	two = susceptibility_two_level(grid, 1.0)
	checks.append(upper_bound("three-level without control is two-level", _max_gap(three.chi, two.chi), 1e-12))

	three_qss = qss_three_level(0.02, 0.0, 0.0, 0.0, 1.0, 0.0).elements["21"]
	two_qss = qss_two_level(0.02, 0.0, 1.0, 2.0).elements["21"]
	checks.append(upper_bound("three-level quasi-steady state without control", abs(three_qss - two_qss), 1e-12))
	return checks


def oracle(seed: int = 0) -> List[Check]:
	checks = []

	rabi, detuning = 0.3 + 0.1j, 0.5
	spec = SystemSpec.from_parameters(Scheme.TWO_LEVEL, rabi={"a": rabi}, detuning={"a": detuning})
	trajectory = _evolve(spec, 20 / generalized_rabi(rabi, detuning))
	error = 0.0
	for t, state in zip(trajectory.times, trajectory.states):
		psi = evolve_unitary_two_level(rabi, detuning, t)[:, 0]
		error = max(error, _max_gap(state.data[:2, :2], np.outer(psi, psi.conj())))
	checks.append(upper_bound("undamped two-level against closed form", error, 1e-8))

	spec = SystemSpec.from_parameters(
		Scheme.TWO_LEVEL, rabi={"a": 0.3}, detuning={"a": 3.0}, decoherence=DecoherenceSpec(depop={2: 2.0})
	)
	trajectory = _evolve(spec, 200.0)
	manifold = np.real(trajectory.element("1", "1") + trajectory.element("2", "2"))
	early, late = np.searchsorted(trajectory.times, [50.0, 200.0])
	rate = -math.log(manifold[late] / manifold[early]) / (trajectory.times[late] - trajectory.times[early])
	checks.append(Check("two-level envelope lifetime", 1 / rate, qss_for_system(spec).tau_a, 0.05, "rel"))

	spec = SystemSpec.from_parameters(
		Scheme.THREE_LEVEL,
		rabi={"a": 0.02, "b": 0.3},
		decoherence=DecoherenceSpec(depop={2: 2.0}, dephase={3: 0.1}),
	)
	trajectory = _evolve(spec, 235.0)
	solution = qss_for_system(spec)
	inside = (trajectory.times > 100.0) & (trajectory.times < 235.0)
	t = trajectory.times[inside]
	ground = trajectory.element("1", "1")[inside]
	for key in ("21", "31"):
		numeric = trajectory.element(key[0], key[1])[inside] / ground
		analytic = solution.elements[key] * (1 - np.exp(solution.exponents[key] * t))
		error = float(np.max(np.abs(numeric - analytic) / np.abs(analytic)))
		checks.append(upper_bound(f"three-level quasi-steady rho_{key}", error, 0.01))
	return checks


SUITES: Dict[str, Callable[[int], List[Check]]] = {
	"invariants": invariants,
	"paper-anchors": anchor_values,
	"oracle": oracle,
}


def _evolve(spec: SystemSpec, t_end: float, dual_rail: bool = False) -> Trajectory:
	basis = build_basis(spec)
	rho0 = dual_rail_state(basis) if dual_rail else ground_state(basis)
	return evolve_master(
		build_hamiltonian(spec, basis), rule_based_gamma(spec.decoherence, basis), rho0, t_end
	)


def _random_decoherence(rng: np.random.Generator, scheme: Scheme) -> DecoherenceSpec:
	return DecoherenceSpec(
		depop={level: float(rng.uniform(0.1, 2.0)) for level in range(2, scheme.levels + 1)},
		dephase={level: float(rng.uniform(0.0, 0.2)) for level in range(1, scheme.levels + 1)},
	)


def _random_hermitian(rng: np.random.Generator, dimension: int) -> np.ndarray:
	a = rng.normal(size=(dimension, dimension)) + 1j * rng.normal(size=(dimension, dimension))
	return 0.5 * (a + a.conj().T)


def _max_gap(a: np.ndarray, b: np.ndarray) -> float:
	return float(np.max(np.abs(a - b)))
