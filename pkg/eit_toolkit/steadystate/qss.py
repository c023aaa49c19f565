"""Quasi-steady-state coherences of the weakly driven two-, three- and four-level manifolds.

Each coherence builds up as rho_k1(t) = rho~_k1 (1 - e^{s_k t}) rho_11(t)
while the ground population leaks away as rho_11(t) = e^{-t / tau_a}.
"""

import math
from dataclasses import dataclass, replace
from typing import Dict, Optional, Union

import numpy as np

from eit_toolkit.model.basis import derived_gammas
from eit_toolkit.model.types import Scheme, SystemSpec
from eit_toolkit.settings import get_settings
from eit_toolkit.steadystate.dual_rail import dual_rail_w10
from eit_toolkit.steadystate.utils import (
	check_rates,
	ladder_coherences,
	logger,
	warn_weak_field,
)
from eit_toolkit.utils.errors import SingularParameters, throw

TimeLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class ValidityWindow:
	"""Times where 1/gamma_k1 << t << tau_a."""

	lower: float
	upper: float
	margin: float

	@property
	def satisfiable(self) -> bool:
		if math.isinf(self.lower):
			return False
		return self.upper > self.margin * self.lower


@dataclass(frozen=True)
class QssSolution:
	scheme: Scheme
	elements: Dict[str, complex]
	tau_a: float
	validity: ValidityWindow
	exponents: Dict[str, complex]
	rabi_a: complex
	atom_count: int = 1
	gamma22: Optional[float] = None
	w10: Optional[complex] = None

	@property
	def transient_rates(self) -> Dict[str, float]:
		return {key: -exponent.real for key, exponent in self.exponents.items()}

	@property
	def ensemble_elements(self) -> Dict[str, complex]:
		return {key: self.atom_count * value for key, value in self.elements.items()}

	def rho11(self, t: TimeLike) -> TimeLike:
		if math.isinf(self.tau_a):
			return np.ones_like(t, dtype=float) if isinstance(t, np.ndarray) else 1.0
		return np.exp(-np.asarray(t) / self.tau_a) if isinstance(t, np.ndarray) else math.exp(-t / self.tau_a)

	def rho_k1(self, key: str, t: TimeLike) -> TimeLike:
		if key not in self.elements:
			throw(f"{self.scheme.value} solution has no element {key!r}", field="element")
		envelope = 1 - np.exp(self.exponents[key] * np.asarray(t))
		return self.elements[key] * envelope * self.rho11(t)

	def rho21(self, t: TimeLike) -> TimeLike:
		return self.rho_k1("21", t)

	def rho22(self, t: TimeLike) -> TimeLike:
		"""Excited population of the two-level manifold."""
		if self.gamma22 is None:
			throw("rho22(t) is only available for the two-level solution", field="element")
		if math.isinf(self.tau_a):
			return np.zeros_like(t, dtype=float) if isinstance(t, np.ndarray) else 0.0

		t = np.asarray(t, dtype=float)
		if self.gamma22 > 0:
			build_up = -np.expm1(-self.gamma22 * t) / (self.gamma22 * self.tau_a)
		else:
			build_up = t / self.tau_a
		result = build_up * np.exp(-t / self.tau_a)
		return result if result.ndim else float(result)


def qss_two_level(
	rabi_a: complex, detuning_a: float, gamma21: float, gamma22: float, atom_count: int = 1
) -> QssSolution:
	"""rho~_21 = -Omega_a / (nu_a + i gamma_21) and 1/tau_a = 2 N Im(rho~_21 Omega_a*)."""
	check_rates(gamma21=gamma21, gamma22=gamma22)
	_check_atom_count(atom_count)
	rabi_a = complex(rabi_a)
	warn_weak_field(rabi_a, gamma21)

	a = complex(detuning_a, gamma21)
	if rabi_a == 0:
		rho21 = 0j
	else:
		if abs(a) == 0:
			throw(
				"no steady state: undamped resonant drive (nu_a = 0, gamma_21 = 0) never settles",
				exc=SingularParameters,
				field="parameters",
			)
		rho21 = -rabi_a / a

	exponents = {"21": 1j * a}
	return _solution(Scheme.TWO_LEVEL, {"21": rho21}, exponents, rabi_a, atom_count, gamma22=gamma22)


def qss_three_level(
	rabi_a: complex,
	rabi_b: complex,
	detuning_a: float,
	detuning_b: float,
	gamma21: float,
	gamma31: float,
	atom_count: int = 1,
) -> QssSolution:
	"""Weak-field ladder coherences; transparency whenever nu_a = nu_b and gamma_31 = 0.

	rho~_21 = -B Omega_a / (A B - |Omega_b|^2) and rho~_31 = Omega_a Omega_b* / (A B - |Omega_b|^2)
	with A = nu_a + i gamma_21 and B = nu_a - nu_b + i gamma_31.
	"""
	check_rates(gamma21=gamma21, gamma31=gamma31)
	_check_atom_count(atom_count)
	rabi_a, rabi_b = complex(rabi_a), complex(rabi_b)
	warn_weak_field(rabi_a, gamma21)

	a = complex(detuning_a, gamma21)
	b = complex(detuning_a - detuning_b, gamma31)
	elements = ladder_coherences(rabi_a, rabi_b, 0j, a, b, None, "three-level")

	exponents = {"21": complex(-gamma21), "31": complex(-gamma31)}
	return _solution(Scheme.THREE_LEVEL, elements, exponents, rabi_a, atom_count)


def qss_four_level(
	rabi_a: complex,
	rabi_b: complex,
	rabi_c: complex,
	detuning_a: float,
	detuning_b: float,
	detuning_c: float,
	gamma21: float,
	gamma31: float,
	gamma41: float,
	atom_count: int = 1,
) -> QssSolution:
	check_rates(gamma21=gamma21, gamma31=gamma31, gamma41=gamma41)
	_check_atom_count(atom_count)
	rabi_a, rabi_b, rabi_c = complex(rabi_a), complex(rabi_b), complex(rabi_c)
	warn_weak_field(rabi_a, gamma21)

	a = complex(detuning_a, gamma21)
	b = complex(detuning_a - detuning_b, gamma31)
	c = complex(detuning_a - detuning_b + detuning_c, gamma41)
	elements = ladder_coherences(rabi_a, rabi_b, rabi_c, a, b, c, "four-level")

	exponents = {"21": complex(-gamma21), "31": complex(-gamma31), "41": complex(-gamma41)}
	return _solution(Scheme.FOUR_LEVEL, elements, exponents, rabi_a, atom_count)


def qss_for_system(spec: SystemSpec) -> QssSolution:
	"""Dispatch on the scheme, taking the pairwise rates from the decoherence spec."""
	gammas = derived_gammas(spec.decoherence, spec.scheme)
	rabi = {label: spec.rabi(label) for label in "abc"}
	detuning = {label: spec.detuning(label) for label in "abc"}

	if spec.scheme == Scheme.TWO_LEVEL:
		solution = qss_two_level(rabi["a"], detuning["a"], gammas[(2, 1)], gammas[(2, 2)], spec.atom_count)
	elif spec.scheme == Scheme.THREE_LEVEL:
		solution = qss_three_level(
			rabi["a"], rabi["b"], detuning["a"], detuning["b"], gammas[(2, 1)], gammas[(3, 1)], spec.atom_count
		)
	else:
		solution = qss_four_level(
			rabi["a"],
			rabi["b"],
			rabi["c"],
			detuning["a"],
			detuning["b"],
			detuning["c"],
			gammas[(2, 1)],
			gammas[(3, 1)],
			gammas[(4, 1)],
			spec.atom_count,
		)

	if spec.dual_rail:
		shift = dual_rail_w10(spec.scheme, spec.drives, gammas, spec.atom_count)
		solution = replace(solution, w10=shift.w10)
	return solution


@dataclass(frozen=True)
class SemiclassicalShift:
	w_a: complex
	phase_rate: float
	scattering_rate: float


def semiclassical_shift(qss: QssSolution, rabi_a: complex, n_a: int) -> SemiclassicalShift:
	"""Complex frequency shift W_a = rho~_21^{(N)} Omega_a* / n_a of mode a.

	Its imaginary part is the photon scattering rate, 2 n_a Im W_a = 1 / tau_a.
	"""
	if not n_a > 0:
		throw(f"n_a must be positive, got {n_a}", field="n_a")
	w_a = qss.ensemble_elements["21"] * complex(rabi_a).conjugate() / n_a
	return SemiclassicalShift(w_a=w_a, phase_rate=w_a.real, scattering_rate=2 * w_a.imag)


def resonant_four_level_rho21(
	rabi_a: complex, rabi_b: complex, rabi_c: complex, gamma21: float, gamma31: float, gamma41: float
) -> complex:
	"""rho~_21 with every field on resonance; nonzero even at gamma_31 = 0."""
	check_rates(gamma21=gamma21, gamma31=gamma31, gamma41=gamma41)
	control = gamma31 * gamma41 + abs(rabi_c) ** 2
	denominator = gamma21 * control + gamma41 * abs(rabi_b) ** 2
	if complex(rabi_a) == 0:
		return 0j
	# undriven rungs drop out before the common factor can vanish
	if complex(rabi_b) == 0:
		return 1j * complex(rabi_a) / gamma21
	if complex(rabi_c) == 0:
		control = gamma31
		denominator = gamma21 * gamma31 + abs(rabi_b) ** 2
	if denominator <= 0:
		throw("singular parameters: resonant four-level denominator vanishes", exc=SingularParameters)
	return 1j * control * complex(rabi_a) / denominator


def _solution(
	scheme: Scheme,
	elements: Dict[str, complex],
	exponents: Dict[str, complex],
	rabi_a: complex,
	atom_count: int,
	gamma22: Optional[float] = None,
) -> QssSolution:
	settings = get_settings()

	scattering = 2 * atom_count * (elements["21"] * rabi_a.conjugate()).imag
	tau_a = 1 / scattering if scattering > 0 else math.inf

	rates = [-exponent.real for exponent in exponents.values()]
	lower = math.inf if min(rates) <= 0 else max(1 / rate for rate in rates)
	validity = ValidityWindow(lower=lower, upper=tau_a, margin=settings.validity_margin)
	if not validity.satisfiable:
		logger.warning(
			"validity window not satisfiable: 1/gamma_k1 = %.3g, tau_a = %.3g, margin %g",
			lower,
			tau_a,
			validity.margin,
		)

	return QssSolution(
		scheme=scheme,
		elements=elements,
		tau_a=tau_a,
		validity=validity,
		exponents=exponents,
		rabi_a=rabi_a,
		atom_count=atom_count,
		gamma22=gamma22,
	)


def _check_atom_count(atom_count: int) -> None:
	if isinstance(atom_count, bool) or int(atom_count) != atom_count or atom_count < 1:
		throw(f"atom_count must be an integer >= 1, got {atom_count}", field="atom_count")
