"""Phase accumulation, fidelity and entropy of dual-rail photonic qubits.

The photon in mode a either crosses the atoms or takes the empty rail, so the
relative phase of the two rails is the argument of rho_10. Fidelity and
entropy are those of the rail qubit once the target phase is reached.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Sequence

import numpy as np

from eit_toolkit.qip.constants import (
	CONTROL_LIMITED_REGIME,
	DECOHERENCE_REGIME,
	LOG2_E,
	SUPPRESSED_EMISSION_REGIME,
)
from eit_toolkit.qip.metrics import NORM_TOLERANCE, entropy
from eit_toolkit.qip.utils import logger, much_greater
from eit_toolkit.steadystate.dual_rail import w10_four_level_simplified
from eit_toolkit.utils.errors import SingularParameters, throw


@dataclass(frozen=True)
class GateMetrics:
	phase: float
	phase_rate: float
	t_for_pi: float
	fidelity: float
	entropy: float
	regime_flags: Dict[str, bool] = field(default_factory=dict)

	@property
	def in_regime(self) -> bool:
		return all(self.regime_flags.values())


def dual_rail_metrics_two_level(
	detuning_a: float,
	gamma20: float,
	gamma10: float,
	rabi_a: complex,
	atom_count: int = 1,
	target_phase: float = -math.pi,
) -> GateMetrics:
	"""Linear phase shifter built from N two-level atoms.

	The phase grows as -N |Omega_a|^2 t / nu_a, so the target is reached at
	t = |phase| nu_a / (N |Omega_a|^2). With x = gamma_20 |phase| / nu_a the rail
	qubit ends with F = (1 + e^-x) / 2 and S = x (1 - ln x) log2(e). A nonzero
	gamma_10 dephases the rails further during t.
	"""
	_check_rates(gamma20=gamma20, gamma10=gamma10)
	rabi_sq = atom_count * abs(rabi_a) ** 2
	if target_phase and (detuning_a == 0 or rabi_sq == 0):
		throw(
			"no dispersive phase: the target phase needs nu_a != 0 and Omega_a != 0",
			exc=SingularParameters,
			field="detuning_a",
		)

	phase_rate = -rabi_sq / detuning_a if detuning_a else 0.0
	t_target = abs(target_phase) * abs(detuning_a) / rabi_sq if target_phase else 0.0
	x = gamma20 * abs(target_phase) / abs(detuning_a) if target_phase else 0.0

	# F^2 = <psi| rho |psi> with rho_00 = 1/2, rho_11 = e^-2x / 2 and |rho_10| = e^-(x + gamma_10 t) / 2
	overlap = 0.25 * (1 + math.exp(-2 * x)) + 0.5 * math.exp(-x - gamma10 * t_target)
	regime = _decoherence_regime(detuning_a, gamma20, gamma10, rabi_a, atom_count)

	return GateMetrics(
		phase=target_phase,
		phase_rate=phase_rate,
		t_for_pi=t_target,
		fidelity=math.sqrt(overlap),
		entropy=_mixing_entropy(x),
		regime_flags={DECOHERENCE_REGIME: regime},
	)


@dataclass(frozen=True)
class PhaseMilestone:
	q: int
	detuning_a: float
	time: float
	phase: float = -math.pi


def phase_milestones(rabi_a: float, q: int) -> PhaseMilestone:
	"""Undamped detuning and time at which rho_10 first reaches a phase of -pi on cycle q."""
	if isinstance(q, bool) or int(q) != q or q < 1:
		throw(f"q must be a positive integer, got {q}", field="q")
	if isinstance(rabi_a, complex) or not rabi_a > 0:
		throw(f"rabi_a must be a positive real number, got {rabi_a}", field="rabi_a")

	root = math.sqrt(2 * q - 1)
	return PhaseMilestone(q=int(q), detuning_a=2 * (q - 1) * rabi_a / root, time=root * math.pi / rabi_a)


def dual_rail_metrics_four_level(
	rabi_a: complex,
	rabi_b: complex,
	rabi_c: complex,
	detuning_c: float,
	gamma20: float,
	gamma40: float,
	atom_count: int = 1,
	target_phase: float = -math.pi,
) -> GateMetrics:
	"""Nonlinear phase shifter with nu_a = nu_b = 0, in the two-level form nu~_c, gamma~_20."""
	_check_rates(gamma20=gamma20, gamma40=gamma40)
	shift = w10_four_level_simplified(rabi_a, rabi_b, rabi_c, detuning_c, gamma20, gamma40, atom_count)
	rabi_sq = atom_count * abs(rabi_a) ** 2
	if shift.nu_c_tilde == 0 or rabi_sq == 0:
		throw(
			"no dispersive phase: nu~_c = 0 or Omega_a = 0",
			exc=SingularParameters,
			field="detuning_c",
		)

	ratio = shift.gamma20_tilde / abs(shift.nu_c_tilde)
	x = ratio * abs(target_phase)
	if ratio > 0.1:
		logger.warning("gamma~_20 / nu~_c = %.3g; the small-ratio fidelity estimate is unreliable", ratio)

	b_sq, c_sq = abs(rabi_b) ** 2, abs(rabi_c) ** 2
	nu_c = abs(detuning_c)
	flags = {
		CONTROL_LIMITED_REGIME: much_greater(b_sq * nu_c, b_sq * gamma40)
		and much_greater(b_sq * gamma40, c_sq * gamma20),
		SUPPRESSED_EMISSION_REGIME: much_greater(b_sq * nu_c, c_sq * gamma20)
		and much_greater(c_sq * gamma20, b_sq * gamma40),
	}

	return GateMetrics(
		phase=target_phase,
		phase_rate=shift.product_form.real,
		t_for_pi=abs(target_phase) * abs(shift.nu_c_tilde) / rabi_sq,
		fidelity=max(0.0, 1 - x / 2),
		entropy=_mixing_entropy(x),
		regime_flags=flags,
	)


@dataclass(frozen=True)
class ConditionalPhaseResult:
	amplitudes: np.ndarray
	concurrence: float
	entanglement_entropy: float


def conditional_phase_gate(amplitudes: Sequence[complex], phase: float) -> ConditionalPhaseResult:
	"""Apply |11> -> e^{i phase} |11> to c_00 |00> + c_01 |01> + c_10 |10> + c_11 |11>."""
	state = np.asarray(amplitudes, dtype=complex).reshape(-1)
	if state.shape != (4,):
		throw(f"expected four amplitudes, got {state.shape[0]}", field="amplitudes")
	norm = np.linalg.norm(state)
	if abs(norm - 1) > NORM_TOLERANCE:
		throw(f"amplitudes are not normalised (norm {norm:.12g})", field="amplitudes")

	out = state.copy()
	out[3] *= np.exp(1j * phase)
	c = out.reshape(2, 2)
	reduced = c @ c.conj().T

	return ConditionalPhaseResult(
		amplitudes=out,
		concurrence=float(2 * abs(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0])),
		entanglement_entropy=entropy(reduced),
	)


def _mixing_entropy(x: float) -> float:
	if x <= 0:
		return 0.0
	# small-x form; it turns negative past x = e where it no longer applies
	return max(0.0, x * (1 - math.log(x)) * LOG2_E)


def _decoherence_regime(
	detuning_a: float, gamma20: float, gamma10: float, rabi_a: complex, atom_count: int
) -> bool:
	# |Omega_a| << gamma_20 << nu_a < sqrt(N gamma_20 / gamma_10) |Omega_a|
	nu = abs(detuning_a)
	upper = math.inf if gamma10 == 0 else math.sqrt(atom_count * gamma20 / gamma10) * abs(rabi_a)
	return much_greater(gamma20, abs(rabi_a)) and much_greater(nu, gamma20) and nu < upper


def _check_rates(**rates) -> None:
	for name, rate in rates.items():
		if not (math.isfinite(rate) and rate >= 0):
			throw(f"{name} must be finite and non-negative, got {rate}", field=name)
