"""Cross-Kerr phase of the four-level atom and its coherent-state breakdown.

With a Fock state in every mode the ground state picks up e^{-i W t}. When
mode b is coherent, every photon number n_b carries its own phase and the
result is only a Kerr phase once |alpha_b|^2 is large.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional, Union

import numpy as np
import scipy.optimize
from scipy.stats import poisson

from eit_toolkit.qip.constants import NON_DEMOLITION_REGIME, THRESHOLD_SCAN_POINTS
from eit_toolkit.qip.utils import create_qip_log, logger, much_greater
from eit_toolkit.settings import get_settings
from eit_toolkit.utils.errors import NumericalError, SingularParameters, throw

Amplitudes = Union[complex, np.ndarray]


@dataclass(frozen=True)
class KerrResult:
	w: complex
	w_tilde_fock: float
	w_tilde_coherent: float
	scatter_rate: float
	regime_flags: Dict[str, bool]

	@property
	def non_demolition(self) -> bool:
		return self.regime_flags[NON_DEMOLITION_REGIME]


def kerr_w(
	atom_count: int,
	rabi_a: complex,
	rabi_b: complex,
	rabi_c: complex,
	detuning_c: float,
	gamma21: float,
	gamma41: float,
	photons_a: int = 1,
	photons_b: int = 1,
	photons_c: int = 1,
	alpha_sq: Optional[float] = None,
) -> KerrResult:
	"""W = N |Omega_a|^2 |Omega_c|^2 / (nu_c |Omega_b|^2 + i (gamma_41 |Omega_b|^2 + gamma_21 |Omega_c|^2)).

	Rabi frequencies are those of the photon numbers given; the Kerr
	coefficients use the vacuum values Omega_k / sqrt(n_k), with n_b replaced by
	alpha_sq for a coherent mode b.
	"""
	for name, rate in (("gamma21", gamma21), ("gamma41", gamma41)):
		if not (math.isfinite(rate) and rate >= 0):
			throw(f"{name} must be finite and non-negative, got {rate}", field=name)
	for name, count in (("photons_a", photons_a), ("photons_b", photons_b), ("photons_c", photons_c)):
		if not count > 0:
			throw(f"{name} must be positive, got {count}", field=name)

	a_sq, b_sq, c_sq = abs(rabi_a) ** 2, abs(rabi_b) ** 2, abs(rabi_c) ** 2
	if b_sq == 0:
		throw(
			"singular parameters: Omega_b = 0 leaves no transparency window",
			exc=SingularParameters,
			field="rabi_b",
		)
	if detuning_c == 0:
		throw(
			"no dispersive phase: the Kerr coefficient needs nu_c != 0",
			exc=SingularParameters,
			field="detuning_c",
		)
	if alpha_sq is not None and not alpha_sq > 0:
		throw(f"alpha_sq must be positive, got {alpha_sq}", field="alpha_sq")

	w = atom_count * a_sq * c_sq / complex(detuning_c * b_sq, gamma41 * b_sq + gamma21 * c_sq)

	vacuum_a, vacuum_b, vacuum_c = a_sq / photons_a, b_sq / photons_b, c_sq / photons_c
	w_tilde_fock = atom_count * vacuum_a * vacuum_c / (detuning_c * vacuum_b * photons_b)
	mean_b = photons_b if alpha_sq is None else alpha_sq
	w_tilde_coherent = atom_count * vacuum_a * vacuum_c / (detuning_c * vacuum_b * mean_b)

	nondem = much_greater(b_sq * abs(detuning_c), b_sq * gamma41 + c_sq * gamma21)
	return KerrResult(
		w=w,
		w_tilde_fock=w_tilde_fock,
		w_tilde_coherent=w_tilde_coherent,
		scatter_rate=-2 * w.imag,
		regime_flags={NON_DEMOLITION_REGIME: nondem},
	)


def kerr_fock_evolution(amplitudes: Amplitudes, w: complex, t: float) -> Amplitudes:
	"""Multiply the ground-manifold amplitudes by e^{-i W t}; Im W < 0 shrinks the norm."""
	factor = np.exp(-1j * complex(w) * t)
	if isinstance(amplitudes, np.ndarray):
		return amplitudes * factor
	return complex(amplitudes) * complex(factor)


def coherent_overlap(photons_a: int, photons_c: int, phase: float, alpha_sq: float) -> float:
	"""|<psi(t)|psi(0)>|^2 when mode b is the coherent state |alpha_b> and phi = W~ t."""
	return abs(_phase_sum(photons_a, photons_c, phase, alpha_sq)) ** 2


def conditional_gate_error(photons_a: int, photons_c: int, phase: float, alpha_sq: float) -> float:
	"""1 - F^2 between the ideal e^{-i n_a n_c phi} |psi(0)> and the coherent-state result."""
	ideal = np.exp(-1j * photons_a * photons_c * phase)
	# F = |<ideal|actual>| = sqrt(<ideal| rho |ideal>) for the pure actual state
	fidelity = abs(np.conj(ideal) * _phase_sum(photons_a, photons_c, phase, alpha_sq))
	return float(1 - fidelity ** 2)


def overlap_threshold(photons_a: int, photons_c: int, phase: float, target: float = 0.99) -> float:
	"""Smallest alpha_sq in the configured bracket where coherent_overlap reaches `target`.

	A log-spaced scan finds the first crossing and brentq refines it in log alpha_sq.
	"""
	if not 0 < target < 1:
		throw(f"target must lie in (0, 1), got {target}", field="target")
	low, high = get_settings().overlap_bracket

	def excess(log_alpha_sq: float) -> float:
		return coherent_overlap(photons_a, photons_c, phase, math.exp(log_alpha_sq)) - target

	grid = np.linspace(math.log(low), math.log(high), THRESHOLD_SCAN_POINTS)
	values = [excess(point) for point in grid]
	if values[0] >= 0:
		return low

	for i in range(1, len(grid)):
		if values[i] >= 0:
			root = scipy.optimize.brentq(excess, grid[i - 1], grid[i], xtol=1e-10)
			threshold = math.exp(root)
			create_qip_log(
				status="Success",
				method="overlap_threshold",
				request_data={"photons_a": photons_a, "photons_c": photons_c, "phase": phase, "target": target},
				response_data={"alpha_sq": threshold},
			)
			return threshold

	raise NumericalError(
		f"coherent overlap stays below {target} for alpha_sq in [{low:g}, {high:g}]", field="overlap_bracket"
	)


def _phase_sum(photons_a: int, photons_c: int, phase: float, alpha_sq: float) -> complex:
	"""sum_n P(n; alpha_sq) e^{-i n_a n_c phi alpha_sq / n} over the Poisson window.

	The n = 0 term uses n + 1 in the denominator. The window is
	mean +/- w sqrt(mean) with w^2 extra photons on top, so the dropped tails
	stay below 1e-12 for the default w = 10.
	"""
	if not (math.isfinite(alpha_sq) and alpha_sq >= 0):
		throw(f"alpha_sq must be finite and non-negative, got {alpha_sq}", field="alpha_sq")
	if alpha_sq == 0 or phase == 0:
		return 1 + 0j

	width = get_settings().poisson_window
	spread = width * math.sqrt(alpha_sq)
	lower = max(0, math.floor(alpha_sq - spread))
	upper = math.ceil(alpha_sq + spread + width ** 2)

	n = np.arange(lower, upper + 1)
	weights = np.exp(poisson.logpmf(n, alpha_sq))
	exponent = photons_a * photons_c * phase * alpha_sq / np.maximum(n, 1)
	total = complex(np.sum(weights * np.exp(-1j * exponent)))

	logger.debug("Poisson window [%d, %d] holds weight %.15f", lower, upper, weights.sum())
	return total
