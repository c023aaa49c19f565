"""Undamped two-level evolution in closed form, used to cross-check the integrator."""

import cmath
import math
from typing import Dict

import numpy as np


def generalized_rabi(rabi: complex, detuning: float) -> float:
	"""Omega_R = sqrt(nu^2 + 4 |Omega|^2) / 2."""
	return 0.5 * math.sqrt(detuning ** 2 + 4 * abs(rabi) ** 2)


def evolve_unitary_two_level(rabi_a: complex, detuning_a: float, t: float) -> np.ndarray:
	"""U(t) = exp(i H t) on the (ground, excited) pair for the stored H = [[0, Omega*], [Omega, nu]].

	Written as e^{i nu t / 2} [cos(Omega_R t) I + i sin(Omega_R t) / Omega_R M]
	with M = H - nu / 2 I, which stays finite as Omega_R goes to zero.
	"""
	rabi_a = complex(rabi_a)
	omega_r = generalized_rabi(rabi_a, detuning_a)
	m = np.array([[-detuning_a / 2, rabi_a.conjugate()], [rabi_a, detuning_a / 2]], dtype=complex)

	# t * sinc(Omega_R t / pi) = sin(Omega_R t) / Omega_R
	sin_over_rabi = t * np.sinc(omega_r * t / math.pi)
	return cmath.exp(0.5j * detuning_a * t) * (math.cos(omega_r * t) * np.eye(2) + 1j * sin_over_rabi * m)


def undamped_dual_rail_elements(rabi_a: complex, detuning_a: float, t: float) -> Dict[str, complex]:
	"""Nonzero elements of rho(t) for (|rail> + |ground>) / sqrt(2) without decoherence.

	The rail amplitude is frozen, so every coherence with it carries the
	ground-manifold amplitudes directly.
	"""
	u = evolve_unitary_two_level(rabi_a, detuning_a, t)
	ground, excited = u[0, 0], u[1, 0]

	return {
		"rho11": 0.5 * abs(ground) ** 2,
		"rho22": 0.5 * abs(excited) ** 2,
		"rho21": 0.5 * excited * ground.conjugate(),
		"rho10": 0.5 * ground,
		"rho20": 0.5 * excited,
	}
