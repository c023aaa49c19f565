"""Normalised linear and third-order susceptibilities of the 1-2 transition.

Every curve is the weak-field rho~_21 / Omega_a scaled by gamma_21, so the
bare two-level absorption on resonance is Im chi = 1.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from eit_toolkit.optics.constants import NORMALIZATION
from eit_toolkit.optics.utils import as_grid, check_linewidth, check_rates, mask_poles

Grid = Union[float, Sequence[float], np.ndarray]


@dataclass(frozen=True, eq=False)
class SpectralCurve:
	axis: np.ndarray
	chi: np.ndarray
	normalization: str = NORMALIZATION
	axis_label: str = "nu_a"
	# d chi / d|Omega_c|^2 at Omega_c = 0, for the four-level curves
	third_order: Optional[np.ndarray] = None

	@property
	def real(self) -> np.ndarray:
		return self.chi.real

	@property
	def imag(self) -> np.ndarray:
		return self.chi.imag

	@property
	def poles(self) -> np.ndarray:
		return np.isnan(self.chi)

	def at(self, value: float) -> complex:
		"""chi at the grid point closest to `value`."""
		return complex(self.chi[np.argmin(np.abs(self.axis - value))])


def susceptibility_two_level(nu_a: Grid, gamma21: float) -> SpectralCurve:
	"""chi(nu) = -gamma_21 (nu - i gamma_21) / (nu^2 + gamma_21^2)."""
	check_linewidth(gamma21)
	axis = as_grid(nu_a, "nu_a")
	chi = -gamma21 * (axis - 1j * gamma21) / (axis ** 2 + gamma21 ** 2)
	return SpectralCurve(axis=axis, chi=chi)


def susceptibility_three_level(
	nu_a: Grid, nu_b: float, rabi_b: complex, gamma21: float, gamma31: float
) -> SpectralCurve:
	"""chi = -gamma_21 B / (A B - |Omega_b|^2), A = nu_a + i gamma_21, B = nu_a - nu_b + i gamma_31."""
	check_linewidth(gamma21)
	check_rates(gamma31=gamma31)
	axis = as_grid(nu_a, "nu_a")
	chi = _three_level_chi(axis, nu_b, abs(rabi_b) ** 2, gamma21, gamma31)
	return SpectralCurve(axis=axis, chi=chi)


def susceptibility_four_level(
	nu_a: Grid,
	nu_b: float,
	nu_c: float,
	rabi_b: complex,
	rabi_c: complex,
	gamma21: float,
	gamma31: float,
	gamma41: float,
) -> SpectralCurve:
	"""Total susceptibility from the exact weak-field four-level rho~_21."""
	check_linewidth(gamma21)
	check_rates(gamma31=gamma31, gamma41=gamma41)
	axis = as_grid(nu_a, "nu_a")
	chi = _four_level_chi(axis, nu_b, nu_c, abs(rabi_b) ** 2, abs(rabi_c) ** 2, gamma21, gamma31, gamma41)
	third = _third_order(axis, nu_b, nu_c, abs(rabi_b) ** 2, gamma21, gamma31, gamma41)
	return SpectralCurve(axis=axis, chi=chi, third_order=third)


def kerr_susceptibility_shape(
	nu_a: Grid,
	nu_b: float,
	nu_c: float,
	rabi_b: complex,
	gamma21: float,
	gamma31: float,
	gamma41: float,
	rabi_c: complex = 0j,
) -> SpectralCurve:
	"""Four-level curve with its |Omega_c|^2 series coefficient attached.

	The third-order term is
	chi3 = -gamma_21 |Omega_b|^2 / (C (A B - |Omega_b|^2)^2), C = nu_a - nu_b + nu_c + i gamma_41,
	the exact derivative of the total curve at Omega_c = 0 in the same normalisation,
	so chi ~ chi1 + chi3 |Omega_c|^2 for weak control.
	"""
	return susceptibility_four_level(nu_a, nu_b, nu_c, rabi_b, rabi_c, gamma21, gamma31, gamma41)


def phase_switch_curve(
	nu_c: Grid,
	nu_b: float,
	rabi_b: complex,
	rabi_c: complex,
	gamma21: float,
	gamma31: float,
	gamma41: float,
) -> SpectralCurve:
	"""Susceptibility of drive a on resonance (nu_a = 0) as the signal detuning nu_c is swept.

	Near nu_c = 0 the signal photon switches on absorption; far from it drive a
	is transparent again but keeps a refractive shift.
	"""
	check_linewidth(gamma21)
	check_rates(gamma31=gamma31, gamma41=gamma41)
	axis = as_grid(nu_c, "nu_c")
	nu_a = np.zeros_like(axis)
	chi = _four_level_chi(nu_a, nu_b, axis, abs(rabi_b) ** 2, abs(rabi_c) ** 2, gamma21, gamma31, gamma41)
	third = _third_order(nu_a, nu_b, axis, abs(rabi_b) ** 2, gamma21, gamma31, gamma41)
	return SpectralCurve(axis=axis, chi=chi, axis_label="nu_c", third_order=third)


def _two_level_chi(nu_a, gamma21) -> np.ndarray:
	return -gamma21 / (nu_a + 1j * gamma21)


def _three_level_chi(nu_a, nu_b, rabi_b_sq, gamma21, gamma31) -> np.ndarray:
	if rabi_b_sq == 0:
		# the common factor B cancels; no pole even where B = 0
		return _two_level_chi(nu_a, gamma21)
	a = nu_a + 1j * gamma21
	b = nu_a - nu_b + 1j * gamma31
	denominator = a * b - rabi_b_sq
	scale = np.abs(a) * np.abs(b) + rabi_b_sq
	return mask_poles(-gamma21 * b, denominator, scale, "three-level susceptibility")


def _four_level_chi(nu_a, nu_b, nu_c, rabi_b_sq, rabi_c_sq, gamma21, gamma31, gamma41) -> np.ndarray:
	if rabi_b_sq == 0:
		return _two_level_chi(nu_a, gamma21) * np.ones_like(nu_c)
	if rabi_c_sq == 0:
		return _three_level_chi(nu_a, nu_b, rabi_b_sq, gamma21, gamma31) * np.ones_like(nu_c)
	a = nu_a + 1j * gamma21
	b = nu_a - nu_b + 1j * gamma31
	c = nu_a - nu_b + nu_c + 1j * gamma41
	inner = b * c - rabi_c_sq
	denominator = a * inner - c * rabi_b_sq
	scale = np.abs(a) * (np.abs(b) * np.abs(c) + rabi_c_sq) + np.abs(c) * rabi_b_sq
	return mask_poles(-gamma21 * inner, denominator, scale, "four-level susceptibility")


def _third_order(nu_a, nu_b, nu_c, rabi_b_sq, gamma21, gamma31, gamma41) -> np.ndarray:
	if rabi_b_sq == 0:
		return np.zeros(np.broadcast(nu_a, nu_c).shape, dtype=complex)
	a = nu_a + 1j * gamma21
	b = nu_a - nu_b + 1j * gamma31
	c = nu_a - nu_b + nu_c + 1j * gamma41
	three = a * b - rabi_b_sq
	scale = np.abs(c) * (np.abs(a) * np.abs(b) + rabi_b_sq) ** 2
	numerator = -gamma21 * rabi_b_sq * np.ones_like(c)
	return mask_poles(numerator, c * three ** 2, scale, "third-order susceptibility")
