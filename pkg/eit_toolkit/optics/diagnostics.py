import math
from dataclasses import dataclass

import numpy as np

from eit_toolkit.optics.constants import RICHARDSON_RTOL
from eit_toolkit.optics.susceptibility import SpectralCurve
from eit_toolkit.optics.utils import check_rates, logger
from eit_toolkit.utils.errors import SingularParameters, throw


def transparency_fwhm(rabi_b: complex, gamma21: float) -> float:
	"""Width of the transparency window, sqrt(4 |Omega_b|^2 + gamma_21^2) - gamma_21.

	Evaluated as 4 |Omega_b|^2 / (sqrt(4 |Omega_b|^2 + gamma_21^2) + gamma_21), which keeps
	the weak-control limit 2 |Omega_b|^2 / gamma_21 free of cancellation.
	"""
	check_rates(gamma21=gamma21)
	rabi_b_sq = abs(rabi_b) ** 2
	if rabi_b_sq == 0:
		return 0.0
	return 4 * rabi_b_sq / (math.sqrt(4 * rabi_b_sq + gamma21 ** 2) + gamma21)


@dataclass(frozen=True)
class ResonantDiagnostics:
	kappa_ratio: float
	dispersion_shape: float
	optimal_rabi_b: float

	@property
	def positive_dispersion(self) -> bool:
		return self.dispersion_shape > 0


def resonant_diagnostics(rabi_b: complex, gamma21: float, gamma31: float) -> ResonantDiagnostics:
	"""Absorption and dispersion of drive a in the three-level scheme at nu_a = nu_b = 0.

	kappa_ratio = gamma_21 gamma_31 / (|Omega_b|^2 + gamma_21 gamma_31) relative to the
	two-level atom, and d eta / d nu_a is proportional to
	gamma_21 (|Omega_b|^2 - gamma_31^2) / (|Omega_b|^2 + gamma_21 gamma_31)^2.
	The control strength sqrt(gamma_21 gamma_31 + 2 gamma_31^2) maximises the latter.
	"""
	check_rates(gamma21=gamma21, gamma31=gamma31)
	rabi_b_sq = abs(rabi_b) ** 2
	optimal = math.sqrt(gamma21 * gamma31 + 2 * gamma31 ** 2)

	denominator = rabi_b_sq + gamma21 * gamma31
	if denominator == 0:
		if gamma21 == 0:
			throw(
				"singular parameters: no linewidth and no control field",
				exc=SingularParameters,
				field="gamma21",
			)
		# bare two-level atom
		return ResonantDiagnostics(kappa_ratio=1.0, dispersion_shape=-1 / gamma21, optimal_rabi_b=optimal)

	return ResonantDiagnostics(
		kappa_ratio=gamma21 * gamma31 / denominator,
		dispersion_shape=gamma21 * (rabi_b_sq - gamma31 ** 2) / denominator ** 2,
		optimal_rabi_b=optimal,
	)


@dataclass(frozen=True, eq=False)
class EtaKappa:
	axis: np.ndarray
	eta: np.ndarray
	kappa: np.ndarray
	group_slope: np.ndarray
	# largest gap between the h and 2h central differences, relative to max |d eta / d nu|
	derivative_error: float

	def slope_at(self, value: float) -> float:
		return float(self.group_slope[np.argmin(np.abs(self.axis - value))])


def eta_kappa(curve: SpectralCurve) -> EtaKappa:
	"""Refractive index and absorption in reduced units (omega_a / c = 1).

	eta^2 = 1 + Re chi and kappa = Im chi / eta; d eta / d nu uses central differences.
	"""
	real = curve.chi.real
	if np.any(real[~np.isnan(real)] <= -1):
		throw(
			"unphysical susceptibility magnitude: Re chi <= -1, the normalisation is too large",
			field="chi",
		)

	with np.errstate(invalid="ignore"):
		eta = np.sqrt(1 + real)
		kappa = curve.chi.imag / eta

	if curve.axis.size < 3:
		slope = np.full_like(eta, np.nan)
		error = math.nan
	else:
		slope = np.gradient(eta, curve.axis)
		error = _richardson_gap(eta, curve.axis, slope)
		if error > RICHARDSON_RTOL:
			logger.warning("d eta / d nu changes by %.1f%% on halving the grid; refine the axis", 100 * error)

	return EtaKappa(axis=curve.axis, eta=eta, kappa=kappa, group_slope=slope, derivative_error=error)


def _richardson_gap(eta: np.ndarray, axis: np.ndarray, slope: np.ndarray) -> float:
	if axis.size < 5:
		return math.nan
	coarse = np.gradient(eta[::2], axis[::2])
	fine = slope[::2]
	interior = slice(1, -1)
	gap = np.abs(fine[interior] - coarse[interior])
	size = np.nanmax(np.abs(slope))
	if not size > 0 or not np.any(np.isfinite(gap)):
		return 0.0
	return float(np.nanmax(gap) / size)
