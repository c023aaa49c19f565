from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from eit_toolkit.model.types import FieldDrive, LevelPair, Scheme
from eit_toolkit.settings import get_settings
from eit_toolkit.steadystate.utils import check_pole, check_rates, ladder_coherences
from eit_toolkit.utils.errors import SingularParameters, throw

TimeLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class DualRailShift:
	"""Complex frequency shift W_10 of the coherence between the empty and occupied rail."""

	scheme: Scheme
	w10: complex
	gamma10: float
	atom_count: int = 1
	# two-level transient: rho_10 carries exp[-(1 - e^{s t}) amplitude]
	transient_amplitude: complex = 0j
	transient_exponent: complex = 0j

	@property
	def phase_rate(self) -> float:
		return self.w10.real

	@property
	def decay_rate(self) -> float:
		"""Decay rate of |rho_10|."""
		return self.gamma10 + self.w10.imag

	def rho10(self, t: TimeLike) -> TimeLike:
		t = np.asarray(t, dtype=float)
		exponent = (-self.gamma10 + 1j * self.w10) * t
		if self.transient_amplitude:
			exponent = exponent - (1 - np.exp(self.transient_exponent * t)) * self.transient_amplitude
		result = 0.5 * np.exp(exponent)
		return result if result.ndim else complex(result)


def dual_rail_w10(
	scheme: Union[Scheme, str],
	drives: Sequence[FieldDrive],
	gammas: Mapping[LevelPair, float],
	atom_count: int = 1,
) -> DualRailShift:
	"""W_10 for two-, three- or four-level atoms in one rail of a dual-rail qubit.

	N atoms enter through |Omega_a|^2 -> N |Omega_a|^2 and, for N > 1,
	gamma_10 -> N gamma'_21 / 4 where gamma'_21 is read according to the
	`dual_rail_gamma10_rate` setting.
	"""
	scheme = Scheme(scheme)
	drive = {d.label: d for d in drives}
	rabi = {label: drive[label].rabi if label in drive else 0j for label in "abc"}
	detuning = {label: drive[label].detuning if label in drive else 0.0 for label in "abc"}
	if isinstance(atom_count, bool) or int(atom_count) != atom_count or atom_count < 1:
		throw(f"atom_count must be an integer >= 1, got {atom_count}", field="atom_count")

	gamma20 = gammas[(2, 0)]
	rabi_a_sq = atom_count * abs(rabi["a"]) ** 2
	a = complex(detuning["a"], gamma20)

	transient_amplitude = transient_exponent = 0j
	if scheme == Scheme.TWO_LEVEL:
		if rabi_a_sq == 0:
			w10 = 0j
		else:
			check_pole(a, abs(detuning["a"]) + gamma20, "two-level dual-rail")
			w10 = -rabi_a_sq / a
			transient_amplitude = rabi_a_sq / a ** 2
			transient_exponent = 1j * a
	else:
		b = complex(detuning["a"] - detuning["b"], gammas[(3, 0)])
		c = None
		if scheme == Scheme.FOUR_LEVEL:
			c = complex(detuning["a"] - detuning["b"] + detuning["c"], gammas[(4, 0)])
		w10 = 0j
		if rabi_a_sq:
			# W_10 is rho~_21 per unit Omega_a, scaled by N |Omega_a|^2
			response = ladder_coherences(
				1.0, complex(rabi["b"]), complex(rabi["c"]), a, b, c, f"{scheme.value} dual-rail"
			)
			w10 = rabi_a_sq * response["21"]

	return DualRailShift(
		scheme=scheme,
		w10=complex(w10),
		gamma10=_gamma10(gammas, atom_count),
		atom_count=atom_count,
		transient_amplitude=complex(transient_amplitude),
		transient_exponent=complex(transient_exponent),
	)


def _gamma10(gammas: Mapping[LevelPair, float], atom_count: int) -> float:
	if atom_count == 1:
		return gammas[(1, 0)]
	if get_settings().dual_rail_gamma10_rate == "gamma21":
		return atom_count * gammas[(2, 1)] / 4
	return atom_count * gammas[(2, 2)] / 4


@dataclass(frozen=True)
class SimplifiedShift:
	product_form: complex
	tilde_form: complex
	nu_c_tilde: float
	gamma20_tilde: float


def w10_four_level_simplified(
	rabi_a: complex,
	rabi_b: complex,
	rabi_c: complex,
	detuning_c: float,
	gamma20: float,
	gamma40: float,
	atom_count: int = 1,
) -> SimplifiedShift:
	"""Four-level W_10 at nu_a = nu_b = 0 with dephasing neglected, in two equivalent forms.

	The tilde form has exactly the two-level shape -|Omega_a|^2 / (nu~_c + i gamma~_20)
	with nu~_c = (|Omega_b|^2 / |Omega_c|^2) nu_c and
	gamma~_20 = gamma_20 + (|Omega_b|^2 / |Omega_c|^2) gamma_40.
	"""
	check_rates(gamma20=gamma20, gamma40=gamma40)
	control_sq = abs(rabi_c) ** 2
	if control_sq == 0:
		throw("singular parameters: Omega_c = 0 leaves nu~_c undefined", exc=SingularParameters, field="rabi_c")

	rabi_a_sq = atom_count * abs(rabi_a) ** 2
	ratio = abs(rabi_b) ** 2 / control_sq
	nu_c_tilde = ratio * detuning_c
	gamma20_tilde = gamma20 + ratio * gamma40

	product_denominator = detuning_c * abs(rabi_b) ** 2 + 1j * (gamma40 * abs(rabi_b) ** 2 + gamma20 * control_sq)
	tilde_denominator = nu_c_tilde ** 2 + gamma20_tilde ** 2
	if rabi_a_sq == 0:
		return SimplifiedShift(0j, 0j, nu_c_tilde, gamma20_tilde)
	if tilde_denominator == 0:
		throw("singular parameters: nu~_c and gamma~_20 both vanish", exc=SingularParameters, field="parameters")

	return SimplifiedShift(
		product_form=-rabi_a_sq * control_sq / product_denominator,
		tilde_form=-(nu_c_tilde - 1j * gamma20_tilde) / tilde_denominator * rabi_a_sq,
		nu_c_tilde=nu_c_tilde,
		gamma20_tilde=gamma20_tilde,
	)
