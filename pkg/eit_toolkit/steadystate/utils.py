import logging
import math
from typing import Dict, Optional

from eit_toolkit.settings import get_settings
from eit_toolkit.simulation_log import create_log
from eit_toolkit.steadystate.constants import MODULE_NAME
from eit_toolkit.utils.errors import SingularParameters, throw

logger = logging.getLogger(__name__)


def create_steadystate_log(**kwargs):
	return create_log(module_def=MODULE_NAME, **kwargs)


def check_rates(**rates) -> None:
	for name, rate in rates.items():
		if not (math.isfinite(rate) and rate >= 0):
			throw(f"{name} must be finite and non-negative, got {rate}", field=name)


def check_pole(denominator: complex, scale: float, what: str) -> None:
	"""Raise SingularParameters when |denominator| vanishes relative to the size of its terms."""
	if abs(denominator) <= get_settings().singular_threshold * scale:
		throw(
			f"singular parameters: {what} denominator vanishes ({abs(denominator):.3e})",
			exc=SingularParameters,
			field="parameters",
		)


def warn_weak_field(rabi_a: complex, gamma21: float) -> None:
	ratio = abs(rabi_a) / gamma21 if gamma21 > 0 else math.inf
	if abs(rabi_a) > 0 and ratio > get_settings().weak_field_ratio:
		logger.warning(
			"|Omega_a| / gamma_21 = %.3g is outside the weak-field limit, quasi-steady state is approximate",
			ratio,
		)


def ladder_coherences(
	rabi_a: complex,
	rabi_b: complex,
	rabi_c: complex,
	a: complex,
	b: Optional[complex],
	c: Optional[complex],
	what: str,
) -> Dict[str, complex]:
	"""Weak-field coherences rho~_k1 of a ladder with up to three rungs.

	`b` and `c` are None beyond the scheme. A rung without drive is cut off before
	the pole check, so the factor it shares with the denominator cancels exactly:
	a three-level atom with Omega_b = 0 gives the two-level result even at
	nu_a = nu_b, gamma_31 = 0.
	"""
	keys = ["21"] + (["31"] if b is not None else []) + (["41"] if c is not None else [])
	elements = dict.fromkeys(keys, 0j)
	if rabi_a == 0:
		return elements

	if b is None or rabi_b == 0:
		check_pole(a, abs(a.real) + abs(a.imag), what)
		elements["21"] = -rabi_a / a
		return elements

	if c is None or rabi_c == 0:
		denominator = a * b - abs(rabi_b) ** 2
		check_pole(denominator, abs(a) * abs(b) + abs(rabi_b) ** 2, what)
		elements["21"] = -b * rabi_a / denominator
		elements["31"] = rabi_a * rabi_b.conjugate() / denominator
		return elements

	inner = b * c - abs(rabi_c) ** 2
	denominator = a * inner - c * abs(rabi_b) ** 2
	scale = abs(a) * (abs(b) * abs(c) + abs(rabi_c) ** 2) + abs(c) * abs(rabi_b) ** 2
	check_pole(denominator, scale, what)
	elements["21"] = -inner * rabi_a / denominator
	elements["31"] = c * rabi_a * rabi_b.conjugate() / denominator
	elements["41"] = -rabi_a * rabi_b.conjugate() * rabi_c / denominator
	return elements
