import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
import scipy.linalg

from eit_toolkit.dynamics.constants import MAX_HALVINGS, METHODS
from eit_toolkit.dynamics.utils import create_dynamics_log
from eit_toolkit.model.hamiltonian import Hamiltonian
from eit_toolkit.model.lindblad import GammaCoefficients
from eit_toolkit.model.types import DensityMatrix
from eit_toolkit.settings import get_settings
from eit_toolkit.utils.errors import IntegrationDiverged, NumericalError, throw
from eit_toolkit.utils.linalg import hermiticity_error

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegratorOptions:
	step: Optional[float] = None
	snapshot_stride: Optional[int] = None
	adaptive: bool = False
	tolerance: Optional[float] = None
	method: str = "auto"

	def __post_init__(self):
		if self.step is not None and not (math.isfinite(self.step) and self.step > 0):
			throw(f"step must be positive, got {self.step}", field="options.step")
		if self.snapshot_stride is not None and self.snapshot_stride < 1:
			throw("snapshot_stride must be at least 1", field="options.snapshot_stride")
		if self.tolerance is not None and not self.tolerance > 0:
			throw("tolerance must be positive", field="options.tolerance")
		if self.method not in METHODS:
			throw(f"method must be one of {METHODS}, got {self.method!r}", field="options.method")


@dataclass(frozen=True)
class Diagnostics:
	trace_deviation: float
	min_eigenvalue: float
	purity: float
	hermiticity: float


@dataclass(frozen=True, eq=False)
class Trajectory:
	times: np.ndarray
	states: Tuple[DensityMatrix, ...]
	diagnostics: Tuple[Diagnostics, ...]
	step: float
	stride: int

	@property
	def final(self) -> DensityMatrix:
		return self.states[-1]

	def element(self, row: str, col: str) -> np.ndarray:
		"""Time series of rho[row, col] by label symbol."""
		i = self.states[0].index(row)
		j = self.states[0].index(col)
		return np.array([state.data[i, j] for state in self.states])

	@property
	def max_trace_deviation(self) -> float:
		return max(d.trace_deviation for d in self.diagnostics)

	@property
	def min_eigenvalue(self) -> float:
		return min(d.min_eigenvalue for d in self.diagnostics)


def liouvillian(hamiltonian: Hamiltonian, gamma: GammaCoefficients) -> np.ndarray:
	"""Generator of d vec(rho)/dt = i[H, rho] - Gamma(rho) on row-major vec(rho)."""
	_check_dimensions(hamiltonian, gamma)
	d = hamiltonian.dimension
	h = np.asarray(hamiltonian.data)
	identity = np.eye(d)

	coherent = 1j * (np.kron(h, identity) - np.kron(identity, h.T))

	# Gamma is linear; build it column by column from unit matrices
	dissipator = np.zeros((d * d, d * d), dtype=complex)
	unit = np.zeros((d, d), dtype=complex)
	for k in range(d * d):
		unit.flat[k] = 1.0
		dissipator[:, k] = gamma.apply(unit).reshape(-1)
		unit.flat[k] = 0.0

	return coherent - dissipator


def evolve_master(
	hamiltonian: Hamiltonian,
	gamma: GammaCoefficients,
	rho0: DensityMatrix,
	t_end: float,
	options: Optional[IntegratorOptions] = None,
) -> Trajectory:
	"""Fixed-step RK4 integration of d rho/dt = i[H, rho] - Gamma(rho).

	Small bases advance with the exact one-step RK4 propagator raised to
	the snapshot stride; larger ones step matrix-free. The trace is never
	renormalised, its drift is reported in the diagnostics.
	"""
	options = options or IntegratorOptions()
	settings = get_settings()

	_check_dimensions(hamiltonian, gamma)
	if rho0.dimension != hamiltonian.dimension:
		throw(
			f"dimension mismatch: rho0 has {rho0.dimension} labels, hamiltonian {hamiltonian.dimension}",
			field="rho0",
		)
	rho0.validate()
	if not (math.isfinite(t_end) and t_end > 0):
		throw(f"t_end must be positive and finite, got {t_end}", field="t_end")

	step = options.step or settings.step_factor / max(hamiltonian.max_abs, gamma.max_rate, 1.0)
	n_steps = max(1, math.ceil(t_end / step - 1e-9))
	tolerance = options.tolerance or settings.adaptive_tolerance

	method = options.method
	if method == "auto":
		method = "propagator" if hamiltonian.dimension <= settings.propagator_max_dimension else "stepwise"

	if method == "propagator":
		generator = liouvillian(hamiltonian, gamma)
		if options.adaptive:
			n_steps = _refine_propagator(generator, t_end, n_steps, tolerance)
		advance = _propagator_advance(generator, t_end / n_steps)
	else:
		advance = _stepwise_advance(hamiltonian, gamma, t_end / n_steps, options.adaptive, tolerance)

	stride = _snapshot_stride(n_steps, options.snapshot_stride or settings.snapshot_stride)

	create_dynamics_log(
		status="Queued",
		method="evolve_master",
		message=f"{method} integration: {n_steps} steps of {t_end / n_steps:.3e} to t = {t_end:g}",
	)

	times, datas = _run(advance, np.array(rho0.data), t_end, n_steps, stride)
	states = tuple(rho0.with_data(data) for data in datas)
	diagnostics = tuple(diagnose(data) for data in datas)

	return Trajectory(
		times=np.array(times),
		states=states,
		diagnostics=diagnostics,
		step=t_end / n_steps,
		stride=stride,
	)


def diagnose(data: np.ndarray) -> Diagnostics:
	hermitian = 0.5 * (data + data.conj().T)
	return Diagnostics(
		trace_deviation=float(abs(np.trace(data) - 1.0)),
		min_eigenvalue=float(scipy.linalg.eigvalsh(hermitian)[0]),
		purity=float(np.real(np.trace(data @ data))),
		hermiticity=hermiticity_error(data),
	)


def _check_dimensions(hamiltonian: Hamiltonian, gamma: GammaCoefficients) -> None:
	if hamiltonian.dimension != gamma.dimension:
		throw(
			f"dimension mismatch: hamiltonian has {hamiltonian.dimension} labels, gamma {gamma.dimension}",
			field="gamma",
		)


def _snapshot_stride(n_steps: int, stride: int) -> int:
	limit = get_settings().max_snapshots
	if n_steps // stride > limit:
		coarse = math.ceil(n_steps / limit)
		logger.info("%d steps at stride %d exceed %d snapshots, using stride %d", n_steps, stride, limit, coarse)
		return coarse
	return stride


def _run(
	advance: Callable[[np.ndarray, int], np.ndarray], rho: np.ndarray, t_end: float, n_steps: int, stride: int
) -> Tuple[List[float], List[np.ndarray]]:
	h = t_end / n_steps
	times = [0.0]
	datas = [rho]

	done = 0
	while done < n_steps:
		count = min(stride, n_steps - done)
		rho = advance(rho, count)
		done += count

		if not np.all(np.isfinite(rho)):
			error = IntegrationDiverged(f"integration diverged before t = {done * h:g}", field="t_end")
			create_dynamics_log(status="Error", method="evolve_master", exception=error)
			raise error

		times.append(t_end if done == n_steps else done * h)
		datas.append(rho)

	return times, datas


def _taylor_propagator(generator: np.ndarray, h: float) -> np.ndarray:
	"""One RK4 step of a linear ODE: I + A + A^2/2 + A^3/6 + A^4/24 with A = hL."""
	a = h * generator
	result = np.eye(a.shape[0], dtype=complex)
	term = result
	for k in range(1, 5):
		term = term @ a / k
		result = result + term
	return result


def _refine_propagator(generator: np.ndarray, t_end: float, n_steps: int, tolerance: float) -> int:
	for _ in range(MAX_HALVINGS):
		h = t_end / n_steps
		full = _taylor_propagator(generator, h)
		half = _taylor_propagator(generator, h / 2)
		if np.max(np.abs(full - half @ half)) <= tolerance:
			return n_steps
		n_steps *= 2
		logger.info("step halved to %.3e", t_end / n_steps)

	raise NumericalError(f"step halving did not reach tolerance {tolerance:g}", field="options.tolerance")


def _propagator_advance(generator: np.ndarray, h: float) -> Callable[[np.ndarray, int], np.ndarray]:
	one_step = _taylor_propagator(generator, h)
	powers = {}

	def advance(rho: np.ndarray, count: int) -> np.ndarray:
		if count not in powers:
			powers[count] = np.linalg.matrix_power(one_step, count)
		return (powers[count] @ rho.reshape(-1)).reshape(rho.shape)

	return advance


def _stepwise_advance(
	hamiltonian: Hamiltonian, gamma: GammaCoefficients, h: float, adaptive: bool, tolerance: float
) -> Callable[[np.ndarray, int], np.ndarray]:
	h_bar = np.asarray(hamiltonian.data)

	def rhs(rho: np.ndarray) -> np.ndarray:
		return 1j * (h_bar @ rho - rho @ h_bar) - gamma.apply(rho)

	def rk4(rho: np.ndarray, dt: float) -> np.ndarray:
		k1 = rhs(rho)
		k2 = rhs(rho + 0.5 * dt * k1)
		k3 = rhs(rho + 0.5 * dt * k2)
		k4 = rhs(rho + dt * k3)
		return rho + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)

	def refined(rho: np.ndarray, dt: float, depth: int) -> np.ndarray:
		full = rk4(rho, dt)
		half = rk4(rk4(rho, dt / 2), dt / 2)
		if depth >= MAX_HALVINGS or np.max(np.abs(full - half)) <= tolerance:
			return half
		logger.debug("step halved to %.3e", dt / 2)
		return refined(refined(rho, dt / 2, depth + 1), dt / 2, depth + 1)

	def advance(rho: np.ndarray, count: int) -> np.ndarray:
		for _ in range(count):
			rho = refined(rho, h, 0) if adaptive else rk4(rho, h)
		return rho

	return advance
