from typing import Optional, Type


class SimulationError(Exception):
	"""Base class for every error raised by the toolkit."""

	exit_code = 1

	def __init__(self, message: str, field: Optional[str] = None):
		super().__init__(message)
		self.message = message
		self.field = field

	def __reduce__(self):
		# keep the field path when crossing a worker process boundary
		return (type(self), (self.message, self.field))

	def __str__(self) -> str:
		if self.field:
			return f"{self.field}: {self.message}"
		return self.message


class ValidationError(SimulationError):
	exit_code = 2


class BasisTooLarge(ValidationError):
	pass


class NumericalError(SimulationError):
	exit_code = 3


class IntegrationDiverged(NumericalError):
	pass


class SingularParameters(NumericalError):
	pass


def throw(
	message: str, exc: Type[SimulationError] = ValidationError, field: Optional[str] = None
) -> None:
	"""Raise `exc` with message, optionally tagged with the offending field path."""
	raise exc(message, field=field)
