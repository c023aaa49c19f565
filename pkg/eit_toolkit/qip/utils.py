import logging

from eit_toolkit.qip.constants import MODULE_NAME
from eit_toolkit.settings import get_settings
from eit_toolkit.simulation_log import create_log

logger = logging.getLogger(__name__)


def create_qip_log(**kwargs):
	return create_log(module_def=MODULE_NAME, **kwargs)


def much_greater(large: float, small: float) -> bool:
	"""large >> small, read as large >= validity_margin * small."""
	return large >= get_settings().validity_margin * small
