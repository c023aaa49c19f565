from eit_toolkit.dynamics.constants import MODULE_NAME
from eit_toolkit.simulation_log import create_log


def create_dynamics_log(**kwargs):
	return create_log(module_def=MODULE_NAME, **kwargs)
