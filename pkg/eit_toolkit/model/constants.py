from scipy import constants

MODULE_NAME = "model"

DRIVE_LABELS = ("a", "b", "c")

# photon-number offsets (a, b, c) of each atomic level relative to the ground manifold state
LEVEL_PHOTON_OFFSETS = {
	1: (0, 0, 0),
	2: (-1, 0, 0),
	3: (-1, 1, 0),
	4: (-1, 1, -1),
}
ENVIRONMENT_PHOTON_OFFSET = (-1, 0, 0)
RAIL_PHOTON_OFFSET = (0, 0, 0)

GROUND_SYMBOL = "1"
ENVIRONMENT_SYMBOL = "e"
RAIL_SYMBOL = "0"
RAIL_LEVEL = 0

# A21 = omega^3 |d|^2 / (3 pi eps0 hbar c^3)
SI_SPONTANEOUS_PREFACTOR = 1.0 / (3 * constants.pi * constants.epsilon_0 * constants.hbar * constants.c ** 3)
