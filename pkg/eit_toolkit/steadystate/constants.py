MODULE_NAME = "steadystate"

# element keys of the quasi-steady-state coherences, per number of levels
ELEMENT_KEYS = {2: ("21",), 3: ("21", "31"), 4: ("21", "31", "41")}
