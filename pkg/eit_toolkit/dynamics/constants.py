MODULE_NAME = "dynamics"

METHODS = ("auto", "propagator", "stepwise")

# step halvings allowed before adaptive stepping gives up
MAX_HALVINGS = 30
