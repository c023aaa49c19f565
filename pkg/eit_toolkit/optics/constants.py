MODULE_NAME = "optics"

NORMALIZATION = "two-level kappa(nu_a=0)=1"

# relative gap between the h and 2h central differences above which the derivative is flagged
RICHARDSON_RTOL = 0.01
