MODULE_NAME = "runner"

TASKS = ("evolve", "steady", "spectrum", "gate-metrics", "kerr-overlap", "dressed", "milestones")
VERIFY_SUITES = ("invariants", "paper-anchors", "oracle")
OUTPUT_FORMATS = ("csv", "json")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

MANIFEST_PREFIX = "# "
SWEEP_INDEX_COLUMN = "sweep_index"
GRID_INDEX_COLUMN = "grid_index"
COMPLEX_SUFFIXES = ("_re", "_im")

# columns each task emits after sweep_index, the sweep value and grid_index;
# complex columns are written as <name>_re, <name>_im
TASK_COLUMNS = {
	"evolve": "t, rho_<row>_<col> (complex), trace_deviation, min_eigenvalue, purity, hermiticity",
	"steady": (
		"[t, rho_11, rho_<k>1 (complex) when times are given], tau_a, validity_lower, "
		"validity_upper, validity_satisfiable, qss_<k>1 (complex), "
		"[w10 (complex), gamma10 for dual rail]"
	),
	"spectrum": "<axis>, chi (complex), eta, kappa, group_slope, [chi3 (complex) for four-level]",
	"gate-metrics": "phase, phase_rate, t_for_pi, fidelity, entropy, regime_<flag>, in_regime",
	"kerr-overlap": "alpha_sq, overlap, gate_error, [threshold_alpha_sq when a target is set]",
	"dressed": (
		"[t, excited_population when times are given], splitting, energy_dark, energy_minus, "
		"energy_plus"
	),
	"milestones": "q, detuning_a, time, phase",
}
