TRAJECTORY_COLUMNS = (
    "traversals",
    "exploitability",
    "max_isregret",
    "epsilon",
    "delta",
    "wall_ms",
)
TRAJECTORY_HEADER = ",".join(TRAJECTORY_COLUMNS)

COMPARISON_COLUMNS = ("label",) + TRAJECTORY_COLUMNS
COMPARISON_HEADER = ",".join(COMPARISON_COLUMNS)

# Significant digits for every real written to CSV
CSV_SIGNIFICANT_DIGITS = 17

TRAJECTORY_FILE = "trajectory.csv"
STRATEGY_FILE = "final_strategy.txt"
META_FILE = "meta.json"
COMPARISON_FILE = "comparison.csv"
SWEEP_SUMMARY_FILE = "sweep.json"
