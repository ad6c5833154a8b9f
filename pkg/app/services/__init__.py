"""Services orchestrating game generation, solver runs, sweeps and plots."""
