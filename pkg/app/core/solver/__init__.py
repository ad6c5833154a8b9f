"""CFR+ and reward-transformation CFR solvers.

Submodules are imported directly (``app.core.solver.solver``); the metrics
module depends on ``traversal`` and the solver depends on metrics.
"""
