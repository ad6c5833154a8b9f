class EpsilonTooLargeError(ValueError):
    """Raised when ε would make the perturbed simplex empty or degenerate (ε ≥ 1/n)."""

    def __init__(self, epsilon: float, n: int):
        self.message = f"epsilon={epsilon!r} must satisfy 0 <= epsilon < 1/{n}"
        super().__init__(self.message)
        self.epsilon = epsilon
        self.n = n
