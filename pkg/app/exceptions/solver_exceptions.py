class DegenerateThetaError(ValueError):
    """Raised by the strict GDA read-out when the parameter vector has no positive mass."""

    pass
