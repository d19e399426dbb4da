"""Exception hierarchy."""


class EnergyVoronoiError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class DegeneratePairError(EnergyVoronoiError):
    """Two generators coincide, so a direction or boundary is undefined."""


class AssumptionViolation(EnergyVoronoiError):
    """A candidate pool breaks the non-degeneracy assumption w.r.t. the fixed generator.

    ``offenders`` lists ``(id, reason)`` pairs.
    """

    def __init__(self, message, offenders=()):
        super().__init__(message)
        self.offenders = list(offenders)


class CapacityError(EnergyVoronoiError):
    """The dominance graph has no free slot left."""
