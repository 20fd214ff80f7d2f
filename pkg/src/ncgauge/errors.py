"""Exception types raised by the package.

All package-specific failures derive from :class:`NCGaugeError` so callers
can catch everything with a single ``except`` clause.  The subclasses make
the *reason* for a rejection explicit: a basis that fails to span, mixing
forms over different bases, a would-be gauge transformation that is not
unitary, and so on.
"""

__all__ = [
    "NCGaugeError",
    "SingularBasisError",
    "SingularMetricError",
    "BasisMismatchError",
    "DegreeError",
    "ShapeError",
    "NotUnitaryError",
    "NotHermitianError",
    "NotProjectorError",
    "MissingStructureError",
    "ConfigError",
    "MaxIterationsError",
    # short aliases
    "NotUnitary",
    "NotProjector",
    "MissingStructure",
    "DegreeUnsupported",
    "DimensionMismatch",
    "ConfigInvalid",
    "MaxIterations",
]


class NCGaugeError(Exception):
    """Base class for all errors raised by this package."""


class SingularBasisError(NCGaugeError):
    """A set of matrices does not form a valid (linearly independent) basis."""


class SingularMetricError(NCGaugeError):
    """A metric tensor is singular or not positive definite."""


class BasisMismatchError(NCGaugeError):
    """Two objects built over different matrix bases were combined."""


class DegreeError(NCGaugeError):
    """A form degree is out of the supported range or degrees are incompatible."""


class ShapeError(NCGaugeError):
    """An array argument has the wrong shape for the requested operation."""


class NotUnitaryError(NCGaugeError):
    """A matrix expected to be unitary is not."""


class NotHermitianError(NCGaugeError):
    """A matrix expected to be (anti-)Hermitian is not."""


class NotProjectorError(NCGaugeError):
    """A matrix expected to be an orthogonal projector is not."""


class MissingStructureError(NCGaugeError):
    """An operation requires optional structure (grading, real structure, ...)
    that the object does not carry."""


class ConfigError(NCGaugeError):
    """A configuration file or parameter set is malformed or inconsistent."""


class MaxIterationsError(NCGaugeError):
    """An iterative solver hit its iteration cap before reaching tolerance.

    :func:`ncgauge.minimize` never raises this itself — it returns the best
    iterate with ``converged=False`` — but callers that prefer an exception
    can use :meth:`MinimizeResult.raise_for_convergence`.
    """


# Short aliases for the same types, matching the names used in the
# command-line documentation and error tables.
NotUnitary = NotUnitaryError
NotProjector = NotProjectorError
MissingStructure = MissingStructureError
DegreeUnsupported = DegreeError
DimensionMismatch = ShapeError
ConfigInvalid = ConfigError
MaxIterations = MaxIterationsError
