"""Exception and warning types shared across the workbench."""

from __future__ import annotations


class RittcalcError(Exception):
    """Base class for all workbench-specific failures."""


# ---------------------------------------------------------------------------
# linear algebra

class SingularMatrixError(RittcalcError):
    """Shift is (numerically) an eigenvalue; the resolvent does not exist."""


class IllConditionedWarning(UserWarning):
    """Condition estimate exceeded the cap; the value is still returned."""


class NoConvergenceError(RittcalcError):
    """Iteration budget exhausted before the requested tolerance."""


class OverflowLimitError(RittcalcError):
    """A norm grew past the configured overflow cap (divergence evidence)."""

    def __init__(self, message: str, at_index: int | None = None):
        super().__init__(message)
        self.at_index = at_index


# ---------------------------------------------------------------------------
# geometry

class DegenerateSetError(RittcalcError):
    """Peripheral points coincide (or nearly so) after tolerance."""


class NTooSmallError(RittcalcError):
    """Contour index n below the least admissible n0 for this (E, s)."""

    def __init__(self, message: str, n0: int | None = None):
        super().__init__(message)
        self.n0 = n0


class ParallelHalflinesError(RittcalcError):
    """Half-line directions are parallel; no unique intersection."""


class NoPositiveSolutionError(RittcalcError):
    """Half-lines intersect only behind a vertex (nonpositive parameter)."""


class NotRittError(RittcalcError):
    """Operator failed Ritt certification for the supplied peripheral set."""


class NoAdmissibleThetaError(RittcalcError):
    """Sector opening search exhausted its grid without admissibility."""


class CoverageFailureError(RittcalcError):
    """Intermediate-point count hit its cap before covering the spectrum."""


# ---------------------------------------------------------------------------
# functional calculus

class NotH0Error(RittcalcError):
    """Integrand does not vanish at the peripheral points."""


class SpectralClearanceError(RittcalcError):
    """No admissible contour keeps the required distance from the spectrum."""


class SpectrumNotEnclosedError(RittcalcError):
    """Contour fails to enclose the spectrum with the required clearance."""


class SampleOnPathError(RittcalcError):
    """Evaluation point too close to an integration path."""


class IllConditionedNodesError(RittcalcError):
    """Interpolation nodes too close for a reliable Vandermonde solve."""


class PoleInSectorError(RittcalcError):
    """A rational test function has a pole inside the closed sector."""


class TransferViolationError(RittcalcError):
    """Resolvent transfer identity residual exceeded tolerance."""


class DivergentSequencesError(RittcalcError):
    """Power or difference sequence diverged before the requested horizon."""


# ---------------------------------------------------------------------------
# R-bounds and ensembles

class TooManyExactError(RittcalcError):
    """Exact sign enumeration requested beyond the hard cap."""


class NotContractiveError(RittcalcError):
    """Operator fails the contractive-regularity precondition."""


class UnrealizableEError(RittcalcError):
    """Requested peripheral set is not a union of root-of-unity groups."""


class FamilyInvalidError(RittcalcError):
    """Sector family carries no validity certificate."""


class EmptySceneError(RittcalcError):
    """Nothing to render."""
