"""Exception types raised across the package."""


class CmcError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CmcError):
    """An elementary operation was applied outside its mathematical domain."""


class NonConvergence(CmcError):
    """An iterative numerical routine exhausted its subdivision budget."""


class RankDeficient(CmcError):
    """Input rows do not span a codimension-one subspace."""


class SizeMismatch(CmcError):
    """Vector length does not match the ambient dimension."""


class DegenerateMetric(CmcError):
    """Chart first partials are (numerically) linearly dependent."""


class DomainExceeded(CmcError):
    """A finite-difference stencil leaves the chart domain."""


class NonConstantMeanCurvature(CmcError):
    """An identity that requires constant mean curvature was evaluated on a
    chart whose sampled mean curvature is not constant."""


class NotSurface(CmcError):
    """Operation only defined for two-dimensional charts."""


class NonOrthogonalChart(CmcError):
    """Chart coordinates are not orthogonal where they need to be."""


class InvalidParameters(CmcError):
    """Model parameters outside their admissible ranges."""


class ParseError(CmcError):
    """A model description string does not follow the canonical grammar."""


class NotTraceFree(CmcError):
    """Input tuple does not sum to zero within tolerance."""


class NonElliptic(CmcError):
    """The combination H^2 + c <= 0; the sharp gap threshold is undefined."""


class OutOfRange(CmcError):
    """A closed-form inversion was requested outside its admissible range."""


class SearchFailed(CmcError):
    """Grid search could not produce a witness point.

    Carries the best slack found: ``best_gap`` is the smallest value of
    (sup estimate - field value) seen, ``best_laplacian`` the Laplacian at
    that point.
    """

    def __init__(self, message: str, best_gap: float, best_laplacian: float):
        super().__init__(message)
        self.best_gap = best_gap
        self.best_laplacian = best_laplacian
