"""Exception hierarchy shared across the package.

Every error carries a stable ``code`` string so the CLI can emit
machine-readable diagnostics with consistent exit statuses.
"""

from __future__ import annotations


class HeckedimError(Exception):
    """Base class for all domain errors."""

    code = "domain-error"


class FieldMismatch(HeckedimError):
    code = "field-mismatch"


class DivisionByZero(HeckedimError):
    code = "division-by-zero"


class MinExpOfZero(HeckedimError):
    code = "minexp-of-zero"


class MaxExpOfZero(HeckedimError):
    code = "maxexp-of-zero"


class IndexOutOfRange(HeckedimError):
    code = "index-out-of-range"


class NotADescent(HeckedimError):
    code = "not-a-descent"


class WordNotReduced(HeckedimError):
    code = "word-not-reduced"


class InfiniteParabolic(HeckedimError):
    code = "infinite-parabolic"


class UnsupportedRealization(HeckedimError):
    code = "unsupported-realization"


class NotSelfDual(HeckedimError):
    code = "not-self-dual"


class InvalidDecomposition(HeckedimError):
    code = "invalid-decomposition"


class GroupTooLarge(HeckedimError):
    code = "group-too-large"


class NotSameCell(HeckedimError):
    code = "not-same-cell"


class SingularCartan(HeckedimError):
    code = "singular-cartan"


class NotRecursible(HeckedimError):
    code = "not-recursible"


class NotLinear(HeckedimError):
    code = "not-linear"


class MissingLIF(HeckedimError):
    code = "missing-lif"


class NotParabolicLongest(HeckedimError):
    code = "not-parabolic-longest"


class ZeroDenominator(HeckedimError):
    code = "zero-denominator"
