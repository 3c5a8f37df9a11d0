"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class TopologyError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class PointOutOfRange(TopologyError):
    code = "point-out-of-range"


class EmptySubset(TopologyError):
    code = "empty-subset"


class SetTooSmall(TopologyError):
    code = "set-too-small"


class TooLarge(TopologyError):
    code = "too-large"


class BadParameter(TopologyError):
    code = "bad-parameter"


class NotReflexive(TopologyError):
    code = "not-reflexive"


class NotTransitive(TopologyError):
    code = "not-transitive"


class SpaceMismatch(TopologyError):
    code = "space-mismatch"


class DuplicatePoints(TopologyError):
    code = "duplicate-points"


class ParseError(TopologyError):
    code = "parse-error"


class ConstructionClaimError(TopologyError):
    """A named construction failed one of its eagerly checked claims."""

    code = "construction-claim"


@dataclass(frozen=True)
class ValidationIssue:
    """One structural defect found while validating an open-set family."""

    code: str


@dataclass(frozen=True)
class MissingEmptySet(ValidationIssue):
    code: str = "missing-empty-set"


@dataclass(frozen=True)
class MissingFullSet(ValidationIssue):
    code: str = "missing-full-set"


@dataclass(frozen=True)
class NotClosedUnderUnion(ValidationIssue):
    first: tuple[int, ...] = ()
    second: tuple[int, ...] = ()
    code: str = "not-closed-under-union"


@dataclass(frozen=True)
class NotClosedUnderIntersection(ValidationIssue):
    first: tuple[int, ...] = ()
    second: tuple[int, ...] = ()
    code: str = "not-closed-under-intersection"


class InvalidTopology(TopologyError):
    """Raised by ``validate_topology``; aggregates every defect found."""

    code = "invalid-topology"

    def __init__(self, issues):
        self.issues = tuple(issues)
        super().__init__("; ".join(self._describe(i) for i in self.issues))

    def issue_codes(self) -> set[str]:
        return {issue.code for issue in self.issues}

    @staticmethod
    def _describe(issue: ValidationIssue) -> str:
        if isinstance(issue, (NotClosedUnderUnion, NotClosedUnderIntersection)):
            op = "union" if isinstance(issue, NotClosedUnderUnion) else "intersection"
            return (f"family is not closed under {op}: "
                    f"{set(issue.first) or '{}'} and {set(issue.second) or '{}'}")
        if isinstance(issue, MissingEmptySet):
            return "the empty set is missing"
        if isinstance(issue, MissingFullSet):
            return "the full set is missing"
        return issue.code
