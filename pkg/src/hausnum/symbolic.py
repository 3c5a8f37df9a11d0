"""Decidable symbolic model of the doubled-interval spaces.

The carrier is the unit interval on the base line together with a column of
extra points stacked above 1/2 (finitely many, or countably many via the
OMEGA sentinel).  Base points get horizontal interval neighborhoods clipped
to [0,1]; each stacked point gets itself plus a horizontal interval around
1/2, punctured at 1/2 in the T1 variant and unpunctured otherwise.

All coordinates are exact rationals and every verdict ships a witness or a
certificate that re-verifies by exact interval arithmetic; no floats appear
anywhere in this module.

Separability of a finite point set reduces to one rule: a set (of size >= 2)
has neighborhoods with empty total intersection exactly when it is NOT
contained in the hub {base 1/2} ∪ {stacked points}, because all hub
neighborhoods share base points arbitrarily close to 1/2, while any other
base point can be walled off by a small enough interval.  The rule is proved
by the geometry but also guarded at test time by a bounded brute-force
witness search that knows nothing about it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    BadParameter,
    DuplicatePoints,
    ParseError,
    SetTooSmall,
    SpaceMismatch,
)

HALF = Fraction(1, 2)


class _Omega:
    """Sentinel: countably many stacked points."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "omega"


OMEGA = _Omega()


@dataclass(frozen=True, slots=True)
class BugEyedSpace:
    """Unit interval plus ``vertical_count`` points stacked above 1/2.

    ``t1_variant`` selects punctured stacked-point neighborhoods (the space
    is then T1); the unpunctured variant is not T1 because every stacked
    neighborhood swallows the base point at 1/2.
    """

    vertical_count: "int | _Omega"
    t1_variant: bool = True

    def __post_init__(self):
        v = self.vertical_count
        if v is not OMEGA and (not isinstance(v, int) or isinstance(v, bool) or v < 1):
            raise BadParameter(
                f"vertical count must be a positive integer or OMEGA, got {v!r}")

    def has_vertical(self, index: int) -> bool:
        if index < 1:
            return False
        return self.vertical_count is OMEGA or index <= self.vertical_count


@dataclass(frozen=True, slots=True)
class BasePoint:
    """⟨q, 0⟩ on the base line, q an exact rational in [0,1]."""

    coordinate: Fraction

    def __post_init__(self):
        q = Fraction(self.coordinate)
        object.__setattr__(self, "coordinate", q)
        if not 0 <= q <= 1:
            raise BadParameter(f"base coordinate must lie in [0,1], got {q}")


@dataclass(frozen=True, slots=True)
class VerticalPoint:
    """⟨1/2, 1/m⟩, the m-th stacked point (m >= 1)."""

    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or isinstance(self.index, bool) or self.index < 1:
            raise BadParameter(f"vertical index must be a positive integer, got {self.index!r}")


SymbolicPoint = Union[BasePoint, VerticalPoint]


def Base(q) -> BasePoint:
    return BasePoint(Fraction(q))


def Vertical(m: int) -> VerticalPoint:
    return VerticalPoint(m)


def _check_point(space: BugEyedSpace, p: SymbolicPoint) -> None:
    if isinstance(p, VerticalPoint):
        if not space.has_vertical(p.index):
            raise SpaceMismatch(
                f"vertical point {p.index} outside a space with "
                f"{space.vertical_count!r} stacked points")
    elif not isinstance(p, BasePoint):
        raise SpaceMismatch(f"not a symbolic point: {p!r}")


@dataclass(frozen=True, slots=True)
class BallNeighborhood:
    """((q - ε, q + ε) ∩ [0,1]) × {0}: the base-line trace of an ε-ball."""

    space: BugEyedSpace
    owner: BasePoint
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise BadParameter(f"radius must be positive, got {self.radius}")
        _check_point(self.space, self.owner)


@dataclass(frozen=True, slots=True)
class VerticalNeighborhood:
    """The owner itself plus the interval (1/2 - 1/k, 1/2 + 1/k) on the base
    line, punctured at 1/2 exactly in the space's T1 variant."""

    space: BugEyedSpace
    owner: VerticalPoint
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise BadParameter(f"neighborhood parameter must be a positive integer, got {self.k!r}")
        _check_point(self.space, self.owner)


BasisNeighborhood = Union[BallNeighborhood, VerticalNeighborhood]


def neighborhood_of(space: BugEyedSpace, p: SymbolicPoint, param) -> BasisNeighborhood:
    """Basis neighborhood of ``p``: radius for base points, k for stacked ones."""
    _check_point(space, p)
    if isinstance(p, BasePoint):
        return BallNeighborhood(space, p, Fraction(param))
    return VerticalNeighborhood(space, p, int(param))


def membership(nbhd: BasisNeighborhood, p: SymbolicPoint) -> bool:
    """Exact decision of p ∈ nbhd."""
    _check_point(nbhd.space, p)
    if isinstance(nbhd, BallNeighborhood):
        if isinstance(p, VerticalPoint):
            return False
        return abs(p.coordinate - nbhd.owner.coordinate) < nbhd.radius
    if isinstance(p, VerticalPoint):
        return p.index == nbhd.owner.index
    if p.coordinate == HALF:
        return not nbhd.space.t1_variant
    return abs(p.coordinate - HALF) < Fraction(1, nbhd.k)


@dataclass(slots=True)
class _Interval:
    """Rational interval with per-end strictness and an optional puncture
    at 1/2; the base-line part of one or more neighborhoods."""

    lo: Fraction
    lo_strict: bool
    hi: Fraction
    hi_strict: bool
    punctured: bool

    def intersect(self, other: "_Interval") -> "_Interval":
        lo, lo_strict = max(
            (self.lo, self.lo_strict), (other.lo, other.lo_strict))
        hi, hi_strict = min(
            (other.hi, not other.hi_strict), (self.hi, not self.hi_strict))
        hi_strict = not hi_strict
        return _Interval(lo, lo_strict, hi, hi_strict,
                         self.punctured or other.punctured)

    def pick_rational(self) -> Fraction | None:
        if self.lo > self.hi:
            return None
        if self.lo == self.hi:
            if self.lo_strict or self.hi_strict:
                return None
            if self.punctured and self.lo == HALF:
                return None
            return self.lo
        mid = (self.lo + self.hi) / 2
        if self.punctured and mid == HALF:
            mid = self.lo + (self.hi - self.lo) / 4
        return mid


def _clip(lo: Fraction, hi: Fraction, punctured: bool) -> _Interval:
    # traces in the carrier clip open interval ends to the closed unit interval
    lo_strict = True
    hi_strict = True
    if lo < 0:
        lo, lo_strict = Fraction(0), False
    if hi > 1:
        hi, hi_strict = Fraction(1), False
    return _Interval(lo, lo_strict, hi, hi_strict, punctured)


def _base_interval(nbhd: BasisNeighborhood) -> _Interval:
    if isinstance(nbhd, BallNeighborhood):
        c, r = nbhd.owner.coordinate, nbhd.radius
        return _clip(c - r, c + r, punctured=False)
    step = Fraction(1, nbhd.k)
    return _clip(HALF - step, HALF + step, punctured=nbhd.space.t1_variant)


def intersection_nonempty(nbhds: Iterable[BasisNeighborhood]) -> SymbolicPoint | None:
    """A symbolic point in the common intersection, or None when empty.

    Whenever the intersection is nonempty it contains a base point (two
    stacked-point neighborhoods only share base-line points unless they have
    the same owner, and same-owner intervals always overlap near 1/2), so
    the returned witness is always a rational base point.
    """
    nbhds = list(nbhds)
    if not nbhds:
        raise BadParameter("need at least one neighborhood")
    space = nbhds[0].space
    for nb in nbhds[1:]:
        if nb.space != space:
            raise SpaceMismatch("neighborhoods from different spaces")
    common = _base_interval(nbhds[0])
    for nb in nbhds[1:]:
        common = common.intersect(_base_interval(nb))
    q = common.pick_rational()
    return None if q is None else BasePoint(q)


@dataclass(frozen=True, slots=True)
class HubCertificate:
    """Why a set is non-separable: it sits inside the hub over 1/2."""

    description: str

    def to_dict(self) -> dict:
        return {"kind": "hub", "description": self.description}


@dataclass(frozen=True, slots=True)
class SeparabilityVerdict:
    separable: bool
    witness: tuple[tuple[SymbolicPoint, BasisNeighborhood], ...] | None
    certificate: HubCertificate | None

    def to_dict(self) -> dict:
        if self.separable:
            return {
                "separable": True,
                "witness": [
                    {"point": format_point(p), "neighborhood": _neighborhood_dict(nb)}
                    for p, nb in self.witness
                ],
            }
        return {"separable": False, "certificate": self.certificate.to_dict()}


def separable(space: BugEyedSpace, points: Iterable[SymbolicPoint]) -> SeparabilityVerdict:
    """Decide separability of a finite point set, with checked witnesses.

    Separable iff the set contains two distinct base points, or exactly one
    base point that is not 1/2.  Witnesses: half-gap balls around the two
    lowest base points, or one ball kept clear of the hub intervals plus
    matching stacked-point parameters.  Every witness is re-verified through
    :func:`intersection_nonempty` before being returned.
    """
    pts = list(points)
    if len(pts) < 2:
        raise SetTooSmall("separability queries need at least two points")
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("points must be pairwise distinct")
    for p in pts:
        _check_point(space, p)

    bases = sorted((p.coordinate for p in pts if isinstance(p, BasePoint)))

    assignment: dict[SymbolicPoint, BasisNeighborhood] | None = None
    if len(bases) >= 2:
        epsilon = (bases[1] - bases[0]) / 2
        assignment = {
            p: (BallNeighborhood(space, p, epsilon) if isinstance(p, BasePoint)
                else VerticalNeighborhood(space, p, 1))
            for p in pts
        }
    elif len(bases) == 1 and bases[0] != HALF:
        gap = abs(bases[0] - HALF)
        k = math.ceil(Fraction(2) / gap)
        assignment = {
            p: (BallNeighborhood(space, p, gap / 2) if isinstance(p, BasePoint)
                else VerticalNeighborhood(space, p, k))
            for p in pts
        }

    if assignment is None:
        certificate = HubCertificate(
            "every member is the base point 1/2 or a stacked point; all of "
            "their basic neighborhoods share base points arbitrarily close to 1/2")
        return SeparabilityVerdict(False, None, certificate)

    witness = tuple((p, assignment[p]) for p in pts)
    if any(not membership(nb, p) for p, nb in witness) or \
            intersection_nonempty([nb for _, nb in witness]) is not None:
        raise AssertionError("constructed witness failed exact re-verification")
    return SeparabilityVerdict(True, witness, None)


@dataclass(frozen=True, slots=True)
class Cardinal:
    """Finite value or omega_1, ordered with every finite below omega_1."""

    kind: str  # "finite" | "omega_1"
    value: int | None = None

    def __lt__(self, other: "Cardinal") -> bool:
        if self.kind == "finite" and other.kind == "omega_1":
            return True
        if self.kind == "finite" and other.kind == "finite":
            return self.value < other.value
        return False

    def __le__(self, other: "Cardinal") -> bool:
        return self == other or self < other

    def to_dict(self) -> dict:
        if self.kind == "finite":
            return {"kind": "finite", "value": self.value}
        return {"kind": "omega_1"}


def Finite(k: int) -> Cardinal:
    return Cardinal("finite", k)


OMEGA_ONE = Cardinal("omega_1")


def hausdorff_number_symbolic(space: BugEyedSpace) -> Cardinal:
    """Hausdorff number of the space, as an exact symbolic cardinal.

    With v stacked points the largest non-separable set is the hub
    {base 1/2} ∪ {all stacked points} of size v + 1, so H = v + 2.  With
    countably many stacked points no finite or countable bound works (the
    stacked sequence itself is non-separable) while every uncountable set
    contains two distinct base points, so H = omega_1.
    """
    if space.vertical_count is OMEGA:
        return OMEGA_ONE
    return Finite(space.vertical_count + 2)


def largest_nonseparable_set(space: BugEyedSpace) -> list[SymbolicPoint] | None:
    """The extremal non-separable set for finitely many stacked points;
    None for OMEGA (the extremal set is the infinite stacked sequence)."""
    if space.vertical_count is OMEGA:
        return None
    return [BasePoint(HALF)] + [VerticalPoint(m)
                                for m in range(1, space.vertical_count + 1)]


def _excluding_neighborhood(space: BugEyedSpace, owner: SymbolicPoint,
                            other: SymbolicPoint) -> BasisNeighborhood | None:
    """A basis neighborhood of ``owner`` avoiding ``other``, if any exists."""
    if isinstance(owner, BasePoint):
        if isinstance(other, VerticalPoint):
            return BallNeighborhood(space, owner, Fraction(1))
        gap = abs(owner.coordinate - other.coordinate)
        return BallNeighborhood(space, owner, gap / 2)
    if isinstance(other, VerticalPoint):
        return VerticalNeighborhood(space, owner, 1)
    if other.coordinate == HALF:
        if space.t1_variant:
            return VerticalNeighborhood(space, owner, 1)
        return None  # every unpunctured interval contains the base 1/2
    k = math.ceil(Fraction(1) / abs(other.coordinate - HALF))
    return VerticalNeighborhood(space, owner, k)


@dataclass(frozen=True, slots=True)
class T1Result:
    holds: bool
    first_excludes_second: BasisNeighborhood | None
    second_excludes_first: BasisNeighborhood | None
    explanation: str | None

    def to_dict(self, p: SymbolicPoint, q: SymbolicPoint) -> dict:
        doc = {"pair": [format_point(p), format_point(q)], "t1": self.holds}
        if self.holds:
            doc["witnesses"] = [
                {"point": format_point(p), "excludes": format_point(q),
                 "neighborhood": _neighborhood_dict(self.first_excludes_second)},
                {"point": format_point(q), "excludes": format_point(p),
                 "neighborhood": _neighborhood_dict(self.second_excludes_first)},
            ]
        else:
            doc["explanation"] = self.explanation
        return doc


def t1_status(space: BugEyedSpace, p: SymbolicPoint, q: SymbolicPoint) -> T1Result:
    """Mutual exclusion test for a pair: each point needs a basis
    neighborhood missing the other.  Fails only in the unpunctured variant,
    in the stacked-point-to-base-1/2 direction."""
    _check_point(space, p)
    _check_point(space, q)
    if p == q:
        raise DuplicatePoints("the two points must differ")
    forward = _excluding_neighborhood(space, p, q)
    backward = _excluding_neighborhood(space, q, p)
    if forward is not None and backward is not None:
        for nbhd, inside, outside in ((forward, p, q), (backward, q, p)):
            if not membership(nbhd, inside) or membership(nbhd, outside):
                raise AssertionError("exclusion witness failed re-verification")
        return T1Result(True, forward, backward, None)
    bad_owner, bad_other = (p, q) if forward is None else (q, p)
    return T1Result(
        False, None, None,
        f"every basic neighborhood of {format_point(bad_owner)} contains "
        f"{format_point(bad_other)}")


def restrict(space: BugEyedSpace, n: int) -> BugEyedSpace:
    """Subspace keeping the base line and the first n stacked points."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadParameter(f"need a positive number of stacked points, got {n!r}")
    if space.vertical_count is OMEGA:
        return BugEyedSpace(n, space.t1_variant)
    return BugEyedSpace(min(space.vertical_count, n), space.t1_variant)


def grid_witness_search(space: BugEyedSpace, points: Iterable[SymbolicPoint],
                        max_param: int = 64):
    """Bounded brute-force witness search, independent of the decision rule.

    Tries the uniform parameter j = 1..max_param (radius 1/j for base
    points, parameter j for stacked points) and returns the first choice
    whose total intersection is exactly empty.  Neighborhoods shrink as j
    grows, so the finest uniform choice dominates every mixed choice from
    the same grid: returning None means no grid choice separates the set.
    """
    pts = list(points)
    for p in pts:
        _check_point(space, p)
    for j in range(1, max_param + 1):
        nbhds = [neighborhood_of(space, p, Fraction(1, j) if isinstance(p, BasePoint) else j)
                 for p in pts]
        if intersection_nonempty(nbhds) is None:
            return list(zip(pts, nbhds))
    return None


def _neighborhood_dict(nbhd: BasisNeighborhood) -> dict:
    if isinstance(nbhd, BallNeighborhood):
        return {"kind": "ball", "center": str(nbhd.owner.coordinate),
                "radius": str(nbhd.radius)}
    return {"kind": "basic", "k": nbhd.k}


def format_point(p: SymbolicPoint) -> str:
    if isinstance(p, BasePoint):
        return f"b:{p.coordinate}"
    return f"v:{p.index}"


def parse_point(text: str) -> SymbolicPoint:
    """Parse ``b:<num>/<den>`` (or ``b:<int>``) and ``v:<m>``."""
    text = text.strip()
    if text.startswith("b:"):
        try:
            return BasePoint(Fraction(text[2:]))
        except (ValueError, ZeroDivisionError, BadParameter) as exc:
            raise ParseError(f"bad base point {text!r}: {exc}") from None
    if text.startswith("v:"):
        try:
            return VerticalPoint(int(text[2:]))
        except (ValueError, BadParameter) as exc:
            raise ParseError(f"bad vertical point {text!r}: {exc}") from None
    raise ParseError(f"points look like 'b:1/2' or 'v:3', got {text!r}")


def parse_points(text: str) -> list[SymbolicPoint]:
    items = [chunk for chunk in (c.strip() for c in text.split(",")) if chunk]
    if not items:
        raise ParseError("empty point list")
    return [parse_point(item) for item in items]
