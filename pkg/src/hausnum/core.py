"""Finite topologies on {0..n-1}: validation, preorder correspondence, subspaces.

Point sets are bit masks inside one machine word, so all set algebra is O(1)
and structural equality of topologies is plain tuple equality once the open
family is stored in canonical order (ascending cardinality, ties by ascending
mask value).

Every type here is immutable after construction and every operation is a
pure function, so values can be shared freely across threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    EmptySubset,
    InvalidTopology,
    MissingEmptySet,
    MissingFullSet,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
    PointOutOfRange,
)

MAX_POINTS = 64


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_POINTS:
        raise PointOutOfRange(f"point count must be in 1..{MAX_POINTS}, got {n!r}")


@dataclass(frozen=True, slots=True)
class PointSet:
    """A subset of {0..n-1}, stored as a bit mask over an n-point space."""

    n: int
    mask: int

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise PointOutOfRange(
                f"mask {self.mask:#x} does not fit in a {self.n}-point space")

    @classmethod
    def from_points(cls, n: int, points: Iterable[int]) -> "PointSet":
        _check_n(n)
        mask = 0
        for p in points:
            if not isinstance(p, int) or not 0 <= p < n:
                raise PointOutOfRange(f"point {p!r} not in 0..{n - 1}")
            mask |= 1 << p
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "PointSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "PointSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def singleton(cls, n: int, point: int) -> "PointSet":
        return cls.from_points(n, (point,))

    def _same_space(self, other: "PointSet") -> None:
        if self.n != other.n:
            raise PointOutOfRange(
                f"sets live in different spaces ({self.n} vs {other.n} points)")

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.n and bool(self.mask >> point & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __or__(self, other: "PointSet") -> "PointSet":
        self._same_space(other)
        return PointSet(self.n, self.mask | other.mask)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._same_space(other)
        return PointSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._same_space(other)
        return PointSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "PointSet":
        return PointSet(self.n, self.mask ^ ((1 << self.n) - 1))

    def issubset(self, other: "PointSet") -> bool:
        self._same_space(other)
        return self.mask & ~other.mask == 0

    def points(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"PointSet({self.n}, {{{', '.join(map(str, self))}}})"


def _as_mask(n: int, s: "PointSet | Iterable[int]") -> int:
    if isinstance(s, PointSet):
        if s.n != n:
            raise PointOutOfRange(
                f"set over {s.n} points used in a {n}-point space")
        return s.mask
    return PointSet.from_points(n, s).mask


def _canonical_masks(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True, slots=True)
class FiniteTopology:
    """A validated family of open sets on n points, in canonical order.

    Construct via :func:`validate_topology` or :func:`generate_from_subbasis`
    unless the family is already known to be a topology.
    """

    n: int
    opens: tuple[PointSet, ...]

    @property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(u.mask for u in self.opens)

    def is_open(self, s: "PointSet | Iterable[int]") -> bool:
        mask = _as_mask(self.n, s)
        return any(u.mask == mask for u in self.opens)

    def __repr__(self) -> str:
        return f"FiniteTopology(n={self.n}, opens={len(self.opens)})"


def _topology_from_masks(n: int, masks: Iterable[int]) -> FiniteTopology:
    return FiniteTopology(n, tuple(PointSet(n, m) for m in _canonical_masks(masks)))


def validate_topology(n: int, family: Iterable["PointSet | Iterable[int]"]) -> FiniteTopology:
    """Check that ``family`` is a topology on {0..n-1} and canonicalize it.

    Closure is checked pairwise only; closure under arbitrary unions and
    intersections follows because the family is finite.  Raises
    :class:`InvalidTopology` carrying every defect found.
    """
    _check_n(n)
    masks = _canonical_masks(_as_mask(n, s) for s in family)
    full = (1 << n) - 1
    mask_set = set(masks)

    issues: list = []
    if 0 not in mask_set:
        issues.append(MissingEmptySet())
    if full not in mask_set:
        issues.append(MissingFullSet())

    union_issue = intersection_issue = None
    for i, u in enumerate(masks):
        for v in masks[i + 1:]:
            if union_issue is None and (u | v) not in mask_set:
                union_issue = NotClosedUnderUnion(
                    first=tuple(PointSet(n, u)), second=tuple(PointSet(n, v)))
            if intersection_issue is None and (u & v) not in mask_set:
                intersection_issue = NotClosedUnderIntersection(
                    first=tuple(PointSet(n, u)), second=tuple(PointSet(n, v)))
        if union_issue is not None and intersection_issue is not None:
            break
    if union_issue is not None:
        issues.append(union_issue)
    if intersection_issue is not None:
        issues.append(intersection_issue)

    if issues:
        raise InvalidTopology(issues)
    return _topology_from_masks(n, masks)


def generate_from_subbasis(n: int, subbasis: Iterable["PointSet | Iterable[int]"]) -> FiniteTopology:
    """Smallest topology containing ``subbasis``.

    Closes under pairwise intersection (the empty intersection contributes
    the full set), then under pairwise union (the empty union contributes
    the empty set).  Both closures are fixpoints, sufficient for arbitrary
    intersections/unions on a finite carrier.
    """
    _check_n(n)
    full = (1 << n) - 1
    sets = {full}
    sets.update(_as_mask(n, s) for s in subbasis)

    # intersection closure first, union closure second: distributivity makes
    # one fixpoint pass of each sufficient
    for closure_op in (int.__and__, int.__or__):
        frontier = list(sets)
        while frontier:
            nxt = set()
            for a in frontier:
                for b in sets:
                    c = closure_op(a, b)
                    if c not in sets and c not in nxt:
                        nxt.add(c)
            sets.update(nxt)
            frontier = list(nxt)
    sets.add(0)
    return _topology_from_masks(n, sets)


def _check_point(n: int, a: int) -> None:
    if not isinstance(a, int) or not 0 <= a < n:
        raise PointOutOfRange(f"point {a!r} not in 0..{n - 1}")


def minimal_neighborhood(topology: FiniteTopology, a: int) -> PointSet:
    """Intersection of all open sets containing ``a`` (open, since finite)."""
    _check_point(topology.n, a)
    mask = (1 << topology.n) - 1
    for u in topology.open_masks:
        if u >> a & 1:
            mask &= u
    return PointSet(topology.n, mask)


def _minimal_rows(topology: FiniteTopology) -> tuple[int, ...]:
    n = topology.n
    full = (1 << n) - 1
    rows = [full] * n
    for u in topology.open_masks:
        m = u
        while m:
            low = m & -m
            rows[low.bit_length() - 1] &= u
            m ^= low
    return tuple(rows)


@dataclass(frozen=True, slots=True)
class Preorder:
    """A reflexive transitive relation; ``rows[a]`` is the mask {b : a <= b}.

    ``a <= b`` holds exactly when b lies in every open set containing a, so a
    preorder is the same data as a finite topology.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        if len(self.rows) != self.n:
            raise PointOutOfRange(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for a, row in enumerate(self.rows):
            if not 0 <= row <= full:
                raise PointOutOfRange(f"row {a} does not fit in {self.n} bits")
            if not row >> a & 1:
                raise NotReflexive(f"{a} <= {a} fails")
        for a, row in enumerate(self.rows):
            m = row
            while m:
                low = m & -m
                b = low.bit_length() - 1
                if self.rows[b] & ~row:
                    c = (self.rows[b] & ~row)
                    c = (c & -c).bit_length() - 1
                    raise NotTransitive(f"{a} <= {b} and {b} <= {c} but not {a} <= {c}")
                m ^= low

    def leq(self, a: int, b: int) -> bool:
        _check_point(self.n, a)
        _check_point(self.n, b)
        return bool(self.rows[a] >> b & 1)

    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(row >> b & 1) for b in range(self.n))
                     for row in self.rows)

    @classmethod
    def from_matrix(cls, matrix: Iterable[Iterable[bool]]) -> "Preorder":
        rows = []
        mat = [list(r) for r in matrix]
        n = len(mat)
        for r in mat:
            if len(r) != n:
                raise PointOutOfRange("relation matrix must be square")
            rows.append(sum(1 << b for b, v in enumerate(r) if v))
        return cls(n, tuple(rows))


def specialization_preorder(topology: FiniteTopology) -> Preorder:
    """a <= b iff b belongs to the minimal neighborhood of a."""
    return Preorder(topology.n, _minimal_rows(topology))


def topology_from_preorder(preorder: Preorder) -> FiniteTopology:
    """All up-closed sets of the preorder, i.e. all unions of its rows.

    Inverse of :func:`specialization_preorder` in both directions.
    """
    sets = {0}
    frontier = [0]
    for row in preorder.rows:
        if row not in sets:
            sets.add(row)
            frontier.append(row)
    # close under pairwise union; every up-set is a union of rows
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(sets):
                c = a | b
                if c not in sets:
                    nxt.append(c)
        for c in nxt:
            sets.add(c)
        frontier = nxt
    full = (1 << preorder.n) - 1
    sets.add(full)
    return _topology_from_masks(preorder.n, sets)


class SubspaceResult(NamedTuple):
    topology: FiniteTopology
    labels: tuple[int, ...]  # labels[i] = original point carried by new index i


def subspace(topology: FiniteTopology, points: "PointSet | Iterable[int]") -> SubspaceResult:
    """Trace topology {U ∩ S : U open}, reindexed onto {0..|S|-1}.

    The order-preserving point map is returned alongside so reports can
    refer to the original labels.
    """
    s_mask = _as_mask(topology.n, points)
    if s_mask == 0:
        raise EmptySubset("subspace carrier must be nonempty")
    labels = tuple(PointSet(topology.n, s_mask))
    index_of = {p: i for i, p in enumerate(labels)}

    traces = set()
    for u in topology.open_masks:
        t = u & s_mask
        new_mask = 0
        m = t
        while m:
            low = m & -m
            new_mask |= 1 << index_of[low.bit_length() - 1]
            m ^= low
        traces.add(new_mask)
    return SubspaceResult(_topology_from_masks(len(labels), traces), labels)
