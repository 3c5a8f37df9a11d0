"""Hausdorff numbers and separation axioms of finite topologies.

The Hausdorff number H of a space is the least size bound that forces point
sets to admit open neighborhoods with empty total intersection.  On a finite
space the minimal neighborhoods decide everything: a set A has no separating
family exactly when some point lies in the minimal neighborhood of every
member of A, which yields the closed form

    H = 1 + max over points x of |{a : x in minimal_neighborhood(a)}|.

``hausdorff_number`` implements that closed form; ``hausdorff_number_oracle``
transcribes the definition directly by searching over all neighborhood
choices and exists to validate the closed form, so the two share no logic.

Singletons can never be separated (one nonempty neighborhood has nonempty
intersection), hence H >= 2 always, and H = 2 on a one-point space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteTopology, PointSet, _as_mask, _minimal_rows
from .errors import BadParameter, SetTooSmall, TooLarge

ORACLE_MAX_POINTS = 5


@dataclass(frozen=True, slots=True)
class SeparationWitness:
    """One open neighborhood per queried point, with empty intersection."""

    assignments: tuple[tuple[int, PointSet], ...]


@dataclass(frozen=True, slots=True)
class SeparationDecision:
    separable: bool
    witness: SeparationWitness | None
    certificate: int | None  # a point inside every open meeting the queried set


@dataclass(frozen=True, slots=True)
class HausdorffNumber:
    value: int
    largest_nonseparable: PointSet


def is_separable(topology: FiniteTopology, points: "PointSet | object") -> SeparationDecision:
    """Decide whether the points admit opens with empty total intersection.

    The returned witness assigns each point its minimal neighborhood, which
    suffices: shrinking every choice can only shrink the intersection.  A
    non-separable verdict carries a certificate point contained in every
    open that contains any member.
    """
    a_mask = _as_mask(topology.n, points)
    if a_mask.bit_count() < 2:
        raise SetTooSmall("separability queries need at least two points")

    rows = _minimal_rows(topology)
    common = (1 << topology.n) - 1
    m = a_mask
    while m:
        low = m & -m
        common &= rows[low.bit_length() - 1]
        m ^= low

    if common:
        return SeparationDecision(False, None, (common & -common).bit_length() - 1)

    witness = SeparationWitness(tuple(
        (a, PointSet(topology.n, rows[a])) for a in PointSet(topology.n, a_mask)
    ))
    return SeparationDecision(True, witness, None)


def verify_witness(topology: FiniteTopology, points: "PointSet | object",
                   witness: SeparationWitness) -> bool:
    """Independent witness checker, straight from the definition."""
    a_mask = _as_mask(topology.n, points)
    assigned = {a for a, _ in witness.assignments}
    if assigned != set(PointSet(topology.n, a_mask)):
        return False
    open_masks = set(topology.open_masks)
    common = (1 << topology.n) - 1
    for a, u in witness.assignments:
        if u.mask not in open_masks or not u.mask >> a & 1:
            return False
        common &= u.mask
    return common == 0


def hausdorff_number(topology: FiniteTopology) -> HausdorffNumber:
    """Closed-form Hausdorff number via minimal neighborhoods.

    A set is non-separable iff it fits inside S_x = {a : x in N(a)} for some
    witness point x, so H = 1 + max |S_x|; the maximizing S_x is the largest
    non-separable set.
    """
    n = topology.n
    rows = _minimal_rows(topology)
    best_x = 0
    best_count = 0
    for x in range(n):
        count = sum(rows[a] >> x & 1 for a in range(n))
        if count > best_count:
            best_count = count
            best_x = x
    largest = sum(1 << a for a in range(n) if rows[a] >> best_x & 1)
    return HausdorffNumber(1 + best_count, PointSet(n, largest))


def _choice_separable(open_masks: tuple[int, ...], members: tuple[int, ...],
                      idx: int, inter: int) -> bool:
    """Does some choice of opens (one per member, each containing its member)
    have empty intersection?  Plain depth-first search over all choices."""
    if inter == 0:
        return True
    if idx == len(members):
        return False
    a = members[idx]
    for u in open_masks:
        if u >> a & 1 and _choice_separable(open_masks, members, idx + 1, inter & u):
            return True
    return False


def hausdorff_number_oracle(topology: FiniteTopology) -> HausdorffNumber:
    """Ground-truth H by exhausting subsets and all neighborhood choices.

    Exponential in both the subset and the choice dimension; refuses n > 5.
    Kept free of minimal-neighborhood reasoning so it independently checks
    :func:`hausdorff_number`.
    """
    n = topology.n
    if n > ORACLE_MAX_POINTS:
        raise TooLarge(f"oracle limited to {ORACLE_MAX_POINTS} points, got {n}")
    open_masks = topology.open_masks
    full = (1 << n) - 1

    best_set = None
    best_size = 1
    for a_mask in range(3, full + 1):
        size = a_mask.bit_count()
        if size < 2 or size <= best_size:
            continue
        members = tuple(PointSet(n, a_mask))
        if not _choice_separable(open_masks, members, 0, full):
            best_size = size
            best_set = a_mask
    if best_set is None:
        best_set = 1  # all sets of size >= 2 separable; a singleton attains H - 1
    return HausdorffNumber(best_size + 1, PointSet(n, best_set))


def is_n_hausdorff(topology: FiniteTopology, bound: int) -> bool:
    """True iff H(topology) <= bound."""
    if not isinstance(bound, int) or bound < 2:
        raise BadParameter(f"Hausdorff bounds start at 2, got {bound!r}")
    return hausdorff_number(topology).value <= bound


@dataclass(frozen=True, slots=True)
class AxiomsReport:
    t0: bool
    t1: bool
    hausdorff: bool
    regular: bool
    normal: bool
    discrete: bool
    compact: bool


def axioms_report(topology: FiniteTopology) -> AxiomsReport:
    """Classical separation axioms, each decided from first principles.

    Finite spaces are always compact.  Regularity and normality reduce to
    disjointness of open hulls: the smallest open set containing a closed C
    is the union of the minimal neighborhoods of its points.
    """
    n = topology.n
    rows = _minimal_rows(topology)
    open_set = set(topology.open_masks)
    full = (1 << n) - 1

    t0 = len(set(rows)) == n
    t1 = all(rows[a] == 1 << a for a in range(n))
    hausdorff = all(rows[a] & rows[b] == 0
                    for a in range(n) for b in range(a + 1, n))
    discrete = all((1 << a) in open_set for a in range(n))

    closed = [u ^ full for u in topology.open_masks]

    def open_hull(c: int) -> int:
        hull = 0
        m = c
        while m:
            low = m & -m
            hull |= rows[low.bit_length() - 1]
            m ^= low
        return hull

    regular = True
    for c in closed:
        if not regular:
            break
        hull = open_hull(c)
        outside = full & ~c
        m = outside
        while m:
            low = m & -m
            if rows[low.bit_length() - 1] & hull:
                regular = False
                break
            m ^= low

    normal = all(
        open_hull(c1) & open_hull(c2) == 0
        for i, c1 in enumerate(closed) for c2 in closed[i + 1:]
        if c1 & c2 == 0
    )

    return AxiomsReport(t0=t0, t1=t1, hausdorff=hausdorff, regular=regular,
                        normal=normal, discrete=discrete, compact=True)


def analysis_report(topology: FiniteTopology) -> dict:
    """JSON-ready report combining the axiom flags and the Hausdorff number."""
    axioms = axioms_report(topology)
    h = hausdorff_number(topology)
    return {
        "n": topology.n,
        "hausdorff_number": h.value,
        "largest_nonseparable": list(h.largest_nonseparable),
        "t0": axioms.t0,
        "t1": axioms.t1,
        "hausdorff": axioms.hausdorff,
        "regular": axioms.regular,
        "normal": axioms.normal,
        "discrete": axioms.discrete,
        "compact": axioms.compact,
    }
