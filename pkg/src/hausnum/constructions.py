"""Named example topologies with their claimed properties checked eagerly.

Every constructor re-verifies its separation claims before returning, so
importing and calling these doubles as a regression test of the claimed
Hausdorff numbers.  Point naming for the four-point space is fixed as
(w, x, y, z) = (0, 1, 2, 3).
"""

from __future__ import annotations

from .core import FiniteTopology, generate_from_subbasis, validate_topology
from .errors import BadParameter, ConstructionClaimError, ParseError
from .jsonio import topology_to_dict
from .separation import axioms_report, hausdorff_number


def _claim(condition: bool, message: str) -> None:
    if not condition:
        raise ConstructionClaimError(message)


def three_point_example() -> FiniteTopology:
    """The 3-point space {∅, {0}, {1,2}, X}: Hausdorff number 3, compact,
    yet not Hausdorff; the smallest space separating those notions."""
    topology = validate_topology(3, [[], [0], [1, 2], [0, 1, 2]])
    h = hausdorff_number(topology)
    report = axioms_report(topology)
    _claim(h.value == 3, f"expected H = 3, got {h.value}")
    _claim(not report.hausdorff, "space must not be Hausdorff")
    _claim(not report.discrete, "space must not be discrete")
    return topology


def two_block_topology(n: int, x0: int = 0) -> FiniteTopology:
    """{∅, {x0}, X∖{x0}, X} on n points: Hausdorff number exactly n.

    Non-discrete for n >= 3; at n = 2 both blocks are singletons and the
    topology degenerates to the discrete one.
    """
    if n < 2:
        raise BadParameter(f"need at least 2 points, got {n}")
    if not 0 <= x0 < n:
        raise BadParameter(f"base point {x0} not in 0..{n - 1}")
    full = list(range(n))
    rest = [p for p in full if p != x0]
    topology = validate_topology(n, [[], [x0], rest, full])
    h = hausdorff_number(topology)
    _claim(h.value == n, f"expected H = {n}, got {h.value}")
    if n >= 3:
        _claim(not axioms_report(topology).discrete, "space must not be discrete")
    return topology


def filtered_four_point() -> FiniteTopology:
    """Four points (w,x,y,z) = (0,1,2,3): all supersets of {y} plus
    ∅, {x}, {z}, {x,z}.  Hausdorff number 3, not discrete."""
    supersets_of_y = [[2], [0, 2], [1, 2], [2, 3],
                      [0, 1, 2], [0, 2, 3], [1, 2, 3], [0, 1, 2, 3]]
    extras = [[], [1], [3], [1, 3]]
    topology = validate_topology(4, supersets_of_y + extras)
    h = hausdorff_number(topology)
    report = axioms_report(topology)
    _claim(h.value == 3, f"expected H = 3, got {h.value}")
    _claim(not report.discrete, "space must not be discrete")
    return topology


def doubled_point_topology(n: int, x0: int = 0, x1: int = 1) -> FiniteTopology:
    """Generated by the basis {{x} : x != x0} ∪ {{x0, x1}} on n >= 3 points.

    Hausdorff number exactly 3 at every size: the only non-separable pair is
    {x0, x1}, and x0 is the only point without an open singleton.
    """
    if n < 3:
        raise BadParameter(f"need at least 3 points, got {n}")
    if not 0 <= x0 < n or not 0 <= x1 < n:
        raise BadParameter(f"special points must lie in 0..{n - 1}")
    if x0 == x1:
        raise BadParameter("the two special points must differ")
    basis = [[x] for x in range(n) if x != x0] + [sorted((x0, x1))]
    topology = generate_from_subbasis(n, basis)
    h = hausdorff_number(topology)
    _claim(h.value == 3, f"expected H = 3, got {h.value}")
    _claim(not axioms_report(topology).discrete, "space must not be discrete")
    return topology


def build_example(name: str) -> tuple[str, FiniteTopology]:
    """Build a construction from its CLI name.

    Accepted names: ``three-point``, ``four-point``, ``two-block:N``,
    ``doubled:N``.  Returns the normalized name and the topology.
    """
    if name == "three-point":
        return name, three_point_example()
    if name == "four-point":
        return name, filtered_four_point()
    for prefix, builder in (("two-block:", two_block_topology),
                            ("doubled:", doubled_point_topology)):
        if name.startswith(prefix):
            try:
                n = int(name[len(prefix):])
            except ValueError:
                raise ParseError(f"bad size in example name {name!r}") from None
            return f"{prefix}{n}", builder(n)
    raise ParseError(
        f"unknown example {name!r}; expected three-point, four-point, "
        "two-block:N, or doubled:N")


def export_example(name: str) -> dict:
    """Topology JSON document for a named construction."""
    normalized, topology = build_example(name)
    return topology_to_dict(topology, name=normalized)
