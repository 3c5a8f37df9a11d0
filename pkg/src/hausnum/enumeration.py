"""Exhaustive enumeration of topologies on n labeled points.

Topologies are enumerated as specialization preorders (reflexive transitive
relation matrices) by backtracking with incremental transitivity checks; the
relation-matrix search space collapses far faster than the 2^(2^n) space of
open-set families.  Homeomorphism classes come from a canonical form that
minimizes the relation matrix over relabelings.

The hot loops live in :mod:`hausnum._kernels` (compiled extension when
available, pure Python otherwise); this module owns partitioning, merging,
count tables, caching, and the independent naive oracle used to cross-check
the enumerator at small n.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from . import _kernels
from .core import FiniteTopology, Preorder, topology_from_preorder
from .errors import TooLarge

ENUM_MAX_POINTS = 7       # labeled enumeration and canonical forms
TABLE_MAX_POINTS = 6      # full count tables (classes included)
STIRLING_MAX_POINTS = 5
NAIVE_MAX_POINTS = 4

CACHE_VERSION = "counts-v1"
CACHE_ENV_VAR = "TOPO_CACHE_DIR"
DEFAULT_CACHE_DIR = ".topo-cache"


def _check_cap(n: int, cap: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise TooLarge(f"point count must be a positive integer, got {n!r}")
    if n > cap:
        raise TooLarge(f"supported up to {cap} points here, got {n}")


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Relabeling-invariant identity of a topology: minimal matrix bytes."""

    encoding: bytes


@dataclass(slots=True)
class CountsTable:
    """Topology counts on n points classified by Hausdorff number."""

    n: int
    rows: dict[int, tuple[int, int]]  # H -> (labeled_count, class_count)
    labeled_total: int
    class_total: int
    t0_labeled_count: int
    t0_only: bool = False

    def to_dict(self) -> dict:
        return {
            "format": "counts-table/v1",
            "cache_version": CACHE_VERSION,
            "n": self.n,
            "t0_only": self.t0_only,
            "rows": [
                {"hausdorff_number": k,
                 "labeled_count": self.rows[k][0],
                 "class_count": self.rows[k][1]}
                for k in sorted(self.rows)
            ],
            "labeled_total": self.labeled_total,
            "class_total": self.class_total,
            "t0_labeled_count": self.t0_labeled_count,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CountsTable":
        rows = {row["hausdorff_number"]: (row["labeled_count"], row["class_count"])
                for row in doc["rows"]}
        return cls(n=doc["n"], rows=rows, labeled_total=doc["labeled_total"],
                   class_total=doc["class_total"],
                   t0_labeled_count=doc["t0_labeled_count"],
                   t0_only=doc.get("t0_only", False))

    def to_csv(self) -> str:
        lines = ["n,hausdorff_number,labeled_count,class_count"]
        for k in sorted(self.rows):
            labeled, classes = self.rows[k]
            lines.append(f"{self.n},{k},{labeled},{classes}")
        return "\n".join(lines) + "\n"


def enumerate_preorders(n: int) -> Iterator[Preorder]:
    """Every specialization preorder on n points, in ascending matrix order."""
    _check_cap(n, ENUM_MAX_POINTS)
    for first in _kernels.first_row_candidates(n):
        for rows in _kernels.preorder_rows(n, first):
            yield Preorder(n, rows)


def enumerate_labeled(n: int) -> Iterator[FiniteTopology]:
    """Every topology on n labeled points exactly once, deterministic order."""
    for preorder in enumerate_preorders(n):
        yield topology_from_preorder(preorder)


def canonical_form(topology: FiniteTopology) -> CanonicalForm:
    """Canonical form of a topology; equal forms iff homeomorphic."""
    _check_cap(topology.n, ENUM_MAX_POINTS)
    from .core import specialization_preorder

    rows = specialization_preorder(topology).rows
    return CanonicalForm(_kernels.canonical_rows(topology.n, rows))


def _classify_task(args):
    n, first_rows, want_classes, t0_only = args
    return _kernels.classify(n, first_rows=list(first_rows),
                             want_classes=want_classes, t0_only=t0_only)


def _merge_class_maps(target: dict, extra: dict) -> None:
    for enc, (h, rows) in extra.items():
        prev = target.get(enc)
        if prev is None or rows < prev[1]:
            if prev is not None and prev[0] != h:
                raise AssertionError("canonical form maps to two Hausdorff numbers")
            target[enc] = (h, rows)


def _classify_all(n: int, jobs: int = 1, want_classes: bool = True,
                  t0_only: bool = False):
    """Run the classifier, optionally fanned out over a process pool.

    The tree is partitioned by the first matrix row; merging histograms is
    commutative addition and representative merging takes the lexicographic
    minimum, so results never depend on worker completion order.
    """
    if jobs < 1:
        raise TooLarge(f"worker count must be >= 1, got {jobs}")
    first_rows = _kernels.first_row_candidates(n)

    if jobs == 1 or len(first_rows) == 1:
        parts = [_kernels.classify(n, want_classes=want_classes, t0_only=t0_only)]
    else:
        buckets = [first_rows[i::jobs] for i in range(min(jobs, len(first_rows)))]
        with ProcessPoolExecutor(max_workers=len(buckets)) as pool:
            parts = list(pool.map(
                _classify_task,
                [(n, tuple(b), want_classes, t0_only) for b in buckets]))

    hist: dict[int, int] = {}
    t0_count = 0
    class_map: dict[bytes, tuple[int, tuple[int, ...]]] = {}
    for part_hist, part_t0, part_classes in parts:
        for h, c in part_hist.items():
            hist[h] = hist.get(h, 0) + c
        t0_count += part_t0
        _merge_class_maps(class_map, part_classes)
    return hist, t0_count, class_map


def enumerate_classes(n: int) -> Iterator[tuple[CanonicalForm, FiniteTopology]]:
    """One (canonical form, representative) pair per homeomorphism class."""
    _check_cap(n, ENUM_MAX_POINTS)
    _, _, class_map = _classify_all(n)
    for enc in sorted(class_map):
        _, rows = class_map[enc]
        yield CanonicalForm(enc), topology_from_preorder(Preorder(n, rows))


def resolve_cache_dir(explicit: "str | os.PathLike | None" = None) -> Path:
    if explicit:
        return Path(explicit)
    return Path(os.environ.get(CACHE_ENV_VAR) or DEFAULT_CACHE_DIR)


def _cache_file(cache_dir: Path, n: int, t0_only: bool) -> Path:
    tag = "t0" if t0_only else "all"
    return cache_dir / f"counts-n{n}-{tag}.json"


def count_by_hausdorff(n: int, jobs: int = 1,
                       cache_dir: "str | os.PathLike | None" = None,
                       use_cache: bool = True,
                       t0_only: bool = False) -> CountsTable:
    """Classify every topology (and class) on n points by Hausdorff number.

    Results are cached as JSON keyed by (n, filter, cache version); a stale
    version triggers recomputation.  ``t0_only`` restricts the histogram and
    class counts to T0 topologies; ``t0_labeled_count`` is always the count
    of T0 topologies among all of them.
    """
    _check_cap(n, TABLE_MAX_POINTS)
    cache_path = _cache_file(resolve_cache_dir(cache_dir), n, t0_only)
    if use_cache and cache_path.is_file():
        try:
            doc = json.loads(cache_path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError):
            doc = None
        if doc and doc.get("cache_version") == CACHE_VERSION and doc.get("n") == n:
            return CountsTable.from_dict(doc)

    hist, t0_count, class_map = _classify_all(n, jobs=jobs, t0_only=t0_only)
    class_hist: dict[int, int] = {}
    for h, _ in class_map.values():
        class_hist[h] = class_hist.get(h, 0) + 1
    table = CountsTable(
        n=n,
        rows={k: (hist.get(k, 0), class_hist.get(k, 0))
              for k in sorted(set(hist) | set(class_hist))},
        labeled_total=sum(hist.values()),
        class_total=len(class_map),
        t0_labeled_count=t0_count,
        t0_only=t0_only,
    )

    if use_cache:
        try:
            cache_path.parent.mkdir(parents=True, exist_ok=True)
            cache_path.write_text(
                json.dumps(table.to_dict(), sort_keys=True, separators=(",", ":"))
                + "\n", encoding="utf-8")
        except OSError:
            pass  # caching is best-effort
    return table


def labeled_and_t0_counts(n: int) -> tuple[int, int]:
    """(number of topologies, number of T0 topologies) on n labeled points."""
    _check_cap(n, ENUM_MAX_POINTS)
    hist, t0_count, _ = _classify_all(n, want_classes=False)
    return sum(hist.values()), t0_count


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind by the standard recurrence."""
    if k < 0 or k > n:
        return 0
    table = [1] + [0] * k
    for row in range(1, n + 1):
        for col in range(min(row, k), 0, -1):
            table[col] = col * table[col] + table[col - 1]
        table[0] = 0
    return table[k]


@dataclass(slots=True)
class StirlingReport:
    n: int
    holds: bool
    topology_count: int
    combination_total: int
    terms: list[tuple[int, int, int]] = field(default_factory=list)  # (k, S(n,k), T0(k))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "holds": self.holds,
            "topology_count": self.topology_count,
            "combination_total": self.combination_total,
            "terms": [{"k": k, "stirling": s, "t0_count": t} for k, s, t in self.terms],
        }


def stirling_consistency(n: int) -> StirlingReport:
    """Check T(n) = sum over k of S(n,k) * T0(k) with this package's counts.

    Collapsing the partition blocks of a topology's indistinguishability
    relation leaves a T0 topology, which is where the identity comes from;
    here it is verified numerically from the enumerated counts.
    """
    _check_cap(n, STIRLING_MAX_POINTS)
    t_n, _ = labeled_and_t0_counts(n)
    terms = []
    total = 0
    for k in range(1, n + 1):
        _, t0_k = labeled_and_t0_counts(k)
        s = stirling2(n, k)
        terms.append((k, s, t0_k))
        total += s * t0_k
    return StirlingReport(n=n, holds=(total == t_n), topology_count=t_n,
                          combination_total=total, terms=terms)


def naive_enumerate_families(n: int) -> Iterator[tuple[int, ...]]:
    """Independent oracle: filter all candidate open families directly.

    Iterates every subset of the proper nonempty subsets of {0..n-1}, adjoins
    the empty and full set, and keeps the families closed under pairwise
    union and intersection.  Exponential in 2^n; the point is that it shares
    nothing with the preorder enumerator.
    """
    _check_cap(n, NAIVE_MAX_POINTS)
    full = (1 << n) - 1
    proper = [m for m in range(1, full)]
    for pick in range(1 << len(proper)):
        family = {0, full}
        for i, m in enumerate(proper):
            if pick >> i & 1:
                family.add(m)
        ok = True
        for u in family:
            for v in family:
                if (u | v) not in family or (u & v) not in family:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(sorted(family, key=lambda m: (m.bit_count(), m)))


def naive_counts(n: int) -> tuple[int, int]:
    """(topology count, T0 count) from the naive family filter."""
    total = 0
    t0_total = 0
    for family in naive_enumerate_families(n):
        total += 1
        mins = []
        for a in range(n):
            inter = (1 << n) - 1
            for m in family:
                if m >> a & 1:
                    inter &= m
            mins.append(inter)
        if len(set(mins)) == n:
            t0_total += 1
    return total, t0_total
