"""Pure-Python kernels for the enumeration hot paths.

Same contract as the compiled ``_fastcore`` extension; the package selects
one of the two at import time.  Everything here works on raw row bit masks:
``rows[a]`` is the mask of points reachable from ``a`` in the specialization
preorder, i.e. the minimal open neighborhood of ``a``.

Enumeration emits row tuples in ascending lexicographic order (rows compared
as integers, row 0 outermost), which both makes streams reproducible and lets
`classify` keep the first representative seen per canonical form.
"""

from __future__ import annotations

from itertools import permutations, product

MAX_ENUM_POINTS = 7


def _check_enum_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise ValueError(f"kernel supports 1..{MAX_ENUM_POINTS} points, got {n}")


def first_row_candidates(n: int) -> list[int]:
    """Ascending list of legal first rows: every mask containing point 0."""
    _check_enum_n(n)
    return [1 | (s << 1) for s in range(1 << (n - 1))]


def _row_candidates(rows: list[int], k: int, full: int):
    """Yield legal masks for row k given rows 0..k-1, ascending.

    A candidate m must contain bit k, stay inside every earlier row that
    contains k, and contain every earlier row whose index it contains;
    pairs involving rows > k are checked when those rows are assigned.
    """
    allowed = full
    for j in range(k):
        if rows[j] >> k & 1:
            allowed &= rows[j]
    base = 1 << k
    vary = allowed & ~base
    below = base - 1
    s = 0
    while True:
        m = base | s
        mm = m & below
        while mm:
            low = mm & -mm
            if rows[low.bit_length() - 1] & ~m:
                break
            mm ^= low
        else:
            yield m
        if s == vary:
            return
        s = (s - vary) & vary


def _complete(rows: list[int], k: int, n: int, full: int):
    if k == n:
        yield rows
        return
    for m in _row_candidates(rows, k, full):
        rows[k] = m
        yield from _complete(rows, k + 1, n, full)


def preorder_rows(n: int, first_row: int | None = None) -> list[tuple[int, ...]]:
    """All reflexive-transitive row tuples on n points, ascending.

    With ``first_row`` set, only the subtree with that fixed row 0.
    """
    _check_enum_n(n)
    full = (1 << n) - 1
    rows = [0] * n
    start = 0
    if first_row is not None:
        if not (first_row & 1) or first_row > full:
            raise ValueError(f"illegal first row {first_row:#x}")
        rows[0] = first_row
        start = 1
    return [tuple(r) for r in _complete(rows, start, n, full)]


def canonical_rows(n: int, rows) -> bytes:
    """Lexicographically minimal byte serialization over relabelings.

    Byte i carries row i of the permuted relation matrix (bit j set iff
    perm(i) <= perm(j)).  Minimization runs over the permutations that keep
    points grouped by the invariant (row popcount, column popcount) with
    groups in ascending key order; the invariant is relabeling-covariant, so
    equal outputs still characterize homeomorphism exactly.
    """
    _check_enum_n(n)
    colpc = [0] * n
    for row in rows:
        for x in range(n):
            colpc[x] += row >> x & 1
    keys = [(rows[a].bit_count(), colpc[a]) for a in range(n)]
    order = sorted(range(n), key=keys.__getitem__)

    blocks: list[list[int]] = []
    for a in order:
        if blocks and keys[blocks[-1][-1]] == keys[a]:
            blocks[-1].append(a)
        else:
            blocks.append([a])

    best = None
    for parts in product(*(permutations(b) for b in blocks)):
        perm = [p for part in parts for p in part]
        enc = bytes(
            sum(((rows[perm[i]] >> perm[j]) & 1) << j for j in range(n))
            for i in range(n)
        )
        if best is None or enc < best:
            best = enc
    return best


def classify(n: int, first_rows=None, want_classes: bool = True,
             t0_only: bool = False):
    """Walk the enumeration tree and aggregate per-topology statistics.

    Returns ``(hist, t0_count, class_map)`` where ``hist`` maps Hausdorff
    number to labeled count, ``t0_count`` counts topologies with pairwise
    distinct rows (all of them, ignoring ``t0_only``), and ``class_map``
    maps canonical encodings to ``(hausdorff_number, representative rows)``.
    With ``t0_only`` the histogram and class map only see T0 topologies.
    """
    _check_enum_n(n)
    full = (1 << n) - 1
    hist: dict[int, int] = {}
    t0_count = 0
    class_map: dict[bytes, tuple[int, tuple[int, ...]]] = {}

    if first_rows is None:
        first_rows = first_row_candidates(n)

    rows = [0] * n
    for fr in first_rows:
        rows[0] = fr
        for complete in _complete(rows, 1, n, full):
            h = 1 + max(
                sum(complete[a] >> x & 1 for a in range(n)) for x in range(n)
            )
            t0 = len(set(complete)) == n
            if t0:
                t0_count += 1
            if t0_only and not t0:
                continue
            hist[h] = hist.get(h, 0) + 1
            if want_classes:
                enc = canonical_rows(n, complete)
                if enc not in class_map:
                    class_map[enc] = (h, tuple(complete))
    return hist, t0_count, class_map
