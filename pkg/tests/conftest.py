import random

import pytest

from hausnum.core import Preorder


def transitive_closure(rows: list[int]) -> tuple[int, ...]:
    rows = list(rows)
    n = len(rows)
    changed = True
    while changed:
        changed = False
        for a in range(n):
            acc = rows[a]
            m = rows[a]
            while m:
                low = m & -m
                acc |= rows[low.bit_length() - 1]
                m ^= low
            if acc != rows[a]:
                rows[a] = acc
                changed = True
    return tuple(rows)


def random_preorder(n: int, rng: random.Random) -> Preorder:
    """Random preorder: identity plus random related pairs, closed transitively."""
    rows = [1 << a for a in range(n)]
    for _ in range(rng.randrange(0, 2 * n + 1)):
        a = rng.randrange(n)
        b = rng.randrange(n)
        rows[a] |= 1 << b
    return Preorder(n, transitive_closure(rows))


@pytest.fixture
def rng():
    return random.Random(0xA11CE)
