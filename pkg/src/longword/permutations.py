"""Permutations of {1, ..., n} in one-line notation.

A permutation w is stored as the tuple (w(1), ..., w(n)) with 1-based
values.  The simple transposition s_i exchanges i and i+1; acting on the
right it swaps the entries in positions i and i+1, acting on the left it
swaps the values i and i+1 wherever they sit.  Length means the number
of inversions, so the longest element of degree n has length n(n-1)/2.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

Permutation = tuple[int, ...]
Shape = tuple[int, ...]


def is_permutation(seq: Iterable[int]) -> bool:
    """True when seq is a rearrangement of 1..n for n = len(seq)."""
    values = list(seq)
    return sorted(values) == list(range(1, len(values) + 1))


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation (n, n-1, ..., 1).

    >>> longest_element(4)
    (4, 3, 2, 1)
    >>> longest_element(1)
    (1,)
    """
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    return tuple(range(n, 0, -1))


def inverse(w: Permutation) -> Permutation:
    """Inverse permutation: position of each value.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def length(w: Permutation) -> int:
    """Number of inversions, i.e. pairs p < q with w(p) > w(q)."""
    n = len(w)
    return sum(1 for p in range(n) for q in range(p + 1, n) if w[p] > w[q])


def apply_simple_left(i: int, w: Permutation) -> Permutation:
    """Compose s_i on the left: swap the values i and i+1 inside w.

    >>> apply_simple_left(1, (4, 3, 2, 1))
    (4, 3, 1, 2)
    >>> apply_simple_left(2, (4, 3, 1, 2))
    (4, 2, 1, 3)
    """
    n = len(w)
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple index must lie in [1, {n - 1}], got {i}")
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(v, v) for v in w)


def apply_simple_right(w: Permutation, i: int) -> Permutation:
    """Compose s_i on the right: swap the entries in positions i and i+1.

    >>> apply_simple_right((4, 3, 2, 1), 2)
    (4, 2, 3, 1)
    """
    n = len(w)
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple index must lie in [1, {n - 1}], got {i}")
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def left_descents(w: Permutation) -> set[int]:
    """Indices i with length(s_i w) < length(w).

    These are exactly the i whose value i+1 appears before i in w.

    >>> sorted(left_descents((4, 2, 1, 3)))
    [1, 3]
    >>> left_descents((1, 2, 3))
    set()
    """
    pos = inverse(w)
    return {i for i in range(1, len(w)) if pos[i - 1] > pos[i]}


def right_descents(w: Permutation) -> set[int]:
    """Indices i with length(w s_i) < length(w), i.e. w(i) > w(i+1)."""
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def is_vexillary(w: Permutation) -> bool:
    """True when w has no positions p1<p2<p3<p4 patterned like (2,1,4,3).

    >>> is_vexillary((2, 1, 4, 3))
    False
    >>> is_vexillary((4, 3, 2, 1))
    True
    """
    for p1, p2, p3, p4 in combinations(range(len(w)), 4):
        if w[p2] < w[p1] < w[p4] < w[p3]:
            return False
    return True


def shape_of(w: Permutation) -> Shape:
    """Partition of length(w) recording inversions by position.

    Entry r_p counts the earlier positions carrying a larger value than
    position p; the partition is the multiset of nonzero r_p sorted in
    weakly decreasing order.

    >>> shape_of((4, 3, 2, 1))
    (3, 2, 1)
    >>> shape_of((4, 2, 1, 3))
    (2, 1, 1)
    """
    rows = []
    for p, val in enumerate(w):
        r = sum(1 for q in range(p) if w[q] > val)
        if r:
            rows.append(r)
    rows.sort(reverse=True)
    return tuple(rows)


def two_step_lowering(n: int, j: int) -> Permutation:
    """The permutation s_{j+1} s_j w0 of degree n, for 1 <= j <= n-2.

    One-line form: n, ..., j+3, j+1, j, j+2, j-1, ..., 1.  It arises by
    removing the first two letters (j, j+1) from a reduced word of the
    longest element, and it is always vexillary.

    >>> two_step_lowering(4, 1)
    (4, 2, 1, 3)
    >>> two_step_lowering(4, 2)
    (3, 2, 4, 1)
    """
    if n < 3:
        raise ValueError(f"degree must be at least 3, got {n}")
    if not 1 <= j <= n - 2:
        raise ValueError(f"index must lie in [1, {n - 2}], got {j}")
    w = apply_simple_left(j + 1, apply_simple_left(j, longest_element(n)))
    return w


def check_permutation(w: Sequence[int]) -> Permutation:
    """Return w as a tuple, raising ValueError when it is not a permutation."""
    t = tuple(w)
    if not is_permutation(t):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t!r}")
    return t
