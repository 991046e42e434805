"""Hook lengths, exact tableau counts, staircases, corner deletion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .permutations import Shape


def check_partition(parts: Sequence[int]) -> Shape:
    """Return parts as a tuple, dropping trailing zeros; reject non-partitions."""
    t = tuple(parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if any(a < b for a, b in zip(t, t[1:])) or any(p < 0 for p in t):
        raise ValueError(f"not a partition: {tuple(parts)!r}")
    return t


def staircase(n: int) -> Shape:
    """The shape (n-1, n-2, ..., 1) of size n(n-1)/2.

    >>> staircase(4)
    (3, 2, 1)
    >>> staircase(1)
    ()
    """
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    return tuple(range(n - 1, 0, -1))


def conjugate(shape: Shape) -> Shape:
    """Transpose of the diagram: column lengths read as a partition."""
    parts = check_partition(shape)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def delete_corners(shape: Shape, rows: tuple[int, int]) -> Shape:
    """Remove one corner cell from each of two adjacent rows (1-based).

    Each named row must end in a removable corner of the original shape,
    i.e. must be strictly longer than the row below it.

    >>> delete_corners((3, 2, 1), (1, 2))
    (2, 1, 1)
    >>> delete_corners((3, 2, 1), (2, 3))
    (3, 1)
    """
    parts = check_partition(shape)
    r1, r2 = rows
    if r2 != r1 + 1:
        raise ValueError(f"rows must be adjacent, got {rows!r}")
    if not (1 <= r1 and r2 <= len(parts)):
        raise ValueError(f"rows {rows!r} outside shape of {len(parts)} rows")
    out = list(parts)
    for r in (r1, r2):
        below = parts[r] if r < len(parts) else 0
        if parts[r - 1] <= below:
            raise ValueError(f"row {r} of {parts!r} has no removable corner")
        out[r - 1] -= 1
    return check_partition(out)


@dataclass(frozen=True)
class HookGrid:
    """Per-cell hook lengths of a shape, row by row."""

    shape: Shape
    hooks: tuple[tuple[int, ...], ...]


def hook_grid(shape: Shape) -> HookGrid:
    """Hook length of each cell: arm + leg + 1.

    >>> hook_grid((3, 2, 1)).hooks
    ((5, 3, 1), (3, 1), (1,))
    """
    parts = check_partition(shape)
    cols = conjugate(parts)
    rows = tuple(
        tuple(parts[r] - c + cols[c] - r - 1 for c in range(parts[r]))
        for r in range(len(parts))
    )
    return HookGrid(parts, rows)


def hook_length_count(shape: Shape) -> int:
    """Number of standard fillings: size! / product of hooks, exactly.

    >>> hook_length_count((3, 2, 1))
    16
    >>> hook_length_count((2, 1, 1))
    3
    """
    grid = hook_grid(shape)
    size = sum(grid.shape)
    product = 1
    for row in grid.hooks:
        for h in row:
            product *= h
    count, remainder = divmod(factorial(size), product)
    assert remainder == 0, f"hook product does not divide {size}! for {shape!r}"
    return count


def tableau_ratio(n: int, j: int) -> Fraction:
    """Filling count of the corner-deleted staircase over the staircase's.

    Equals the probability that a uniform reduced word of the longest
    element of degree n starts with the letters (j, j+1).

    >>> tableau_ratio(4, 1)
    Fraction(3, 16)
    >>> tableau_ratio(3, 1)
    Fraction(1, 2)
    """
    if n < 3:
        raise ValueError(f"degree must be at least 3, got {n}")
    if not 1 <= j <= n - 2:
        raise ValueError(f"index must lie in [1, {n - 2}], got {j}")
    delta = staircase(n)
    deleted = delete_corners(delta, (j, j + 1))
    return Fraction(hook_length_count(deleted), hook_length_count(delta))
