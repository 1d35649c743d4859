"""Ground-set subsets as int bitmasks.

Bit ``i`` stands for ground element ``i`` (0-based); labels shown to users are
1-based, so element ``i`` prints as ``i + 1``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def size(mask: int) -> int:
    return mask.bit_count()


def elements(mask: int) -> list[int]:
    """0-based indices of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def from_elements(idxs: Iterable[int]) -> int:
    mask = 0
    for i in idxs:
        mask |= 1 << i
    return mask


def from_labels(labels: Iterable[int]) -> int:
    return from_elements(x - 1 for x in labels)


def to_labels(mask: int) -> list[int]:
    return [i + 1 for i in elements(mask)]


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def all_subsets(n: int) -> range:
    return range(1 << n)


def subsets_of_size(n: int, k: int) -> Iterator[int]:
    for combo in combinations(range(n), k):
        yield from_elements(combo)


def submasks(mask: int) -> Iterator[int]:
    """Every subset of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compact(mask: int, labels: Iterable[int] | None = None) -> str:
    """Short notation, e.g. 0b1111 -> '1234'. Only unambiguous for labels <= 9."""
    idx = elements(mask)
    if labels is not None:
        labels = list(labels)
        names = [labels[i] for i in idx]
    else:
        names = [i + 1 for i in idx]
    if all(x <= 9 for x in names):
        return "".join(str(x) for x in names) or "{}"
    return "[" + ",".join(str(x) for x in names) + "]"


def sort_key(mask: int) -> tuple[int, list[int]]:
    """Order by size, then lexicographically by element list."""
    return (mask.bit_count(), elements(mask))
