"""Named test matroids."""

from __future__ import annotations

from . import subsets as ss
from .matroid import Matroid, from_circuits, graphic, uniform

THREE_CIRCUITS = ([1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 5, 6])

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def three_circuits() -> Matroid:
    """Rank 4 on six elements; the circuits are 1234, 1256 and 3456."""
    return from_circuits(6, [ss.from_labels(c) for c in THREE_CIRCUITS])


def k4() -> Matroid:
    return graphic(4, K4_EDGES)


def instances() -> dict[str, Matroid]:
    """The connected, loopless instances every theorem is checked on."""
    return {
        "three_circuits": three_circuits(),
        "U(2,4)": uniform(2, 4),
        "U(2,5)": uniform(2, 5),
        "U(3,5)": uniform(3, 5),
        "K4": k4(),
    }
