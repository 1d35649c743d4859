"""Direct-sum decomposition of matroid types from the vertices of a face.

For a vertex set ``gamma`` let the blocks be the classes of elements with the
same membership pattern across ``gamma``. For a block ``a`` with ``I`` the
intersection of the vertices containing it (the whole ground set if none
does), the summand is the minor ``M[I - a, I]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import subsets as ss
from .complexes import (
    BergmanFace,
    flacets,
    has_full_omega_rank,
    matroid_type_from_flats,
)
from .errors import ReassemblyMismatch, RefinementViolation
from .lattice import FlatLattice, lattice_of_flats, support_nested_set
from .matroid import Matroid, MinorSpec, direct_sum_on, is_connected, minor


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[int, ...]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def refines(self, other: "BlockPartition") -> bool:
        """True if every block lies inside a block of ``other``."""
        return all(any(ss.is_subset(a, b) for b in other.blocks) for a in self.blocks)

    def fmt(self, labels: Sequence[int] | None = None) -> str:
        return "|".join(ss.compact(b, labels) for b in self.blocks)


def _canonical_blocks(blocks: Iterable[int]) -> BlockPartition:
    return BlockPartition(tuple(sorted((b for b in blocks if b), key=lambda b: ss.elements(b)[0])))


def partition_from_vertices(n: int, gamma: Iterable[int]) -> BlockPartition:
    gamma = sorted(set(gamma))
    classes: dict[tuple[int, ...], int] = {}
    for x in range(n):
        pattern = tuple((f >> x) & 1 for f in gamma)
        classes[pattern] = classes.get(pattern, 0) | (1 << x)
    return _canonical_blocks(classes.values())


def join_partitions(n: int, parts: Iterable[BlockPartition]) -> BlockPartition:
    """Common refinement of several partitions by pairwise block intersection."""
    blocks = [ss.full(n)] if n else []
    for p in parts:
        blocks = [a & b for a in blocks for b in p.blocks if a & b]
    return _canonical_blocks(blocks)


def block_bounds(n: int, gamma: Iterable[int], partition: BlockPartition) -> list[tuple[int, int, int]]:
    """``(block, lower, upper)`` for every block, with upper the meet of the vertices containing it."""
    gamma = list(gamma)
    out = []
    for block in partition:
        upper = ss.full(n)
        for f in gamma:
            if ss.is_subset(block, f):
                upper &= f
        out.append((block, upper & ~block, upper))
    return out


@dataclass(frozen=True)
class Summand:
    block: int
    spec: MinorSpec
    matroid: Matroid


@dataclass(frozen=True)
class Decomposition:
    parent: Matroid
    partition: BlockPartition
    summands: tuple[Summand, ...]
    reassembled: Matroid

    def fmt(self) -> str:
        m = self.parent
        parts = []
        for s in self.summands:
            lo = "∅" if s.spec.lower == 0 else m.fmt(s.spec.lower)
            parts.append(f"M[{lo},{m.fmt(s.spec.upper)}]")
        return " ⊕ ".join(parts)


def decompose_face(m: Matroid, gamma: Iterable[int]) -> Decomposition:
    """Split the matroid type of ``gamma`` into minors, one per block.

    Raises :class:`ReassemblyMismatch` when the direct sum of the pieces is not
    exactly the type computed from ``gamma``; that happens when ``gamma`` is
    not the vertex set of a face.
    """
    gamma = sorted(set(gamma))
    t = matroid_type_from_flats(m, gamma)
    witness = [ss.to_labels(f) for f in gamma]
    if t.empty:
        raise ReassemblyMismatch("no basis is tight on every member", witness)
    part = partition_from_vertices(m.n, gamma)
    summands = []
    for block, lo, hi in block_bounds(m.n, gamma, part):
        summands.append(Summand(block, MinorSpec(lo, hi), minor(m, MinorSpec(lo, hi))))
    try:
        whole = direct_sum_on(m.n, [(s.matroid, s.block) for s in summands])
    except ValueError as exc:
        raise ReassemblyMismatch(f"summands do not assemble: {exc}", witness) from exc
    if whole.bases != t.bases:
        raise ReassemblyMismatch("direct sum of summands differs from the matroid type", witness)
    whole = Matroid(whole.n, whole.rank, whole.bases, m.labels)
    return Decomposition(m, part, tuple(summands), whole)


def verify_finest(m: Matroid, face: BergmanFace | Iterable[int]) -> bool:
    gamma = face.vertices if isinstance(face, BergmanFace) else face
    return all(is_connected(s.matroid) for s in decompose_face(m, gamma).summands)


@dataclass(frozen=True)
class CoarsenessReport:
    chain: BlockPartition
    nested: BlockPartition
    bergman: BlockPartition

    @property
    def all_equal(self) -> bool:
        return self.chain == self.nested == self.bergman


def coarseness_chain(m: Matroid, chain: Sequence[int], lat: FlatLattice | None = None) -> CoarsenessReport:
    """Partitions for a chain of flats, its supporting nested set and its Bergman face.

    Each partition must refine the one before it.
    """
    lat = lat or lattice_of_flats(m)
    idx = [lat.index[f] for f in chain]
    nested = [lat.flats[i] for i in support_nested_set(lat, idx)]
    t = matroid_type_from_flats(m, chain)
    verts = [f for f in flacets(m) if has_full_omega_rank(t, f)]
    levels = [decompose_face(m, g).partition for g in (chain, nested, verts)]
    for coarse, fine in zip(levels, levels[1:]):
        if not fine.refines(coarse):
            raise RefinementViolation(
                f"{fine.fmt(m.labels)} does not refine {coarse.fmt(m.labels)}",
                [ss.to_labels(f) for f in chain],
            )
    return CoarsenessReport(*levels)
