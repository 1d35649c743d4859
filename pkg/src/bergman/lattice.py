"""Lattice of flats, building sets, nested set complexes and order complexes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from . import subsets as ss
from .errors import MemberNotInBuildingSet, TopMissing
from .linalg import integer_rank
from .matroid import Matroid, closure, connected_components, embed, flats, is_connected, minor


@dataclass(frozen=True)
class FlatLattice:
    matroid: Matroid
    flats: tuple[int, ...]
    ranks: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    connected: tuple[bool, ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {f: i for i, f in enumerate(self.flats)}

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.flats) - 1

    @cached_property
    def by_rank(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(max(self.ranks) + 1)]
        for i, r in enumerate(self.ranks):
            out[r].append(i)
        return tuple(tuple(b) for b in out)

    @property
    def atoms(self) -> tuple[int, ...]:
        return self.by_rank[1] if len(self.by_rank) > 1 else ()

    def leq(self, i: int, j: int) -> bool:
        return ss.is_subset(self.flats[i], self.flats[j])

    def below(self, x: int) -> list[int]:
        """Indices of the interval ``[bottom, x]``."""
        fx = self.flats[x]
        return [i for i, f in enumerate(self.flats) if ss.is_subset(f, fx)]

    def proper_part(self) -> list[int]:
        return list(range(1, len(self.flats) - 1))

    def fmt(self, i: int) -> str:
        return self.matroid.fmt(self.flats[i])


def lattice_of_flats(m: Matroid) -> FlatLattice:
    fs = flats(m)
    ranks = [m.rank_of(f) for f in fs]
    covers = []
    for i, f in enumerate(fs):
        for j, g in enumerate(fs):
            if ranks[j] == ranks[i] + 1 and ss.is_subset(f, g):
                covers.append((i, j))
    bottom = fs[0]
    connected = [is_connected(minor(m, (bottom, f))) for f in fs]
    return FlatLattice(m, tuple(fs), tuple(ranks), tuple(covers), tuple(connected))


def join(lat: FlatLattice, xs: Iterable[int]) -> int:
    union = lat.flats[lat.bottom]
    for x in xs:
        union |= lat.flats[x]
    return lat.index[closure(lat.matroid, union)]


def meet(lat: FlatLattice, xs: Iterable[int]) -> int:
    inter = lat.flats[lat.top]
    for x in xs:
        inter &= lat.flats[x]
    return lat.index[inter]


# ---------------------------------------------------------------------------
# building sets


@dataclass(frozen=True)
class BuildingSet:
    members: frozenset[int]
    contains_top: bool


def maximal_elements(lat: FlatLattice, xs: Iterable[int]) -> list[int]:
    xs = list(xs)
    return [x for x in xs if not any(y != x and lat.leq(x, y) for y in xs)]


def building_set_counterexample(lat: FlatLattice, members: Iterable[int]) -> int | None:
    """First flat X > bottom at which the product-of-intervals map fails to be an isomorphism."""
    members = set(members)
    for x in range(1, len(lat.flats)):
        below_x = lat.below(x)
        gens = maximal_elements(lat, [g for g in members if g in set(below_x)])
        if not gens:
            return x
        factors = [lat.below(g) for g in gens]
        images = {}
        for tup in product(*factors):
            img = join(lat, tup)
            if img in images:
                return x
            images[img] = tup
        if len(images) != len(below_x):
            return x
        # Phi is monotone; check it reflects the order as well
        items = list(images.items())
        for (i1, t1), (i2, t2) in product(items, repeat=2):
            if lat.leq(i1, i2) and not all(lat.leq(a, b) for a, b in zip(t1, t2)):
                return x
    return None


def is_building_set(lat: FlatLattice, members: Iterable[int] | BuildingSet) -> bool:
    if isinstance(members, BuildingSet):
        members = members.members
    members = set(members)
    if lat.bottom in members:
        return False
    return building_set_counterexample(lat, members) is None


def minimal_building_set(lat: FlatLattice) -> BuildingSet:
    members = {i for i in range(1, len(lat.flats)) if lat.connected[i]}
    members.add(lat.top)
    return BuildingSet(frozenset(members), True)


def maximal_building_set(lat: FlatLattice) -> BuildingSet:
    return BuildingSet(frozenset(range(1, len(lat.flats))), True)


def building_set_from(lat: FlatLattice, members: Iterable[int]) -> BuildingSet:
    members = frozenset(members)
    return BuildingSet(members, lat.top in members)


# ---------------------------------------------------------------------------
# nested sets and simplicial complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """Explicit face list; vertices are flats (bitmasks), faces index into ``vertices``.

    The empty face is not listed.
    """

    vertices: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]
    maximal: tuple[int, ...]

    def facets(self) -> list[tuple[int, ...]]:
        return [self.faces[i] for i in self.maximal]

    def facet_vertex_sets(self) -> set[frozenset[int]]:
        return {frozenset(self.vertices[v] for v in f) for f in self.facets()}

    def face_vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(self.vertices[v] for v in f) for f in self.faces]

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-1)


def _comparable(lat: FlatLattice, a: int, b: int) -> bool:
    return lat.leq(a, b) or lat.leq(b, a)


def _is_antichain(lat: FlatLattice, xs: Sequence[int]) -> bool:
    return not any(_comparable(lat, a, b) for a, b in combinations(xs, 2))


def _antichain_join_ok(lat: FlatLattice, members: set[int], chosen: Sequence[int], new: int) -> bool:
    """Incremental nested-set test: only antichains containing ``new`` are examined."""
    others = [c for c in chosen if not _comparable(lat, c, new)]
    for k in range(1, len(others) + 1):
        for combo in combinations(others, k):
            if not _is_antichain(lat, combo):
                continue
            if join(lat, (*combo, new)) in members:
                return False
    return True


def is_nested(lat: FlatLattice, building: BuildingSet, s: Iterable[int]) -> bool:
    s = list(s)
    stray = [x for x in s if x not in building.members]
    if stray:
        raise MemberNotInBuildingSet(
            "nested-set candidates must come from the building set",
            [ss.to_labels(lat.flats[x]) for x in stray],
        )
    for k in range(2, len(s) + 1):
        for combo in combinations(s, k):
            if _is_antichain(lat, combo) and join(lat, combo) in building.members:
                return False
    return True


def _complex_from_faces(lat: FlatLattice, faces: list[tuple[int, ...]]) -> SimplicialComplex:
    """Canonicalize a face list given in lattice indices."""
    verts = sorted({v for f in faces for v in f})
    pos = {v: k for k, v in enumerate(verts)}
    canon = sorted({tuple(sorted(pos[v] for v in f)) for f in faces}, key=lambda f: (len(f), f))
    fsets = [frozenset(f) for f in canon]
    maximal = tuple(i for i, f in enumerate(fsets) if not any(f < g for g in fsets[i + 1:]))
    return SimplicialComplex(tuple(lat.flats[v] for v in verts), tuple(canon), maximal)


def nested_sets(lat: FlatLattice, building: BuildingSet) -> list[tuple[int, ...]]:
    """All nonempty nested subsets of the building set minus the top, by backtracking."""
    if lat.top not in building.members:
        raise TopMissing("the building set must contain the top element")
    members = set(building.members)
    cands = sorted(members - {lat.top})
    out = []

    def extend(chosen: list[int], start: int):
        for k in range(start, len(cands)):
            v = cands[k]
            if _antichain_join_ok(lat, members, chosen, v):
                chosen.append(v)
                out.append(tuple(chosen))
                extend(chosen, k + 1)
                chosen.pop()

    extend([], 0)
    return out


def nested_set_complex(lat: FlatLattice, building: BuildingSet) -> SimplicialComplex:
    return _complex_from_faces(lat, nested_sets(lat, building))


def chains(lat: FlatLattice) -> list[tuple[int, ...]]:
    """All nonempty chains in the proper part, each listed bottom-up."""
    proper = lat.proper_part()
    out = []

    def extend(chain: list[int]):
        for v in proper:
            if chain and not (lat.ranks[v] > lat.ranks[chain[-1]] and lat.leq(chain[-1], v)):
                continue
            chain.append(v)
            out.append(tuple(chain))
            extend(chain)
            chain.pop()

    extend([])
    return out


def order_complex(lat: FlatLattice) -> SimplicialComplex:
    return _complex_from_faces(lat, chains(lat))


def incidence_vector(lat: FlatLattice, i: int) -> tuple[int, ...]:
    f = lat.flats[i]
    return tuple((f >> k) & 1 for k in range(lat.matroid.n))


def incidence_rank(lat: FlatLattice, xs: Iterable[int]) -> int:
    return integer_rank([incidence_vector(lat, x) for x in xs])


def support_nested_set(lat: FlatLattice, chain: Iterable[int]) -> tuple[int, ...]:
    """Connected components of the chain elements, as flat indices in the minimal building set."""
    m = lat.matroid
    bottom = lat.flats[lat.bottom]
    out = set()
    for x in chain:
        f = lat.flats[x]
        sub = minor(m, (bottom, f))
        for comp in connected_components(sub):
            out.add(lat.index[bottom | embed(comp, f & ~bottom)])
    return tuple(sorted(out))
