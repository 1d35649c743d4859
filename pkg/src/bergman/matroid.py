"""Matroids given by an explicit list of bases.

Subsets of the ground set are int bitmasks (see :mod:`bergman.subsets`). All
queries are scans over the basis list, which is fine for ground sets of a
dozen or so elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from . import subsets as ss
from .errors import (
    EmptyBasisList,
    ExchangeAxiomViolated,
    InconsistentCircuits,
    InvalidRank,
    NotAnAntichain,
    NotConnected,
    OutOfGroundSet,
    SpecNotNested,
    UnequalCardinalities,
)
from .linalg import integer_rank


@dataclass(frozen=True)
class Matroid:
    """A matroid on ``{0, ..., n-1}`` with canonically sorted bases.

    Build instances with :func:`from_bases` (or the other constructors), which
    validate the basis-exchange axiom. ``labels`` names each element for
    display; minors keep the labels of their parent.
    """

    n: int
    rank: int
    bases: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))

    @property
    def ground(self) -> int:
        return ss.full(self.n)

    @cached_property
    def _basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @cached_property
    def _rank_cache(self) -> dict[int, int]:
        return {}

    def is_basis(self, b: int) -> bool:
        return b in self._basis_set

    def is_independent(self, a: int) -> bool:
        return any(a & ~b == 0 for b in self.bases)

    def rank_of(self, a: int) -> int:
        cache = self._rank_cache
        r = cache.get(a)
        if r is None:
            r = max((a & b).bit_count() for b in self.bases)
            cache[a] = r
        return r

    def fmt(self, mask: int) -> str:
        return ss.compact(mask, self.labels)

    def __str__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"


@dataclass(frozen=True)
class MinorSpec:
    lower: int
    upper: int


# ---------------------------------------------------------------------------
# construction


def exchange_violation(bases: Sequence[int]) -> tuple[int, int, int] | None:
    """First ``(b1, b2, x)`` breaking basis exchange, or None if the axiom holds."""
    present = set(bases)
    for b1 in bases:
        for b2 in bases:
            if b1 == b2:
                continue
            ys = ss.elements(b2 & ~b1)
            for x in ss.elements(b1 & ~b2):
                stripped = b1 & ~(1 << x)
                if not any(stripped | (1 << y) in present for y in ys):
                    return b1, b2, x
    return None


def from_bases(n: int, bases: Iterable[int], labels: Sequence[int] = ()) -> Matroid:
    if n < 0:
        raise InvalidRank(f"negative ground set size {n}")
    canon = tuple(sorted(set(bases)))
    ground = ss.full(n)
    for b in canon:
        if b & ~ground:
            raise OutOfGroundSet(f"basis {ss.to_labels(b)} leaves the ground set", ss.to_labels(b))
    if not canon:
        if n == 0:
            canon = (0,)
        else:
            raise EmptyBasisList(f"no bases given for n={n}")
    sizes = {b.bit_count() for b in canon}
    if len(sizes) > 1:
        raise UnequalCardinalities(
            f"bases have sizes {sorted(sizes)}", sorted(sizes)
        )
    bad = exchange_violation(canon)
    if bad is not None:
        b1, b2, x = bad
        witness = {"b1": ss.to_labels(b1), "b2": ss.to_labels(b2), "x": x + 1}
        raise ExchangeAxiomViolated(
            f"no exchange for x={x + 1} from {witness['b1']} into {witness['b2']}", witness
        )
    return Matroid(n, sizes.pop(), canon, tuple(labels))


def _is_antichain(family: Sequence[int]) -> tuple[int, int] | None:
    for a, b in combinations(family, 2):
        if ss.is_subset(a, b) or ss.is_subset(b, a):
            return a, b
    return None


def from_circuits(n: int, circuits: Iterable[int]) -> Matroid:
    circs = sorted(set(circuits))
    for c in circs:
        if c == 0 or c & ~ss.full(n):
            raise OutOfGroundSet(f"bad circuit {ss.to_labels(c)}", ss.to_labels(c))
    pair = _is_antichain(circs)
    if pair is not None:
        raise NotAnAntichain(
            "circuit family is not an antichain", [ss.to_labels(p) for p in pair]
        )
    indep = [a for a in ss.all_subsets(n) if not any(ss.is_subset(c, a) for c in circs)]
    indep_set = set(indep)
    maximal = [
        a for a in indep
        if not any((a | (1 << x)) in indep_set for x in ss.elements(ss.full(n) & ~a))
    ]
    if len({a.bit_count() for a in maximal}) > 1:
        raise InconsistentCircuits(
            "maximal independent sets have different sizes",
            [ss.to_labels(a) for a in maximal],
        )
    try:
        m = from_bases(n, maximal)
    except ExchangeAxiomViolated as exc:
        raise InconsistentCircuits(str(exc), exc.witness) from exc
    if circuits_of(m) != circs:
        raise InconsistentCircuits(
            "circuits of the resulting matroid differ from the input",
            [ss.to_labels(c) for c in circuits_of(m)],
        )
    return m


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise InvalidRank(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return from_bases(n, ss.subsets_of_size(n, r))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def graphic(vertex_count: int, edges: Sequence[tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; edge ``k`` becomes ground element ``k``.

    Vertices are numbered ``1..vertex_count``. Self-loops become matroid loops.
    """
    for u, v in edges:
        if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
            raise OutOfGroundSet(f"edge ({u}, {v}) uses an unknown vertex", [u, v])
    parent = list(range(vertex_count + 1))
    for u, v in edges:
        parent[_find(parent, u)] = _find(parent, v)
    roots = {_find(parent, v) for v in range(1, vertex_count + 1)}
    r = vertex_count - len(roots)
    m = len(edges)

    def is_forest(idxs):
        par = list(range(vertex_count + 1))
        for k in idxs:
            a, b = _find(par, edges[k][0]), _find(par, edges[k][1])
            if a == b:
                return False
            par[a] = b
        return True

    bases = [ss.from_elements(c) for c in combinations(range(m), r) if is_forest(c)]
    return from_bases(m, bases)


# ---------------------------------------------------------------------------
# rank, closure, flats, circuits


def rank_of(m: Matroid, a: int) -> int:
    return m.rank_of(a)


def closure(m: Matroid, a: int) -> int:
    r = m.rank_of(a)
    out = a
    for x in ss.elements(m.ground & ~a):
        if m.rank_of(a | (1 << x)) == r:
            out |= 1 << x
    return out


def is_flat(m: Matroid, a: int) -> bool:
    return closure(m, a) == a


def flats(m: Matroid) -> list[int]:
    """All flats, grouped by rank, each rank bucket sorted by :func:`subsets.sort_key`.

    Grown upward from the loops by closing ``F + x`` for every flat ``F``.
    """
    bottom = closure(m, 0)
    layers = [[bottom]]
    seen = {bottom}
    while True:
        nxt = set()
        for f in layers[-1]:
            for x in ss.elements(m.ground & ~f):
                g = closure(m, f | (1 << x))
                if g not in seen:
                    seen.add(g)
                    nxt.add(g)
        if not nxt:
            break
        layers.append(sorted(nxt, key=ss.sort_key))
    return [f for layer in layers for f in layer]


def circuits_of(m: Matroid) -> list[int]:
    """Inclusion-minimal dependent sets, sorted by int value."""
    return list(_circuits(m))


@lru_cache(maxsize=4096)
def _circuits(m: Matroid) -> tuple[int, ...]:
    out = []
    for k in range(1, m.rank + 2):
        for a in ss.subsets_of_size(m.n, k):
            if m.is_independent(a):
                continue
            if all(m.is_independent(a & ~(1 << x)) for x in ss.elements(a)):
                out.append(a)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# minors and sums


def minor(m: Matroid, spec: MinorSpec | tuple[int, int]) -> Matroid:
    """``M[F, G]``: restrict to G, contract F, relabel over ``G - F``."""
    if isinstance(spec, tuple):
        spec = MinorSpec(*spec)
    lo, hi = spec.lower, spec.upper
    if hi & ~m.ground:
        raise OutOfGroundSet("minor bounds leave the ground set", ss.to_labels(hi & ~m.ground))
    if not ss.is_subset(lo, hi):
        raise SpecNotNested(
            f"{m.fmt(lo)} is not contained in {m.fmt(hi)}",
            {"lower": ss.to_labels(lo), "upper": ss.to_labels(hi)},
        )
    r_lo, r_hi = m.rank_of(lo), m.rank_of(hi)
    keep = ss.elements(hi & ~lo)
    new_bases = set()
    for b in m.bases:
        if (b & lo).bit_count() == r_lo and (b & hi).bit_count() == r_hi:
            new_bases.add(_compress(b, keep))
    return from_bases(len(keep), new_bases, [m.labels[i] for i in keep])


def _compress(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for pos, i in enumerate(keep):
        if mask >> i & 1:
            out |= 1 << pos
    return out


def embed(mask: int, block: int) -> int:
    """Inverse of compression: place bit ``k`` of ``mask`` on the k-th element of ``block``."""
    out = 0
    for pos, i in enumerate(ss.elements(block)):
        if mask >> pos & 1:
            out |= 1 << i
    return out


def direct_sum(ms: Sequence[Matroid]) -> Matroid:
    """Direct sum; summand ground sets are concatenated in order."""
    offsets = []
    n = 0
    for m in ms:
        offsets.append(n)
        n += m.n
    bases = [
        sum(b << off for b, off in zip(choice, offsets))
        for choice in product(*(m.bases for m in ms))
    ]
    labels = [lab for m in ms for lab in m.labels]
    return from_bases(n, bases, labels)


def direct_sum_on(n: int, parts: Sequence[tuple[Matroid, int]]) -> Matroid:
    """Direct sum where summand ``m`` lives on the ground elements in ``block``.

    ``parts`` is a list of ``(matroid, block)`` with blocks partitioning the
    ground set of size ``n``; element k of a summand goes to the k-th smallest
    element of its block.
    """
    for m, block in parts:
        if m.n != block.bit_count():
            raise OutOfGroundSet("summand size does not match its block", ss.to_labels(block))
    bases = [
        sum(embed(b, block) for b, (_, block) in zip(choice, parts))
        for choice in product(*(m.bases for m, _ in parts))
    ]
    return from_bases(n, bases)


# ---------------------------------------------------------------------------
# connectivity


def connected_components(m: Matroid) -> list[int]:
    """Classes of the relation "x and y lie on a common circuit", sorted by least element."""
    parent = list(range(m.n))
    for c in circuits_of(m):
        els = ss.elements(c)
        for x in els[1:]:
            parent[_find(parent, x)] = _find(parent, els[0])
    classes: dict[int, int] = {}
    for x in range(m.n):
        root = _find(parent, x)
        classes[root] = classes.get(root, 0) | (1 << x)
    return sorted(classes.values(), key=lambda c: ss.elements(c)[0])


def component_count(m: Matroid) -> int:
    return len(connected_components(m))


def is_connected(m: Matroid) -> bool:
    return component_count(m) <= 1


def is_loopless(m: Matroid) -> bool:
    union = 0
    for b in m.bases:
        union |= b
    return union == m.ground


# ---------------------------------------------------------------------------
# polytope data


def polytope_inequalities(m: Matroid, all_flats: bool = False) -> list[tuple[int, int]]:
    """Pairs ``(F, rank F)`` for the inequalities ``sum_{i in F} x_i <= rank F``.

    By default only flacets are listed; those together with ``x_i >= 0`` and
    ``sum x_i = rank`` cut out the matroid polytope. ``all_flats=True`` returns
    the redundant system over every nonempty flat.
    """
    if not is_connected(m):
        raise NotConnected("the inequality description needs a connected matroid")
    if all_flats:
        fs = [f for f in flats(m) if f]
    else:
        from .complexes import flacets

        fs = flacets(m)
    return [(f, m.rank_of(f)) for f in fs]


def polytope_edge_directions(m: Matroid) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` with two bases differing exactly by swapping i and j."""
    pairs = set()
    for b1, b2 in combinations(m.bases, 2):
        diff = b1 ^ b2
        if diff.bit_count() == 2:
            i, j = ss.elements(diff)
            pairs.add((i, j))
    return sorted(pairs)


def polytope_dimension(m: Matroid) -> int:
    """Dimension of the matroid polytope via the rank of its edge directions ``e_i - e_j``."""
    rows = []
    for i, j in polytope_edge_directions(m):
        row = [0] * m.n
        row[i], row[j] = 1, -1
        rows.append(row)
    return integer_rank(rows)
