"""Matroid types of faces, flacets and the Bergman complex.

A matroid type is the set of bases on which a weight vector is maximal. Two
independent routes compute it: :func:`matroid_type_oracle` (argmax over the
basis list) and :func:`matroid_type_from_flats` (the tight-flat formula).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import subsets as ss
from .errors import AuditFailure, NotAFlacet, NotAFlat, NotConnected, NotLoopless
from .lattice import (
    FlatLattice,
    chains,
    lattice_of_flats,
    minimal_building_set,
    nested_sets,
    support_nested_set,
)
from .matroid import (
    Matroid,
    component_count,
    flats,
    from_bases,
    is_connected,
    is_flat,
    is_loopless,
    minor,
)


@dataclass(frozen=True)
class MatroidType:
    parent: Matroid
    bases: tuple[int, ...]

    @property
    def loopless(self) -> bool:
        union = 0
        for b in self.bases:
            union |= b
        return bool(self.bases) and union == self.parent.ground

    @property
    def empty(self) -> bool:
        return not self.bases

    def as_matroid(self) -> Matroid:
        return from_bases(self.parent.n, self.bases, self.parent.labels)

    def __len__(self):
        return len(self.bases)


def _type(m: Matroid, bases: Iterable[int]) -> MatroidType:
    return MatroidType(m, tuple(sorted(bases)))


def matroid_type_oracle(m: Matroid, weights: Sequence[int]) -> MatroidType:
    if len(weights) != m.n:
        raise ValueError(f"weight vector has length {len(weights)}, expected {m.n}")
    scores = {b: sum(weights[i] for i in ss.elements(b)) for b in m.bases}
    best = max(scores.values())
    return _type(m, (b for b, s in scores.items() if s == best))


def matroid_type_from_flats(m: Matroid, gamma: Iterable[int]) -> MatroidType:
    """Bases that meet every flat of ``gamma`` in a maximal independent set.

    The result may have no bases, which means ``gamma`` spans no face.
    """
    gamma = list(gamma)
    for f in gamma:
        if not is_flat(m, f):
            raise NotAFlat(f"{m.fmt(f)} is not a flat", ss.to_labels(f))
    tight = [(f, m.rank_of(f)) for f in gamma]
    return _type(m, (b for b in m.bases if all((b & f).bit_count() == r for f, r in tight)))


def has_full_omega_rank(t: MatroidType, a: int) -> bool:
    r = t.parent.rank_of(a)
    return all((a & b).bit_count() == r for b in t.bases)


def incidence_weights(n: int, gamma: Iterable[int], coeffs: Sequence[int] | None = None) -> list[int]:
    """``sum lambda_F * e_F`` over the flats in ``gamma`` (all coefficients 1 by default)."""
    gamma = list(gamma)
    coeffs = coeffs if coeffs is not None else [1] * len(gamma)
    w = [0] * n
    for f, c in zip(gamma, coeffs):
        for i in ss.elements(f):
            w[i] += c
    return w


# ---------------------------------------------------------------------------
# flacets


def is_flacet(m: Matroid, f: int) -> bool:
    if f == 0 or f == m.ground or not is_flat(m, f):
        return False
    return is_connected(minor(m, (0, f))) and is_connected(minor(m, (f, m.ground)))


def flacets(m: Matroid) -> list[int]:
    if not is_connected(m):
        raise NotConnected("flacets are only defined here for connected matroids")
    return list(_flacets(m))


@lru_cache(maxsize=1024)
def _flacets(m: Matroid) -> tuple[int, ...]:
    return tuple(f for f in flats(m) if is_flacet(m, f))


# ---------------------------------------------------------------------------
# Bergman complex


@dataclass(frozen=True)
class BergmanFace:
    matroid_type: MatroidType
    vertices: frozenset[int]
    chains: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    @cached_property
    def dimension(self) -> int:
        # the dual of a polytope face of dimension n - c lives on the (n-2)-sphere
        if not self.vertices:
            return -1
        return component_count(self.matroid_type.as_matroid()) - 2

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices, key=ss.sort_key)


def _require_bergman_input(m: Matroid):
    if not is_connected(m):
        raise NotConnected("the Bergman complex is built for connected matroids")
    if not is_loopless(m):
        raise NotLoopless("the Bergman complex is built for loopless matroids")


def bergman_complex(m: Matroid, lat: FlatLattice | None = None) -> list[BergmanFace]:
    """All faces, including the empty face, grouped from chains of flats by matroid type.

    Faces are sorted by dimension, then by their vertex lists.
    """
    _require_bergman_input(m)
    lat = lat or lattice_of_flats(m)
    fcts = flacets(m)
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {m.bases: [()]}
    for ch in chains(lat):
        t = matroid_type_from_flats(m, (lat.flats[i] for i in ch))
        if t.loopless:
            groups.setdefault(t.bases, []).append(ch)
    faces = []
    for bases, chs in groups.items():
        t = MatroidType(m, bases)
        verts = frozenset(f for f in fcts if has_full_omega_rank(t, f))
        faces.append(BergmanFace(t, verts, tuple(chs)))
    faces.sort(key=lambda f: (f.dimension, [ss.sort_key(v) for v in f.sorted_vertices()]))
    return faces


def face_covers(faces: Sequence[BergmanFace]) -> list[tuple[int, int]]:
    """Cover relations ``(i, j)``: face i is a facet of face j (reverse inclusion of types)."""
    sets = [frozenset(f.matroid_type.bases) for f in faces]
    below = {
        j: [i for i in range(len(faces)) if i != j and sets[j] < sets[i]] for j in range(len(faces))
    }
    covers = []
    for j, lower in below.items():
        for i in lower:
            if not any(sets[j] < sets[k] < sets[i] for k in lower):
                covers.append((i, j))
    return sorted(covers)


def bergman_facets(faces: Sequence[BergmanFace]) -> list[BergmanFace]:
    sets = [frozenset(f.matroid_type.bases) for f in faces]
    return [f for f, s in zip(faces, sets) if not any(t < s for t in sets)]


def census(faces: Sequence[BergmanFace]) -> dict[int, int]:
    """Number of nonempty maximal faces by vertex count."""
    out: dict[int, int] = {}
    for f in bergman_facets(faces):
        if not f.vertices:
            continue
        out[len(f.vertices)] = out.get(len(f.vertices), 0) + 1
    return dict(sorted(out.items()))


_POLYGON_NAMES = {3: "triangles", 4: "quadrangles", 5: "pentagons", 6: "hexagons"}


def _cell_name(dim: int, k: int) -> str:
    if dim == 0:
        return "points"
    if dim == 1:
        return "edges"
    if dim == 2:
        return _POLYGON_NAMES.get(k, f"{k}-gons")
    if k == dim + 1:
        return f"{dim}-simplices"
    return f"{dim}-cells with {k} vertices"


def census_text(faces: Sequence[BergmanFace]) -> str:
    """Maximal faces in words, e.g. "20 triangles, 3 quadrangles"."""
    counts: dict[tuple[int, int], int] = {}
    for f in bergman_facets(faces):
        if f.vertices:
            key = (f.dimension, len(f.vertices))
            counts[key] = counts.get(key, 0) + 1
    if not counts:
        return "empty complex"
    return ", ".join(f"{c} {_cell_name(d, k)}" for (d, k), c in sorted(counts.items()))


# ---------------------------------------------------------------------------
# independent face test


@dataclass(frozen=True)
class FaceCheck:
    is_face: bool
    face: BergmanFace | None = None
    reason: str = ""
    witness: object = None


def face_vertex_set_check(m: Matroid, gamma: Iterable[int]) -> FaceCheck:
    """Decide whether ``gamma`` is the vertex set of a Bergman face without enumerating the complex.

    Checks, in order: every summand minor ``M[cap Gamma_a - a, cap Gamma_a]``
    has no loops, some basis is tight on every member of ``gamma``, and no
    further flacet is tight on all such bases.
    """
    from .decomposition import block_bounds, partition_from_vertices

    gamma = frozenset(gamma)
    fcts = flacets(m)
    for f in gamma:
        if f not in fcts:
            raise NotAFlacet(f"{m.fmt(f)} is not a flacet", ss.to_labels(f))

    for block, lo, hi in block_bounds(m.n, gamma, partition_from_vertices(m.n, gamma)):
        r_lo, r_hi = m.rank_of(lo), m.rank_of(hi)
        tight = [b for b in m.bases if (b & hi).bit_count() == r_hi and (b & lo).bit_count() == r_lo]
        covered = 0
        for b in tight:
            covered |= b
        missing = block & ~covered
        if missing:
            return FaceCheck(False, reason="element not covered by its summand",
                             witness=ss.to_labels(missing))

    t = matroid_type_from_flats(m, gamma)
    if t.empty:
        return FaceCheck(False, reason="no basis is tight on every vertex")

    extra = [f for f in fcts if f not in gamma and has_full_omega_rank(t, f)]
    if extra:
        return FaceCheck(False, reason="another flacet is tight on the whole type",
                         witness=[ss.to_labels(f) for f in extra])
    return FaceCheck(True, BergmanFace(t, gamma))


# ---------------------------------------------------------------------------
# refinement audit


@dataclass
class AuditReport:
    chains: int = 0
    nested_sets: int = 0
    bergman_faces: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def refinement_audit(m: Matroid, lat: FlatLattice | None = None, strict: bool = True) -> AuditReport:
    """Walk every chain up to its supporting nested set and Bergman face.

    The three matroid types must coincide, the supporting nested set must be a
    face of the minimal nested set complex, and the Bergman vertex set must be
    one of the enumerated faces. With ``strict`` the first mismatch raises
    :class:`AuditFailure` carrying the chain.
    """
    _require_bergman_input(m)
    lat = lat or lattice_of_flats(m)
    g_min = minimal_building_set(lat)
    nested_faces = {frozenset(s) for s in nested_sets(lat, g_min)}
    faces = bergman_complex(m, lat)
    by_vertices = {f.vertices: f for f in faces}
    fcts = flacets(m)
    report = AuditReport(nested_sets=len(nested_faces), bergman_faces=len(faces))
    seen_faces = set()

    for ch in chains(lat):
        report.chains += 1
        chain_flats = [lat.flats[i] for i in ch]
        t_chain = matroid_type_from_flats(m, chain_flats)
        support = support_nested_set(lat, ch)
        t_nested = matroid_type_from_flats(m, (lat.flats[i] for i in support))
        verts = frozenset(f for f in fcts if has_full_omega_rank(t_chain, f))
        face = by_vertices.get(verts)
        problem = None
        if frozenset(support) not in nested_faces:
            problem = "support is not a nested set"
        elif t_nested.bases != t_chain.bases:
            problem = "nested-set type differs from chain type"
        elif face is None:
            problem = "flacets of the chain type are not a Bergman face"
        elif face.matroid_type.bases != t_chain.bases:
            problem = "Bergman face type differs from chain type"
        if problem:
            witness = [ss.to_labels(f) for f in chain_flats]
            report.failures.append((problem, witness))
            if strict:
                raise AuditFailure(problem, witness)
        else:
            seen_faces.add(verts)

    unreached = [f for f in faces if f.vertices and f.vertices not in seen_faces]
    for f in unreached:
        witness = [ss.to_labels(v) for v in f.sorted_vertices()]
        report.failures.append(("Bergman face supports no chain", witness))
        if strict:
            raise AuditFailure("Bergman face supports no chain", witness)
    return report
