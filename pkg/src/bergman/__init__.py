"""Exact matroid toolkit: flats, nested set complexes, Bergman complexes and
direct-sum decompositions of matroid types."""

from .complexes import (
    BergmanFace,
    MatroidType,
    bergman_complex,
    face_vertex_set_check,
    flacets,
    has_full_omega_rank,
    matroid_type_from_flats,
    matroid_type_oracle,
    refinement_audit,
)
from .decomposition import coarseness_chain, decompose_face, partition_from_vertices, verify_finest
from .lattice import (
    FlatLattice,
    lattice_of_flats,
    maximal_building_set,
    minimal_building_set,
    nested_set_complex,
    order_complex,
)
from .matroid import (
    Matroid,
    MinorSpec,
    circuits_of,
    closure,
    connected_components,
    direct_sum,
    from_bases,
    from_circuits,
    graphic,
    minor,
    polytope_dimension,
    uniform,
)

__all__ = [name for name in dir() if not name.startswith("_")]
