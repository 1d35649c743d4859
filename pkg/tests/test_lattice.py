from itertools import combinations

import pytest

import oracles as O
from bergman import subsets as ss
from bergman.errors import MemberNotInBuildingSet, TopMissing
from bergman.lattice import (
    BuildingSet,
    building_set_counterexample,
    chains,
    incidence_rank,
    incidence_vector,
    is_building_set,
    is_nested,
    join,
    lattice_of_flats,
    maximal_building_set,
    meet,
    minimal_building_set,
    nested_set_complex,
    nested_sets,
    order_complex,
    support_nested_set,
)
from bergman.matroid import direct_sum, from_circuits, graphic, uniform
from conftest import F, S


@pytest.fixture(scope="module")
def lat2(m6):
    return lattice_of_flats(m6)


def idx(lat, text):
    return lat.index[F(text)]


def test_three_circuit_lattice(lat2):
    assert lat2.flats[lat2.bottom] == 0
    assert lat2.flats[lat2.top] == F("123456")
    assert [lat2.flats[a] for a in lat2.atoms] == [S(i) for i in range(1, 7)]
    assert all(lat2.connected[idx(lat2, t)] for t in ("1", "1234", "123456"))
    assert not lat2.connected[idx(lat2, "12")]
    assert len(lat2.by_rank) == 5


def test_small_lattices():
    lat = lattice_of_flats(uniform(1, 2))
    assert lat.flats == (0, S(1, 2))
    lat = lattice_of_flats(uniform(3, 3))
    assert len(lat.flats) == 8


def test_covers_are_rank_steps(lat2):
    for i, j in lat2.covers:
        assert lat2.ranks[j] == lat2.ranks[i] + 1 and lat2.leq(i, j)
    # every non-bottom flat covers something
    assert {j for _, j in lat2.covers} == set(range(1, len(lat2.flats)))


def test_join_meet(lat2):
    assert join(lat2, []) == lat2.bottom
    assert meet(lat2, []) == lat2.top
    assert join(lat2, [idx(lat2, "1"), idx(lat2, "2")]) == idx(lat2, "12")
    assert join(lat2, [idx(lat2, t) for t in "123"]) == idx(lat2, "1234")
    assert meet(lat2, [idx(lat2, "1234"), idx(lat2, "1256")]) == idx(lat2, "12")


def test_lattice_laws(instances):
    for m in instances.values():
        lat = lattice_of_flats(m)
        n = len(lat.flats)
        for a in range(n):
            assert join(lat, [a, a]) == a == meet(lat, [a, a])
            for b in range(n):
                assert join(lat, [a, b]) == join(lat, [b, a])
                assert meet(lat, [a, join(lat, [a, b])]) == a  # absorption
            # atomic: every flat is the join of the atoms below it
            assert join(lat, [x for x in lat.atoms if lat.leq(x, a)]) == a


class TestBuildingSets:
    def test_extremes(self, lat2):
        assert is_building_set(lat2, maximal_building_set(lat2))
        assert is_building_set(lat2, minimal_building_set(lat2))

    def test_atoms_fail_at_a_circuit(self, lat2):
        assert not is_building_set(lat2, lat2.atoms)
        assert lat2.flats[building_set_counterexample(lat2, lat2.atoms)] == F("1234")

    def test_minimal_contents(self, lat2):
        members = {lat2.flats[i] for i in minimal_building_set(lat2).members}
        expected = {S(i) for i in range(1, 7)} | {F("1234"), F("1256"), F("3456"), F("123456")}
        assert members == expected
        free = lattice_of_flats(uniform(3, 3))
        got = {free.flats[i] for i in minimal_building_set(free).members}
        assert got == {S(1), S(2), S(3), S(1, 2, 3)}
        u12 = lattice_of_flats(uniform(1, 2))
        assert minimal_building_set(u12).members == {u12.top}

    def test_minimality(self, instances):
        for m in [*instances.values(), uniform(3, 3), direct_sum([uniform(1, 2), uniform(2, 3)])]:
            lat = lattice_of_flats(m)
            if len(lat.flats) > 50:
                continue
            g = minimal_building_set(lat)
            assert is_building_set(lat, g)
            for x in g.members - {lat.top}:
                assert not is_building_set(lat, g.members - {x})

    def test_bottom_not_allowed(self, lat2):
        assert not is_building_set(lat2, set(maximal_building_set(lat2).members) | {lat2.bottom})


class TestNested:
    def test_chain_is_nested(self, lat2):
        g = minimal_building_set(lat2)
        assert is_nested(lat2, g, [idx(lat2, "1"), idx(lat2, "1234")])

    def test_triangle_through_a_non_member(self, lat2):
        g = minimal_building_set(lat2)
        assert is_nested(lat2, g, [idx(lat2, t) for t in ("1", "2", "1234")])
        assert idx(lat2, "12") not in g.members
        assert not is_nested(lat2, g, [idx(lat2, t) for t in ("1", "2", "3")])

    def test_maximal_building_set(self, lat2):
        g = maximal_building_set(lat2)
        assert not is_nested(lat2, g, [idx(lat2, "1"), idx(lat2, "2")])

    def test_errors(self, lat2):
        g = minimal_building_set(lat2)
        with pytest.raises(MemberNotInBuildingSet):
            is_nested(lat2, g, [idx(lat2, "12")])
        with pytest.raises(TopMissing):
            nested_set_complex(lat2, BuildingSet(g.members - {lat2.top}, False))

    def test_backtracking_matches_brute_force(self, instances):
        for m in instances.values():
            lat = lattice_of_flats(m)
            g = minimal_building_set(lat)
            cands = sorted(g.members - {lat.top})
            brute = {
                c for k in range(1, len(cands) + 1) for c in combinations(cands, k)
                if is_nested(lat, g, c)
            } if len(cands) <= 12 else None
            if brute is not None:
                assert set(nested_sets(lat, g)) == brute


class TestComplexes:
    def test_minimal_nested_census(self, lat2):
        cx = nested_set_complex(lat2, minimal_building_set(lat2))
        facets = cx.facet_vertex_sets()
        assert len(facets) == 26 and all(len(f) == 3 for f in facets)
        assert cx.dimension == 2

    def test_maximal_building_set_gives_order_complex(self, instances):
        for m in instances.values():
            lat = lattice_of_flats(m)
            assert nested_set_complex(lat, maximal_building_set(lat)) == order_complex(lat)

    def test_order_complex_figure_simplices(self, lat2):
        faces = set(order_complex(lat2).face_vertex_sets())
        assert frozenset({F("1"), F("12"), F("1234")}) in faces
        assert frozenset({F("1"), F("12"), F("1256")}) in faces

    def test_order_complex_chains_brute(self, instances):
        for m in instances.values():
            lat = lattice_of_flats(m)
            proper = [lat.flats[i] for i in lat.proper_part()]
            top_rank = lat.ranks[lat.top]
            brute = {
                frozenset(c)
                for k in range(1, top_rank)
                for c in combinations(proper, k)
                if all(ss.is_subset(a, b) or ss.is_subset(b, a) for a, b in combinations(c, 2))
            }
            assert set(order_complex(lat).face_vertex_sets()) == brute

    def test_small_complexes(self):
        lat = lattice_of_flats(uniform(1, 2))
        assert nested_set_complex(lat, minimal_building_set(lat)).faces == ()
        assert order_complex(lat).faces == ()
        free = lattice_of_flats(uniform(3, 3))
        oc = order_complex(free)
        # proper part of the Boolean lattice on 3 atoms: a hexagon
        assert len(oc.vertices) == 6
        assert sum(len(f) == 2 for f in oc.faces) == 6

    def test_facets_flagged(self, lat2):
        cx = order_complex(lat2)
        sets = cx.face_vertex_sets()
        for i, f in enumerate(sets):
            assert (i in cx.maximal) == (not any(f < g for g in sets))


class TestIncidence:
    def test_vectors(self, lat2):
        assert incidence_vector(lat2, idx(lat2, "1234")) == (1, 1, 1, 1, 0, 0)
        assert incidence_vector(lat2, lat2.bottom) == (0,) * 6

    def test_nested_sets_independent(self, instances):
        for m in instances.values():
            lat = lattice_of_flats(m)
            for building in (minimal_building_set(lat), maximal_building_set(lat)):
                for s in nested_sets(lat, building):
                    vecs = [incidence_vector(lat, x) for x in s]
                    assert incidence_rank(lat, s) == O.fraction_rank(vecs) == len(s)

    def test_support_map_is_nested(self, instances):
        for m in instances.values():
            lat = lattice_of_flats(m)
            g = minimal_building_set(lat)
            for ch in chains(lat):
                s = support_nested_set(lat, ch)
                assert set(s) <= g.members
                assert is_nested(lat, g, s)

    def test_support_of_figure_chain(self, lat2):
        ch = [idx(lat2, t) for t in ("1", "12", "1234")]
        assert {lat2.flats[i] for i in support_nested_set(lat2, ch)} == {F("1"), F("2"), F("1234")}


def test_lattice_with_loops():
    m = from_circuits(3, [S(1)])
    lat = lattice_of_flats(m)
    assert lat.flats[lat.bottom] == S(1)
    g = minimal_building_set(lat)
    assert is_building_set(lat, g)


def test_graphic_k4_building_set():
    lat = lattice_of_flats(graphic(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]))
    g = minimal_building_set(lat)
    assert is_building_set(lat, g)
    assert len(g.members) == 6 + 4 + 1
