"""Acceptance criteria 1-9. Each prints one PASS/FAIL line.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles as O  # noqa: E402
import test_properties as P  # noqa: E402
from bergman import catalog  # noqa: E402
from bergman import complexes as cxm  # noqa: E402
from bergman import matroid as mm  # noqa: E402
from bergman import subsets as ss  # noqa: E402
from bergman.complexes import (  # noqa: E402
    bergman_complex,
    bergman_facets,
    census_text,
    incidence_weights,
    matroid_type_from_flats,
    matroid_type_oracle,
    refinement_audit,
)
from bergman.decomposition import coarseness_chain, decompose_face, verify_finest  # noqa: E402
from bergman.lattice import (  # noqa: E402
    chains,
    lattice_of_flats,
    maximal_building_set,
    minimal_building_set,
    nested_set_complex,
    nested_sets,
)
from bergman.matroid import (  # noqa: E402
    component_count,
    connected_components,
    direct_sum,
    flats,
    graphic,
    minor,
    polytope_dimension,
    uniform,
)


def F(text):
    return ss.from_labels(int(c) for c in text)


def fs(*texts):
    return frozenset(F(t) for t in texts)


QUADRANGLES = {
    fs("1", "2", "1234", "1256"),
    fs("3", "4", "1234", "3456"),
    fs("5", "6", "1256", "3456"),
}
SPLIT_TRIANGLES = {
    fs("1", "2", "1234"), fs("1", "2", "1256"),
    fs("3", "4", "1234"), fs("3", "4", "3456"),
    fs("5", "6", "1256"), fs("5", "6", "3456"),
}
QUAD_TYPE = sorted(F(x) for x in ("1235", "1236", "1245", "1246"))

RESULTS = {}


def all_faces(m, lat):
    """Vertex sets (as flats) of every face of the order, nested set and Bergman complexes."""
    out = []
    for building in (maximal_building_set(lat), minimal_building_set(lat)):
        out += [[lat.flats[i] for i in s] for s in nested_sets(lat, building)]
    out += [sorted(f.vertices) for f in bergman_complex(m, lat)]
    return out


def criterion_1():
    cxm._flacets.cache_clear()
    mm._circuits.cache_clear()
    start = time.perf_counter()
    m = catalog.three_circuits()
    faces = bergman_complex(m)
    elapsed = time.perf_counter() - start
    verts = {v for f in faces for v in f.vertices}
    facets = {f.vertices for f in bergman_facets(faces)}
    quads = {v for v in facets if len(v) == 4}
    ok = (
        len(verts) == 9
        and verts == {1 << i for i in range(6)} | {F("1234"), F("1256"), F("3456")}
        and sum(len(v) == 3 for v in facets) == 20
        and len(facets) == 23
        and quads == QUADRANGLES
        and elapsed < 5
    )
    return ok, f"9 vertices, {census_text(faces)}, {elapsed:.2f}s"


def criterion_2():
    m = catalog.three_circuits()
    lat = lattice_of_flats(m)
    nested = nested_set_complex(lat, minimal_building_set(lat)).facet_vertex_sets()
    berg = {f.vertices for f in bergman_facets(bergman_complex(m, lat))}
    ok = (
        len(nested) == 26
        and all(len(s) == 3 for s in nested)
        and nested - berg == SPLIT_TRIANGLES
        and berg - nested == QUADRANGLES
        and all(sum(t <= q for t in SPLIT_TRIANGLES) == 2 for q in QUADRANGLES)
    )
    return ok, f"{len(nested)} triangles, {len(nested - berg)} replace the quadrangles"


def criterion_3():
    m = catalog.three_circuits()
    gamma = [F("1"), F("2"), F("1234"), F("1256")]
    t = matroid_type_from_flats(m, gamma)
    w = incidence_weights(6, gamma)
    o = matroid_type_oracle(m, [3, 3, 1, 1, 1, 1])
    ok = list(t.bases) == QUAD_TYPE and list(o.bases) == QUAD_TYPE and w == [3, 3, 1, 1, 1, 1]
    return ok, "type " + " ".join(ss.compact(b) for b in t.bases)


def criterion_4():
    m = catalog.three_circuits()
    d = decompose_face(m, [F("1"), F("2"), F("1234"), F("1256")])
    ok = (
        d.partition.fmt() == "1|2|34|56"
        and d.fmt() == "M[∅,1] ⊕ M[∅,2] ⊕ M[12,1234] ⊕ M[12,1256]"
        and sorted(d.reassembled.bases) == QUAD_TYPE
    )
    return ok, f"{d.partition.fmt()} : {d.fmt()}"


def criterion_5():
    rng = random.Random(20261016)
    start = time.perf_counter()
    trials = agree = 0
    for m in catalog.instances().values():
        lat = lattice_of_flats(m)
        for gamma in all_faces(m, lat):
            expected = matroid_type_from_flats(m, gamma).bases
            for _ in range(20):
                lam = [rng.randint(1, 5) for _ in gamma]
                trials += 1
                got = matroid_type_oracle(m, incidence_weights(m.n, gamma, lam)).bases
                agree += got == expected and list(got) == O.argmax_type(m, incidence_weights(m.n, gamma, lam))
    elapsed = time.perf_counter() - start
    return agree == trials and elapsed < 60, f"{agree}/{trials} trials agree, {elapsed:.1f}s"


def criterion_6():
    total = good = 0
    for m in catalog.instances().values():
        for face in bergman_complex(m):
            total += 1
            good += verify_finest(m, face)
    return good == total, f"{good}/{total} Bergman faces split into connected summands"


def criterion_7():
    failures = []
    count = 0
    for name, m in catalog.instances().items():
        assert m.n <= 7
        checks = [
            ("submodularity", lambda: P.check_submodular(m)),
            ("closure", lambda: P.check_closure(m)),
            ("looplessness", lambda: [P.check_looplessness_criterion(m, t) for t in P.types_of(m)]),
            ("full-rank closure", lambda: [P.check_full_rank_closure(m, t) for t in P.types_of(m, (0, 1))]),
            ("complement flacets", lambda: P.check_complement_flacets(m)),
            ("flacet intersection", lambda: P.check_connected_flat_intersection(m, bergman_complex(m))),
        ]
        for label, check in checks:
            count += 1
            try:
                check()
            except AssertionError:
                failures.append(f"{name}:{label}")
    return not failures, f"{count - len(failures)}/{count} suites pass" + (f" (failed: {failures})" if failures else "")


def criterion_8():
    checked = 0
    bad = []
    for name, m in catalog.instances().items():
        lat = lattice_of_flats(m)
        if not refinement_audit(m, lat).ok:
            bad.append(f"{name}:audit")
        top_rank = lat.ranks[lat.top]
        for ch in chains(lat):
            rep = coarseness_chain(m, [lat.flats[i] for i in ch], lat)
            checked += 1
            if len(ch) == top_rank - 1 and not rep.all_equal:
                bad.append(f"{name}:maximal chain")
        for face in bergman_facets(bergman_complex(m, lat)):
            t = face.matroid_type.as_matroid()
            if any(t.rank_of(c) != 1 for c in connected_components(t)):
                bad.append(f"{name}:facet type")
    return not bad, f"{checked} chains checked, {len(bad)} violations"


def constructed_matroids():
    out = list(catalog.instances().values())
    out += [uniform(r, n) for n in range(0, 6) for r in range(0, n + 1)]
    out += [direct_sum([uniform(1, 2), uniform(2, 3)]), graphic(4, [(1, 2), (2, 3), (1, 3), (3, 4), (3, 4), (1, 1)])]
    for m in catalog.instances().values():
        fl = flats(m)
        out += [minor(m, (a, b)) for a in fl for b in fl if ss.is_subset(a, b)]
        out += [f.matroid_type.as_matroid() for f in bergman_complex(m)]
    return out


def criterion_9():
    ms = constructed_matroids()
    bad = [m for m in ms if polytope_dimension(m) != m.n - component_count(m)]
    sample = ms[:: max(1, len(ms) // 200)]
    bad += [m for m in sample if polytope_dimension(m) != O.affine_dimension(m)]
    return not bad, f"{len(ms) - len(bad)}/{len(ms)} matroids satisfy dim = n - c"


CRITERIA = {
    1: ("Bergman census, three-circuit matroid", criterion_1),
    2: ("minimal nested set census", criterion_2),
    3: ("type of the quadrangle face", criterion_3),
    4: ("decomposition of the quadrangle face", criterion_4),
    5: ("oracle and flat formula agree on every face", criterion_5),
    6: ("Bergman-face decompositions are finest", criterion_6),
    7: ("property suites on n <= 7", criterion_7),
    8: ("refinement tower", criterion_8),
    9: ("polytope dimension n - c", criterion_9),
}


def line(k, ok, detail):
    return f"criterion {k}: {'PASS' if ok else 'FAIL'} - {CRITERIA[k][0]} ({detail})"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, detail = CRITERIA[k][1]()
    RESULTS[k] = line(k, ok, detail)
    print(RESULTS[k])
    assert ok, RESULTS[k]


if __name__ == "__main__":
    status = 0
    for k in sorted(CRITERIA):
        ok, detail = CRITERIA[k][1]()
        print(line(k, ok, detail))
        status |= not ok
    sys.exit(status)
