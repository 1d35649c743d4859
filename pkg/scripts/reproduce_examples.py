"""Print the worked examples on the six-element matroid with circuits 1234, 1256, 3456.

    python scripts/reproduce_examples.py [--json]
"""

import argparse
import json
from dataclasses import dataclass, field

from bergman import catalog
from bergman import subsets as ss
from bergman.cli import golden_outputs
from bergman.complexes import (
    bergman_complex,
    bergman_facets,
    census_text,
    flacets,
    incidence_weights,
    matroid_type_from_flats,
    matroid_type_oracle,
)
from bergman.decomposition import coarseness_chain, decompose_face
from bergman.io import parse_flat_list
from bergman.lattice import lattice_of_flats, minimal_building_set, nested_set_complex


@dataclass
class ExampleConfig:
    face: str = "1;2;1234;1256"
    chains: list[str] = field(default_factory=lambda: ["1;12;1234", "12", "12;1234"])


def fmt_set(family):
    return " ".join(ss.compact(f) for f in sorted(family, key=ss.sort_key))


def main(cfg: ExampleConfig, as_json: bool):
    if as_json:
        print(json.dumps(golden_outputs(), indent=1, sort_keys=True))
        return
    m = catalog.three_circuits()
    lat = lattice_of_flats(m)

    faces = bergman_complex(m, lat)
    print("flacets:", fmt_set(flacets(m)))
    print("Bergman complex:", census_text(faces))
    for f in bergman_facets(faces):
        if len(f.vertices) == 4:
            print("  quadrangle", fmt_set(f.vertices))

    nested = nested_set_complex(lat, minimal_building_set(lat)).facet_vertex_sets()
    berg = {f.vertices for f in bergman_facets(faces)}
    print(f"nested set complex (minimal building set): {len(nested)} triangles")
    for t in sorted(nested - berg, key=lambda s: sorted(map(ss.sort_key, s))):
        print("  new triangle", fmt_set(t))

    gamma = parse_flat_list(cfg.face, m.n)
    t = matroid_type_from_flats(m, gamma)
    w = incidence_weights(m.n, gamma)
    agree = matroid_type_oracle(m, w).bases == t.bases
    print(f"type of face {fmt_set(gamma)}: {fmt_set(t.bases)}  (weights {w}, oracle agrees: {agree})")

    d = decompose_face(m, gamma)
    print(f"decomposition: {d.partition.fmt()}  {d.fmt()}")

    print("partitions chain / nested set / Bergman face:")
    for text in cfg.chains:
        rep = coarseness_chain(m, parse_flat_list(text, m.n), lat)
        print(f"  {text:<10} {rep.chain.fmt():<10} {rep.nested.fmt():<10} {rep.bergman.fmt()}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="dump the golden JSON outputs instead")
    ap.add_argument("--face", default=ExampleConfig.face)
    args = ap.parse_args()
    main(ExampleConfig(face=args.face), args.json)
