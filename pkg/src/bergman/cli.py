"""Command-line entry point: ``bergman <verb> --input matroid.json [options]``.

Output is JSON on stdout (or ``--output``). Validation errors exit with
status 1 and an ``{"error": ..., "witness": ...}`` object; I/O errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import catalog
from . import subsets as ss
from .complexes import (
    bergman_complex,
    bergman_facets,
    flacets,
    matroid_type_from_flats,
    matroid_type_oracle,
    refinement_audit,
)
from .decomposition import coarseness_chain, decompose_face, verify_finest
from .errors import BergmanError
from .io import (
    InvalidInput,
    bergman_to_json,
    complex_to_json,
    decomposition_to_json,
    dumps,
    lattice_to_json,
    matroid_from_json,
    parse_flat_list,
    parse_weights,
    type_to_json,
)
from .lattice import (
    building_set_counterexample,
    building_set_from,
    chains,
    lattice_of_flats,
    maximal_building_set,
    minimal_building_set,
    nested_set_complex,
    order_complex,
)
from .matroid import Matroid, flats

VERBS = ("flats", "flacets", "lattice", "order-complex", "nested-set", "bergman",
         "type", "decompose", "audit", "examples")


class InputUnavailable(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bergman", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=VERBS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", "-i", help="matroid JSON file")
    src.add_argument("--matroid", "-m", help="inline matroid JSON")
    p.add_argument("--building-set", default="minimal",
                   help="minimal, maximal, or a flat list like '1;2;1234;123456'")
    p.add_argument("--weights", "-w", help="comma-separated integer weight vector")
    p.add_argument("--gamma", "-g", help="flats as '1;2;1234;1256' or '[1,10];[2]'")
    p.add_argument("--output", "-o", help="write JSON here instead of stdout")
    p.add_argument("--write", metavar="DIR", help="examples: write golden files into DIR")
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; computation is single-threaded")
    return p


def load_matroid(args) -> Matroid:
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise InputUnavailable(str(exc)) from exc
    elif args.matroid:
        text = args.matroid
    else:
        raise InvalidInput("no matroid given; use --input or --matroid")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON: {exc}") from exc
    return matroid_from_json(obj)


def _require(value, flag: str):
    if value is None:
        raise InvalidInput(f"{flag} is required for this command")
    return value


def audit(m: Matroid) -> dict:
    lat = lattice_of_flats(m)
    report = refinement_audit(m, lat)
    top_rank = lat.ranks[lat.top]
    maximal_equal = True
    coarseness = 0
    for ch in chains(lat):
        res = coarseness_chain(m, [lat.flats[i] for i in ch], lat)
        coarseness += 1
        if len(ch) == top_rank - 1 and not res.all_equal:
            maximal_equal = False
    faces = bergman_complex(m, lat)
    finest = all(verify_finest(m, f) for f in faces)
    rank_one = all(
        all(s.matroid.rank == 1 for s in decompose_face(m, f.vertices).summands)
        for f in bergman_facets(faces)
    )
    return {
        "chains": report.chains,
        "nested_sets": report.nested_sets,
        "bergman_faces": report.bergman_faces,
        "coarseness_checked": coarseness,
        "maximal_chains_equal": maximal_equal,
        "finest": finest,
        "maximal_faces_rank_one_sums": rank_one,
        "ok": report.ok and maximal_equal and finest and rank_one,
    }


def golden_outputs() -> dict[str, dict]:
    """Reference outputs for the three-circuit matroid on six elements."""
    m = catalog.three_circuits()
    lat = lattice_of_flats(m)
    gamma = parse_flat_list("1;2;1234;1256", m.n)
    t_flats = matroid_type_from_flats(m, gamma)
    t_oracle = matroid_type_oracle(m, [3, 3, 1, 1, 1, 1])
    return {
        "bergman_census": bergman_to_json(bergman_complex(m, lat)),
        "nested_set_census": complex_to_json(nested_set_complex(lat, minimal_building_set(lat))),
        "face_type": {
            "gamma": type_to_json(t_flats),
            "weights": type_to_json(t_oracle),
            "agree": t_flats.bases == t_oracle.bases,
        },
        "face_decomposition": decomposition_to_json(decompose_face(m, gamma)),
    }


def run_examples(write_dir: str | None) -> tuple[int, dict]:
    outputs = golden_outputs()
    if write_dir:
        out = Path(write_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, obj in outputs.items():
            (out / f"{name}.json").write_text(dumps(obj))
        return 0, {name: "written" for name in outputs}
    golden = resources.files("bergman") / "golden"
    status = {}
    for name, obj in outputs.items():
        expected = (golden / f"{name}.json").read_text()
        status[name] = "ok" if dumps(obj) == expected else "differs"
    return (0 if all(v == "ok" for v in status.values()) else 1), status


def dispatch(args) -> tuple[int, object]:
    if args.verb == "examples":
        return run_examples(args.write)

    m = load_matroid(args)
    verb = args.verb
    if verb == "flats":
        fs = flats(m)
        return 0, {"flats": [ss.to_labels(f) for f in fs], "ranks": [m.rank_of(f) for f in fs]}
    if verb == "flacets":
        return 0, {"flacets": [ss.to_labels(f) for f in flacets(m)]}

    lat = lattice_of_flats(m)
    if verb == "lattice":
        return 0, lattice_to_json(lat)
    if verb == "order-complex":
        return 0, complex_to_json(order_complex(lat))
    if verb == "nested-set":
        choice = args.building_set
        if choice == "minimal":
            g = minimal_building_set(lat)
        elif choice == "maximal":
            g = maximal_building_set(lat)
        else:
            fs = parse_flat_list(choice, m.n)
            missing = [ss.to_labels(f) for f in fs if f not in lat.index]
            if missing:
                raise InvalidInput("building set members must be flats", missing)
            g = building_set_from(lat, (lat.index[f] for f in fs))
            bad = building_set_counterexample(lat, g.members)
            if lat.bottom in g.members or bad is not None:
                raise InvalidInput("not a building set",
                                   ss.to_labels(lat.flats[bad]) if bad is not None else [])
        return 0, complex_to_json(nested_set_complex(lat, g))
    if verb == "bergman":
        return 0, bergman_to_json(bergman_complex(m, lat))
    if verb == "type":
        if args.weights is not None:
            t = matroid_type_oracle(m, parse_weights(args.weights, m.n))
        else:
            t = matroid_type_from_flats(m, parse_flat_list(_require(args.gamma, "--gamma or --weights"), m.n))
        return 0, type_to_json(t)
    if verb == "decompose":
        gamma = parse_flat_list(_require(args.gamma, "--gamma"), m.n)
        return 0, decomposition_to_json(decompose_face(m, gamma))
    if verb == "audit":
        res = audit(m)
        return (0 if res["ok"] else 1), res
    raise InvalidInput(f"unknown verb {verb}")  # unreachable: argparse restricts choices


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, payload = dispatch(args)
    except InputUnavailable as exc:
        status, payload = 2, {"error": "IOError", "message": str(exc), "witness": None}
    except BergmanError as exc:
        status, payload = 1, {"error": exc.code, "message": str(exc), "witness": exc.witness}
    except ValueError as exc:
        status, payload = 1, {"error": "InvalidInput", "message": str(exc), "witness": None}
    text = dumps(payload)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            sys.stdout.write(dumps({"error": "IOError", "message": str(exc), "witness": None}))
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
