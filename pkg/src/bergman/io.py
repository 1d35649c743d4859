"""JSON formats and the compact command-line notation for flats.

Labels are 1-based everywhere in serialized output and every array is sorted.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from . import subsets as ss
from .complexes import BergmanFace, MatroidType, census, census_text, face_covers
from .decomposition import Decomposition
from .errors import BergmanError
from .lattice import FlatLattice, SimplicialComplex
from .matroid import Matroid, embed, from_bases, from_circuits, graphic, uniform


class InvalidInput(BergmanError):
    code = "InvalidInput"


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def _label_lists(masks) -> list[list[int]]:
    return sorted(ss.to_labels(m) for m in masks)


def _int_list(x, what: str) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise InvalidInput(f"{what} must be a list of integers", x)
    return x


def _masks(n: int, lists, what: str) -> list[int]:
    if not isinstance(lists, list):
        raise InvalidInput(f"{what} must be a list of label lists", lists)
    out = []
    for lst in lists:
        lst = _int_list(lst, what)
        if any(not 1 <= v <= n for v in lst):
            raise InvalidInput(f"{what} uses a label outside 1..{n}", lst)
        out.append(ss.from_labels(lst))
    return out


def matroid_from_json(obj: Any) -> Matroid:
    if not isinstance(obj, dict):
        raise InvalidInput("matroid JSON must be an object", None)
    if "uniform" in obj:
        r, n = _int_list(obj["uniform"], "uniform")
        return uniform(r, n)
    if "graphic" in obj:
        g = obj["graphic"]
        if not isinstance(g, dict) or "vertices" not in g or "edges" not in g:
            raise InvalidInput('graphic needs "vertices" and "edges"', g)
        edges = [tuple(_int_list(e, "edge")) for e in g["edges"]]
        if any(len(e) != 2 for e in edges):
            raise InvalidInput("edges must be pairs", g["edges"])
        return graphic(g["vertices"], edges)
    n = obj.get("n")
    if not isinstance(n, int) or n < 0:
        raise InvalidInput('"n" must be a non-negative integer', n)
    if "bases" in obj:
        return from_bases(n, _masks(n, obj["bases"], "bases"))
    if "circuits" in obj:
        return from_circuits(n, _masks(n, obj["circuits"], "circuits"))
    raise InvalidInput('expected one of "bases", "circuits", "uniform", "graphic"', sorted(obj))


def matroid_to_json(m: Matroid) -> dict:
    return {"n": m.n, "bases": _label_lists(m.bases)}


def type_to_json(t: MatroidType) -> dict:
    return {"bases": _label_lists(t.bases), "loopless": t.loopless}


def lattice_to_json(lat: FlatLattice) -> dict:
    return {
        "flats": [ss.to_labels(f) for f in lat.flats],
        "ranks": list(lat.ranks),
        "covers": [list(c) for c in lat.covers],
        "connected": list(lat.connected),
    }


def complex_to_json(cx: SimplicialComplex) -> dict:
    return {
        "vertices": [ss.to_labels(v) for v in cx.vertices],
        "faces": [list(f) for f in cx.faces],
        "maximal": list(cx.maximal),
    }


def complex_from_json(obj: dict) -> SimplicialComplex:
    return SimplicialComplex(
        tuple(ss.from_labels(v) for v in obj["vertices"]),
        tuple(tuple(f) for f in obj["faces"]),
        tuple(obj["maximal"]),
    )


def bergman_to_json(faces: Sequence[BergmanFace]) -> dict:
    verts = sorted({v for f in faces for v in f.vertices}, key=ss.sort_key)
    pos = {v: k for k, v in enumerate(verts)}
    counts = census(faces)
    return {
        "vertices": [ss.to_labels(v) for v in verts],
        "faces": [
            {
                "vertices": sorted(pos[v] for v in f.vertices),
                "dimension": f.dimension,
                "bases": _label_lists(f.matroid_type.bases),
            }
            for f in faces
        ],
        "covers": [list(c) for c in face_covers(faces)],
        "census": {
            "facets_by_vertex_count": {str(k): v for k, v in counts.items()},
            "summary": census_text(faces),
        },
    }


def decomposition_to_json(d: Decomposition) -> dict:
    lab = lambda mask: [d.parent.labels[i] for i in ss.elements(mask)]  # noqa: E731
    summands = []
    for s in d.summands:
        summands.append({
            "block": lab(s.block),
            "lower": lab(s.spec.lower),
            "upper": lab(s.spec.upper),
            "bases": sorted(lab(embed(b, s.block)) for b in s.matroid.bases),
        })
    return {"partition": [lab(b) for b in d.partition], "summands": summands}


# ---------------------------------------------------------------------------
# compact notation


def parse_flat(token: str, n: int) -> int:
    """'1234' -> {1,2,3,4} when n <= 9; '[1,10,12]' always works; '' or '[]' is the empty set."""
    token = token.strip()
    if token.startswith("["):
        if not token.endswith("]"):
            raise InvalidInput(f"unbalanced brackets in {token!r}", token)
        inner = token[1:-1].strip()
        labels = [int(x) for x in inner.split(",")] if inner else []
    else:
        if n > 9 and token:
            raise InvalidInput("digit-string notation needs n <= 9; use [a,b,...]", token)
        if token and not token.isdigit():
            raise InvalidInput(f"cannot parse {token!r}", token)
        labels = [int(ch) for ch in token]
    if any(not 1 <= x <= n for x in labels):
        raise InvalidInput(f"label outside 1..{n} in {token!r}", token)
    return ss.from_labels(labels)


def parse_flat_list(text: str, n: int) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [parse_flat(tok, n) for tok in text.split(";")]


def parse_weights(text: str, n: int) -> list[int]:
    try:
        w = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InvalidInput(f"weights must be comma-separated integers: {text!r}", text) from exc
    if len(w) != n:
        raise InvalidInput(f"expected {n} weights, got {len(w)}", w)
    return w
