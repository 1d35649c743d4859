"""Face census and timings for the three complexes over a family of small matroids.

    python scripts/census.py [--max-n 7] [--csv out.csv]
"""

import argparse
import csv
import sys
import time
from dataclasses import asdict, dataclass

from bergman import catalog
from bergman.complexes import bergman_complex, bergman_facets, census_text, flacets, refinement_audit
from bergman.decomposition import verify_finest
from bergman.lattice import lattice_of_flats, minimal_building_set, nested_set_complex, order_complex
from bergman.matroid import graphic, is_connected, is_loopless, uniform


@dataclass
class CensusConfig:
    max_n: int = 7
    audit: bool = True


@dataclass
class Row:
    name: str
    n: int
    rank: int
    flats: int
    flacets: int
    order_facets: int
    nested_facets: int
    bergman_faces: int
    bergman_facets: str
    finest: bool
    audit_ok: bool | None
    seconds: float


def family(max_n):
    ms = dict(catalog.instances())
    for n in range(2, max_n + 1):
        for r in range(1, n):
            ms[f"U({r},{n})"] = uniform(r, n)
    ms["wheel W4"] = graphic(5, [(1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4)])
    ms["K4 minus edge"] = graphic(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    ms["prism"] = graphic(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)])
    return {k: m for k, m in ms.items() if m.n <= max_n and is_connected(m) and is_loopless(m)}


def measure(name, m, cfg):
    start = time.perf_counter()
    lat = lattice_of_flats(m)
    faces = bergman_complex(m, lat)
    row = Row(
        name=name,
        n=m.n,
        rank=m.rank,
        flats=len(lat.flats),
        flacets=len(flacets(m)),
        order_facets=len(order_complex(lat).maximal),
        nested_facets=len(nested_set_complex(lat, minimal_building_set(lat)).maximal),
        bergman_faces=len(faces) - 1,
        bergman_facets=census_text(bergman_facets(faces)),
        finest=all(verify_finest(m, f) for f in faces),
        audit_ok=refinement_audit(m, lat).ok if cfg.audit else None,
        seconds=0.0,
    )
    row.seconds = round(time.perf_counter() - start, 3)
    return row


def main(cfg: CensusConfig, out_csv):
    rows = [measure(name, m, cfg) for name, m in family(cfg.max_n).items()]
    if out_csv:
        with open(out_csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(asdict(rows[0])))
            w.writeheader()
            w.writerows(asdict(r) for r in rows)
    for r in rows:
        print(f"{r.name:<14} n={r.n} r={r.rank} flats={r.flats:<4} flacets={r.flacets:<3} "
              f"order={r.order_facets:<4} nested={r.nested_facets:<4} "
              f"bergman: {r.bergman_facets}  finest={r.finest} audit={r.audit_ok}  {r.seconds}s")
    return 0 if all(r.finest and r.audit_ok is not False for r in rows) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    ap.add_argument("--no-audit", action="store_true")
    ap.add_argument("--csv")
    args = ap.parse_args()
    sys.exit(main(CensusConfig(max_n=args.max_n, audit=not args.no_audit), args.csv))
