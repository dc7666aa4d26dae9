"""Count CT-decomposable classes per vertex count and list the small exceptions."""

import argparse
import json

from bqgraph.harness import ct_catalog


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--listed-up-to", type=int, default=4)
    p.add_argument("--json", help="write the full catalog here")
    a = p.parse_args()
    out = ct_catalog(a.max_vertices, a.listed_up_to)
    print(f"{'n':>2} {'classes':>8} {'decomposable':>13} {'not':>6}")
    for n, row in out["per_vertex_count"].items():
        cells = ["?" if row[k] is None else str(row[k]) for k in ("classes", "decomposable", "not_decomposable")]
        print(f"{n:>2} {cells[0]:>8} {cells[1]:>13} {cells[2]:>6}")
    print(f"triangle DAG listed: {out['triangle_dag_listed']}")
    if a.json:
        with open(a.json, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()
