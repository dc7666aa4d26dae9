"""Search mixed-type graphs for non-isomorphic pairs with isomorphic admissible quotients."""

import argparse
import json

from bqgraph.harness import converse_experiment
from bqgraph.io import parse_json_graph


def _edges(doc):
    g = parse_json_graph(json.dumps(doc))
    return ", ".join(f"{e.src}->{e.dst}" for e in g.edges)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--show", type=int, default=5, help="pairs to print")
    p.add_argument("--json", help="write the full report here")
    a = p.parse_args()
    out = converse_experiment(a.max_vertices)
    print(f"{out['graphs_checked']} mixed graphs, {out['violating_pair_count']} violating pairs")
    for pair in out["violating_pairs"][: a.show]:
        print(f"  {_edges(pair['first'])}  boundary {pair['first_boundary']}")
        print(f"  {_edges(pair['second'])}  boundary {pair['second_boundary']}\n")
    if a.json:
        with open(a.json, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()
