"""Regenerate the bundled graph6 lists src/ec_kit/data/graphs{n}.g6.

Usage: python scripts/make_graph_lists.py [n_max]

Equivalent lists can be produced with nauty: ``geng -q n > graphs{n}.g6``
(line order and labeling differ; the sweep keys records by canonical key).
"""

import sys
from pathlib import Path

from ec_kit.generate import GRAPH_COUNTS, generate_graphs
from ec_kit.graphio import write_graph6_file

out_dir = Path(__file__).resolve().parents[1] / "src" / "ec_kit" / "data"
n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 7
for n in range(1, n_max + 1):
    graphs = generate_graphs(n)
    assert len(graphs) == GRAPH_COUNTS[n], (n, len(graphs))
    write_graph6_file(out_dir / f"graphs{n}.g6", graphs)
    print(f"n={n}: {len(graphs)} graphs")
