#!/usr/bin/env python3
"""Regenerate the bundled graph6 corpora of connected non-isomorphic graphs.

Graphs on n vertices are grown from all graphs on n-1 vertices by adding a
vertex joined to every possible neighbour subset, then deduplicated by
bucketing on a Weisfeiler-Lehman hash and running a full isomorphism test
inside each bucket. Output files are encoded by networkx,
independently of the C++ encoder, and sorted by (edge count, graph6).

    python3 tools/gen_corpus.py --max-n 8 --out data
"""
import argparse
import itertools
import pathlib

import networkx as nx


def grow(prev, n):
    buckets = {}
    kept = []
    for edges in prev:
        for k in range(n):
            for subset in itertools.combinations(range(n - 1), k):
                g = nx.Graph()
                g.add_nodes_from(range(n))
                g.add_edges_from(edges)
                g.add_edges_from((u, n - 1) for u in subset)
                key = (g.number_of_edges(),
                       tuple(sorted(d for _, d in g.degree())),
                       nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                kept.append(sorted(g.edges()))
    return kept


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", default="data")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    level = [[]]
    for n in range(1, args.max_n + 1):
        if n > 1:
            level = grow(level, n)
        lines = []
        for edges in level:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g):
                code = nx.to_graph6_bytes(g, header=False).decode().strip()
                lines.append((g.number_of_edges(), code))
        lines.sort()
        (out / f"connected_n{n}.g6").write_text("".join(c + "\n" for _, c in lines))
        print(f"n={n}: {len(level)} graphs, {len(lines)} connected")


if __name__ == "__main__":
    main()
