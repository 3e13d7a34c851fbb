#!/usr/bin/env python3
"""Writes the planar_code test corpora to tests/fixtures.

    python3 tools/gen_fixtures.py [--seed 7]

For every corpus <name>.pc the generator also writes <name>.count holding
the number of graphs it emitted (its own report, checked against the
parser). Output is deterministic for a given seed.

  triangulations_<n>.pc  all plane triangulations on n = 4..8 vertices,
                         up to isomorphism (flip-graph closure)
  random_planar.pc       1200 random connected planar graphs, 4..64 vertices
  class_g.pc             random connected planar graphs on 4..11 vertices
                         with no 5-cycle and vertex-disjoint triangles,
                         deduplicated up to isomorphism
"""

import argparse
import random
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
HEADER = b">>planar_code<<"


def encode(graph):
    """planar_code record; vertices relabeled 1..n, rotations clockwise."""
    ok, emb = nx.check_planarity(graph)
    assert ok
    order = sorted(graph.nodes)
    index = {v: i + 1 for i, v in enumerate(order)}
    out = bytearray([len(order)])
    for v in order:
        out.extend(index[w] for w in emb.neighbors_cw_order(v))
        out.append(0)
    return bytes(out)


def write(name, graphs):
    data = HEADER + b"".join(encode(g) for g in graphs)
    (OUT / f"{name}.pc").write_bytes(data)
    (OUT / f"{name}.count").write_text(f"{len(graphs)}\n")
    print(f"{name}: {len(graphs)} graphs")


class IsoSet:
    def __init__(self):
        self.buckets = {}

    def add(self, g):
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
        bucket = self.buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            return False
        bucket.append(g)
        return True


def flip_neighbors(g):
    """Triangulations one edge flip away from g."""
    for a, b in list(g.edges):
        common = [c for c in nx.common_neighbors(g, a, b)]
        ok, emb = nx.check_planarity(g)
        # the two faces on edge ab are abc and abd with c, d adjacent to ab in the rotation
        c = emb[a][b]["cw"]
        d = emb[a][b]["ccw"]
        if c == d or c not in common or d not in common or g.has_edge(c, d):
            continue
        h = g.copy()
        h.remove_edge(a, b)
        h.add_edge(c, d)
        if nx.check_planarity(h)[0]:
            yield h


def triangulations(n):
    start = nx.Graph([(0, 1), (1, 2), (2, 0)])
    for v in range(3, n):
        # stack a vertex into a face (keeps a triangulation)
        start.add_edges_from([(v, v - 1), (v, v - 2), (v, v - 3 if v >= 3 else 0)])
        start = nx.convert_node_labels_to_integers(start)
    assert nx.check_planarity(start)[0] and start.number_of_edges() == 3 * n - 6
    seen = IsoSet()
    seen.add(start)
    frontier = [start]
    result = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for h in flip_neighbors(g):
                if seen.add(h):
                    nxt.append(h)
                    result.append(h)
        frontier = nxt
    return result


def random_planar(rng, n):
    """Random triangulation by face insertion, then random edge deletions
    that keep the graph connected."""
    g = nx.Graph([(0, 1), (1, 2), (2, 0)])
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        g.add_edges_from([(v, a), (v, b), (v, c)])
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    keep = rng.random()
    edges = list(g.edges)
    rng.shuffle(edges)
    for e in edges:
        if rng.random() > keep:
            g.remove_edge(*e)
            if not nx.is_connected(g):
                g.add_edge(*e)
    return g


def in_class(g):
    triangles = [c for c in nx.simple_cycles(g, length_bound=3) if len(c) == 3]
    used = set()
    for t in triangles:
        if used & set(t):
            return False
        used |= set(t)
    return not any(len(c) == 5 for c in nx.simple_cycles(g, length_bound=5))


def random_class_g(rng, n):
    """Random spanning tree plus edges that keep the graph planar and in the class."""
    g = nx.Graph()
    g.add_node(0)
    for v in range(1, n):
        g.add_edge(v, rng.randrange(v))
    candidates = [(a, b) for a in range(n) for b in range(a + 1, n) if not g.has_edge(a, b)]
    rng.shuffle(candidates)
    budget = rng.randint(0, len(candidates))
    for a, b in candidates[:budget]:
        g.add_edge(a, b)
        if not (nx.check_planarity(g)[0] and in_class(g)):
            g.remove_edge(a, b)
    return g


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    OUT.mkdir(parents=True, exist_ok=True)

    for n in range(4, 9):
        write(f"triangulations_{n}", triangulations(n))

    sizes = [rng.randint(4, 64) for _ in range(1200)]
    write("random_planar", [random_planar(rng, n) for n in sizes])

    seen = IsoSet()
    corpus = []
    for n in range(4, 12):
        target = 60 if n < 7 else 250
        attempts = 0
        while sum(1 for g in corpus if g.number_of_nodes() == n) < target and attempts < 20 * target:
            attempts += 1
            g = random_class_g(rng, n)
            if seen.add(g):
                corpus.append(g)
    write("class_g", corpus)


if __name__ == "__main__":
    main()
