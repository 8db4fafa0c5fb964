#!/usr/bin/env python3
"""Regenerate the committed graph6 fixture families.

Writes, relative to the repository root:
  fixtures/connected_le6.g6        every connected graph of order 1..6 (up to isomorphism)
  fixtures/bipartite_m14.g6        bipartite graphs with at most 14 edges (up to isomorphism)
  fixtures/regular/r{r}_n{n}.g6    every r-regular graph of order n, r <= 3, n <= 8
"""
import itertools
import os
import random

import networkx as nx

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def g6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def dedup(graphs):
    buckets = {}
    out = []
    for g in graphs:
        key = (g.number_of_nodes(), g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g))
        seen = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in seen):
            continue
        seen.append(g)
        out.append(g)
    return out


def regular_graphs(n, r):
    pairs = list(itertools.combinations(range(n), 2))
    found = []

    def rec(i, deg, edges):
        if all(d == r for d in deg):
            found.append(nx.Graph(edges) if edges else nx.empty_graph(n))
            return
        if i == len(pairs):
            return
        u, v = pairs[i]
        if deg[u] < r and deg[v] < r:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
            rec(i + 1, deg, edges)
            edges.pop()
            deg[u] -= 1
            deg[v] -= 1
        # skipping (u, v) is only viable if u can still reach degree r
        remaining_u = sum(1 for p in pairs[i + 1:] if u in p)
        if deg[u] + remaining_u >= r:
            rec(i + 1, deg, edges)

    rec(0, [0] * n, [])
    out = []
    for g in found:
        g.add_nodes_from(range(n))
        out.append(g)
    return dedup(out)


def main():
    atlas = nx.graph_atlas_g()
    connected = [g for g in atlas if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g)]
    with open(os.path.join(ROOT, "connected_le6.g6"), "w") as f:
        for g in connected:
            f.write(g6(g) + "\n")

    bip = [g for g in atlas if g.number_of_nodes() >= 1 and nx.is_bipartite(g) and g.number_of_edges() <= 14]
    rng = random.Random(20260101)
    extra = []
    while len(dedup(bip + extra)) < 260:
        n = rng.randint(8, 10)
        a = rng.randint(1, n - 1)
        left, right = range(a), range(a, n)
        g = nx.empty_graph(n)
        cand = [(u, v) for u in left for v in right]
        rng.shuffle(cand)
        g.add_edges_from(cand[: rng.randint(0, min(14, len(cand)))])
        extra.append(g)
    bip = dedup(bip + extra)
    with open(os.path.join(ROOT, "bipartite_m14.g6"), "w") as f:
        for g in bip:
            f.write(g6(g) + "\n")

    os.makedirs(os.path.join(ROOT, "regular"), exist_ok=True)
    for r in (1, 2, 3):
        for n in range(r + 1, 9):
            if (n * r) % 2:
                continue
            gs = regular_graphs(n, r)
            with open(os.path.join(ROOT, "regular", f"r{r}_n{n}.g6"), "w") as f:
                for g in gs:
                    f.write(g6(g) + "\n")
            print(f"r={r} n={n}: {len(gs)} graphs")
    print(f"connected<=6: {len(connected)}, bipartite: {len(bip)}")


if __name__ == "__main__":
    main()
