#!/usr/bin/env python3
"""Writes data/families.g6: one "<name> <graph6>" line per family member.

Independent of the C++ constructors: each graph is built here from its
definition with networkx and encoded with networkx's graph6 writer, using
the same documented vertex numbering.
"""
import argparse
import pathlib

import networkx as nx


def lowest_bivalent(g, start=0):
    for v in sorted(g.nodes):
        if v >= start and g.degree(v) == 2:
            return v
    raise ValueError("no bivalent vertex")


def extend(g, x):
    y1, y2 = sorted(g.neighbors(x))
    n = g.number_of_nodes()
    v, w1, w2 = n, n + 1, n + 2
    g.add_edges_from([(v, w1), (v, w2), (w1, x), (w2, y1), (w2, y2)])


def chain(k):
    g = nx.cycle_graph(5)
    for _ in range(k - 2):
        extend(g, lowest_bivalent(g))
    return g


def bicycle(k):
    g = nx.Graph()
    g.add_nodes_from(range(3 * k))
    c = lambda j: (j - 1) % (2 * k)
    d = lambda i: 2 * k + (i - 1) % k
    for j in range(1, 2 * k + 1):
        g.add_edge(c(j), c(j + 1))
    for i in range(1, k + 1):
        g.add_edge(d(i), d(i + 1))
        g.add_edge(d(i), c(2 * i - 2))
        g.add_edge(d(i), c(2 * i + 1))
    return g


def shackled_chain(k):
    g = chain(3)
    a1, a2, b1, b2 = 2, 3, 5, 6
    assert g.has_edge(a1, a2) and g.has_edge(b1, b2)
    v, w1, w2 = 8, 9, 10
    g.add_edges_from([(v, w1), (v, w2), (w1, a1), (w1, b1), (w2, a2), (w2, b2)])
    for _ in range(k - 1):
        extend(g, lowest_bivalent(g))
    return g


def w5():
    g = nx.Graph()
    g.add_nodes_from(range(14))
    g.add_edge(0, 1)
    for j in range(8):
        g.add_edge(6 + j, 6 + (j + 1) % 8)
    for i in range(4):
        b = 2 + i
        g.add_edges_from([(b, i % 2), (b, 6 + 2 * i), (b, 6 + (2 * i + 3) % 8)])
    return g


def gp72():
    g = nx.Graph()
    g.add_nodes_from(range(14))
    for i in range(7):
        g.add_edges_from([(i, (i + 1) % 7), (7 + i, 7 + (i + 1) % 7), (7 + i, (2 * i) % 7)])
    return g


def s1():
    g = nx.cycle_graph(12)
    g.add_edge(0, 6)
    return g


def s2():
    g = s1()
    g.add_edge(3, 9)
    return g


def encode(g):
    assert sorted(g.nodes) == list(range(g.number_of_nodes()))
    return nx.to_graph6_bytes(g, nodes=sorted(g.nodes), header=False).decode().strip()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "families.g6"))
    args = parser.parse_args()
    rows = []
    rows += [(f"Ch_{k}", chain(k)) for k in range(2, 11)]
    rows += [(f"BC_{k}", bicycle(k)) for k in range(4, 11)]
    rows += [(f"SCh_{k}", shackled_chain(k)) for k in range(1, 11)]
    rows += [(f"C{n}", nx.cycle_graph(n)) for n in range(3, 11)]
    rows += [("W5", w5()), ("GP72", gp72()), ("S1", s1()), ("S2", s2())]
    with open(args.out, "w") as fh:
        for name, g in rows:
            fh.write(f"{name} {encode(g)}\n")


if __name__ == "__main__":
    main()
