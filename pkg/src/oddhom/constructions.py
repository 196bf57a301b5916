"""Builders for the graph families under study, plus hard-coded fixtures.

The central family is the subdivided K4: four branch vertices x, y, z, t
whose six connecting threads turn the four triangles into cycles.  When all
four of those cycles are odd the graph is an odd-K4; if moreover every
thread equals its disjoint partner (x-y with z-t, x-z with t-y, x-t with
z-y) all four cycles have the same odd length 2k+1, the order is exactly
2(a+b+c) - 2, and the graph is the unique (a,b,c) subdivision up to
relabelling.  The "case" fixtures are the handful of specific subdivided
K4s, some with one or two pendant vertices attached, that arise when
classifying 13- and 14-vertex graphs of odd-girth 7; the "fig2" fixtures are
three order-15 graphs of odd-girth 7 with no homomorphism to the 5-cycle.

Vertex numbering is fixed and documented per builder so that graph6 output
is reproducible: branch or outer-cycle vertices first, then inner layers or
thread interiors in declaration order.
"""

from __future__ import annotations

import json
import math
import os

from .graphs import Graph


def cycle(n: int) -> Graph:
    """The cycle C_n on vertices 0..n-1 in ring order."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], vertex_transitive=True)


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 1:
        raise ValueError("a complete graph needs at least 1 vertex")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)],
                            vertex_transitive=True)


def path(n: int) -> Graph:
    """The path on n vertices (n-1 edges)."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def circular_clique(p: int, q: int) -> Graph:
    """C(p, q): vertices 0..p-1 with i ~ j iff q <= |i - j| <= p - q.

    C(p, 1) is the complete graph K_p and C(2l+1, l) is the cycle C_{2l+1};
    homomorphisms between circular cliques are governed by the fraction p/q.
    Requires gcd(p, q) = 1 and p >= 2q, so the fraction is in lowest terms
    and the graph has at least one edge per vertex.
    """
    if q < 1 or p < 2 * q:
        raise ValueError("circular clique needs p >= 2q >= 2")
    if math.gcd(p, q) != 1:
        raise ValueError("circular clique parameters must be coprime")
    edges = []
    for i in range(p):
        for j in range(i + 1, p):
            d = j - i
            if q <= d <= p - q:
                edges.append((i, j))
    return Graph.from_edges(p, edges, vertex_transitive=True)


def subdivided_k4(a: int, ap: int, b: int, bp: int, c: int, cp: int) -> Graph:
    """K4 with its six edges subdivided into threads of given lengths.

    Branch vertices are x=0, y=1, z=2, t=3.  Thread lengths: x-y is ``a``,
    z-t is ``ap``, x-z is ``b``, t-y is ``bp``, x-t is ``c``, z-y is ``cp``
    (each thread paired with the disjoint K4 edge it complements).  Thread
    interiors are numbered 4, 5, ... in that thread order, each running from
    its first-named endpoint.  All four triangle-derived cycles must be odd,
    which makes the result an odd-K4.
    """
    lengths = [a, ap, b, bp, c, cp]
    if any(not isinstance(v, int) or v < 1 for v in lengths):
        raise ValueError("thread lengths must be positive integers")
    faces = [a + cp + b, a + bp + c, b + ap + c, bp + ap + cp]
    if any(f % 2 == 0 for f in faces):
        raise ValueError(f"triangle cycles {faces} must all be odd for an odd-K4")
    x, y, z, t = 0, 1, 2, 3
    threads = [(x, y, a), (z, t, ap), (x, z, b), (t, y, bp), (x, t, c), (z, y, cp)]
    edges = []
    nxt = 4
    for u, v, length in threads:
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph.from_edges(nxt, edges)


def odd_k4(a: int, b: int, c: int) -> Graph:
    """The (a,b,c)-odd-K4: opposite threads equal, all four cycles of length a+b+c.

    Order is 2(a+b+c) - 2 and the odd-girth equals a+b+c (the four subdivided
    triangles are the only odd cycles).  Requires a+b+c odd.
    """
    if (a + b + c) % 2 == 0:
        raise ValueError("a + b + c must be odd")
    return subdivided_k4(a, a, b, b, c, c)


def odd_k32(cycle_lengths, path_lengths) -> Graph:
    """Three disjoint odd cycles pairwise joined by paths (length 0 allowed).

    ``cycle_lengths`` are three odd integers >= 3; ``path_lengths`` gives the
    connecting path length for the pairs (0,1), (0,2), (1,2) in that order.
    A path of length t >= 1 attaches at fixed ports (vertex 0 of each cycle
    for its first listed pair, vertex 1 for its second) and contributes t-1
    interior vertices.  A path of length 0 identifies vertex 0 of the two
    cycles; several zero-length paths therefore collapse into one shared hub,
    so three C7s with all paths of length 0 have 19 vertices, not 18.

    Vertex numbering: cycle 0, cycle 1, cycle 2 blocks in ring order (merged
    vertices keep the smallest block slot), then path interiors in pair order.
    """
    cls = list(cycle_lengths)
    pls = list(path_lengths)
    if len(cls) != 3 or len(pls) != 3:
        raise ValueError("need exactly three cycle lengths and three path lengths")
    if any(not isinstance(v, int) or v < 3 or v % 2 == 0 for v in cls):
        raise ValueError("cycle lengths must be odd integers >= 3")
    if any(not isinstance(v, int) or v < 0 for v in pls):
        raise ValueError("path lengths must be non-negative integers")

    base = [0, cls[0], cls[0] + cls[1]]
    total = sum(cls)
    parent = list(range(total))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    pairs = [(0, 1), (0, 2), (1, 2)]
    # Port on cycle i for a given pair: 0 for the first pair involving i
    # (in `pairs` order), 1 for the second.
    port = {}
    for i in range(3):
        mine = [pr for pr in pairs if i in pr]
        port[(i, mine[0])] = 0
        port[(i, mine[1])] = 1

    edges = []
    for i, length in enumerate(cls):
        for k in range(length):
            edges.append((base[i] + k, base[i] + (k + 1) % length))

    for pr, plen in zip(pairs, pls):
        if plen == 0:
            i, j = pr
            a, b = find(base[i]), find(base[j])
            if a != b:
                parent[max(a, b)] = min(a, b)

    # Relabel after merges, keeping block order.
    label = {}
    nxt = 0
    for v in range(total):
        r = find(v)
        if r not in label:
            label[r] = nxt
            nxt += 1
    edges = [(label[find(u)], label[find(v)]) for u, v in edges]

    for pr, plen in zip(pairs, pls):
        if plen == 0:
            continue
        i, j = pr
        u = label[find(base[i] + port[(i, pr)])]
        v = label[find(base[j] + port[(j, pr)])]
        prev = u
        for _ in range(plen - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))

    edges = [(u, v) for u, v in edges if u != v]
    return Graph.from_edges(nxt, set(tuple(sorted(e)) for e in edges))


def generalized_mycielski(k: int) -> Graph:
    """The k-level Mycielski-type extension of the (2k+1)-cycle.

    Levels V_1..V_k each hold 2k+1 vertices; V_1 induces the cycle, vertex j
    of level i is adjacent to vertices j-1 and j+1 (mod 2k+1) of level i-1,
    and a final apex is adjacent to all of V_k.  The result has order
    2k^2 + k + 1, odd-girth 2k+1, and chromatic number 4.  For k=1 it is K4;
    for k=2 it is the classic 11-vertex triangle-free 4-chromatic graph.

    Numbering: level 1 vertices 0..2k, then level 2, ..., apex last.
    """
    if k < 1:
        raise ValueError("level count k must be at least 1")
    m = 2 * k + 1
    edges = [(j, (j + 1) % m) for j in range(m)]
    for i in range(1, k):
        off, prev = i * m, (i - 1) * m
        for j in range(m):
            edges.append((off + j, prev + (j - 1) % m))
            edges.append((off + j, prev + (j + 1) % m))
    apex = k * m
    edges.extend((apex, (k - 1) * m + j) for j in range(m))
    return Graph.from_edges(k * m + 1, edges)


# -- fixtures -----------------------------------------------------------------

def _fig2a():
    # Outer hexagon u0..u5 (0..5), inner six v0..v5 (6..11), centre w0..w2
    # (12..14).  Spokes u_i v_i plus the inner ten-edge chain
    # v0 v1 w1 v4 v5 w0 v2 v3 w2 v0; 21 edges in all.
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    spokes = [(i, 6 + i) for i in range(6)]
    chain = [(6, 7), (7, 13), (13, 10), (10, 11), (11, 12),
             (12, 8), (8, 9), (9, 14), (14, 6)]
    return Graph.from_edges(15, hexagon + spokes + chain)


def _fig2b():
    # Outer octagon u0..u7 (0..7), inner v0..v6 (8..14): three two-edge
    # bridges over the octagon, one three-edge bridge through v6, and the
    # inner triangle of long chords v0v3, v1v4, v2v5.
    octagon = [(i, (i + 1) % 8) for i in range(8)]
    inner = [(0, 8), (8, 9), (9, 1),
             (3, 10), (10, 11), (11, 4),
             (5, 12), (12, 14), (14, 13), (13, 7),
             (6, 14), (8, 11), (9, 12), (10, 13)]
    return Graph.from_edges(15, octagon + inner)


def _fig2c():
    # Outer 7-cycle u0..u6 (0..6); inner vertices v0, v2, v4, v5, v6
    # (7..11) and w0, w1, w3 (12..14).
    outer = [(i, (i + 1) % 7) for i in range(7)]
    inner = [(2, 8), (8, 13), (13, 12), (12, 14), (14, 8),
             (4, 9), (9, 10), (10, 5),
             (6, 11), (11, 7), (7, 0),
             (7, 12), (13, 11), (10, 14), (9, 12)]
    return Graph.from_edges(15, outer + inner)


def _with_pendants(base: Graph, attach_edges):
    n = base.order
    extra = max(u for e in attach_edges for u in e) + 1 - n
    edges = list(base.edges()) + list(attach_edges)
    return Graph.from_edges(n + extra, edges)


def _case1a():
    # (2,2,3)-odd-K4 (order 12) plus adjacent pendants 12 ~ 8 and 13 ~ 11;
    # vertices 8 and 11 are interior vertices of the two length-3 threads at
    # distance 4 from each other.
    return _with_pendants(odd_k4(2, 2, 3), [(12, 8), (13, 11), (12, 13)])


def _case1b():
    # (1,3,3)-odd-K4 plus adjacent pendants on the distance-4 pair (9, 11).
    return _with_pendants(odd_k4(1, 3, 3), [(12, 9), (13, 11), (12, 13)])


def _case2a():
    # Order-13 odd-K4 with thread lengths (3,3,3) on one triangle and
    # (2,2,2) opposite; three 7-cycles and one 9-cycle.
    return subdivided_k4(2, 3, 3, 2, 3, 2)


def _case2b():
    # Order-13 odd-K4 with threads (2,3,4)/(1,2,3) plus a 14th vertex joined
    # to its unique diametral pair (interior vertices 9 and 11).
    return _with_pendants(subdivided_k4(1, 2, 3, 2, 4, 3), [(13, 9), (13, 11)])


def _case3a():
    # Order-14 odd-K4, threads (3,4,4)/(1,2,2); three 7-cycles, one 11-cycle.
    return subdivided_k4(1, 3, 4, 2, 4, 2)


_CASE3B = {
    "case3b_1": (1, 1, 3, 3, 3, 5),
    "case3b_2": (1, 1, 4, 4, 2, 4),
    "case3b_3": (2, 2, 2, 2, 3, 5),
    "case3b_4": (2, 2, 3, 3, 2, 4),
    "case3b_5": (3, 3, 3, 3, 1, 3),
}

_FIXTURES = {
    "fig2a": _fig2a,
    "fig2b": _fig2b,
    "fig2c": _fig2c,
    "case1a": _case1a,
    "case1b": _case1b,
    "case2a": _case2a,
    "case2b": _case2b,
    "case3a": _case3a,
}

FIXTURE_NAMES = tuple(list(_FIXTURES) + sorted(_CASE3B))


def fixture(name: str) -> Graph:
    """A named hard-coded graph; see FIXTURE_NAMES for the catalogue.

    fig2a/b/c are the three order-15, odd-girth-7 graphs with no
    homomorphism to C5.  The case fixtures are order 12..14 subdivided K4s
    (with pendants where noted) of odd-girth 7; each of those does map to C5.
    """
    if name in _FIXTURES:
        return _FIXTURES[name]()
    if name in _CASE3B:
        # Two 7-cycles and two 9-cycles; the z-y thread is the common thread
        # of the two 9-cycles and exceeds its partner by 2.
        return subdivided_k4(*_CASE3B[name])
    raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def write_fixture_corpus(directory: str):
    """Write fixtures.g6 (one graph per line) plus a name -> line manifest.

    Returns the pair of file paths.  Line numbers in the manifest are
    1-based, matching what text tools report.
    """
    from .graphs import to_graph6

    os.makedirs(directory, exist_ok=True)
    g6_path = os.path.join(directory, "fixtures.g6")
    manifest_path = os.path.join(directory, "fixtures_manifest.json")
    manifest = {}
    with open(g6_path, "w") as fh:
        for lineno, name in enumerate(FIXTURE_NAMES, start=1):
            fh.write(to_graph6(fixture(name)) + "\n")
            manifest[name] = lineno
    with open(manifest_path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return g6_path, manifest_path
