"""Exact homomorphism machinery: solver, cores, chromatic quantities, and
the v-special colourings that certify C5-colourability of odd-girth-7 graphs.

The solver is a complete backtracking search with arc-consistency.  Domains
are bitmasks over target vertices; after each assignment, every source edge
(u, w) is kept arc-consistent by intersecting dom(w) with the union of
target neighbourhoods of dom(u).  Variables are assigned in a fixed order,
descending degree with ties broken by BFS order from the highest-degree
vertex, which fails first on the most constrained part of the graph.  When
the target declares itself vertex-transitive (cycles, complete graphs,
circular cliques), the first variable is pinned to target vertex 0; any
solution can be rotated onto that choice, so completeness is unaffected and
the search shrinks by a factor of the target order.

Chromatic number is the least k with a map to K_k; circular chromatic
number scans reduced fractions p/q upward (p bounded by the order, where the
minimum is always attained) and returns the first circular clique C(p, q)
that admits a map.

A v-special colouring is a proper 3-colouring of the vertices at distance 3
or more from v in which the third colour appears only on vertices isolated
within that induced subgraph and no distance-2 vertex sees both of the first
two colours.  For graphs of odd-girth at least 7 such a colouring extends to
an explicit homomorphism onto the 5-cycle; both the search for one and the
extension are implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .constructions import circular_clique, complete, cycle
from .graphs import Graph, _bits, _neighbors_of_set, delete_vertex, distance_partition, odd_girth


@dataclass(frozen=True)
class VertexMap:
    """A total assignment of source vertices to target vertices."""

    source_order: int
    target_order: int
    image: tuple

    def __post_init__(self):
        if len(self.image) != self.source_order:
            raise ValueError("image length must equal source order")
        if any(not 0 <= v < self.target_order for v in self.image):
            raise ValueError("image entries must be target vertices")

    def to_json(self):
        return list(self.image)


def verify_mapping(g: Graph, h: Graph, m: VertexMap) -> bool:
    """True iff ``m`` sends every edge of ``g`` to an edge of ``h``."""
    if m.source_order != g.order or m.target_order != h.order:
        raise ValueError("mapping dimensions do not match the graphs")
    img = m.image
    return all(h.rows[img[a]] >> img[b] & 1 for a, b in g.edges())


def _variable_order(g: Graph):
    n = g.order
    deg = g.degrees()
    bfs_idx = [0] * n
    seen = 0
    idx = 0
    for s in sorted(range(n), key=lambda v: (-deg[v], v)):
        if seen >> s & 1:
            continue
        frontier = [s]
        seen |= 1 << s
        while frontier:
            nxt = []
            for v in frontier:
                bfs_idx[v] = idx
                idx += 1
                for u in _bits(g.rows[v]):
                    if not seen >> u & 1:
                        seen |= 1 << u
                        nxt.append(u)
            frontier = nxt
    return sorted(range(n), key=lambda v: (-deg[v], bfs_idx[v]))


def find_homomorphism(g: Graph, h: Graph) -> VertexMap | None:
    """A homomorphism g -> h, or None; the decision is exact."""
    n, hn = g.order, h.order
    g_rows, h_rows = g.rows, h.rows
    full = (1 << hn) - 1
    order = _variable_order(g)
    nbr = [tuple(_bits(r)) for r in g_rows]

    support_cache = {}

    def supports(mask):
        s = support_cache.get(mask)
        if s is None:
            s = _neighbors_of_set(h_rows, mask)
            support_cache[mask] = s
        return s

    def propagate(doms, dirty):
        while dirty:
            u = dirty.pop()
            su = supports(doms[u])
            for w in nbr[u]:
                old = doms[w]
                new = old & su
                if new != old:
                    if not new:
                        return False
                    doms[w] = new
                    dirty.add(w)
        return True

    doms = [full] * n
    if h.vertex_transitive and n >= 1:
        doms[order[0]] = 1
    if not propagate(doms, set(range(n))):
        return None

    def search(i, doms):
        if i == n:
            return doms
        v = order[i]
        m = doms[v]
        while m:
            bit = m & -m
            m ^= bit
            nd = list(doms)
            nd[v] = bit
            if propagate(nd, {v}):
                res = search(i + 1, nd)
                if res is not None:
                    return res
        return None

    res = search(0, doms)
    if res is None:
        return None
    return VertexMap(n, hn, tuple(d.bit_length() - 1 for d in res))


def has_homomorphism(g: Graph, h: Graph) -> bool:
    return find_homomorphism(g, h) is not None


def is_core(g: Graph) -> bool:
    """True iff g has no homomorphism to any proper subgraph.

    Any homomorphism into a proper subgraph misses some vertex, so it
    suffices to test the vertex-deleted subgraphs.
    """
    if g.order == 1:
        return True
    return all(find_homomorphism(g, delete_vertex(g, v)) is None for v in range(g.order))


def compute_core(g: Graph) -> Graph:
    """A minimal retract of g (unique up to isomorphism).

    Deleting a vertex v with g -> g-v keeps the homomorphism equivalence
    class, so repeating until no vertex is deletable lands on the core.
    Deletion candidates are tried in decreasing index.
    """
    cur = g
    changed = True
    while changed and cur.order > 1:
        changed = False
        for v in range(cur.order - 1, -1, -1):
            smaller = delete_vertex(cur, v)
            if find_homomorphism(cur, smaller) is not None:
                cur = smaller
                changed = True
                break
    return cur


def chromatic_number(g: Graph) -> int:
    """Least k such that g maps to K_k."""
    if g.edge_count() == 0:
        return 1
    if odd_girth(g) == float("inf"):
        return 2
    k = 3
    while k < g.order and find_homomorphism(g, complete(k)) is None:
        k += 1
    return k


def circular_chromatic_number(g: Graph) -> Fraction:
    """Least p/q (as a reduced Fraction) with a map to the circular clique C(p, q).

    The minimum over all circular cliques is attained with p at most the
    order of g, so the scan runs over reduced fractions 2 <= p/q with p <= n
    in increasing order and stops at the first success.  Rejects edgeless
    graphs, whose circular chromatic number degenerates.
    """
    if g.edge_count() == 0:
        raise ValueError("circular chromatic number needs at least one edge")
    if odd_girth(g) == float("inf"):
        return Fraction(2, 1)
    from math import gcd

    fracs = sorted(
        (Fraction(p, q), p, q)
        for p in range(2, g.order + 1)
        for q in range(1, p // 2 + 1)
        if gcd(p, q) == 1
    )
    for frac, p, q in fracs:
        if frac == 2:
            continue  # C(2q', q') targets are bipartite, already excluded
        if find_homomorphism(g, circular_clique(p, q)) is not None:
            return frac
    raise AssertionError("unreachable: K_n always admits the identity colouring")


def circular_clique_hom_criterion_check(p: int, q: int, r: int, s: int) -> bool:
    """Self-test of the fraction criterion: C(p,q) -> C(r,s) iff p/q <= r/s.

    Runs the solver on the actual circular cliques and reports whether its
    decision agrees with the fraction comparison.
    """
    from math import gcd

    if gcd(p, q) != 1 or gcd(r, s) != 1 or p < 2 * q or r < 2 * s:
        raise ValueError("parameters must be coprime with p >= 2q and r >= 2s")
    found = find_homomorphism(circular_clique(p, q), circular_clique(r, s)) is not None
    return found == (Fraction(p, q) <= Fraction(r, s))


# -- v-special colourings ------------------------------------------------------

C1, C2, C3 = 1, 2, 3


@dataclass(frozen=True)
class VSpecialColouring:
    """A distinguished proper 3-colouring of the distance->=3 ball around a centre.

    ``class_of`` maps each vertex at distance >= 3 from ``center`` to one of
    the classes 1, 2, 3.  Validity (checked by :func:`extend_v_special`):
    adjacent vertices in the induced subgraph get distinct classes, class 3
    appears only on vertices isolated there, and no distance-2 vertex has
    neighbours in both class 1 and class 2.
    """

    center: int
    class_of: dict


def _vspecial_violation(g: Graph, col: VSpecialColouring):
    """None if valid, else a short description of the first violation."""
    v = col.center
    if not 0 <= v < g.order:
        return "centre out of range"
    part = distance_partition(g, v)
    if set(col.class_of) != set(part.n3plus):
        return "colouring domain must be exactly the distance->=3 set"
    if any(c not in (C1, C2, C3) for c in col.class_of.values()):
        return "classes must be 1, 2 or 3"
    far = 0
    for u in part.n3plus:
        far |= 1 << u
    for u in part.n3plus:
        inside = g.rows[u] & far
        if col.class_of[u] == C3 and inside:
            return f"class-3 vertex {u} is not isolated in the induced subgraph"
        for w in _bits(inside):
            if col.class_of[w] == col.class_of[u]:
                return f"adjacent vertices {u}, {w} share a class"
    for u in part.n2:
        seen = {col.class_of[w] for w in _bits(g.rows[u] & far)}
        if C1 in seen and C2 in seen:
            return f"distance-2 vertex {u} sees both class 1 and class 2"
    return None


def exists_v_special(g: Graph, v: int) -> VSpecialColouring | None:
    """Exhaustive search for a v-special colouring of the distance->=3 ball.

    The class-3-only-on-isolated rule forces every non-trivial component of
    the induced subgraph to be 2-coloured with classes 1 and 2, so the search
    space is one bipartition flip per component times a free choice of class
    for each isolated vertex; each candidate is then screened against the
    distance-2 condition.
    """
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range for order {g.order}")
    part = distance_partition(g, v)
    far_list = sorted(part.n3plus)
    far = 0
    for u in far_list:
        far |= 1 << u

    # Components of the induced subgraph, with a 2-colouring of each.
    comps = []
    isolated = []
    seen = 0
    for u in far_list:
        if seen >> u & 1:
            continue
        if not g.rows[u] & far:
            isolated.append(u)
            seen |= 1 << u
            continue
        side = {u: 0}
        frontier = [u]
        seen |= 1 << u
        while frontier:
            nxt = []
            for a in frontier:
                for b in _bits(g.rows[a] & far):
                    if b in side:
                        if side[b] == side[a]:
                            return None  # odd component: no proper 2-colouring
                    else:
                        side[b] = side[a] ^ 1
                        seen |= 1 << b
                        nxt.append(b)
            frontier = nxt
        comps.append(side)

    n2_list = sorted(part.n2)
    for flips in product((0, 1), repeat=len(comps)):
        base = {}
        for flip, side in zip(flips, comps):
            for u, s in side.items():
                base[u] = C1 if s ^ flip == 0 else C2
        for iso_classes in product((C1, C2, C3), repeat=len(isolated)):
            cls = dict(base)
            cls.update(zip(isolated, iso_classes))
            ok = True
            for u in n2_list:
                seen_cls = 0
                for w in _bits(g.rows[u] & far):
                    seen_cls |= 1 << cls[w]
                if seen_cls & (1 << C1) and seen_cls & (1 << C2):
                    ok = False
                    break
            if ok:
                return VSpecialColouring(v, cls)
    return None


def extend_v_special(g: Graph, col: VSpecialColouring) -> VertexMap:
    """Extend a v-special colouring to an explicit homomorphism onto C5.

    Classes 1, 2, 3 map to the cycle vertices 0, 1, 3; a distance-2 vertex
    goes to 4 if it has a class-1 neighbour and to 2 otherwise; distance-1
    vertices go to 3 and the centre to 2 (4 would equally do, but a fixed
    choice keeps golden outputs stable).  The result is verified edge by
    edge; a failure means the precondition was violated, e.g. the graph has
    odd-girth below 7, and raises ValueError.
    """
    problem = _vspecial_violation(g, col)
    if problem is not None:
        raise ValueError(f"invalid v-special colouring: {problem}")
    v = col.center
    part = distance_partition(g, v)
    far = 0
    for u in part.n3plus:
        far |= 1 << u
    image = [None] * g.order
    image[v] = 2
    for u in part.n1:
        image[u] = 3
    class_to_c5 = {C1: 0, C2: 1, C3: 3}
    for u, c in col.class_of.items():
        image[u] = class_to_c5[c]
    for u in part.n2:
        has_c1 = any(col.class_of[w] == C1 for w in _bits(g.rows[u] & far))
        image[u] = 4 if has_c1 else 2
    m = VertexMap(g.order, 5, tuple(image))
    if not verify_mapping(g, cycle(5), m):
        raise ValueError(
            "extension is not edge-preserving; the graph must have odd-girth at least 7"
        )
    return m
