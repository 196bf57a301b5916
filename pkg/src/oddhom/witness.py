"""Subgraph witnesses: odd-K4 and odd-K3^2 detection, and the dichotomy check.

A graph that does not map to its shortest odd cycle must contain one of two
parity obstructions as a subgraph: an odd-K4 (a K4 subdivision whose four
triangle-derived cycles are all odd) or an odd-K3^2 (three odd cycles
pairwise joined by disjoint paths, a length-0 path meaning the two cycles
share exactly one vertex).  The searches here are exact backtracking over
branch vertices and connecting paths, ordered shortest-first so small
witnesses surface early, and guarded by an explicit budget: running out of
budget raises instead of returning None, so a "no witness" answer is always
an exhaustive one.

Witnesses carry enough structure to be re-verified edge by edge, and both
finders do re-verify before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, BudgetExceededError
from .graphs import Graph, _bits, odd_girth
from .constructions import cycle
from .hom import find_homomorphism

# K4 edges between branch slots 0..3, listed so that the disjoint partner of
# each edge is adjacent in the list: (a, a', b, b', c, c').  The four faces
# close after positions 2, 4, 5 and 5 of the search order below.
_K4_EDGES = ((0, 1), (2, 3), (0, 2), (3, 1), (0, 3), (2, 1))
_K4_FACES = (
    (0, 2, 5),  # slots 0,1,2 of K4: edges a, b, c'
    (0, 3, 4),  # slots 0,1,3: a, b', c
    (1, 2, 4),  # slots 0,2,3: a', b, c
    (1, 3, 5),  # slots 1,2,3: a', b', c'
)
_SEARCH_ORDER = (0, 2, 5, 3, 4, 1)  # completes faces as early as possible


@dataclass(frozen=True)
class OddK4Witness:
    """Four branch vertices plus the six threads certifying an odd-K4 subgraph.

    ``paths[i]`` joins the branch pair ``_K4_EDGES[i]`` and is stored with
    both endpoints; thread lengths come in disjoint-partner order
    (a, a', b, b', c, c').
    """

    branch: tuple
    paths: tuple

    @property
    def thread_lengths(self):
        return tuple(len(p) - 1 for p in self.paths)

    @property
    def face_lengths(self):
        tl = self.thread_lengths
        return tuple(tl[i] + tl[j] + tl[k] for i, j, k in _K4_FACES)

    def vertices(self):
        out = set(self.branch)
        for p in self.paths:
            out.update(p)
        return out

    def verify(self, g: Graph) -> bool:
        if len(set(self.branch)) != 4:
            return False
        interiors = set()
        for idx, p in enumerate(self.paths):
            u, v = (self.branch[a] for a in _K4_EDGES[idx])
            if p[0] != u or p[-1] != v or len(set(p)) != len(p):
                return False
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    return False
            inner = set(p[1:-1])
            if inner & set(self.branch) or inner & interiors:
                return False
            interiors |= inner
        return all(f % 2 == 1 for f in self.face_lengths)

    def to_json(self):
        return {"branch": list(self.branch), "paths": [list(p) for p in self.paths],
                "face_lengths": list(self.face_lengths)}


@dataclass(frozen=True)
class OddK32Witness:
    """Three odd cycles plus three connecting paths (single vertex = shared)."""

    cycles: tuple
    paths: tuple  # pair order (0,1), (0,2), (1,2)

    def verify(self, g: Graph) -> bool:
        masks = []
        for c in self.cycles:
            if len(c) % 2 == 0 or len(set(c)) != len(c):
                return False
            for a, b in zip(c, c[1:] + c[:1]):
                if not g.has_edge(a, b):
                    return False
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        pair_order = ((0, 1), (0, 2), (1, 2))
        pmasks = []
        for (i, j), p in zip(pair_order, self.paths):
            pm = 0
            for v in p:
                pm |= 1 << v
            if len(set(p)) != len(p):
                return False
            if len(p) == 1:
                if not (pm & masks[i] and pm & masks[j]):
                    return False
            else:
                for a, b in zip(p, p[1:]):
                    if not g.has_edge(a, b):
                        return False
                if not (1 << p[0] & masks[i] and 1 << p[-1] & masks[j]):
                    return False
                inner = pm ^ (1 << p[0]) ^ (1 << p[-1])
                if inner & (masks[0] | masks[1] | masks[2]):
                    return False
                third = masks[3 - i - j]
                if pm & third:
                    return False
            pmasks.append(pm)
        # Cycles pairwise share at most one vertex, and only where the
        # connecting path has length 0.
        for (i, j), p in zip(pair_order, self.paths):
            inter = masks[i] & masks[j]
            if len(p) == 1:
                if inter != pmasks[pair_order.index((i, j))]:
                    return False
            elif inter:
                return False
        return not (pmasks[0] & pmasks[1] or pmasks[0] & pmasks[2] or pmasks[1] & pmasks[2])

    def to_json(self):
        return {"cycles": [list(c) for c in self.cycles],
                "paths": [list(p) for p in self.paths]}


def _paths_between(rows, n, u, v, forbidden, budget, max_len):
    """Yield simple u-v paths (as tuples) in increasing length.

    Interior vertices avoid ``forbidden`` (a bitmask that includes every
    vertex already spoken for).  Iterative deepening keeps the shortest-first
    order without materialising the whole path set.
    """
    for target in range(1, max_len + 1):
        stack = [(u, 1 << u, (u,))]
        while stack:
            cur, used, path = stack.pop()
            budget.tick("path search")
            depth = len(path) - 1
            if depth == target:
                continue
            row = rows[cur]
            if depth + 1 == target:
                if row >> v & 1:
                    yield path + (v,)
                continue
            for w in _bits(row & ~used & ~forbidden):
                if w != v:
                    stack.append((w, used | 1 << w, path + (w,)))


def find_odd_k4(g: Graph, budget: Budget | None = None) -> OddK4Witness | None:
    """Exact search for an odd-K4 subgraph, smallest-thread-first.

    Branch candidates are the degree->=3 vertices; for each 4-subset, the
    six connecting threads are chosen by backtracking with interior-vertex
    disjointness, pruning as soon as a completed triangle cycle comes out
    even.  None means exhaustively absent; an exhausted budget raises.
    """
    if budget is None:
        budget = Budget()
    n, rows = g.order, g.rows
    cand = [v for v in range(n) if rows[v].bit_count() >= 3]
    if len(cand) < 4:
        return None
    from itertools import combinations

    face_done = [max(pos for pos, e in enumerate(_SEARCH_ORDER) if e in face) for face in _K4_FACES]

    for quad in combinations(cand, 4):
        branch_mask = 0
        for b in quad:
            branch_mask |= 1 << b
        paths = [None] * 6

        def place(step, used_inner):
            budget.tick("odd-k4")
            if step == 6:
                return True
            eidx = _SEARCH_ORDER[step]
            bu, bv = _K4_EDGES[eidx]
            u, v = quad[bu], quad[bv]
            forbidden = (branch_mask | used_inner) & ~(1 << u) & ~(1 << v)
            budget_len = n - 1
            for p in _paths_between(rows, n, u, v, forbidden, budget, budget_len):
                paths[eidx] = p
                ok = True
                for fi, face in enumerate(_K4_FACES):
                    if face_done[fi] == step:
                        if sum(len(paths[e]) - 1 for e in face) % 2 == 0:
                            ok = False
                            break
                if ok:
                    inner = 0
                    for w in p[1:-1]:
                        inner |= 1 << w
                    if place(step + 1, used_inner | inner):
                        return True
                paths[eidx] = None
            return False

        if place(0, 0):
            w = OddK4Witness(quad, tuple(paths))
            assert w.verify(g)
            return w
    return None


def _odd_cycles(g: Graph, budget: Budget):
    """All odd cycles, shortest first, as (mask, vertex tuple).

    Each cycle is produced once: the tour starts at its smallest vertex and
    the second vertex is smaller than the last.
    """
    n, rows = g.order, g.rows
    out = []
    for s in range(n):
        allowed = ~((1 << s) - 1)  # only vertices >= s
        stack = [(s, 1 << s, (s,))]
        while stack:
            cur, used, path = stack.pop()
            budget.tick("cycle enumeration")
            row = rows[cur]
            if len(path) >= 3 and len(path) % 2 == 1 and row >> s & 1 and path[1] < path[-1]:
                out.append(path)
            for w in _bits(row & allowed & ~used):
                stack.append((w, used | 1 << w, path + (w,)))
    out.sort(key=len)
    result = []
    for p in out:
        m = 0
        for v in p:
            m |= 1 << v
        result.append((m, p))
    return result


def find_odd_k32(g: Graph, budget: Budget | None = None) -> OddK32Witness | None:
    """Exact search for an odd-K3^2 subgraph.

    Enumerates odd cycles shortest-first, then picks triples that pairwise
    share at most one vertex; a shared vertex is the (length-0) connecting
    path of its pair, every other pair needs a connecting path whose interior
    avoids all three cycles, with the three paths pairwise disjoint.
    """
    if budget is None:
        budget = Budget()
    cycles = _odd_cycles(g, budget)
    if len(cycles) < 3:
        return None
    n, rows = g.order, g.rows
    pair_order = ((0, 1), (0, 2), (1, 2))

    for i1 in range(len(cycles)):
        m1, c1 = cycles[i1]
        for i2 in range(i1 + 1, len(cycles)):
            m2, c2 = cycles[i2]
            inter12 = m1 & m2
            if inter12.bit_count() > 1:
                continue
            for i3 in range(i2 + 1, len(cycles)):
                budget.tick("odd-k3^2")
                m3, c3 = cycles[i3]
                if (m1 & m3).bit_count() > 1 or (m2 & m3).bit_count() > 1:
                    continue
                masks = (m1, m2, m3)
                cyc = (c1, c2, c3)
                all_cyc = m1 | m2 | m3

                def connect(pi, chosen, used_paths):
                    budget.tick("odd-k3^2")
                    if pi == 3:
                        return True
                    a, b = pair_order[pi]
                    inter = masks[a] & masks[b]
                    if inter:
                        if inter & used_paths:
                            return False
                        x = inter.bit_length() - 1
                        chosen[pi] = (x,)
                        if connect(pi + 1, chosen, used_paths | inter):
                            return True
                        chosen[pi] = None
                        return False
                    third = masks[3 - a - b]
                    for u in cyc[a]:
                        if 1 << u & used_paths:
                            continue
                        for v in cyc[b]:
                            if 1 << v & used_paths:
                                continue
                            forbidden = (all_cyc | used_paths) & ~(1 << u) & ~(1 << v)
                            for p in _paths_between(rows, n, u, v, forbidden, budget, n - 1):
                                pm = 0
                                for w in p:
                                    pm |= 1 << w
                                if pm & third or pm & used_paths:
                                    continue
                                inner = pm ^ (1 << u) ^ (1 << v)
                                if inner & all_cyc:
                                    continue
                                chosen[pi] = p
                                if connect(pi + 1, chosen, used_paths | pm):
                                    return True
                                chosen[pi] = None
                    return False

                chosen = [None] * 3
                if connect(0, chosen, 0):
                    w = OddK32Witness(cyc, tuple(chosen))
                    assert w.verify(g)
                    return w
    return None


@dataclass(frozen=True)
class DichotomyReport:
    """Outcome of checking one graph against the parity-obstruction dichotomy."""

    odd_girth: int
    maps_to_shortest_odd_cycle: bool
    branch: str  # "maps", "odd_k4", or "odd_k32"
    odd_k4: OddK4Witness | None
    odd_k32: OddK32Witness | None

    @property
    def implication_holds(self) -> bool:
        return self.maps_to_shortest_odd_cycle or self.branch in ("odd_k4", "odd_k32")


def gerards_dichotomy_check(g: Graph, budget: Budget | None = None) -> DichotomyReport:
    """Check: no map to the shortest odd cycle implies a parity obstruction.

    Runs the homomorphism solver against C_{odd girth}; on failure, searches
    for an odd-K4 and then an odd-K3^2, reporting which branch certified the
    dichotomy.  A report with ``implication_holds`` false would contradict
    the underlying structure theorem, which the test corpus asserts never
    happens.  Bipartite input is rejected.
    """
    og = odd_girth(g)
    if og == float("inf"):
        raise ValueError("dichotomy check needs a non-bipartite graph")
    if find_homomorphism(g, cycle(og)) is not None:
        return DichotomyReport(og, True, "maps", None, None)
    k4 = find_odd_k4(g, budget)
    if k4 is not None:
        return DichotomyReport(og, False, "odd_k4", k4, None)
    k32 = find_odd_k32(g, budget)
    if k32 is not None:
        return DichotomyReport(og, False, "odd_k32", None, k32)
    return DichotomyReport(og, False, "none", None, None)
