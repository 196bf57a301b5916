"""Shared brute-force oracles and helpers.

The oracles here are deliberately naive (enumerate all labelled graphs, all
vertex maps, all permutations) so that the fast library paths are checked
against something with no shared machinery.
"""

import itertools
import random

import pytest

from oddhom import Graph, find_homomorphism, is_connected, odd_girth, verify_mapping
from oddhom.canon import canonical_bytes


def all_labelled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def brute_classes(n, connected_only=True, min_odd_girth=3):
    """One representative per isomorphism class, deduplicated by canonical form.

    The canonical form is itself under test elsewhere (against permutations),
    so enumeration tests that use this oracle cross-check counts rather than
    identities.
    """
    reps = {}
    for g in all_labelled_graphs(n):
        if connected_only and not is_connected(g):
            continue
        if odd_girth(g) < min_odd_girth:
            continue
        reps.setdefault(canonical_bytes(g), g)
    return list(reps.values())


def brute_iso(g1, g2):
    """Isomorphism by direct permutation search."""
    if g1.order != g2.order or g1.edge_count() != g2.edge_count():
        return False
    for p in itertools.permutations(range(g1.order)):
        if all(g2.has_edge(p[a], p[b]) for a, b in g1.edges()):
            return True
    return False


def brute_has_hom(g, h):
    """Homomorphism existence by scanning all target_order^source_order maps."""
    for img in itertools.product(range(h.order), repeat=g.order):
        if all(h.has_edge(img[a], img[b]) for a, b in g.edges()):
            return True
    return False


def hom_checked(g, h):
    """Solver call that enforces the suite-wide soundness invariants.

    Every success is verified edge-by-edge and must respect odd-girth
    monotonicity (a homomorphic image cannot have larger odd-girth).
    """
    m = find_homomorphism(g, h)
    if m is not None:
        assert verify_mapping(g, h, m)
        assert odd_girth(h) <= odd_girth(g)
    return m


def random_graph(rng: random.Random, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240811)
