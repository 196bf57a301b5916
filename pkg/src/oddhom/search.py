"""Isomorph-free exhaustive enumeration and the eta(k, l) search driver.

Enumeration is by canonical vertex augmentation: a connected graph of order
n is generated exactly once, from the parent obtained by deleting its
canonical non-cutvertex.  Concretely, a child built by attaching a new
vertex to a subset S of a parent is accepted iff the new vertex attains the
minimum of an isomorphism-invariant key (refined-colour cell, then canonical
bytes of the graph with that vertex marked) over all non-cutvertices.  Every
connected graph has a non-cutvertex, the properties enforced during growth
are hereditary (closed under vertex deletion), and accepted children of one
parent are deduplicated by marked canonical bytes whenever the parent has a
non-trivial automorphism, so the stream contains exactly one representative
per isomorphism class.  The test suite checks this against brute-force
enumeration for small orders.

Growth never creates a short odd cycle: attaching a vertex adjacent to S
creates an odd cycle shorter than 2k+1 iff two members of S are joined by an
odd walk of length at most 2k-3, so admissible S are exactly the independent
sets of a per-parent "conflict graph".  The claim-style rules used for
minimal-counterexample searches split into hereditary ones applied during
growth (no 4-cycle: no common neighbour in S; no 6-cycle: no length-4 path
inside S; degree/second-neighbourhood caps) and final-graph filters
(connectivity is guaranteed, minimum degree 2, exact thread bound, core,
5-walks) that are only consulted when a completed graph is tested as a
witness.  The thread rule additionally prunes during growth by a potential
count: a thread can still be broken by later attachments, but each future
vertex supplies at most three of them under the degree cap.

eta(k, l) itself is the smallest order of a graph of odd-girth exactly 2k+1
with no homomorphism to C_{2l+1}; the driver enumerates, tests candidates,
and re-verifies every witness through a graph6 round trip with fresh solver
state before reporting it.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .budget import Budget, BudgetExceededError
from .canon import marked_bytes, refine_partition
from .constructions import cycle
from .graphs import (
    Graph,
    _bits,
    connected_without,
    from_graph6,
    has_walk_of_length,
    is_connected,
    list_threads,
    max_thread_length,
    odd_girth,
    odd_reach_within,
    to_graph6,
)
from .hom import find_homomorphism, is_core

RULE_CONNECTED = "CONNECTED"
RULE_MIN_DEGREE_2 = "MIN_DEGREE_2"
RULE_MAX_DEGREE_3_SECONDNBHD = "MAX_DEGREE_3_SECONDNBHD"
RULE_NO_THREAD_GE_4 = "NO_THREAD_GE_4"
RULE_NO_4_CYCLE = "NO_4_CYCLE"
RULE_NO_6_CYCLE = "NO_6_CYCLE"
RULE_CORE_ONLY = "CORE_ONLY"
RULE_FIVE_WALK = "FIVE_WALK"

ALL_RULES = frozenset({
    RULE_CONNECTED, RULE_MIN_DEGREE_2, RULE_MAX_DEGREE_3_SECONDNBHD,
    RULE_NO_THREAD_GE_4, RULE_NO_4_CYCLE, RULE_NO_6_CYCLE,
    RULE_CORE_ONLY, RULE_FIVE_WALK,
})

#: Rules justified only for minimal counterexamples; enabling them weakens
#: the unconditional exhaustiveness claim and requires an explicit opt-in on
#: the command line.
CLAIM_RULES = frozenset(ALL_RULES - {RULE_CONNECTED})

_HEREDITARY = frozenset({RULE_NO_4_CYCLE, RULE_NO_6_CYCLE, RULE_MAX_DEGREE_3_SECONDNBHD})
_FINAL = frozenset({RULE_MIN_DEGREE_2, RULE_NO_THREAD_GE_4, RULE_CORE_ONLY, RULE_FIVE_WALK})


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one enumeration / eta search.

    ``k`` enforces odd-girth >= 2k+1 during growth, ``l`` names the target
    cycle C_{2l+1}, ``n_max`` caps the order.  ``prune_rules`` draws from
    ALL_RULES; CONNECTED is implicit in the generation scheme.
    ``parallel_width`` is the order at which the augmentation tree is split
    into independent subtrees for parallel running or checkpointing
    (0 means no split).
    """

    k: int
    l: int
    n_max: int
    prune_rules: frozenset = frozenset({RULE_CONNECTED})
    parallel_width: int = 0

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise ValueError("k and l must both be at least 1")
        if not 3 <= self.n_max <= 64:
            raise ValueError("n_max must lie between 3 and 64")
        unknown = frozenset(self.prune_rules) - ALL_RULES
        if unknown:
            raise ValueError(f"unknown prune rules: {sorted(unknown)}")
        object.__setattr__(self, "prune_rules", frozenset(self.prune_rules))
        if self.parallel_width and not 1 <= self.parallel_width < self.n_max:
            raise ValueError("parallel_width must satisfy 1 <= width < n_max")

    def config_hash(self) -> str:
        payload = json.dumps(
            {"k": self.k, "l": self.l, "n_max": self.n_max,
             "rules": sorted(self.prune_rules), "width": self.parallel_width},
            sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


def assume_minimal_rules() -> frozenset:
    """The full rule set for minimal-counterexample mode."""
    return frozenset(ALL_RULES)


# -- structural predicates (claim_filter) --------------------------------------

def _has_4_cycle(g: Graph) -> bool:
    for u in range(g.order):
        ru = g.rows[u]
        for w in range(u + 1, g.order):
            if (ru & g.rows[w] & ~(1 << u) & ~(1 << w)).bit_count() >= 2:
                return True
    return False


def _has_6_cycle(g: Graph) -> bool:
    n, rows = g.order, g.rows
    # A 6-cycle exists iff some edge (u, w) closes a 5-path; scan paths of
    # length 5 from each vertex with the start fixed as the cycle minimum.
    for s in range(n):
        allowed = ~((1 << s) - 1)
        stack = [(s, 1 << s, 1)]
        while stack:
            cur, used, ln = stack.pop()
            if ln == 6:
                if rows[cur] >> s & 1:
                    return True
                continue
            for w in _bits(rows[cur] & allowed & ~used):
                stack.append((w, used | 1 << w, ln + 1))
    return False


def _second_neighbourhood_ok(g: Graph) -> bool:
    for v in range(g.order):
        d = g.rows[v].bit_count()
        if d >= 4:
            return False
        if d == 3:
            n1 = g.rows[v]
            n2 = 0
            for u in _bits(n1):
                n2 |= g.rows[u]
            if (n2 & ~n1 & ~(1 << v)).bit_count() >= 5:
                return False
    return True


def claim_filter(g: Graph, rule: str) -> bool:
    """True iff ``g`` satisfies the named structural rule."""
    if rule == RULE_CONNECTED:
        return is_connected(g)
    if rule == RULE_MIN_DEGREE_2:
        return all(d >= 2 for d in g.degrees())
    if rule == RULE_MAX_DEGREE_3_SECONDNBHD:
        return _second_neighbourhood_ok(g)
    if rule == RULE_NO_THREAD_GE_4:
        return max_thread_length(g) <= 3
    if rule == RULE_NO_4_CYCLE:
        return not _has_4_cycle(g)
    if rule == RULE_NO_6_CYCLE:
        return not _has_6_cycle(g)
    if rule == RULE_CORE_ONLY:
        return is_core(g)
    if rule == RULE_FIVE_WALK:
        return all(
            has_walk_of_length(g, u, v, 5)
            for u in range(g.order) for v in range(u + 1, g.order)
        )
    raise ValueError(f"unknown rule {rule!r}")


# -- canonical augmentation -----------------------------------------------------

def _path4_targets(rows, u):
    """Vertices reachable from ``u`` by a simple path of exactly 4 edges."""
    out = 0
    base = 1 << u
    for a in _bits(rows[u]):
        ua = base | 1 << a
        for b in _bits(rows[a] & ~ua):
            uab = ua | 1 << b
            for c in _bits(rows[b] & ~uab):
                out |= rows[c] & ~(uab | 1 << c)
    return out


def _conflict_masks(rows, n, k, hered):
    """conflict[u] = attachment partners that would create a forbidden cycle."""
    limit = 2 * k - 3
    conf = [0] * n
    if limit >= 1:
        for u in range(n):
            conf[u] = odd_reach_within(rows, u, limit) & ~(1 << u)
    if RULE_NO_4_CYCLE in hered:
        for u in range(n):
            ru = rows[u]
            m = 0
            for w in range(n):
                if w != u and ru & rows[w] & ~(1 << u) & ~(1 << w):
                    m |= 1 << w
            conf[u] |= m
    if RULE_NO_6_CYCLE in hered:
        for u in range(n):
            conf[u] |= _path4_targets(rows, u) & ~(1 << u)
    return conf


def _indep_sets(cand, conf, max_size):
    """All nonempty subsets of ``cand`` that are independent in ``conf``."""
    out = []
    stack = [(cand, 0, 0)]
    while stack:
        avail, cur, size = stack.pop()
        while avail:
            b = avail & -avail
            avail ^= b
            s = cur | b
            out.append(s)
            if size + 1 < max_size:
                stack.append((avail & ~conf[b.bit_length() - 1], s, size + 1))
    return out


def _thread_break_need(g: Graph) -> int:
    """Minimum number of interior attachments needed to cut all threads to <= 3."""
    need = 0
    for p in list_threads(g):
        length = len(p) - 1
        if length < 4:
            continue
        if p[0] == p[-1]:  # closed: cyclic run of length interior slots
            if len(set(p)) == len(p) - 1:
                need += (length - 1) // 3  # loop anchored at one branch vertex
            else:
                need += -(-length // 3)  # pure cycle component
        else:
            need += (length - 1) // 3
    return need


def _child_ok(rows_t, n, hered):
    if RULE_MAX_DEGREE_3_SECONDNBHD in hered:
        for v in range(n):
            row = rows_t[v]
            d = row.bit_count()
            if d >= 4:
                return False
            if d == 3:
                n2 = 0
                for u in _bits(row):
                    n2 |= rows_t[u]
                if (n2 & ~row & ~(1 << v)).bit_count() >= 5:
                    return False
    return True


def _accepted(rows_t, n, need_bytes):
    """Canonical-deletion acceptance test for a child with added vertex n-1.

    Returns (accepted, marked_bytes_or_None); bytes are produced when the
    caller needs them for sibling deduplication and they were computed
    anyway, or on request.
    """
    added = n - 1
    degs = [r.bit_count() for r in rows_t]
    da = degs[added]
    for v in range(added):
        if degs[v] < da and (degs[v] == 1 or connected_without(rows_t, n, v)):
            return False, None
    cells = refine_partition(rows_t, [(1 << n) - 1])
    ca = 0
    for i, cell in enumerate(cells):
        if cell >> added & 1:
            ca = i
            break
    for cell in cells[:ca]:
        m = cell
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if degs[v] == da and (degs[v] == 1 or connected_without(rows_t, n, v)):
                return False, None
    tie = []
    m = cells[ca] & ~(1 << added)
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        if degs[v] == 1 or connected_without(rows_t, n, v):
            tie.append(v)
    if not tie:
        if need_bytes:
            return True, marked_bytes(rows_t, n, added)
        return True, None
    ba = marked_bytes(rows_t, n, added)
    for v in tie:
        if marked_bytes(rows_t, n, v) < ba:
            return False, None
    return True, ba


def _descendants(rows, n, cfg: SearchConfig, budget, stop_order=None):
    """DFS over accepted descendants of one augmentation node.

    Yields (order, rows) for each accepted graph strictly below the node.
    When ``stop_order`` is given, graphs of that order are yielded but not
    expanded (they form the frontier for parallel workers).
    """
    if n >= cfg.n_max or (stop_order is not None and n >= stop_order):
        return
    hered = cfg.prune_rules & _HEREDITARY
    thread_rule = RULE_NO_THREAD_GE_4 in cfg.prune_rules
    deg_cap = RULE_MAX_DEGREE_3_SECONDNBHD in hered
    conf = _conflict_masks(rows, n, cfg.k, hered)
    full = (1 << n) - 1
    cand = full
    max_size = n
    if deg_cap:
        for v in range(n):
            if rows[v].bit_count() >= 3:
                cand &= ~(1 << v)
        max_size = 3
    parent_cells = refine_partition(rows, [full])
    parent_discrete = all(c & (c - 1) == 0 for c in parent_cells)
    seen = None if parent_discrete else set()
    nc = n + 1
    newbit = 1 << n
    for S in _indep_sets(cand, conf, max_size):
        if budget is not None:
            budget.tick("enumeration")
        child = [r | newbit if S >> i & 1 else r for i, r in enumerate(rows)]
        child.append(S)
        child_t = tuple(child)
        if hered and not _child_ok(child_t, nc, hered):
            continue
        if thread_rule:
            cap = 3 if deg_cap else cfg.n_max - 1
            g = Graph(child_t, _validate=False)
            if _thread_break_need(g) > cap * (cfg.n_max - nc):
                continue
        ok, dedup_key = _accepted(child_t, nc, need_bytes=seen is not None)
        if not ok:
            continue
        if seen is not None:
            if dedup_key in seen:
                continue
            seen.add(dedup_key)
        yield nc, child_t
        yield from _descendants(child_t, nc, cfg, budget, stop_order)


def _root_stream(cfg: SearchConfig, budget=None, stop_order=None):
    root = (0,)
    yield 1, root
    yield from _descendants(root, 1, cfg, budget, stop_order)


def enumerate_graphs(config: SearchConfig, budget: Budget | None = None):
    """One representative per isomorphism class of connected graphs.

    Streams every connected graph of order <= n_max whose odd-girth is at
    least 2k+1 and which survives the hereditary prune rules in the config.
    Final-graph rules (core, minimum degree, walks, exact threads) do not
    restrict the stream; they are applied by the eta driver when it tests
    witnesses, because they are not preserved while a graph is still growing.
    """
    for n, rows in _root_stream(config, budget):
        yield Graph(rows, _validate=False)


# -- eta search ------------------------------------------------------------------

@dataclass(frozen=True)
class OrderRecord:
    n: int
    enumerated: int
    witness_count: int
    witnesses: tuple

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "enumerated": self.enumerated,
            "witness_count": self.witness_count,
            "witness_graphs": list(self.witnesses),
        }, sort_keys=True)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an eta search.

    ``eta_lower_bound_established`` is the first order not excluded by the
    run: the first witness order when one is found, else n_max + 1.  When
    ``minimal_counterexample_mode`` is set the bound is conditional on the
    minimal-counterexample rules that pruned the enumeration, and when
    ``truncated`` is set the run exceeded its budget and excludes nothing.
    """

    k: int
    l: int
    n_max: int
    prune_rules: frozenset
    minimal_counterexample_mode: bool
    records: tuple
    first_witness_order: int | None
    eta_lower_bound_established: int
    wall_time_s: float
    truncated: bool = False

    def json_lines(self):
        for rec in self.records:
            yield rec.to_json()

    def witnesses_at(self, n):
        for rec in self.records:
            if rec.n == n:
                return list(rec.witnesses)
        return []


def _final_filters_pass(g: Graph, rules) -> bool:
    if RULE_MIN_DEGREE_2 in rules and any(d < 2 for d in g.degrees()):
        return False
    if RULE_NO_THREAD_GE_4 in rules and max_thread_length(g) > 3:
        return False
    if RULE_FIVE_WALK in rules and not claim_filter(g, RULE_FIVE_WALK):
        return False
    if RULE_CORE_ONLY in rules and not is_core(g):
        return False
    return True


def _test_witness(rows, n, k, l, rules):
    """graph6 of a verified witness, or None.

    A witness has odd-girth exactly 2k+1, no homomorphism to C_{2l+1}, and
    passes the final-graph rules.  Before reporting, the graph is round
    tripped through graph6 and re-checked with fresh solver state.
    """
    g = Graph(rows, _validate=False)
    if odd_girth(g) != 2 * k + 1:
        return None
    if not _final_filters_pass(g, rules):
        return None
    if find_homomorphism(g, cycle(2 * l + 1)) is not None:
        return None
    g6 = to_graph6(g)
    fresh = from_graph6(g6)
    if odd_girth(fresh) != 2 * k + 1 or find_homomorphism(fresh, cycle(2 * l + 1)) is not None:
        raise AssertionError(f"witness failed independent re-check: {g6}")
    return g6


def _expand_subtree(args):
    """Worker: enumerate and test all descendants of one frontier node."""
    g6, k, l, n_max, rules = args
    cfg = SearchConfig(k=k, l=l, n_max=n_max, prune_rules=frozenset(rules))
    g = from_graph6(g6)
    counts = Counter()
    wits = defaultdict(list)
    for n, rows in _descendants(g.rows, g.order, cfg, None):
        counts[n] += 1
        w = _test_witness(rows, n, k, l, cfg.prune_rules)
        if w is not None:
            wits[n].append(w)
    return dict(counts), {n: ws for n, ws in wits.items()}


_CHECKPOINT_MAGIC = "#oddhom-eta-checkpoint v1"


def _write_checkpoint(path, cfg, split, counts, wits, frontier):
    head = {
        "cfg": cfg.config_hash(),
        "split": split,
        "counts": {str(n): c for n, c in sorted(counts.items())},
        "witnesses": {str(n): sorted(ws) for n, ws in sorted(wits.items())},
    }
    with open(path, "w") as fh:
        fh.write(f"{_CHECKPOINT_MAGIC} {json.dumps(head, sort_keys=True)}\n")
        for g6 in frontier:
            fh.write(g6 + "\n")


def _read_checkpoint(path, cfg):
    with open(path) as fh:
        header = fh.readline().rstrip("\n")
        if not header.startswith(_CHECKPOINT_MAGIC + " "):
            raise ValueError(f"{path} is not an eta checkpoint")
        head = json.loads(header[len(_CHECKPOINT_MAGIC) + 1:])
        if head["cfg"] != cfg.config_hash():
            raise ValueError("checkpoint was written for a different search configuration")
        frontier = [line.strip() for line in fh if line.strip()]
    counts = Counter({int(n): c for n, c in head["counts"].items()})
    wits = defaultdict(list, {int(n): list(ws) for n, ws in head["witnesses"].items()})
    return head["split"], counts, wits, frontier


def eta_search(config: SearchConfig, jobs: int = 1, checkpoint: str | None = None,
               budget: Budget | None = None) -> SearchReport:
    """Exhaustive search for the smallest not-C_{2l+1}-colourable graph.

    Enumerates one representative per isomorphism class up to ``n_max``,
    tests every graph of odd-girth exactly 2k+1 against C_{2l+1}, and
    reports per-order counts plus independently re-verified witnesses.  With
    ``jobs`` > 1 the augmentation tree is split at ``parallel_width`` (or a
    sensible default) into subtrees handled by worker processes; subtrees
    are disjoint, so results merge by plain union and the report does not
    depend on the split.  ``checkpoint`` stores the frontier so an
    interrupted run can resume without regrowing it.  A budget, if given,
    truncates the run and flags the report instead of raising.
    """
    t0 = time.monotonic()
    split = config.parallel_width
    if (jobs > 1 or checkpoint) and not split:
        split = min(8, config.n_max - 1)

    counts = Counter()
    wits = defaultdict(list)
    frontier = []
    truncated = False

    resumed = False
    if checkpoint and os.path.exists(checkpoint):
        split, counts, wits, frontier = _read_checkpoint(checkpoint, config)
        resumed = True

    if not resumed:
        stop = split if split else None
        try:
            for n, rows in _root_stream(config, budget, stop_order=stop):
                counts[n] += 1
                w = _test_witness(rows, n, config.k, config.l, config.prune_rules)
                if w is not None:
                    wits[n].append(w)
                if stop is not None and n == stop:
                    frontier.append(to_graph6(Graph(rows, _validate=False)))
        except BudgetExceededError:
            truncated = True
        if checkpoint and not truncated and split:
            _write_checkpoint(checkpoint, config, split, counts, wits, frontier)

    if split and frontier and not truncated:
        tasks = [(g6, config.k, config.l, config.n_max, tuple(sorted(config.prune_rules)))
                 for g6 in sorted(frontier)]
        if jobs > 1:
            from concurrent.futures import ProcessPoolExecutor

            chunk = max(1, len(tasks) // (jobs * 8))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_expand_subtree, tasks, chunksize=chunk))
        else:
            results = [_expand_subtree(t) for t in tasks]
        for cts, ws in results:
            for n, c in cts.items():
                counts[n] += c
            for n, lst in ws.items():
                wits[n].extend(lst)

    records = tuple(
        OrderRecord(n, counts.get(n, 0), len(wits.get(n, [])), tuple(sorted(wits.get(n, []))))
        for n in range(1, config.n_max + 1)
    )
    first = next((r.n for r in records if r.witness_count), None)
    bound = first if first is not None else config.n_max + 1
    return SearchReport(
        k=config.k, l=config.l, n_max=config.n_max,
        prune_rules=config.prune_rules,
        minimal_counterexample_mode=bool(config.prune_rules & CLAIM_RULES),
        records=records,
        first_witness_order=first,
        eta_lower_bound_established=bound,
        wall_time_s=time.monotonic() - t0,
        truncated=truncated,
    )


#: Rules that remain valid for a minimal witness of order 15: being a core
#: (hence minimum degree 2 and no contained neighbourhood), the 5-walk rule
#: and the thread bound follow from minimality together with the order-14
#: colourability theorem.  The 4-cycle, 6-cycle and second-neighbourhood
#: rules do not: their derivations count vertices against a budget of 14,
#: and the known order-15 witnesses genuinely violate them (fig2a contains
#: 4- and 6-cycles and a degree-3 vertex with five second neighbours, fig2c
#: a degree-4 vertex).
ORDER15_VALID_RULES = frozenset({
    RULE_CONNECTED, RULE_MIN_DEGREE_2, RULE_NO_THREAD_GE_4,
    RULE_CORE_ONLY, RULE_FIVE_WALK,
})


def rediscover_order15(budget: Budget | None = None,
                       rules: frozenset = ORDER15_VALID_RULES):
    """Search for order-15, odd-girth-7 graphs with no homomorphism to C5.

    Uses only the prune rules that are valid for minimal witnesses at order
    15 (see ORDER15_VALID_RULES); the stronger order-<=14 rules would discard
    the known witnesses.  Without those rules the enumeration space up to
    order 15 is far beyond desk scale, so a run is expected to exhaust its
    budget: the return value is (witnesses found so far, completed flag),
    and only a completed run certifies the full list.  Witnesses are
    isomorphism-distinct by construction and each is re-verified before
    inclusion.
    """
    if budget is None:
        budget = Budget(seconds=60.0)
    cfg = SearchConfig(k=3, l=2, n_max=15, prune_rules=frozenset(rules))
    out = []
    complete = True
    try:
        for n, rows in _root_stream(cfg, budget):
            if n != 15:
                continue
            w = _test_witness(rows, n, 3, 2, cfg.prune_rules)
            if w is not None:
                out.append(from_graph6(w))
    except BudgetExceededError:
        complete = False
    return out, complete
