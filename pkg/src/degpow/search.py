"""Exhaustive search over C5-free graphs and structural validators.

The enumerator walks edge-inclusion decisions in a fixed order and cuts the
include branch the moment the new edge would close a 5-cycle; containment is
monotone, so the cut is exact and every labeled C5-free graph is visited
exactly once.  Labeled counts grow fast (9,369,687 at n = 8), which is why
the leaf work is all bitmask arithmetic on raw adjacency rows; the SmallGraph
API appears only at the edges of the module.

Parallel search splits the decision tree on the first PREFIX_DEPTH edges;
each worker owns a contiguous block of valid prefixes and results are merged
in prefix order, so worker count never changes the outcome.  DEGPOW_THREADS
caps the worker count from the environment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Callable, Iterable, Optional, Sequence

from .graphs import (
    CapacityError,
    SmallGraph,
    _has_c5_through_edge,
    canonical_relabel,
    contains_cycle,
    contains_path_order,
    induced_subgraph,
    is_complete_bipartite,
    to_graph6,
)

MAX_SEARCH_ORDER = 9
PREFIX_DEPTH = 12

# one predicate, two readings: on an existing edge it finds a 5-cycle through
# it; on a missing edge it answers whether adding the edge would close one
_creates_c5 = _has_c5_through_edge


def _edge_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _run_tree(n: int, edges, start: int, rows, deg, leaf) -> None:
    m = len(edges)

    def rec(i: int) -> None:
        if i == m:
            leaf(rows, deg)
            return
        u, v = edges[i]
        if not _creates_c5(rows, u, v):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            rec(i + 1)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            deg[u] -= 1
            deg[v] -= 1
        rec(i + 1)

    rec(start)


def _check_search_order(n: int, force: bool) -> None:
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > MAX_SEARCH_ORDER and not force:
        raise CapacityError(
            f"exhaustive search at n={n} exceeds the default cap of {MAX_SEARCH_ORDER}; "
            "override with force=True (CLI: --force)"
        )


def enumerate_c5_free(n: int, visitor: Optional[Callable] = None, *, force: bool = False) -> int:
    """Visit every labeled C5-free graph on n vertices exactly once.

    visitor, when given, receives the raw adjacency row list; it must treat
    the list as read-only and copy it before storing.  Returns the number of
    graphs visited.
    """
    _check_search_order(n, force)
    count = 0
    if visitor is None:
        def leaf(rows, deg):
            nonlocal count
            count += 1
    else:
        def leaf(rows, deg):
            nonlocal count
            count += 1
            visitor(rows)
    _run_tree(n, _edge_order(n), 0, [0] * n, [0] * n, leaf)
    return count


def collect_c5_free(n: int, *, force: bool = False) -> list[SmallGraph]:
    """Materialize the full C5-free list as SmallGraphs; small n only."""
    out: list[SmallGraph] = []
    enumerate_c5_free(n, lambda rows: out.append(SmallGraph(n, tuple(rows))), force=force)
    return out


# ---------------------------------------------------------------------------
# extremal search


@dataclass(frozen=True, slots=True)
class MaximizerRecord:
    graph: SmallGraph  # canonical relabeling
    canonical: bytes
    biclique: Optional[tuple[int, int]]
    max_degree: int
    edge_count: int


@dataclass(frozen=True, slots=True)
class SearchResult:
    n: int
    p: int
    value: int
    visited: int
    maximizers: tuple[MaximizerRecord, ...]
    workers: int


def resolve_workers(requested: int) -> int:
    """Clamp a worker request against the DEGPOW_THREADS environment cap."""
    if requested < 1:
        raise ValueError(f"worker count must be >= 1, got {requested}")
    cap_text = os.environ.get("DEGPOW_THREADS")
    if cap_text is None or cap_text == "":
        return requested
    try:
        cap = int(cap_text)
    except ValueError:
        raise ValueError(f"DEGPOW_THREADS must be an integer, got {cap_text!r}") from None
    if cap < 1:
        raise ValueError(f"DEGPOW_THREADS must be >= 1, got {cap}")
    return min(requested, cap)


def _prefixes(n: int, edges, depth: int) -> list[int]:
    """All C5-free inclusion patterns over the first `depth` edges, in a
    fixed DFS order (include branch first)."""
    found: list[int] = []
    rows = [0] * n

    def rec(i: int, mask: int) -> None:
        if i == depth:
            found.append(mask)
            return
        u, v = edges[i]
        if not _creates_c5(rows, u, v):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            rec(i + 1, mask | (1 << i))
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        rec(i + 1, mask)

    rec(0, 0)
    return found


def _subtree_search(n: int, ps: Sequence[int], depth: int, mask: int):
    edges = _edge_order(n)
    rows = [0] * n
    deg = [0] * n
    for t in range(depth):
        if (mask >> t) & 1:
            u, v = edges[t]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
    tables = [(p, [d ** p for d in range(n)]) for p in ps]
    best = {p: -1 for p in ps}
    ties: dict[int, list[tuple[int, ...]]] = {p: [] for p in ps}
    visited = 0

    def leaf(rows, deg):
        nonlocal visited
        visited += 1
        for p, table in tables:
            s = 0
            for d in deg:
                s += table[d]
            if s >= best[p]:
                if s > best[p]:
                    best[p] = s
                    ties[p] = [tuple(rows)]
                else:
                    ties[p].append(tuple(rows))

    _run_tree(n, edges, depth, rows, deg, leaf)
    return visited, best, ties


def _search_worker(payload):
    n, ps, depth, mask = payload
    return _subtree_search(n, ps, depth, mask)


def search_extremal(
    n: int,
    ps: Sequence[int],
    *,
    workers: int = 1,
    force: bool = False,
    edge_maximal_only: bool = False,
) -> dict[int, SearchResult]:
    """Exact max of e_p over labeled C5-free graphs, for every p in ps at once.

    Returns per-p SearchResults carrying the value, the visit count, and the
    deduplicated isomorphism classes of maximizers (canonical relabelings,
    sorted by certificate, so output order is independent of worker count).

    edge_maximal_only restricts the candidate set to graphs where no further
    edge can be added without closing a 5-cycle.  Adding an edge never
    decreases a power sum, so the restriction must not change any value;
    tests hold it to that.
    """
    _check_search_order(n, force)
    ps = list(dict.fromkeys(ps))
    if not ps:
        raise ValueError("need at least one exponent p")
    for p in ps:
        if p < 1:
            raise ValueError(f"exponent p must be >= 1, got {p}")
    workers = resolve_workers(workers)

    edges = _edge_order(n)
    m = len(edges)
    depth = min(PREFIX_DEPTH, m)

    if workers == 1 or depth == 0 or m <= depth:
        visited, best, ties = _subtree_search(n, ps, 0, 0)
    else:
        payloads = [(n, ps, depth, mask) for mask in _prefixes(n, edges, depth)]
        visited = 0
        best = {p: -1 for p in ps}
        ties: dict[int, list[tuple[int, ...]]] = {p: [] for p in ps}
        with Pool(processes=workers) as pool:
            for sub_visited, sub_best, sub_ties in pool.map(_search_worker, payloads, chunksize=1):
                visited += sub_visited
                for p in ps:
                    if sub_best[p] > best[p]:
                        best[p] = sub_best[p]
                        ties[p] = list(sub_ties[p])
                    elif sub_best[p] == best[p]:
                        ties[p].extend(sub_ties[p])

    results: dict[int, SearchResult] = {}
    for p in ps:
        records: dict[bytes, MaximizerRecord] = {}
        for rows in ties[p]:
            g = SmallGraph(n, rows)
            if edge_maximal_only and not _is_edge_maximal(rows, n):
                continue
            canon_graph = canonical_relabel(g)
            key = to_graph6(canon_graph).encode("ascii")
            if key not in records:
                records[key] = MaximizerRecord(
                    graph=canon_graph,
                    canonical=key,
                    biclique=is_complete_bipartite(canon_graph),
                    max_degree=max((r.bit_count() for r in canon_graph.rows), default=0),
                    edge_count=canon_graph.edge_count(),
                )
        results[p] = SearchResult(
            n=n,
            p=p,
            value=best[p],
            visited=visited,
            maximizers=tuple(records[k] for k in sorted(records)),
            workers=workers,
        )
    return results


def _is_edge_maximal(rows, n: int) -> bool:
    for v in range(n):
        for u in range(v + 1, n):
            if not (rows[v] >> u) & 1 and not _creates_c5(rows, v, u):
                return False
    return True


def ex_p(n: int, p: int, *, workers: int = 1, force: bool = False) -> SearchResult:
    """ex_p(n, C5): the maximum degree power sum over C5-free graphs on n."""
    return search_extremal(n, [p], workers=workers, force=force)[p]


def max_degree_ratio(result: SearchResult) -> list[Fraction]:
    """Delta/n for each maximizer class, exact."""
    return [Fraction(rec.max_degree, result.n) for rec in result.maximizers]


def classify_maximizers(result: SearchResult) -> dict:
    """JSON-ready classification of a search result's maximizer classes."""
    entries = []
    non_biclique = 0
    for rec in result.maximizers:
        if rec.biclique is None:
            non_biclique += 1
        entries.append(
            {
                "graph6": rec.canonical.decode("ascii"),
                "biclique": list(rec.biclique) if rec.biclique else None,
                "max_degree": rec.max_degree,
                "edge_count": rec.edge_count,
                "max_degree_ratio": f"{rec.max_degree}/{result.n}",
            }
        )
    if not entries:
        note = "no maximizers recorded"
    elif non_biclique == 0:
        note = "all maximizer classes are complete bipartite"
    else:
        note = (
            f"{non_biclique} of {len(entries)} maximizer classes are not complete bipartite "
            "(expected at small orders)"
        )
    return {
        "n": result.n,
        "p": result.p,
        "ex_p": str(result.value),
        "visited": result.visited,
        "maximizer_classes": entries,
        "all_biclique": non_biclique == 0 and bool(entries),
        "note": note,
    }


def classification_report(
    n_values: Iterable[int],
    p_values: Iterable[int],
    *,
    workers: int = 1,
    force: bool = False,
) -> list[dict]:
    """Maximizer classification table over a grid of (n, p)."""
    report = []
    p_list = list(p_values)
    for n in n_values:
        per_p = search_extremal(n, p_list, workers=workers, force=force)
        for p in p_list:
            report.append(classify_maximizers(per_p[p]))
    return report


# ---------------------------------------------------------------------------
# neighborhood structure validators


@dataclass(frozen=True, slots=True)
class DecompositionReport:
    hub: int
    valid: bool
    isolated: int        # K1 components of G[N(u)]: pendant attachments
    edge_pairs: int      # K2 components: triangles through the hub
    other_orders: tuple[int, ...]
    component_masks: tuple[int, ...]


def _components_of(rows, mask: int) -> list[int]:
    comps = []
    rem = mask
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nxt |= rows[b.bit_length() - 1]
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _decomposition_rows(rows, u: int) -> tuple[bool, int, int, list[int], list[int]]:
    mask = rows[u]
    comps = _components_of(rows, mask)
    isolated = 0
    edge_pairs = 0
    other: list[int] = []
    valid = True
    for comp in comps:
        size = comp.bit_count()
        if size == 1:
            isolated += 1
            continue
        if size == 2:
            edge_pairs += 1
            continue
        other.append(size)
        if size >= 4 and not _is_star(rows, comp, size):
            valid = False
    return valid, isolated, edge_pairs, other, comps


def _is_star(rows, comp: int, size: int) -> bool:
    # among connected graphs on >= 4 vertices, exactly the stars avoid a
    # 4-vertex path; 2e == 2(size-1) and max degree size-1 pins them down
    twice_edges = 0
    dmax = 0
    m = comp
    while m:
        b = m & -m
        m ^= b
        d = (rows[b.bit_length() - 1] & comp).bit_count()
        twice_edges += d
        if d > dmax:
            dmax = d
    return twice_edges == 2 * (size - 1) and dmax == size - 1


def neighborhood_decomposition(g: SmallGraph, u: int) -> DecompositionReport:
    """Decompose G[N(u)] into components and test the no-P4 condition.

    Defined for any graph: components of G[N(u)] are counted as isolated
    vertices (pendant attachments at u), single edges (triangles through u),
    or larger.  valid is the no-4-vertex-path condition on G[N(u)]; since a
    P4 there plus u closes a 5-cycle, valid is forced to hold whenever g is
    C5-free, and it is recomputed from the definition precisely so that a
    False on such input would expose a detector bug rather than hide it.
    """
    if not 0 <= u < g.order:
        raise ValueError(f"vertex {u} out of range for order {g.order}")
    _, isolated, edge_pairs, other, comps = _decomposition_rows(g.rows, u)
    neighborhood = induced_subgraph(g, g.neighbors(u))
    valid = not contains_path_order(neighborhood, 4)
    return DecompositionReport(
        hub=u,
        valid=valid,
        isolated=isolated,
        edge_pairs=edge_pairs,
        other_orders=tuple(sorted(other)),
        component_masks=tuple(comps),
    )


@dataclass(frozen=True, slots=True)
class ObservationReport:
    hub: int
    passed: bool
    checked_outside: int
    checked_edges: int
    failures: tuple[str, ...]
    flags: tuple[str, ...]


def _validate_observation_rows(rows, n: int, u: int) -> tuple[list[str], list[str], int, int]:
    nmask = rows[u]
    comps = _components_of(rows, nmask)
    failures: list[str] = []
    flags: list[str] = []
    outside = [w for w in range(n) if w != u and not (nmask >> w) & 1]
    for w in outside:
        tw = rows[w] & nmask
        if not tw:
            continue
        touched = [c for c in comps if c & tw]
        if all(c.bit_count() == 1 for c in touched):
            if len(touched) >= 2:
                flags.append(f"w={w} attaches to {len(touched)} pendant gadgets")
            continue
        if len(touched) == 1:
            comp = touched[0]
            hits = tw.bit_count()
            if comp.bit_count() == 2:
                continue  # one or both ends of a triangle gadget
            if hits == 1:
                continue
            failures.append(
                f"w={w} hits {hits} vertices of one order-{comp.bit_count()} gadget"
            )
        else:
            failures.append(
                f"w={w} attaches to {len(touched)} gadgets, not all pendants"
            )
    edge_checks = 0
    for i, w1 in enumerate(outside):
        row1 = rows[w1]
        for w2 in outside[i + 1:]:
            if not (row1 >> w2) & 1:
                continue
            edge_checks += 1
            t1 = row1 & nmask
            t2 = rows[w2] & nmask
            if not t1 or not t2:
                continue
            if t1 == t2 and t1.bit_count() == 1:
                continue
            failures.append(
                f"edge {w1}-{w2} outside the hub has attachments {t1:b} vs {t2:b}"
            )
    return failures, flags, len(outside), edge_checks


def validate_observations(g: SmallGraph, u: int) -> ObservationReport:
    """Check the two attachment observations for outside vertices.

    Preconditions (violations raise ValueError): g is C5-free, u has maximum
    degree, and G[N(u)] contains at least one edge.  Both observations are
    consequences of C5-freeness, so failures indicate bugs and are reported,
    never swallowed.
    """
    if not 0 <= u < g.order:
        raise ValueError(f"vertex {u} out of range for order {g.order}")
    if contains_cycle(g, 5):
        raise ValueError("graph contains a 5-cycle; observation contract requires C5-freeness")
    degs = [r.bit_count() for r in g.rows]
    if degs[u] != max(degs):
        raise ValueError(f"vertex {u} does not have maximum degree")
    nmask = g.rows[u]
    if not any(g.rows[x.bit_length() - 1] & nmask for x in _bits(nmask)):
        raise ValueError("neighborhood of the hub contains no edge")
    failures, flags, outside, edge_checks = _validate_observation_rows(g.rows, g.order, u)
    return ObservationReport(
        hub=u,
        passed=not failures,
        checked_outside=outside,
        checked_edges=edge_checks,
        failures=tuple(failures),
        flags=tuple(flags),
    )


def _bits(mask: int):
    while mask:
        b = mask & -mask
        mask ^= b
        yield b


# ---------------------------------------------------------------------------
# full-enumeration sweeps (acceptance-scale validation)


@dataclass(frozen=True, slots=True)
class SweepResult:
    n: int
    graphs: int
    pairs_checked: int
    violations: tuple[str, ...]


def sweep_neighborhood_validity(n: int, *, force: bool = False) -> SweepResult:
    """Check the no-P4 neighborhood condition for every (C5-free g, u).

    A 4-vertex path needs four vertices, so only hubs of degree >= 4 can
    fail; everything else is valid by counting.  Violating graphs come back
    as graph6 strings (the expected result is none).
    """
    _check_search_order(n, force)
    graphs = 0
    pairs = 0
    violations: list[str] = []

    def leaf(rows, deg):
        nonlocal graphs, pairs
        graphs += 1
        for u in range(n):
            if deg[u] < 4:
                continue
            pairs += 1
            mask = rows[u]
            rem = mask
            while rem:
                seed = rem & -rem
                comp = seed
                frontier = seed
                while frontier:
                    nxt = 0
                    while frontier:
                        b = frontier & -frontier
                        frontier ^= b
                        nxt |= rows[b.bit_length() - 1]
                    frontier = nxt & mask & ~comp
                    comp |= frontier
                rem &= ~comp
                size = comp.bit_count()
                if size <= 3:
                    continue
                if not _is_star(rows, comp, size):
                    violations.append(to_graph6(SmallGraph(n, tuple(rows))) + f" u={u}")

    _run_tree(n, _edge_order(n), 0, [0] * n, [0] * n, leaf)
    return SweepResult(n=n, graphs=graphs, pairs_checked=pairs, violations=tuple(violations))


def sweep_observations(n: int, *, force: bool = False) -> SweepResult:
    """Run the attachment observations over every C5-free graph on n vertices
    and every max-degree hub whose neighborhood contains an edge."""
    _check_search_order(n, force)
    graphs = 0
    pairs = 0
    violations: list[str] = []

    def leaf(rows, deg):
        nonlocal graphs, pairs
        graphs += 1
        dmax = 0
        for d in deg:
            if d > dmax:
                dmax = d
        if dmax == 0:
            return
        for u in range(n):
            if deg[u] != dmax:
                continue
            nmask = rows[u]
            has_edge = False
            m = nmask
            while m:
                b = m & -m
                m ^= b
                if rows[b.bit_length() - 1] & nmask:
                    has_edge = True
                    break
            if not has_edge:
                continue
            pairs += 1
            failures, _, _, _ = _validate_observation_rows(rows, n, u)
            for msg in failures:
                violations.append(to_graph6(SmallGraph(n, tuple(rows))) + f" u={u}: {msg}")

    _run_tree(n, _edge_order(n), 0, [0] * n, [0] * n, leaf)
    return SweepResult(n=n, graphs=graphs, pairs_checked=pairs, violations=tuple(violations))


def sweep_bipartite_completion(n: int, *, force: bool = False) -> SweepResult:
    """Verify completion monotonicity: splitting at a max-degree hub with
    independent neighborhood never lowers any degree."""
    _check_search_order(n, force)
    graphs = 0
    pairs = 0
    violations: list[str] = []

    def leaf(rows, deg):
        nonlocal graphs, pairs
        graphs += 1
        dmax = 0
        for d in deg:
            if d > dmax:
                dmax = d
        if dmax == 0:
            return
        for u in range(n):
            if deg[u] != dmax:
                continue
            nmask = rows[u]
            independent = True
            m = nmask
            while m:
                b = m & -m
                m ^= b
                if rows[b.bit_length() - 1] & nmask:
                    independent = False
                    break
            if not independent:
                continue
            pairs += 1
            for v in range(n):
                after = n - dmax if (nmask >> v) & 1 else dmax
                if deg[v] > after:
                    violations.append(to_graph6(SmallGraph(n, tuple(rows))) + f" u={u} v={v}")

    _run_tree(n, _edge_order(n), 0, [0] * n, [0] * n, leaf)
    return SweepResult(n=n, graphs=graphs, pairs_checked=pairs, violations=tuple(violations))
