"""Isomorph-free generation of small graphs, canonical forms and scan drivers.

The canonical form of a graph is the smallest graph6 string obtainable by
relabeling, where the minimum is searched over labelings compatible with
iterated color refinement (individualization-refinement).  The search prunes
on bit-string prefixes and on orbits of automorphisms discovered from ties,
which keeps even vertex-transitive graphs cheap at these orders.

Generation extends every (n-1)-vertex representative by one vertex joined to
every neighbor subset, then deduplicates by canonical form; counts are
cross-checked against reference values in the test suite.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .graph import (
    CapacityError,
    Graph,
    _graph_unchecked,
    bits,
    complement,
    from_graph6,
    is_bipartite,
    is_connected,
    is_regular,
    to_graph6,
)

CANONICAL_MAX = 10
ENUMERATE_MAX = 8


@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling-invariant graph6 string; equal iff the graphs are isomorphic."""

    graph6: str


def _refine(n: int, rows: Sequence[int], colors: list[int]) -> list[int]:
    """Iterated invariant color refinement to a stable partition.

    A vertex signature is its color plus the per-color count of neighbors;
    re-ranking signatures in sorted order keeps the coloring canonical, and
    the primary sort on the old color preserves cell order between rounds.
    """
    ncol = max(colors) + 1
    while True:
        sigs = []
        for v in range(n):
            cnt = [0] * ncol
            m = rows[v]
            while m:
                low = m & -m
                cnt[colors[low.bit_length() - 1]] += 1
                m ^= low
            sigs.append((colors[v], tuple(cnt)))
        distinct = sorted(set(sigs))
        if len(distinct) == ncol:
            return colors
        rank = {s: i for i, s in enumerate(distinct)}
        colors = [rank[s] for s in sigs]
        ncol = len(distinct)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex order realizing the canonical form (position -> original vertex)."""
    n, rows = g.n, g.rows
    if n > CANONICAL_MAX:
        raise CapacityError(f"canonical forms limited to {CANONICAL_MAX} vertices")
    if n == 1:
        return (0,)

    best_cols: Optional[list[int]] = None
    best_perm: Optional[list[int]] = None

    # Union-find over vertices; automorphisms discovered at tie leaves merge
    # orbits, which prunes equivalent branches at the top branching node.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def descend(colors: list[int], branch_depth: int) -> None:
        nonlocal best_cols, best_perm
        k = max(colors) + 1
        cells: list[list[int]] = [[] for _ in range(k)]
        for v in range(n):
            cells[colors[v]].append(v)
        prefix: list[int] = []
        branch_cell: Optional[list[int]] = None
        for cell in cells:
            if len(cell) == 1:
                prefix.append(cell[0])
            else:
                branch_cell = cell
                break
        cols: list[int] = []
        for j in range(1, len(prefix)):
            w = prefix[j]
            col = 0
            for i in range(j):
                col = (col << 1) | (rows[prefix[i]] >> w & 1)
            cols.append(col)
        state_equal = True
        if best_cols is not None:
            for mine, theirs in zip(cols, best_cols):
                if mine < theirs:
                    state_equal = False
                    break
                if mine > theirs:
                    return
        if branch_cell is None:
            if best_cols is None or not state_equal:
                best_cols = cols
                best_perm = prefix
            else:
                for a, b in zip(best_perm, prefix):
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
            return
        cell_color = colors[branch_cell[0]]
        tried: list[int] = []
        for v in branch_cell:
            if branch_depth == 0 and any(find(v) == find(u) for u in tried):
                continue
            tried.append(v)
            nc = [c if c <= cell_color else c + 1 for c in colors]
            for u in branch_cell:
                if u != v:
                    nc[u] = cell_color + 1
            descend(_refine(n, rows, nc), branch_depth + 1)

    descend(_refine(n, rows, [0] * n), 0)
    assert best_perm is not None
    return tuple(best_perm)


def canonicalize(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    order = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    new_rows = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for u in bits(g.rows[v]):
            row |= 1 << pos[u]
        new_rows[i] = row
    return _graph_unchecked(g.n, tuple(new_rows))


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(to_graph6(canonicalize(g)))


def isomorphism_witness(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """A vertex bijection mapping g onto h edge-for-edge, or None.

    The map composes the canonical labelings of both graphs, then is verified
    edge by edge before being returned.
    """
    if g.n != h.n or g.m != h.m:
        return None
    lg = canonical_labeling(g)
    lh = canonical_labeling(h)
    mapping = [0] * g.n
    for i in range(g.n):
        mapping[lg[i]] = lh[i]
    for u in range(g.n):
        for v in bits(g.rows[u]):
            if not h.has_edge(mapping[u], mapping[v]):
                return None
    return tuple(mapping)


# ---------------------------------------------------------------------------
# Exhaustive generation

_ALL_GRAPHS: dict[int, list[Graph]] = {}


def enumerate_graphs(n: int, connected_only: bool = False) -> list[Graph]:
    """One canonical representative per isomorphism class of order ``n``.

    Built-in generation is limited to n <= 8; larger orders must come from an
    external graph6 stream.  The output is sorted by canonical graph6 string.
    """
    if not 1 <= n <= ENUMERATE_MAX:
        raise CapacityError(
            f"built-in generation limited to 1..{ENUMERATE_MAX} vertices; "
            "ingest an external graph6 stream for larger orders"
        )
    if n not in _ALL_GRAPHS:
        if n == 1:
            _ALL_GRAPHS[1] = [Graph(1, (0,))]
        else:
            seen: dict[str, Graph] = {}
            for parent in enumerate_graphs(n - 1):
                base = parent.rows
                for subset in range(1 << (n - 1)):
                    rows = [
                        (base[i] | (1 << (n - 1))) if subset >> i & 1 else base[i]
                        for i in range(n - 1)
                    ]
                    rows.append(subset)
                    child = canonicalize(_graph_unchecked(n, tuple(rows)))
                    seen.setdefault(to_graph6(child), child)
            _ALL_GRAPHS[n] = [seen[key] for key in sorted(seen)]
    graphs = _ALL_GRAPHS[n]
    if connected_only:
        return [g for g in graphs if is_connected(g)]
    return list(graphs)


# ---------------------------------------------------------------------------
# Scan drivers


def _filter_all(g: Graph) -> bool:
    return True


def _filter_cobar_disconnected(g: Graph) -> bool:
    return not is_connected(complement(g))


FILTERS: dict[str, Callable[[Graph], bool]] = {
    "all": _filter_all,
    "connected": is_connected,
    "bipartite": is_bipartite,
    "regular": is_regular,
    "cobar-disconnected": _filter_cobar_disconnected,
}


def resolve_filter(spec) -> tuple[str, Callable[[Graph], bool]]:
    """Resolve a filter name (comma-joined names are intersected) or callable."""
    if callable(spec):
        return getattr(spec, "__name__", "custom"), spec
    names = [part.strip() for part in str(spec).split(",") if part.strip()]
    funcs = []
    for name in names:
        if name not in FILTERS:
            raise ValueError(f"unknown filter {name!r}")
        funcs.append(FILTERS[name])
    return ",".join(names) or "all", lambda g: all(f(g) for f in funcs)


@dataclass
class ScanResult:
    """Deterministic outcome of evaluating a predicate over a graph stream."""

    n: int
    filter_name: str
    predicate_name: str
    total: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    equality: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "filter": self.filter_name,
            "predicate": self.predicate_name,
            "total": self.total,
            "counts": dict(sorted(self.counts.items())),
            "equality": self.equality,
            "violations": self.violations,
        }


def _verdict_of(result) -> str:
    return getattr(result, "verdict", result)


_EQUALITY_VERDICTS = {"equality-certified"}
_VIOLATION_VERDICTS = {"violated"}


def _scan_chunk(args) -> list[tuple[str, str]]:
    lines, check = args
    out = []
    for line in lines:
        g = from_graph6(line)
        out.append((line, _verdict_of(check(g))))
    return out


def scan(
    n: int,
    graph_filter,
    check: Callable[[Graph], object],
    *,
    source: Optional[Iterable[Graph]] = None,
    jobs: int = 1,
) -> ScanResult:
    """Evaluate ``check`` on every filtered graph of order ``n``.

    ``source`` defaults to the built-in isomorph-free stream; pass graphs
    parsed from an external graph6 file for orders beyond 8.  Results are
    independent of ``jobs``: members are canonical forms in sorted order.
    """
    filter_name, accept = resolve_filter(graph_filter)
    predicate_name = getattr(check, "__name__", "custom")
    stream = enumerate_graphs(n) if source is None else source
    selected = []
    for g in stream:
        if g.n != n:
            raise ValueError(f"stream graph of order {g.n} in a scan for n={n}")
        if accept(g):
            selected.append(g)
    result = ScanResult(n, filter_name, predicate_name, total=len(selected))
    if jobs > 1:
        lines = [to_graph6(g) for g in selected]
        chunk = max(1, len(lines) // (jobs * 8))
        chunks = [(lines[i : i + chunk], check) for i in range(0, len(lines), chunk)]
        with multiprocessing.Pool(jobs) as pool:
            evaluated = [item for part in pool.map(_scan_chunk, chunks) for item in part]
        pairs = [(from_graph6(line), verdict) for line, verdict in evaluated]
    else:
        pairs = [(g, _verdict_of(check(g))) for g in selected]
    for g, verdict in pairs:
        result.counts[verdict] = result.counts.get(verdict, 0) + 1
        if verdict in _EQUALITY_VERDICTS or verdict in _VIOLATION_VERDICTS:
            key = to_graph6(canonicalize(g)) if g.n <= CANONICAL_MAX else to_graph6(g)
            target = result.equality if verdict in _EQUALITY_VERDICTS else result.violations
            if key not in target:
                target.append(key)
    result.equality.sort()
    result.violations.sort()
    return result
