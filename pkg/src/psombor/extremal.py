"""Tree enumeration and the spectral-radius extremality experiments.

Unlabeled trees are generated from canonical rooted level sequences
(Beyer-Hedetniemi successor rule) and deduplicated by a centre-rooted AHU
string, which doubles as the catalog's canonical key. A Pruefer-sequence
enumerator is kept as an independent oracle for small n (used by the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graphs import Graph, GraphError, structure_stats
from .spectral import sombor_decomposition

MAX_TREE_N = 12

# Unlabeled tree counts for n = 1..12 (reference sequence for sanity checks).
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


@dataclass
class TreeCatalog:
    n: int
    max_degree: int | None
    trees: list[Graph]
    canonical_keys: list[str]


def _rooted_level_sequences(n: int):
    # Successor rule over canonical level sequences, path first, star last.
    levels = list(range(1, n + 1))
    while True:
        yield tuple(levels)
        p = None
        for i in range(n - 1, -1, -1):
            if levels[i] > 2:
                p = i
                break
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _level_sequence_edges(levels) -> list[tuple[int, int]]:
    edges = []
    stack = [0]
    for i in range(1, len(levels)):
        while len(stack) >= levels[i]:
            stack.pop()
        edges.append((stack[-1], i))
        stack.append(i)
    return edges


def tree_centers(g: Graph) -> list[int]:
    """Centre vertex (or two) found by repeated leaf stripping."""
    n = g.n
    if n <= 2:
        return list(range(n))
    deg = list(g.degrees)
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for v in g.adj[u]:
                deg[v] -= 1
                if deg[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def _ahu(g: Graph, root: int, parent: int) -> str:
    subs = sorted(_ahu(g, c, root) for c in g.adj[root] if c != parent)
    return "(" + "".join(subs) + ")"


def tree_canonical_key(g: Graph) -> str:
    """Isomorphism-invariant string: AHU encoding rooted at the centre(s)."""
    cs = tree_centers(g)
    if len(cs) == 1:
        return _ahu(g, cs[0], -1)
    a, b = cs
    return "|".join(sorted([_ahu(g, a, b), _ahu(g, b, a)]))


def enumerate_trees(n: int, max_degree: int | None = None) -> TreeCatalog:
    """All unlabeled trees on n vertices, optionally filtered by max degree."""
    if not 2 <= n <= MAX_TREE_N:
        raise GraphError(f"tree enumeration supports 2 <= n <= {MAX_TREE_N}, got {n}")
    seen: dict[str, Graph] = {}
    for levels in _rooted_level_sequences(n):
        g = Graph(n, _level_sequence_edges(levels))
        key = tree_canonical_key(g)
        if key not in seen:
            seen[key] = g
    items = sorted(seen.items())
    if max_degree is not None:
        items = [(k, t) for k, t in items if max(t.degrees) <= max_degree]
    return TreeCatalog(n=n, max_degree=max_degree,
                       trees=[t for _, t in items],
                       canonical_keys=[k for k, _ in items])


def prufer_tree_keys(n: int) -> set[str]:
    """Canonical keys of all trees on n vertices via exhaustive Pruefer
    sequences; independent oracle for enumerate_trees (practical for n <= 8)."""
    if n == 2:
        return {tree_canonical_key(Graph(2, [(0, 1)]))}
    keys = set()
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        seq_list = list(seq)
        leaves = sorted(v for v in range(n) if degree[v] == 1)
        for x in seq_list:
            leaf = leaves.pop(0)
            edges.append((leaf, x))
            degree[x] -= 1
            if degree[x] == 1:
                # re-insert keeping the leaf pool ordered
                lo, hi = 0, len(leaves)
                while lo < hi:
                    mid = (lo + hi) // 2
                    if leaves[mid] < x:
                        lo = mid + 1
                    else:
                        hi = mid
                leaves.insert(lo, x)
        edges.append((leaves[0], leaves[1]))
        keys.add(tree_canonical_key(Graph(n, edges)))
    return keys


# ---------------------------------------------------------------------------
# extremality of the spectral radius over trees

@dataclass
class TreeExtremesReport:
    n: int
    p: float
    min_radius: float
    max_radius: float
    min_key: str
    max_key: str
    min_is_path: bool
    max_is_star: bool
    min_unique: bool
    max_unique: bool
    radii: dict  # canonical key -> radius

    @property
    def ok(self) -> bool:
        return (self.min_is_path and self.max_is_star
                and self.min_unique and self.max_unique)


def verify_tree_extremes(n: int, p: float) -> TreeExtremesReport:
    """Radius of every tree on n vertices; the path should attain the unique
    minimum and the star the unique maximum (established for p >= 1)."""
    catalog = enumerate_trees(n)
    radii = {}
    for key, tree in zip(catalog.canonical_keys, catalog.trees):
        radii[key] = sombor_decomposition(tree, p).radius
    ordered = sorted(radii.items(), key=lambda kv: kv[1])
    min_key, min_val = ordered[0]
    max_key, max_val = ordered[-1]
    path_key = tree_canonical_key(Graph(n, [(i, i + 1) for i in range(n - 1)]))
    star_key = tree_canonical_key(Graph(n, [(0, i) for i in range(1, n)]))
    gap = 1e-9 * max(1.0, max_val)
    min_unique = len(ordered) < 2 or ordered[1][1] - min_val > gap
    max_unique = len(ordered) < 2 or max_val - ordered[-2][1] > gap
    return TreeExtremesReport(
        n=n, p=p, min_radius=min_val, max_radius=max_val,
        min_key=min_key, max_key=max_key,
        min_is_path=(min_key == path_key), max_is_star=(max_key == star_key),
        min_unique=min_unique, max_unique=max_unique, radii=radii)


def rank_trees(n: int, p: float, count: int = 3) -> list[tuple[str, float]]:
    """Exploratory ranking: (canonical key, radius) sorted by radius."""
    report = verify_tree_extremes(n, p)
    ordered = sorted(report.radii.items(), key=lambda kv: kv[1])
    if count * 2 >= len(ordered):
        return ordered
    return ordered[:count] + ordered[-count:]


# ---------------------------------------------------------------------------
# bridge shift experiment

@dataclass
class ShiftOutcome:
    edge: tuple[int, int]       # oriented (u, v): neighbours of v moved to u
    radius_before: float
    radius_after: float
    increased: bool


@dataclass
class ShiftReport:
    p: float
    outcomes: list[ShiftOutcome]
    applicable: bool
    reason: str | None

    @property
    def all_increased(self) -> bool:
        return all(o.increased for o in self.outcomes)


def shift_experiment(g: Graph, p: float) -> ShiftReport:
    """Move all far-side neighbours across each non-pendant bridge and check
    the spectral radius strictly increases.

    The bridge is oriented by the dominant eigenvector so the kept endpoint u
    has the not-smaller component; a positivity sanity gate rejects graphs
    where the computed vector is not strictly one-signed (cannot happen for
    connected inputs).
    """
    from .graphs import shift_transform

    stats = structure_stats(g)
    if not stats.is_connected:
        return ShiftReport(p, [], False, "disconnected")
    eligible = [(u, v) for u, v, pendant in stats.cut_edges if not pendant]
    if not eligible:
        return ShiftReport(p, [], False, "no non-pendant cut edge")
    dec = sombor_decomposition(g, p, want_vectors=True)
    vec = dec.eigenvectors[:, 0]
    if vec.sum() < 0:
        vec = -vec
    if not (vec > 0).all():
        return ShiftReport(p, [], False, "dominant eigenvector not strictly positive")
    xi1 = dec.radius
    margin = 1e-10 * max(1.0, xi1)
    outcomes = []
    for u, v in eligible:
        if vec[u] < vec[v]:
            u, v = v, u
        shifted = shift_transform(g, u, v)
        xi1_after = sombor_decomposition(shifted, p).radius
        outcomes.append(ShiftOutcome((u, v), xi1, xi1_after,
                                     xi1_after - xi1 > margin))
    return ShiftReport(p, outcomes, True, None)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a SplitMix64-driven Pruefer sequence."""
    from .graphs import _splitmix64

    if n < 2:
        return Graph(max(n, 0))
    if n == 2:
        return Graph(2, [(0, 1)])
    state = seed & ((1 << 64) - 1)
    seq = []
    for _ in range(n - 2):
        state, z = _splitmix64(state)
        seq.append(z % n)
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for x in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            lo, hi = 0, len(leaves)
            while lo < hi:
                mid = (lo + hi) // 2
                if leaves[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            leaves.insert(lo, x)
    edges.append((leaves[0], leaves[1]))
    return Graph(n, edges)
