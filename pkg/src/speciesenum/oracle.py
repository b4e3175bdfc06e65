"""Brute-force counts of small graphs and structures.

Nothing here touches cycle indices.  Graphs are edge bitmasks over the pairs
of {0..n-1}; isomorphism classes are found by applying every vertex
permutation.  When a graph passes a family filter its whole orbit is marked
as seen, so each class is expanded exactly once.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial

import numpy as np

from .cycleindex import CycleIndexSeries, PMonomial
from .partitions import Partition, partitions_of, z_weight

MAX_VERTICES = 8

FAMILIES = ("bipartite", "connected_bipartite", "nonseparable_bipartite", "bicolored", "connected_bicolored")


def _check_n(n: int, limit: int = MAX_VERTICES) -> None:
    if not 0 <= n <= limit:
        raise ValueError(f"brute force is limited to {limit} vertices (asked for {n})")


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _edge_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: e for e, pair in enumerate(edge_pairs(n))}


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per permutation: where each edge goes, and where each vertex goes."""
    perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(factorial(n), n)
    idx = _edge_index(n)
    pairs = edge_pairs(n)
    edge_map = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for e, (a, b) in enumerate(pairs):
        pa, pb = perms[:, a], perms[:, b]
        lo, hi = np.minimum(pa, pb), np.maximum(pa, pb)
        # index of pair (lo, hi) in lexicographic combination order
        edge_map[:, e] = lo * (2 * n - lo - 1) // 2 + (hi - lo - 1)
    assert all(edge_map[0, e] == idx[p] for e, p in enumerate(pairs))
    return edge_map, perms


def _bits(mask: int) -> list[int]:
    return [e for e in range(mask.bit_length()) if mask >> e & 1]


def _orbit(n: int, edges: int, colors: int = 0, colored: bool = False, swap: bool = False) -> np.ndarray:
    """All encodings (colors << E | edges) of relabelings of one graph."""
    edge_map, perms = _perm_tables(n)
    E = len(edge_pairs(n))
    img = np.zeros(len(perms), dtype=np.int64)
    for e in _bits(edges):
        img |= np.left_shift(1, edge_map[:, e])
    if not colored:
        return img
    cimg = np.zeros(len(perms), dtype=np.int64)
    for v in _bits(colors):
        cimg |= np.left_shift(1, perms[:, v])
    out = np.left_shift(cimg, E) | img
    if swap:
        full = (1 << n) - 1
        out = np.concatenate([out, np.left_shift(full ^ cimg, E) | img])
    return out


def canonical_form(n: int, edges: int, colors: int = 0, colored: bool = False, swap: bool = False) -> int:
    """Least encoding over all vertex permutations (and color swaps when asked)."""
    return int(_orbit(n, edges, colors, colored, swap).min())


# ---------------------------------------------------------------------------
# graph predicates


def _adjacency(n: int, edges: int) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in _bits(edges):
        a, b = edge_pairs(n)[e]
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _connected(adj: list[list[int]], removed: int = -1) -> bool:
    verts = [v for v in range(len(adj)) if v != removed]
    if not verts:
        return True
    seen = {verts[0]}
    todo = deque([verts[0]])
    while todo:
        v = todo.popleft()
        for w in adj[v]:
            if w != removed and w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(verts)


def is_connected(n: int, edges: int) -> bool:
    return _connected(_adjacency(n, edges))


def is_bipartite(n: int, edges: int) -> bool:
    adj = _adjacency(n, edges)
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        todo = deque([s])
        while todo:
            v = todo.popleft()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    todo.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_nonseparable(n: int, edges: int) -> bool:
    """Connected with no cut vertex; one vertex and a single edge both count."""
    adj = _adjacency(n, edges)
    if not _connected(adj):
        return False
    if n <= 2:
        return True
    return all(_connected(adj, removed=v) for v in range(n))


def is_proper_coloring(n: int, edges: int, colors: int) -> bool:
    return all((colors >> a & 1) != (colors >> b & 1) for a, b in (edge_pairs(n)[e] for e in _bits(edges)))


# ---------------------------------------------------------------------------
# candidate generation


def _bicolored_graphs(n: int):
    """Every (coloring, edge set) pair with edges only between the two color classes."""
    pairs = edge_pairs(n)
    for colors in range(1 << n):
        cross = [e for e, (a, b) in enumerate(pairs) if (colors >> a & 1) != (colors >> b & 1)]
        for k in range(1 << len(cross)):
            edges = 0
            for j, e in enumerate(cross):
                if k >> j & 1:
                    edges |= 1 << e
            yield colors, edges


def count_labeled_bicolored(n: int) -> int:
    """Labeled bicolored graphs, counted coloring by coloring."""
    _check_n(n)
    total = 0
    pairs = edge_pairs(n)
    for colors in range(1 << n):
        cross = sum(1 for a, b in pairs if (colors >> a & 1) != (colors >> b & 1))
        total += 1 << cross
    return total


def bicolored_closed_form(n: int) -> int:
    return sum(comb(n, j) * 2 ** (j * (n - j)) for j in range(n + 1))


_FAMILY_LIMITS = {"nonseparable_bipartite": 6}


@lru_cache(maxsize=None)
def count_unlabeled(family: str, n: int) -> int:
    """Isomorphism classes of graphs on n vertices in the given family."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    _check_n(n, _FAMILY_LIMITS.get(family, 7))
    colored = family in ("bicolored", "connected_bicolored")
    E = len(edge_pairs(n))
    seen: set[int] = set()
    count = 0
    for colors, edges in _bicolored_graphs(n):
        key = (colors << E | edges) if colored else edges
        if key in seen:
            continue
        if not _accept(family, n, colors, edges):
            continue
        seen.update(_orbit(n, edges, colors, colored=colored).tolist())
        count += 1
    return count


@lru_cache(maxsize=None)
def count_labeled(family: str, n: int) -> int:
    """Labeled graphs on n vertices in the given family."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    _check_n(n, _FAMILY_LIMITS.get(family, 7))
    colored = family in ("bicolored", "connected_bicolored")
    E = len(edge_pairs(n))
    found = set()
    for colors, edges in _bicolored_graphs(n):
        if _accept(family, n, colors, edges):
            found.add((colors << E | edges) if colored else edges)
    return len(found)


def _accept(family: str, n: int, colors: int, edges: int) -> bool:
    if family in ("bicolored", "connected_bicolored"):
        if not is_proper_coloring(n, edges, colors):
            return False
        return family == "bicolored" or (n >= 1 and is_connected(n, edges))
    if not is_bipartite(n, edges):
        return False
    if family == "bipartite":
        return True
    if family == "connected_bipartite":
        return n >= 1 and is_connected(n, edges)
    return n >= 1 and is_nonseparable(n, edges)


# ---------------------------------------------------------------------------
# trees and k-trees


def _grow(n: int, edges: int, attach_sets) -> list[int]:
    """Edge masks on n+1 vertices obtained by joining a new vertex to each given set."""
    idx = _edge_index(n + 1)
    old = edge_pairs(n)
    base = 0
    for e in _bits(edges):
        base |= 1 << idx[old[e]]
    out = []
    for verts in attach_sets:
        m = base
        for v in verts:
            m |= 1 << idx[(v, n)]
        out.append(m)
    return out


@lru_cache(maxsize=None)
def _tree_classes(vertices: int, rooted: bool) -> tuple[tuple[int, int], ...]:
    """Canonical (root bits, edges) for trees on the given number of vertices."""
    _check_n(vertices)
    if vertices < 1:
        return ()
    if vertices == 1:
        return ((1 if rooted else 0, 0),)
    out = set()
    n = vertices - 1
    for root, edges in _tree_classes(n, rooted):
        for m in _grow(n, edges, [(v,) for v in range(n)]):
            out.add(_split(vertices, canonical_form(vertices, m, root, colored=rooted), rooted))
    return tuple(sorted(out))


def _split(n: int, code: int, colored: bool) -> tuple[int, int]:
    E = len(edge_pairs(n))
    return (code >> E, code & ((1 << E) - 1)) if colored else (0, code)


def count_unlabeled_trees(vertices: int) -> int:
    return len(_tree_classes(vertices, False))


def count_rooted_trees(vertices: int) -> int:
    return len(_tree_classes(vertices, True))


def _cliques(n: int, edges: int, size: int) -> list[tuple[int, ...]]:
    adj = _adjacency(n, edges)
    nbrs = [set(a) for a in adj]
    return [c for c in combinations(range(n), size) if all(b in nbrs[a] for a, b in combinations(c, 2))]


@lru_cache(maxsize=None)
def _ktree_classes(k: int, hedra: int) -> tuple[int, ...]:
    if hedra < 1:
        raise ValueError("a k-tree has at least one hedron")
    n = k + hedra
    _check_n(n)
    if hedra == 1:
        return (canonical_form(n, (1 << len(edge_pairs(n))) - 1),)
    out = set()
    for edges in _ktree_classes(k, hedra - 1):
        for m in _grow(n - 1, edges, _cliques(n - 1, edges, k)):
            out.add(canonical_form(n, m))
    return tuple(sorted(out))


def count_small_ktrees(k: int, hedra: int) -> int:
    """k-trees with the given number of (k+1)-cliques, grown one vertex at a time."""
    if hedra == 0:
        return 1  # the lone k-clique, matching the tables' first row
    return len(_ktree_classes(k, hedra))


def count_small_2trees(hedra: int) -> int:
    if hedra > 5:
        raise ValueError("the 2-tree oracle is limited to 5 hedra")
    return count_small_ktrees(2, hedra)


# ---------------------------------------------------------------------------
# fixed-point counts for small species


def _cycle_perm(lam: Partition) -> tuple[int, ...]:
    """A permutation of {0..n-1} with cycle type lam, as an image tuple."""
    images = []
    start = 0
    for part in lam:
        images.extend(start + (j + 1) % part for j in range(part))
        start += part
    return tuple(images)


def _structures(name: str, n: int) -> list:
    labels = range(n)
    if name == "E":
        return [frozenset(labels)]
    if name == "E2oE2":
        if n != 4:
            return []
        return list({frozenset(frozenset(b) for b in (pair, tuple(set(labels) - set(pair))))
                     for pair in combinations(labels, 2)})
    if name == "C":
        if n == 0:
            return []
        # cyclic orders as successor maps
        return [tuple(dict(zip((0,) + p, p + (0,))).get(v) for v in labels) for p in permutations(range(1, n))]
    if name == "E2_pointed":
        return [(frozenset(labels), v) for v in labels] if n == 2 else []
    raise ValueError(f"unknown species {name!r}")


def _act(name: str, sigma: tuple[int, ...], s):
    if name == "E":
        return frozenset(sigma[v] for v in s)
    if name == "E2oE2":
        return frozenset(frozenset(sigma[v] for v in b) for b in s)
    if name == "C":
        out = [0] * len(s)
        for v, w in enumerate(s):
            out[sigma[v]] = sigma[w]
        return tuple(out)
    if name == "E2_pointed":
        return (frozenset(sigma[v] for v in s[0]), sigma[s[1]])
    raise ValueError(f"unknown species {name!r}")


def fix_count(name: str, lam: Partition) -> int:
    """Structures on sum(lam) labels fixed by a permutation of cycle type lam."""
    sigma = _cycle_perm(Partition(lam))
    return sum(1 for s in _structures(name, sum(lam)) if _act(name, sigma, s) == s)


def fix_count_cycle_index(name: str, n: int) -> CycleIndexSeries:
    """Degree-n part of a cycle index assembled from fixed-point counts."""
    _check_n(n)
    terms = {}
    for lam in partitions_of(n):
        f = fix_count(name, lam)
        if f:
            terms[PMonomial(lam)] = Fraction(f, z_weight(lam))
    return CycleIndexSeries(terms)


def labeled_count_from_egf_coefficient(c, n: int) -> int:
    value = Fraction(c) * factorial(n)
    if value.denominator != 1:
        raise ArithmeticError(f"labeled count {value} is not an integer")
    return int(value)
