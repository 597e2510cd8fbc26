"""Exhaustive generation of graphs up to isomorphism, and an independent brute-force count for small orders.

Generation extends every class on n - 1 vertices by a new vertex n - 1 with each possible neighborhood (in bitmask
order) and keeps a candidate only if no graph kept so far in its invariant bucket is isomorphic to it. Classes come
out in discovery order, which is deterministic. Counts: 1, 2, 4, 11, 34, 156, 1044, 12346, 274668 for n = 1..9.
"""
from functools import lru_cache
from itertools import permutations, combinations
from typing import Tuple, Iterator

import numpy as np

from edgesquare.gallery import invariant, is_isomorphic
from edgesquare.graph import Graph, GraphError, from_edge_list, is_connected

ENUMERATION_MAX_N = 9


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return from_edge_list(1, []),
    buckets, out = {}, []
    for g in _classes(n - 1):
        for mask in range(1 << (n - 1)):
            h = from_edge_list(n, g.edges + [(u, n - 1) for u in range(n - 1) if mask >> u & 1])
            bucket = buckets.setdefault(invariant(h), [])
            if any(is_isomorphic(h, k) is not None for k in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return tuple(out)


def enumerate_graphs(n: int, no_isolated: bool = False, connected: bool = False) -> Iterator[Graph]:
    """One representative of every isomorphism class of graphs on n vertices."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise GraphError(f"built-in enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    for g in _classes(n):
        if no_isolated and g.isolated_vertices():
            continue
        if connected and not is_connected(g):
            continue
        yield g


def brute_force_count(n: int, no_isolated: bool = False) -> int:
    """Counts isomorphism classes by taking, for every labeled graph, the smallest edge bitmask over all vertex
    permutations. Independent of `enumerate_graphs`; feasible up to n = 6."""
    pairs = list(combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    bits = (masks[:, None] >> np.arange(len(pairs))) & 1
    if no_isolated:
        incident = np.zeros((len(pairs), n), dtype=np.int64)
        for k, (i, j) in enumerate(pairs):
            incident[k, i] = incident[k, j] = 1
        keep = ((bits @ incident) > 0).all(axis=1)
        masks, bits = masks[keep], bits[keep]
    canonical = masks.copy()
    for perm in permutations(range(n)):
        target = [index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
        canonical = np.minimum(canonical, bits @ (np.int64(1) << np.array(target, dtype=np.int64)))
    return len(np.unique(canonical))
