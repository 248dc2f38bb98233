"""Extremal k-domino-trees and the edge counts they realize.

Both families are sequences of maximal cliques glued along k-vertex
separators. The chain packs as many 2k-cliques as possible; the fan keeps
k-1 hub vertices in every clique and so has the fewest edges among the
domino trees on the same vertex count."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from ..errors import DomainError
from ..graph.model import Graph


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")


def _from_cliques(n: int, cliques: Iterable[Sequence[int]]) -> Graph:
    edges = {pair for clique in cliques for pair in combinations(sorted(clique), 2)}
    return Graph(n, frozenset(edges))


def gen_chain(n: int, k: int) -> Graph:
    """Blocks of k vertices ``0..k-1``, ``k..2k-1``, ... on a path; every two
    consecutive blocks form a clique. The last ``n mod k`` vertices form a
    short block attached to the last full one."""
    _check_k(k)
    if n < k:
        raise DomainError(f"a chain needs n >= k, got n={n}, k={k}")
    blocks = [list(range(i, min(i + k, n))) for i in range(0, n, k)]
    if len(blocks) == 1:
        return Graph.complete(n)
    cliques = [blocks[i] + blocks[i + 1] for i in range(len(blocks) - 1)]
    return _from_cliques(n, cliques)


def gen_fan(n: int, k: int) -> Graph:
    """Cliques ``H|{p1}|L``, ``H|{p_i, p_i+1}``, ``H|{p_m}|R`` sharing the
    k-1 hub vertices H, with end blocks L and R of k vertices each."""
    _check_k(k)
    if n < 3 * k:
        raise DomainError(f"a fan needs n >= 3k, got n={n}, k={k}")
    left = list(range(k))
    hub = list(range(k, 2 * k - 1))
    spine = list(range(2 * k - 1, n - k))
    right = list(range(n - k, n))
    cliques = [hub + [spine[0]] + left]
    cliques.extend(hub + [a, b] for a, b in zip(spine, spine[1:]))
    cliques.append(hub + [spine[-1]] + right)
    return _from_cliques(n, cliques)


def max_edge_bound(n: int, k: int) -> int:
    """Most edges a graph on n vertices with sbn at most k can have."""
    _check_k(k)
    if n < k:
        raise DomainError(f"the bound needs n >= k, got n={n}, k={k}")
    r = n % k
    return ((3 * k - 1) * n - k * r - 2 * k * k + r * r) // 2


def fan_edge_count(n: int, k: int) -> int:
    _check_k(k)
    if n < 3 * k:
        raise DomainError(f"the fan count needs n >= 3k, got n={n}, k={k}")
    return k * n + (k * k - 3 * k) // 2


def edge_gap_bound(n: int, k: int) -> int:
    """Edge surplus of the chain over the fan on the same vertex count."""
    _check_k(k)
    if n < 3 * k:
        raise DomainError(f"the gap bound needs n >= 3k, got n={n}, k={k}")
    r = n % k
    return ((k - 1) * n - k * r + r * r) // 2 - 3 * (k * (k - 1) // 2)
