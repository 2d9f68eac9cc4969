"""
Chordal Graph Recognition
=========================

Lexicographic breadth-first search by partition refinement produces a
candidate perfect elimination ordering (PEO); ``verify_peo`` certifies it.
Graphs are ``networkx.Graph`` objects with sortable vertex labels.
"""

from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

import networkx as nx

EliminationOrdering = Tuple[Hashable, ...]


def neighborhood(G: nx.Graph, v: Hashable) -> FrozenSet[Hashable]:
    """N_G(v), the vertices adjacent to ``v``.

    Raises:
        ValueError: If ``v`` is not a vertex of G
    """
    if v not in G:
        raise ValueError(f"{v!r} is not a vertex of the graph")
    return frozenset(G.adj[v])


def verify_peo(G: nx.Graph, order: Sequence[Hashable]) -> bool:
    """Check that the later neighbours of every vertex form a clique.

    Uses the parent test: for each vertex, its earliest later neighbour must
    be adjacent to all of its other later neighbours. Linear in V + E.

    Raises:
        ValueError: If ``order`` is not a permutation of the vertices of G
    """
    order = list(order)
    if len(order) != G.number_of_nodes() or set(order) != set(G.nodes):
        raise ValueError("ordering is not a permutation of the graph's vertices")

    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in G.adj[v] if position[w] > position[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=position.__getitem__)
        parent_adj = G.adj[parent]
        for w in later:
            if w != parent and w not in parent_adj:
                return False
    return True


class _Cell:
    """One class of the Lex-BFS partition, kept in a doubly linked list."""

    __slots__ = ("members", "prev", "next", "split", "stamp")

    def __init__(self):
        self.members: Dict[Hashable, None] = {}
        self.prev: Optional["_Cell"] = None
        self.next: Optional["_Cell"] = None
        self.split: Optional["_Cell"] = None
        self.stamp = -1


def lex_bfs(G: nx.Graph) -> List[Hashable]:
    """Lexicographic BFS visit order.

    Ties go to the lowest vertex label: each partition class stays sorted
    because members are moved in ascending adjacency order.
    """
    nodes = sorted(G.nodes)
    if not nodes:
        return []
    adjacency = {v: sorted(G.adj[v]) for v in nodes}

    head = _Cell()
    for v in nodes:
        head.members[v] = None
    cell_of = {v: head for v in nodes}
    visited = set()
    order: List[Hashable] = []

    for step in range(len(nodes)):
        v = next(iter(head.members))
        del head.members[v]
        visited.add(v)
        order.append(v)
        touched = []
        if not head.members:
            head = head.next
            if head is not None:
                head.prev = None

        for w in adjacency[v]:
            if w in visited:
                continue
            cell = cell_of[w]
            if cell.stamp != step:
                new = _Cell()
                new.prev, new.next = cell.prev, cell
                if cell.prev is not None:
                    cell.prev.next = new
                else:
                    head = new
                cell.prev = new
                cell.split, cell.stamp = new, step
                touched.append(cell)
            del cell.members[w]
            cell.split.members[w] = None
            cell_of[w] = cell.split

        for cell in touched:
            if not cell.members:
                if cell.prev is not None:
                    cell.prev.next = cell.next
                if cell.next is not None:
                    cell.next.prev = cell.prev
    return order


def is_chordal(G: nx.Graph) -> Tuple[bool, Optional[EliminationOrdering]]:
    """Decide chordality, returning a certified PEO when the graph is chordal.

    The reverse of the Lex-BFS order is a PEO exactly when G is chordal, so the
    candidate is checked with ``verify_peo`` and discarded if it fails.
    """
    candidate = tuple(reversed(lex_bfs(G)))
    if verify_peo(G, candidate):
        return True, candidate
    return False, None
