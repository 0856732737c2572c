"""Canonical labeling by partition refinement and individualization.

An ordered partition is a list of disjoint vertex-set bitmasks.  Refinement
splits cells by neighbour counts until the partition is equitable; the search
individualizes vertices of the first largest non-singleton cell and keeps the
discrete leaf whose relabeled graph has the smallest graph6 bit string.
Automorphisms found along the way (two leaves with the same relabeled graph)
prune the tree and give the automorphism group order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graphcore import CapacityExceeded, Graph, GraphError, MAX_ORDER, bits_of, encode_graph6

Partition = list[int]


class InvalidPartition(GraphError):
    pass


def unit_partition(G: Graph) -> Partition:
    return [G.vertex_mask]


def partition_from_cells(cells: Sequence[Sequence[int]]) -> Partition:
    out = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        out.append(m)
    return out


def cells_of(p: Partition) -> list[list[int]]:
    return [list(bits_of(c)) for c in p]


def check_partition(G: Graph, p: Sequence[int]) -> None:
    seen = 0
    for c in p:
        if not c:
            raise InvalidPartition("empty cell")
        if c & seen:
            raise InvalidPartition("cells overlap")
        seen |= c
    if seen != G.vertex_mask:
        raise InvalidPartition("cells do not cover the vertex set")


def _refine(adj: Sequence[int], cells: list[int], queue: deque) -> list[int]:
    while queue:
        splitter = queue.popleft()
        out = []
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in bits_of(cell):
                c = (adj[v] & splitter).bit_count()
                groups[c] = groups.get(c, 0) | 1 << v
            if len(groups) == 1:
                out.append(cell)
                continue
            for c in sorted(groups):
                out.append(groups[c])
                queue.append(groups[c])
        cells = out
    return cells


def refine(G: Graph, p: Sequence[int] | None = None) -> Partition:
    """Coarsest equitable partition at least as fine as ``p``.

    A split cell is replaced in place by its fragments in ascending order of
    neighbour count into the splitting set.
    """
    cells = list(p) if p is not None else unit_partition(G)
    check_partition(G, cells)
    return _refine(G.adj, cells, deque(cells))


def is_equitable(G: Graph, p: Sequence[int]) -> bool:
    for cell in p:
        for target in p:
            if len({(G.adj[v] & target).bit_count() for v in bits_of(cell)}) > 1:
                return False
    return True


def _orbits(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


@dataclass
class CanonResult:
    """Outcome of a canonical labeling search.

    ``labeling[v]`` is the canonical label of vertex ``v``; ``generators``
    generate the automorphism group (of the coloured graph when a starting
    partition was given).
    """

    n: int
    labeling: list[int]
    key: int
    generators: list[list[int]] = field(default_factory=list)
    group_order: int = 1
    nodes: int = 0

    def orbits(self) -> list[int]:
        """Orbit representative (smallest member) for each vertex."""
        return _orbits(self.n, self.generators)


class _Search:
    def __init__(self, G: Graph):
        self.n = G.n
        self.adj = G.adj
        self.first_key = None
        self.first_order = None
        self.first_path: list[int] = []
        self.best_key = None
        self.best_order = None
        self.best_path: list[int] = []
        self.gens: list[list[int]] = []
        self.group_order = 1
        self.nodes = 0

    def _key(self, order: list[int]) -> int:
        adj = self.adj
        lab = [0] * self.n
        for i, v in enumerate(order):
            lab[v] = i
        key = 0
        for j in range(1, self.n):
            col = 0
            for x in bits_of(adj[order[j]]):
                i = lab[x]
                if i < j:
                    col |= 1 << (j - 1 - i)
            key = key << j | col
        return key

    def _automorphism(self, order_a: list[int], order_b: list[int]) -> None:
        g = [0] * self.n
        for va, vb in zip(order_a, order_b):
            g[va] = vb
        if any(g[v] != v for v in range(self.n)):
            self.gens.append(g)

    @staticmethod
    def _common(p: list[int], q: list[int]) -> int:
        i = 0
        for x, y in zip(p, q):
            if x != y:
                break
            i += 1
        return i

    def _leaf(self, cells: list[int], path: list[int]) -> int:
        depth = len(path)
        order = [c.bit_length() - 1 for c in cells]
        key = self._key(order)
        if self.first_key is None:
            self.first_key = self.best_key = key
            self.first_order = self.best_order = order
            self.first_path = list(path)
            self.best_path = list(path)
            return depth - 1
        if key == self.first_key:
            self._automorphism(self.first_order, order)
            return self._common(path, self.first_path)
        if key == self.best_key:
            self._automorphism(self.best_order, order)
            return self._common(path, self.best_path)
        if key < self.best_key:
            self.best_key = key
            self.best_order = order
            self.best_path = list(path)
        return depth - 1

    def search(self, cells: list[int], path: list[int]) -> int:
        """Explore the subtree below ``cells``; return the depth to resume at."""
        self.nodes += 1
        depth = len(path)
        if len(cells) == self.n:
            return self._leaf(cells, path)
        target = 0
        size = 0
        for i, c in enumerate(cells):
            s = c.bit_count()
            if s > size:
                target, size = i, s
        cell = cells[target]
        on_first = self.first_key is None or path == self.first_path[:depth]
        explored: list[int] = []
        orbit_gens = -1
        orbit = None
        for v in bits_of(cell):
            if explored:
                if orbit_gens != len(self.gens):
                    orbit_gens = len(self.gens)
                    stab = [g for g in self.gens if all(g[p] == p for p in path)]
                    orbit = _orbits(self.n, stab) if stab else None
                if orbit is not None and any(orbit[v] == orbit[u] for u in explored):
                    continue
            bit = 1 << v
            child = cells[:target] + [bit, cell & ~bit] + cells[target + 1:]
            child = _refine(self.adj, child, deque([bit]))
            path.append(v)
            back = self.search(child, path)
            path.pop()
            explored.append(v)
            if back < depth:
                return back
        if on_first:
            orbit = _orbits(self.n, self.gens)
            rep = orbit[self.first_path[depth]]
            self.group_order *= sum(1 for v in bits_of(cell) if orbit[v] == rep)
        return depth - 1


def canonical_labeling(G: Graph, partition: Sequence[int] | None = None) -> CanonResult:
    """Canonical labeling of ``G``, optionally of the coloured graph ``(G, partition)``.

    With a starting partition the labels respect its cell order, so two
    coloured graphs get the same relabeled graph exactly when some isomorphism
    maps cell ``i`` onto cell ``i`` for every ``i`` (given equal cell sizes).
    """
    if G.n > MAX_ORDER:
        raise CapacityExceeded(f"order {G.n} exceeds {MAX_ORDER}")
    cells = refine(G, partition)
    s = _Search(G)
    s.search(cells, [])
    labeling = [0] * G.n
    for i, v in enumerate(s.best_order):
        labeling[v] = i
    return CanonResult(G.n, labeling, s.best_key, s.gens, s.group_order, s.nodes)


def canonical_graph(G: Graph, partition: Sequence[int] | None = None) -> Graph:
    return G.relabel(canonical_labeling(G, partition).labeling)


def canonical_form(G: Graph) -> bytes:
    """graph6 bytes of the canonically relabeled graph; equal iff isomorphic."""
    return encode_graph6(canonical_graph(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_labeling(G).key == canonical_labeling(H).key


def automorphism_count(G: Graph) -> int:
    return canonical_labeling(G).group_order
