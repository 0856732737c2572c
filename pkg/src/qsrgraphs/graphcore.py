"""Compact undirected graphs on at most 64 vertices.

Each adjacency row is a Python ``int`` used as a vertex-set bitmask (bit ``v``
set means ``v`` is a neighbour), so intersections and cardinalities are single
``&`` and ``bit_count`` operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
MAX_ALPHA_ORDER = 40


class GraphError(ValueError):
    """Base class for invalid graph input."""


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class CapacityExceeded(GraphError):
    pass


class SameVertex(GraphError):
    pass


class TooLarge(GraphError):
    pass


class OverlappingSets(GraphError):
    pass


class Graph6Error(GraphError):
    """Base class for graph6 decoding failures."""


class MalformedHeader(Graph6Error):
    pass


class TruncatedBody(Graph6Error):
    pass


class TrailingGarbage(Graph6Error):
    pass


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Use :func:`make_graph` or :meth:`from_rows` to build one; both check the
    symmetry and irreflexivity invariants.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise CapacityExceeded(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise VertexOutOfRange(f"row {u} has bits beyond order {self.n}")
            if row >> u & 1:
                raise SelfLoop(f"vertex {u} adjacent to itself")
            for v in bits_of(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency at ({u}, {v})")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        return cls(len(rows), tuple(rows))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for v in range(self.n) for u in bits_of(self.adj[v] & ((1 << v) - 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            m = 0
            for w in bits_of(row):
                m |= 1 << perm[w]
            rows[perm[v]] = m
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, with ``vertices[i]`` becoming vertex ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(pos[w] for w in bits_of(self.adj[v]) if w in pos))
        return Graph(len(vertices), tuple(rows))

    def __str__(self):
        return encode_graph6(self).decode("ascii")


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list; duplicates collapse."""
    if n > MAX_ORDER or n < 1:
        raise CapacityExceeded(f"order {n} outside 1..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")


def degree(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return G.adj[v].bit_count()


def neighbours(G: Graph, v: int) -> int:
    """Neighbour set of ``v`` as a bitmask."""
    _check_vertex(G, v)
    return G.adj[v]


def common_neighbours(G: Graph, u: int, v: int) -> int:
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        raise SameVertex(f"common_neighbours needs two distinct vertices, got {u} twice")
    return (G.adj[u] & G.adj[v]).bit_count()


def is_regular(G: Graph) -> int | None:
    """Common degree if ``G`` is regular, else ``None``."""
    degs = set(G.degrees())
    return degs.pop() if len(degs) == 1 else None


def is_triangle_free(G: Graph) -> bool:
    adj = G.adj
    for u in range(G.n):
        row = adj[u]
        for v in bits_of(row >> (u + 1) << (u + 1)):
            if row & adj[v]:
                return False
    return True


def is_independent(G: Graph, vertices: int) -> bool:
    return all(not (G.adj[v] & vertices) for v in bits_of(vertices))


def is_connected(G: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == G.vertex_mask


def independence_number(G: Graph) -> int:
    """Exact independence number by branch and bound.

    Branches on a vertex of maximum remaining degree (include it or drop it)
    and prunes with a greedy clique-cover bound on the candidate set: an
    independent set meets each clique at most once.
    """
    if G.n > MAX_ALPHA_ORDER:
        raise TooLarge(f"independence_number supports n <= {MAX_ALPHA_ORDER}, got {G.n}")
    adj = G.adj
    best = 0

    def cover_bound(cand: int) -> int:
        # greedy partition of cand into cliques
        count = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            clique = low
            rest = cand & adj[v]
            while rest:
                w_low = rest & -rest
                w = w_low.bit_length() - 1
                clique |= w_low
                rest &= adj[w]
            cand &= ~clique
            count += 1
        return count

    def search(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + cover_bound(cand) <= best:
            return
        # vertices with no neighbour in cand always belong to some optimum
        isolated = 0
        for v in bits_of(cand):
            if not adj[v] & cand:
                isolated |= 1 << v
        if isolated:
            search(cand & ~isolated, size + isolated.bit_count())
            return
        v = max(bits_of(cand), key=lambda x: (adj[x] & cand).bit_count())
        search(cand & ~adj[v] & ~(1 << v), size + 1)
        search(cand & ~(1 << v), size)

    search(G.vertex_mask, 0)
    return best


def maximum_independent_sets(G: Graph) -> list[int]:
    """All maximum independent sets by subset scan (small graphs only)."""
    if G.n > 20:
        raise TooLarge("exhaustive scan limited to n <= 20")
    best, found = -1, []
    for s in range(1 << G.n):
        size = s.bit_count()
        if size < best or not is_independent(G, s):
            continue
        if size > best:
            best, found = size, []
        found.append(s)
    return found


def cut_size(G: Graph, A: int, B: int) -> int:
    """Number of edges with one end in ``A`` and the other in ``B``."""
    if A & B:
        raise OverlappingSets("cut_size needs disjoint vertex sets")
    full = G.vertex_mask
    if (A | B) & ~full:
        raise VertexOutOfRange("vertex set reaches beyond graph order")
    return sum((G.adj[a] & B).bit_count() for a in bits_of(A))


# graph6 ---------------------------------------------------------------------


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def upper_triangle_bits(G: Graph) -> int:
    """The graph6 bit string as an integer, first pair most significant.

    Pairs are ordered ``(0,1), (0,2), (1,2), (0,3), ...``.
    """
    x = 0
    adj = G.adj
    for j in range(1, G.n):
        row = adj[j]
        for i in range(j):
            x = x << 1 | (row >> i & 1)
    return x


def encode_graph6(G: Graph) -> bytes:
    n = G.n
    nbits = n * (n - 1) // 2
    x = upper_triangle_bits(G)
    pad = -nbits % 6
    x <<= pad
    ngroups = (nbits + pad) // 6
    body = bytes(((x >> (6 * (ngroups - 1 - g))) & 63) + 63 for g in range(ngroups))
    return _encode_size(n) + body


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise MalformedHeader("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise MalformedHeader("byte outside the graph6 range 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    else:
        raise MalformedHeader("unsupported or truncated size header")
    if n > MAX_ORDER:
        raise CapacityExceeded(f"graph6 order {n} exceeds {MAX_ORDER}")
    if n < 1:
        raise MalformedHeader("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < ngroups:
        raise TruncatedBody(f"expected {ngroups} body bytes, got {len(body)}")
    if len(body) > ngroups:
        raise TrailingGarbage(f"expected {ngroups} body bytes, got {len(body)}")
    x = 0
    for b in body:
        x = x << 6 | (b - 63)
    pad = ngroups * 6 - nbits
    if x & ((1 << pad) - 1):
        raise TrailingGarbage("non-zero padding bits")
    x >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if x >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode_graph6(line)


def write_graph6_file(path, graphs: Iterable[Graph | bytes]) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write((g if isinstance(g, bytes) else encode_graph6(g)) + b"\n")


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
