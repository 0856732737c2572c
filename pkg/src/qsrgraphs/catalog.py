"""Named reference graphs used as fixtures and witnesses."""

from __future__ import annotations

from .graphcore import Graph, make_graph


class UnknownName(KeyError):
    pass


# Vertex i of G1 sits at figure coordinate G1_COORDS[i].
G1_COORDS = [(-6, -2), (-4, 1), (-4, -1), (-4, -3), (-4, -5), (-2, 3),
             (0, 2), (-2, -7), (0, -6), (2, 1), (2, -5)]
G1_EDGES = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (1, 6),
            (2, 6), (2, 7), (1, 9), (3, 10), (3, 7), (4, 7), (7, 9), (4, 8),
            (4, 10), (5, 8), (6, 8), (6, 10), (8, 9), (9, 10)]

G2_COORDS = [(-1, 4), (1, 4), (-2, 2), (0, 2), (2, 2), (-4, 2), (4, 2),
             (-6, 0), (-4, -2), (0, -2), (4, -2), (6, 0)]
# (5, 6) is the semicircular arc over the top of the drawing.
G2_EDGES = [(0, 5), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (1, 6),
            (5, 6), (5, 7), (7, 2), (7, 11), (7, 10), (8, 5), (8, 3), (8, 11),
            (8, 9), (9, 2), (9, 4), (9, 10), (10, 6), (10, 3), (11, 6), (11, 4)]

# Double star: 0 = c1, 1 = x, 2 = y, 3 = z, 4 = c2, 5 = w, 6 = s.
H8_EDGES = [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]


def build_g1() -> Graph:
    """The unique SQSR(11, 4, 0; 3, 2, 1) graph."""
    return make_graph(11, G1_EDGES)


def build_g2() -> Graph:
    """The unique SQSR(12, 4, 0; 3, 2, 1) graph."""
    return make_graph(12, G2_EDGES)


def build_h8() -> Graph:
    return make_graph(7, H8_EDGES)


def cycle(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return make_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


_BUILDERS = {
    "g1": build_g1,
    "g2": build_g2,
    "h8": build_h8,
    "c5": lambda: cycle(5),
    "k44": lambda: complete_bipartite(4, 4),
}

NAMES = tuple(_BUILDERS)


def build_named(name: str) -> Graph:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownName(f"unknown catalog graph {name!r}; choose from {', '.join(NAMES)}") from None
