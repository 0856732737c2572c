"""Quasi-strongly regular structure of a graph.

A k-regular graph is QSR with parameters ``(n, k, a; c_1, ..., c_p)`` when
every adjacent pair shares ``a`` common neighbours and every non-adjacent pair
shares one of the ``c_i``.  This module reads those parameters off a graph,
computes per-vertex t-profiles and checks the counting identities that tie
them together.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from .graphcore import Graph, GraphError, VertexOutOfRange, bits_of


class QsrError(ValueError):
    """The graph has no QSR signature."""


class NotRegular(QsrError):
    pass


class AdjacentCountNotConstant(QsrError):
    pass


class CompleteGraph(QsrError):
    pass


class EdgelessGraph(QsrError):
    pass


class TooSmall(QsrError):
    pass


class UnrealizedCount(QsrError):
    pass


class ParameterMismatch(QsrError):
    pass


class DegreeTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class QsrSignature:
    n: int
    k: int
    a: int
    c_values: tuple[int, ...]
    strict: bool
    proper: bool | None = None

    @property
    def grade(self) -> int:
        return len(self.c_values)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["c_values"] = list(self.c_values)
        d["grade"] = self.grade
        return d


@dataclass(frozen=True)
class TProfile:
    vertex: int
    counts: tuple[tuple[int, int], ...]

    @property
    def t(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.counts)

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "c_values": [c for c, _ in self.counts], "t": list(self.t)}


@dataclass(frozen=True)
class Bounds:
    k: int
    lower: int
    upper: int


def _descending(c_list: Sequence[int]) -> tuple[int, ...]:
    c = tuple(c_list)
    if not c:
        raise ValueError("c-list must be non-empty")
    if any(x <= y for x, y in zip(c, c[1:])):
        raise ValueError(f"c-list must be strictly descending, got {list(c)}")
    return c


def analyze(G: Graph, declared: Sequence[int] | None = None) -> QsrSignature:
    """Extract the QSR signature of ``G``.

    The grade counts realized non-adjacent counts only.  ``proper`` is filled
    in when a ``declared`` c-list is given, and is true when the realized
    values are exactly the declared ones.
    """
    if G.n < 2:
        raise TooSmall("QSR analysis needs at least two vertices")
    degs = set(G.degrees())
    if len(degs) != 1:
        raise NotRegular(f"graph is not regular (degrees {sorted(degs)})")
    k = degs.pop()
    if k == 0:
        raise EdgelessGraph("edgeless graph has no adjacent pairs")
    if k == G.n - 1:
        raise CompleteGraph("complete graph has no non-adjacent pairs")
    adj = G.adj
    a = None
    realized = set()
    for u in range(G.n):
        row = adj[u]
        for v in range(u + 1, G.n):
            c = (row & adj[v]).bit_count()
            if row >> v & 1:
                if a is None:
                    a = c
                elif c != a:
                    raise AdjacentCountNotConstant(
                        f"adjacent pairs share both {a} and {c} common neighbours")
            else:
                realized.add(c)
    c_values = tuple(sorted(realized, reverse=True))
    proper = None
    if declared is not None:
        proper = set(declared) == realized
    return QsrSignature(G.n, k, a, c_values, strict=a not in realized, proper=proper)


def matches(G: Graph, n: int, k: int, a: int, c_list: Sequence[int],
            require_strict: bool = False) -> bool:
    """True when ``G`` is a proper QSR(n, k, a; c_list) graph (strict if asked)."""
    return mismatch_reason(G, n, k, a, c_list, require_strict) is None


def mismatch_reason(G: Graph, n: int, k: int, a: int, c_list: Sequence[int],
                    require_strict: bool = False) -> str | None:
    """First failing condition for :func:`matches`, or ``None`` on success."""
    c_list = _descending(c_list)
    if G.n != n:
        return f"order is {G.n}, not {n}"
    try:
        sig = analyze(G)
    except NotRegular:
        return f"not {k}-regular"
    except (QsrError, GraphError) as exc:
        return str(exc)
    if sig.k != k:
        return f"not {k}-regular"
    if sig.a != a:
        return f"adjacent pairs share {sig.a} common neighbours, not {a}"
    extra = set(sig.c_values) - set(c_list)
    if extra:
        return f"non-adjacent count(s) {sorted(extra, reverse=True)} not in c-list"
    missing = set(c_list) - set(sig.c_values)
    if missing:
        return f"not proper: c-value(s) {sorted(missing, reverse=True)} never realized"
    if require_strict and a in c_list:
        return f"not strict: a = {a} repeats a c-value"
    return None


def t_profile(G: Graph, u: int, c_list: Sequence[int]) -> TProfile:
    """Count the non-neighbours of ``u`` at each common-neighbour value."""
    c_list = _descending(c_list)
    if not 0 <= u < G.n:
        raise VertexOutOfRange(f"vertex {u} outside 0..{G.n - 1}")
    index = {c: i for i, c in enumerate(c_list)}
    counts = [0] * len(c_list)
    row = G.adj[u]
    for v in bits_of(G.vertex_mask & ~row & ~(1 << u)):
        c = (row & G.adj[v]).bit_count()
        if c not in index:
            raise UnrealizedCount(f"vertices {u} and {v} share {c} common neighbours, "
                                  f"not in {list(c_list)}")
        counts[index[c]] += 1
    return TProfile(u, tuple(zip(c_list, counts)))


@dataclass
class VertexIdentities:
    vertex: int
    t: tuple[int, ...]
    eq1: int
    eq2: int
    eq3: int
    eq1_ok: bool
    eq2_ok: bool
    eq3_ok: bool

    @property
    def ok(self) -> bool:
        return self.eq1_ok and self.eq2_ok and self.eq3_ok


@dataclass
class IdentityReport:
    """Per-vertex evaluation of the three counting identities.

    ``eq1`` is ``sum t_i`` (target ``n - k - 1``), ``eq2`` is ``sum c_i t_i``
    (target ``k(k - 1)``) and ``eq3`` is ``t_1 + 2 t_2 + 3 t_3`` (target
    ``k(n - 2k)``, which is what the first two force when ``c_i = k - i``;
    it equals ``2k`` exactly when ``n = 2k + 2``).
    """

    n: int
    k: int
    c_values: tuple[int, ...]
    eq1_target: int
    eq2_target: int
    eq3_target: int
    vertices: list[VertexIdentities] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.vertices)

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "c_values": list(self.c_values),
            "targets": {"eq1": self.eq1_target, "eq2": self.eq2_target, "eq3": self.eq3_target},
            "ok": self.ok,
            "vertices": [
                {"vertex": v.vertex, "t": list(v.t), "eq1": v.eq1, "eq2": v.eq2, "eq3": v.eq3,
                 "eq1_ok": v.eq1_ok, "eq2_ok": v.eq2_ok, "eq3_ok": v.eq3_ok}
                for v in self.vertices
            ],
        }


def check_counting_identities(G: Graph, c_list: Sequence[int]) -> IdentityReport:
    """Evaluate the t-profile counting identities at every vertex.

    ``c_list`` must be ``[k-1, k-2, k-3]``; ``k`` is read from it.
    Vertices whose profile cannot be formed (a count outside ``c_list``) or
    whose degree differs from ``k`` are reported as failing rather than
    raising.
    """
    c_list = _descending(c_list)
    n = G.n
    k = c_list[0] + 1
    if c_list != (k - 1, k - 2, k - 3):
        raise ParameterMismatch(f"c-list {list(c_list)} is not of the form (k-1, k-2, k-3)")
    report = IdentityReport(n, k, c_list, n - k - 1, k * (k - 1), k * (n - 2 * k))
    for u in range(n):
        row = G.adj[u]
        t = [0, 0, 0]
        bad = row.bit_count() != k
        for v in bits_of(G.vertex_mask & ~row & ~(1 << u)):
            c = (row & G.adj[v]).bit_count()
            i = k - 1 - c
            if 0 <= i < 3:
                t[i] += 1
            else:
                bad = True
        e1 = t[0] + t[1] + t[2]
        e2 = c_list[0] * t[0] + c_list[1] * t[1] + c_list[2] * t[2]
        e3 = t[0] + 2 * t[1] + 3 * t[2]
        report.vertices.append(VertexIdentities(
            u, tuple(t), e1, e2, e3,
            eq1_ok=not bad and e1 == report.eq1_target,
            eq2_ok=not bad and e2 == report.eq2_target,
            eq3_ok=not bad and e3 == report.eq3_target,
        ))
    return report


def sqsr_bounds(k: int) -> Bounds:
    """Admissible orders of SQSR(n, k, 0; k-1, k-2, k-3) graphs."""
    if k < 4:
        raise DegreeTooSmall("k must be at least 4")
    if k == 4:
        return Bounds(4, 2 * k + 3, k * k - 4)
    return Bounds(k, 2 * k + 4, k * k - 5)
