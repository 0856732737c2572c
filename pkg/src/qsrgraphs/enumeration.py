"""Isomorph-free generation of QSR graphs, plus a brute-force oracle.

The generator grows graphs one vertex at a time.  A child is kept only when
its new vertex lies in the automorphism orbit of the vertex that receives the
highest canonical label, and a parent extends by one neighbour set per orbit
of its own automorphism group, so every isomorphism class of completed graphs
appears exactly once.  Partial graphs are pruned with conditions every induced
subgraph of a valid target graph must satisfy.
"""

from __future__ import annotations

import logging
import os
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import __version__
from .canon import _orbits, _refine, _Search, canonical_form, is_isomorphic
from .graphcore import Graph, bits_of, decode_graph6
from .qsr import analyze, check_counting_identities, mismatch_reason, QsrError

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 24
ORACLE_MAX_N = 8


class InvalidSpec(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class TooLargeForOracle(ValueError):
    pass


@dataclass(frozen=True)
class EnumSpec:
    n: int
    k: int
    a: int = 0
    c_allowed: tuple[int, ...] = ()
    require_all_realized: bool = True
    require_strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "c_allowed", tuple(sorted(set(self.c_allowed), reverse=True)))

    def validate(self) -> None:
        if self.n < 1 or self.k < 0:
            raise InvalidSpec("n must be positive and k non-negative")
        if self.n * self.k % 2:
            raise InvalidSpec(f"n*k = {self.n * self.k} is odd; no {self.k}-regular graph "
                              f"on {self.n} vertices")
        if not self.c_allowed:
            raise InvalidSpec("c_allowed must be non-empty")
        if any(c < 0 or c > self.k for c in self.c_allowed):
            raise InvalidSpec(f"c values must lie in 0..{self.k}")
        if not 0 <= self.a <= max(self.k - 1, 0):
            raise InvalidSpec(f"a must lie in 0..{max(self.k - 1, 0)}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["c_allowed"] = list(self.c_allowed)
        return d


@dataclass
class EnumReport:
    spec: EnumSpec
    classes: list[bytes] = field(default_factory=list)
    nodes_explored: int = 0
    complete: bool = True
    elapsed: float = 0.0
    method: str = "augment"

    def graphs(self) -> list[Graph]:
        return [decode_graph6(c) for c in self.classes]

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "count": len(self.classes),
            "classes": [c.decode("ascii") for c in self.classes],
            "nodes_explored": self.nodes_explored,
            "complete": self.complete,
            "elapsed": round(self.elapsed, 6),
            "method": self.method,
        }


def accepts(G: Graph, spec: EnumSpec) -> bool:
    """Whether a completed graph satisfies ``spec``."""
    if spec.require_all_realized:
        return mismatch_reason(G, spec.n, spec.k, spec.a, spec.c_allowed,
                               spec.require_strict) is None
    if G.n != spec.n:
        return False
    try:
        sig = analyze(G)
    except QsrError:
        return False
    if sig.k != spec.k or sig.a != spec.a:
        return False
    if not set(sig.c_values) <= set(spec.c_allowed):
        return False
    return not (spec.require_strict and not sig.strict)


# pruning --------------------------------------------------------------------


class _Rules:
    """Necessary conditions on an induced subgraph of a valid target graph."""

    def __init__(self, spec: EnumSpec):
        self.n, self.k, self.a = spec.n, spec.k, spec.a
        allowed = set(spec.c_allowed)
        if spec.require_strict:
            allowed.discard(spec.a)
        # extra common neighbours still needed, indexed by the current count
        self.need_adj = [self.a - c if c <= self.a else None for c in range(self.k + 2)]
        self.need_non = []
        for c in range(self.k + 2):
            up = [x - c for x in allowed if x >= c]
            self.need_non.append(min(up) if up else None)
        self.triangle_free = self.a == 0

    def max_inner_edges(self, r: int) -> int:
        return r * r // 4 if self.triangle_free else r * (r - 1) // 2

    def violation(self, rows: Sequence[int]) -> str | None:
        """Name of the first rule ``rows`` breaks, or ``None``."""
        k = self.k
        m = len(rows)
        r = self.n - m
        if r < 0:
            return "too many vertices"
        degs = [row.bit_count() for row in rows]
        short = 0
        for d in degs:
            if d > k:
                return "degree"
            if k - d > r:
                return "deficit"
            short += k - d
        spare = k * r - short
        if spare < 0 or spare % 2 or spare // 2 > self.max_inner_edges(r):
            return "degree-sum"
        need_adj, need_non = self.need_adj, self.need_non
        for x in range(m):
            rx = rows[x]
            sx = k - degs[x]
            for y in range(x + 1, m):
                c = (rx & rows[y]).bit_count()
                need = need_adj[c] if rx >> y & 1 else need_non[c]
                if need is None:
                    return "pair-count"
                if need and need > min(sx, k - degs[y], r):
                    return "pair-unreachable"
        return None


# generator ------------------------------------------------------------------


class _Augmenter:
    def __init__(self, spec: EnumSpec, root_star: bool):
        self.spec = spec
        self.n, self.k, self.a = spec.n, spec.k, spec.a
        self.rules = _Rules(spec)
        self.root_star = root_star
        self.nodes = 0
        self.forms: set[bytes] = set()

    def root(self) -> list[int]:
        if self.root_star:
            k = self.k
            rows = [((1 << (k + 1)) - 1) & ~1] + [1] * k
            return rows
        return [0]

    def colour_cells(self, m: int) -> list[int]:
        full = (1 << m) - 1
        if self.root_star:
            k = self.k
            star = (1 << (k + 1)) - 1
            cells = [1, star & ~1]
            if full & ~star:
                cells.append(full & ~star)
            return cells
        return [full]

    def automorphisms(self, rows: list[int]) -> list[list[int]]:
        cells = self.colour_cells(len(rows))
        cells = _refine(rows, cells, deque(cells))
        if len(cells) == len(rows):
            return []
        s = _Search(_Rows(rows))
        s.search(cells, [])
        return s.gens

    def accept_child(self, rows: list[int]) -> tuple[bool, list | None]:
        """Canonical deletion test; returns (accepted, automorphism generators or None)."""
        m = len(rows)
        w = m - 1
        cells = self.colour_cells(m)
        cells = _refine(rows, cells, deque(cells))
        last = cells[-1]
        if not last >> w & 1:
            return False, None
        if len(cells) == m:
            return True, []
        if last == 1 << w:
            return True, None
        s = _Search(_Rows(rows))
        s.search(cells, [])
        top = s.best_order[-1]
        orbit = _orbits(m, s.gens)
        return orbit[w] == orbit[top], s.gens

    def children(self, rows: list[int], gens: list | None):
        """Yield accepted children as (rows, generators-or-None)."""
        k, n = self.k, self.n
        m = len(rows)
        r = n - m - 1
        rules = self.rules
        degs = [row.bit_count() for row in rows]
        forced = 0
        cand = []
        for x in range(m):
            deficit = k - degs[x]
            if deficit > r + 1:
                return
            if deficit == r + 1:
                forced |= 1 << x
            if deficit > 0:
                cand.append(x)
        if self.root_star:
            cand = [x for x in cand if x != 0]
        # x and y may share the new vertex only if their count can still grow
        compat = [0] * m
        for x in cand:
            for y in cand:
                if y > x:
                    c = (rows[x] & rows[y]).bit_count() + 1
                    ok = rules.need_adj[c] is not None if rows[x] >> y & 1 else rules.need_non[c] is not None
                    if ok:
                        compat[x] |= 1 << y
                        compat[y] |= 1 << x
        if gens is None:
            gens = self.automorphisms(rows)
        min_size = max(k - r, 0)
        cand_mask = 0
        for x in cand:
            cand_mask |= 1 << x
        if forced & ~cand_mask:
            return
        for S in _cliques(cand, compat, k, forced):
            size = S.bit_count()
            if size < min_size:
                continue
            if gens and not _orbit_minimal(S, gens):
                continue
            child = list(rows)
            for x in bits_of(S):
                child[x] |= 1 << m
            child.append(S)
            if rules.violation(child):
                continue
            ok, child_gens = self.accept_child(child)
            if ok:
                yield child, child_gens

    def run(self, rows: list[int], gens: list | None = None) -> None:
        self.nodes += 1
        if len(rows) == self.n:
            G = Graph(self.n, tuple(rows))
            if accepts(G, self.spec):
                self.forms.add(canonical_form(G))
            return
        for child, child_gens in self.children(rows, gens):
            self.run(child, child_gens)

    def frontier(self, depth: int) -> list[tuple[list[int], list | None]]:
        """Accepted nodes ``depth`` levels below the root (leaves above that depth are run)."""
        level = [(self.root(), None)]
        if self.rules.violation(level[0][0]):
            return []
        for _ in range(depth):
            nxt = []
            for rows, gens in level:
                if len(rows) == self.n:
                    self.run(rows, gens)
                    continue
                self.nodes += 1
                nxt.extend(self.children(rows, gens))
            level = nxt
        return level


class _Rows:
    """Minimal graph view over raw adjacency rows for the labeling search."""

    __slots__ = ("n", "adj")

    def __init__(self, rows):
        self.n = len(rows)
        self.adj = rows


def _cliques(cand: list[int], compat: list[int], limit: int, forced: int) -> list[int]:
    """Pairwise-compatible subsets of ``cand`` of size <= limit that contain ``forced``."""
    size = forced.bit_count()
    if size > limit:
        return []
    allowed = 0
    for x in cand:
        allowed |= 1 << x
    for x in bits_of(forced):
        if (forced & ~(1 << x)) & ~compat[x]:
            return []
        allowed &= compat[x]
    allowed &= ~forced
    free = [x for x in cand if allowed >> x & 1]
    out = []

    def grow(i: int, S: int, allowed: int, size: int):
        out.append(S)
        if size == limit:
            return
        for j in range(i, len(free)):
            x = free[j]
            if allowed >> x & 1:
                grow(j + 1, S | 1 << x, allowed & compat[x], size + 1)

    grow(0, forced, allowed, size)
    return out


def _orbit_minimal(S: int, gens: list[list[int]]) -> bool:
    seen = {S}
    queue = [S]
    while queue:
        T = queue.pop()
        for g in gens:
            img = 0
            for x in bits_of(T):
                img |= 1 << g[x]
            if img < S:
                return False
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return True


def _run_subtree(args):
    spec, root_star, rows, gens = args
    aug = _Augmenter(spec, root_star)
    aug.run(rows, gens)
    return aug.forms, aug.nodes


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QSRGRAPHS_JOBS", "1")))
    except ValueError:
        return 1


def enumerate_graphs(spec: EnumSpec, *, jobs: int | None = None, root_star: bool = True,
                     max_n: int = DEFAULT_MAX_N, override_budget: bool = False) -> EnumReport:
    """Every isomorphism class of graphs satisfying ``spec``, once each.

    ``root_star`` fixes the neighbourhood of vertex 0 to ``{1, ..., k}`` (only
    used when ``a == 0`` and ``n > k``); completed graphs are then deduplicated
    by canonical form, since each may be reached from several roots.
    """
    spec.validate()
    if spec.n > max_n and not override_budget:
        raise BudgetExceeded(f"n = {spec.n} exceeds the budget guard {max_n}; "
                             "pass override_budget to run anyway")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    root_star = root_star and spec.a == 0 and spec.n > spec.k and spec.k > 0
    aug = _Augmenter(spec, root_star)
    if jobs <= 1:
        root = aug.root()
        if not aug.rules.violation(root):
            aug.run(root)
        forms, nodes = aug.forms, aug.nodes
    else:
        frontier = aug.frontier(2)
        forms, nodes = set(aug.forms), aug.nodes
        tasks = [(spec, root_star, rows, gens) for rows, gens in frontier]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for f, c in pool.map(_run_subtree, tasks):
                forms |= f
                nodes += c
    elapsed = time.perf_counter() - t0
    log.info("enumerated %s: %d classes, %d nodes, %.2fs", spec, len(forms), nodes, elapsed)
    return EnumReport(spec, sorted(forms), nodes, True, elapsed, "augment")


# oracle ---------------------------------------------------------------------


def _labeled_regular(n: int, k: int):
    """All labeled k-regular graphs on n vertices, as row lists."""
    rows = [0] * n

    def fill(v: int):
        if v == n:
            yield list(rows)
            return
        missing = k - rows[v].bit_count()
        if missing < 0:
            return
        later = [w for w in range(v + 1, n) if rows[w].bit_count() < k]
        for chosen in combinations(later, missing):
            for w in chosen:
                rows[v] |= 1 << w
                rows[w] |= 1 << v
            yield from fill(v + 1)
            for w in chosen:
                rows[v] &= ~(1 << w)
                rows[w] &= ~(1 << v)

    yield from fill(0)


def brute_force_enumerate(spec: EnumSpec) -> EnumReport:
    """Reference census: scan every labeled k-regular graph on n vertices.

    Non-regular graphs never satisfy a spec, so this is the full scan over all
    labeled graphs with the regularity filter applied up front.
    """
    spec.validate()
    if spec.n > ORACLE_MAX_N:
        raise TooLargeForOracle(f"oracle limited to n <= {ORACLE_MAX_N}")
    t0 = time.perf_counter()
    forms = set()
    scanned = 0
    for rows in _labeled_regular(spec.n, spec.k):
        scanned += 1
        G = Graph(spec.n, tuple(rows))
        if accepts(G, spec):
            forms.add(canonical_form(G))
    return EnumReport(spec, sorted(forms), scanned, True, time.perf_counter() - t0, "oracle")


# certification --------------------------------------------------------------


@dataclass
class Certification:
    ok: bool
    checked: int
    failure: str | None = None
    counterexample: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def certify(report: EnumReport) -> Certification:
    """Independently re-check every class in ``report``."""
    spec = report.spec
    graphs = []
    for form in report.classes:
        try:
            G = decode_graph6(form)
        except ValueError as exc:
            return Certification(False, len(graphs), f"undecodable class: {exc}", [_s(form)])
        if not accepts(G, spec):
            why = mismatch_reason(G, spec.n, spec.k, spec.a, spec.c_allowed, spec.require_strict)
            return Certification(False, len(graphs), f"spec violation: {why or 'not accepted'}",
                                 [_s(form)])
        if spec.a == 0 and spec.c_allowed == (spec.k - 1, spec.k - 2, spec.k - 3):
            ids = check_counting_identities(G, spec.c_allowed)
            if not ids.ok:
                bad = next(v.vertex for v in ids.vertices if not v.ok)
                return Certification(False, len(graphs),
                                     f"counting identity fails at vertex {bad}", [_s(form)])
        graphs.append((form, G))
    for (fa, A), (fb, B) in combinations(graphs, 2):
        if fa == fb or is_isomorphic(A, B):
            return Certification(False, len(graphs), "duplicate isomorphism class", [_s(fa), _s(fb)])
    return Certification(True, len(graphs))


def _s(form: bytes) -> str:
    return form.decode("ascii", "replace")


# census files ---------------------------------------------------------------


def write_census(report: EnumReport, path: str) -> str:
    """Write sorted graph6 lines to ``path`` and metadata to ``path + '.json'``."""
    import json

    with open(path, "wb") as fh:
        for form in report.classes:
            fh.write(form + b"\n")
    meta = {
        "spec": report.spec.to_dict(),
        "count": len(report.classes),
        "nodes_explored": report.nodes_explored,
        "complete": report.complete,
        "elapsed": round(report.elapsed, 6),
        "method": report.method,
        "version": __version__,
    }
    side = path + ".json"
    with open(side, "w") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")
    return side


def read_census(path: str) -> list[bytes]:
    with open(path, "rb") as fh:
        return [line.strip() for line in fh if line.strip()]


def replay_violations(G: Graph, spec: EnumSpec, order: Iterable[int] | None = None) -> list[tuple[int, str]]:
    """Prefixes of ``G`` (in vertex ``order``) that a pruning rule would reject."""
    order = list(order) if order is not None else list(range(G.n))
    rules = _Rules(spec)
    out = []
    for m in range(1, G.n + 1):
        sub = G.induced(order[:m])
        why = rules.violation(list(sub.adj))
        if why:
            out.append((m, why))
    return out
