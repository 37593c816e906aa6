"""Matching number, fractional matching number, and half-integral witnesses.

The fractional matching number is computed exactly as half the matching
number of the bipartite double cover; the dual transversal comes from the
double cover's minimum vertex cover.  Witnesses are canonical: half-weight
support is normalised to a disjoint union of odd cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError, is_connected
from .halfint import HalfIntegral


# ---------------------------------------------------------------------------
# maximum matching (general graphs, blossom contraction)


def _blossom_max_matching(rows: tuple[int, ...], n: int) -> tuple[int, list[int]]:
    match = [-1] * n
    for v in range(n):  # greedy seed
        if match[v] == -1:
            nb = rows[v]
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        nonlocal p, base
        p = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            nb = rows[v]
            while nb:
                to = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        while to != -1:  # augment
                            pv = p[to]
                            ppv = match[pv]
                            match[to] = pv
                            match[pv] = to
                            to = ppv
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    size = sum(1 for v in range(n) if match[v] != -1) // 2
    for v in range(n):
        if match[v] == -1 and find_path(v):
            size += 1
    return size, match


@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: tuple[tuple[int, int], ...]


def matching_number(g: Graph) -> MatchingResult:
    """Exact maximum matching size with a witness edge set."""
    size, match = _blossom_max_matching(g.rows, g.n)
    edges = tuple(sorted((v, match[v]) for v in range(g.n) if match[v] > v))
    assert len(edges) == size
    return MatchingResult(size, edges)


# ---------------------------------------------------------------------------
# bipartite double cover and its matching


def bipartite_double_cover(g: Graph) -> Graph:
    """Graph on copies {v, v+n} with edges u~(v+n) and v~(u+n) per edge uv."""
    n = g.n
    rows = [r << n for r in g.rows] + list(g.rows)
    return Graph.from_rows(2 * n, rows)


def _dc_matching(rows: tuple[int, ...], n: int) -> tuple[list[int], list[int]]:
    # Augmenting-path maximum matching on the double cover: left copy u may
    # match any v in N(u) on the right.  Deterministic ascending scans.
    match_l = [-1] * n
    match_r = [-1] * n
    for u in range(n):  # greedy seed
        nb = rows[u]
        while nb:
            v = (nb & -nb).bit_length() - 1
            if match_r[v] < 0:
                match_r[v] = u
                match_l[u] = v
                break
            nb &= nb - 1
    for u0 in range(n):
        if match_l[u0] >= 0:
            continue
        seen = 0
        parent: dict[int, int] = {}
        stack = [(u0, rows[u0])]
        found = -1
        while stack:
            u, nb = stack[-1]
            nb &= ~seen
            if not nb:
                stack.pop()
                continue
            v = (nb & -nb).bit_length() - 1
            stack[-1] = (u, nb & (nb - 1))
            seen |= 1 << v
            parent[v] = u
            w = match_r[v]
            if w < 0:
                found = v
                break
            stack.append((w, rows[w]))
        if found >= 0:
            v = found
            while True:
                u = parent[v]
                nxt = match_l[u]
                match_r[v] = u
                match_l[u] = v
                if nxt < 0:
                    break
                v = nxt
    return match_l, match_r


def _dc_matching_size(rows: tuple[int, ...], n: int) -> int:
    match_l, _ = _dc_matching(rows, n)
    return sum(1 for u in range(n) if match_l[u] >= 0)


def fractional_matching_number(g: Graph) -> HalfIntegral:
    """Exact fractional matching number, half the double cover's matching number."""
    return HalfIntegral(_dc_matching_size(g.rows, g.n))


def has_fractional_perfect_matching(g: Graph) -> bool:
    return fractional_matching_number(g).doubled == g.n


# ---------------------------------------------------------------------------
# fractional matching witnesses


@dataclass(frozen=True)
class FractionalMatching:
    """Half-integral edge weights, stored doubled; only nonzero entries kept."""

    n: int
    doubled_weights: tuple[tuple[tuple[int, int], int], ...]
    total: HalfIntegral

    def weight_doubled(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        for edge, w in self.doubled_weights:
            if edge == key:
                return w
        return 0

    def vertex_load_doubled(self) -> list[int]:
        load = [0] * self.n
        for (u, v), w in self.doubled_weights:
            load[u] += w
            load[v] += w
        return load

    def validate(self, g: Graph) -> None:
        total = 0
        seen = set()
        for (u, v), w in self.doubled_weights:
            if not (0 <= u < v < g.n):
                raise GraphError(f"weighted pair ({u},{v}) out of range")
            if (u, v) in seen:
                raise GraphError(f"duplicate weighted edge ({u},{v})")
            seen.add((u, v))
            if not g.has_edge(u, v):
                raise GraphError(f"weight on non-edge ({u},{v})")
            if w not in (1, 2):
                raise GraphError(f"doubled weight must be 1 or 2, got {w}")
            total += w
        for v, load in enumerate(self.vertex_load_doubled()):
            if load > 2:
                raise GraphError(f"vertex {v} is overloaded: incident weight {load}/2")
        if total != self.total.doubled:
            raise GraphError("stored total does not match the weights")

    def half_support_adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {}
        for (u, v), w in self.doubled_weights:
            if w == 1:
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
        return adj

    def to_text(self) -> str:
        names = {1: "1/2", 2: "1"}
        lines = [f"edge {u} {v} {names[w]}" for (u, v), w in sorted(self.doubled_weights)]
        return "\n".join(lines) + ("\n" if lines else "")


def _canonical_half_support(dw: dict[tuple[int, int], int], n: int) -> None:
    """Reweight even cycles / even paths of half-edges to 0/1 in place.

    Components are processed in ascending lowest-vertex order; paths start
    the 1,0,... alternation at their lowest endpoint, cycles at their lowest
    vertex towards its smaller half-neighbour.  Leaves odd cycles alone.
    """
    adj: dict[int, set[int]] = {}
    for (u, v), w in dw.items():
        if w == 1:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
    done: set[int] = set()
    for v0 in sorted(adj):
        if v0 in done:
            continue
        comp = {v0}
        queue = [v0]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        done |= comp
        ends = sorted(v for v in comp if len(adj[v]) == 1)
        if ends:
            start, stop_at = ends[0], None
        else:
            if len(comp) % 2 == 1:
                continue  # odd cycles are already canonical
            start, stop_at = min(comp), min(comp)
        # walk the path/cycle assigning alternating doubled weights 2,0,...
        prev = None
        cur = start
        weight = 2
        steps = 0
        while True:
            choices = sorted(x for x in adj[cur] if x != prev)
            if not choices:
                break
            nxt = choices[0]
            key = (cur, nxt) if cur < nxt else (nxt, cur)
            if weight:
                dw[key] = weight
            else:
                dw.pop(key, None)
            weight = 2 - weight
            steps += 1
            prev, cur = cur, nxt
            if stop_at is not None and cur == stop_at:
                break
        # an optimal matching never leaves an odd half-path (it could be improved)
        assert steps % 2 == 0, "half-weight support had an augmentable odd path"


def optimal_fractional_matching(g: Graph) -> FractionalMatching:
    """Maximum fractional matching in canonical half-integral form.

    Pulls back the double cover matching (each edge gets half the number of
    matched lifted copies), then normalises the half-weight support until it
    is a disjoint union of odd cycles.
    """
    n = g.n
    match_l, _ = _dc_matching(g.rows, n)
    dw: dict[tuple[int, int], int] = {}
    for u in range(n):
        v = match_l[u]
        if v >= 0:
            key = (u, v) if u < v else (v, u)
            dw[key] = dw.get(key, 0) + 1
    total = sum(dw.values())
    _canonical_half_support(dw, n)
    assert sum(dw.values()) == total
    fm = FractionalMatching(n, tuple(sorted(dw.items())), HalfIntegral(total))
    fm.validate(g)
    return fm


# ---------------------------------------------------------------------------
# fractional transversals (dual side)


@dataclass(frozen=True)
class Transversal:
    """Half-integral vertex weights, stored doubled, with the W/R/C split."""

    n: int
    doubled_weights: tuple[int, ...]
    total: HalfIntegral

    @property
    def W(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self.doubled_weights) if w == 2)

    @property
    def R(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self.doubled_weights) if w == 0)

    @property
    def C(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self.doubled_weights) if w == 1)

    def validate(self, g: Graph) -> None:
        if len(self.doubled_weights) != g.n:
            raise GraphError("transversal length does not match the graph")
        for v, w in enumerate(self.doubled_weights):
            if w not in (0, 1, 2):
                raise GraphError(f"vertex {v} has doubled weight {w}, expected 0, 1 or 2")
        for u, v in g.edges():
            if self.doubled_weights[u] + self.doubled_weights[v] < 2:
                raise GraphError(f"edge ({u},{v}) not covered: weights sum below 1")
        if sum(self.doubled_weights) != self.total.doubled:
            raise GraphError("stored total does not match the weights")

    def to_text(self) -> str:
        names = {0: "0", 1: "1/2", 2: "1"}
        lines = [f"vertex {v} {names[w]}" for v, w in enumerate(self.doubled_weights)]
        return "\n".join(lines) + ("\n" if lines else "")


def fractional_transversal(g: Graph) -> Transversal:
    """Optimal half-integral transversal from the double cover's vertex cover.

    The cover comes from the maximum matching by alternating reachability,
    so the construction is deterministic; g(v) is half the number of covered
    copies of v.
    """
    n = g.n
    rows = g.rows
    match_l, match_r = _dc_matching(rows, n)
    visited_l = [False] * n
    visited_r = [False] * n
    queue = deque(u for u in range(n) if match_l[u] < 0)
    for u in queue:
        visited_l[u] = True
    while queue:
        u = queue.popleft()
        nb = rows[u]
        while nb:
            v = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if v == match_l[u] or visited_r[v]:
                continue
            visited_r[v] = True
            w = match_r[v]
            if w >= 0 and not visited_l[w]:
                visited_l[w] = True
                queue.append(w)
    dwv = tuple((0 if visited_l[v] else 1) + (1 if visited_r[v] else 0) for v in range(n))
    t = Transversal(n, dwv, HalfIntegral(sum(dwv)))
    t.validate(g)
    return t


@dataclass(frozen=True)
class WrcReport:
    s: int
    t: int
    c: int
    r_independent: bool
    no_rc_edges: bool
    connected_rule_ok: bool
    is_optimal: bool
    eq1_holds: bool | None
    r_geq_w: bool | None


def wrc_decomposition(g: Graph, t: Transversal, beta_star_doubled: int | None = None) -> WrcReport:
    """Check the structural properties of a transversal's weight classes.

    (a) the zero-weight class is independent, (b) it has no edges into the
    half-weight class, (c) on a connected graph the full- and zero-weight
    classes are empty or non-empty together (vacuous on a single vertex),
    and, when the transversal is optimal, total = (n - (|R|-|W|))/2 with
    |R| >= |W|.
    """
    t.validate(g)
    w_mask = r_mask = c_mask = 0
    for v, dwv in enumerate(t.doubled_weights):
        if dwv == 2:
            w_mask |= 1 << v
        elif dwv == 0:
            r_mask |= 1 << v
        else:
            c_mask |= 1 << v
    s = w_mask.bit_count()
    tt = r_mask.bit_count()
    r_independent = all(not (g.rows[v] & r_mask) for v in range(g.n) if r_mask >> v & 1)
    no_rc_edges = all(not (g.rows[v] & c_mask) for v in range(g.n) if r_mask >> v & 1)
    if g.n <= 1 or not is_connected(g):
        connected_rule_ok = True
    else:
        connected_rule_ok = (s == 0) == (tt == 0)
    if beta_star_doubled is None:
        beta_star_doubled = _dc_matching_size(g.rows, g.n)
    optimal = t.total.doubled == beta_star_doubled
    eq1 = None
    r_geq_w = None
    if optimal:
        eq1 = t.total.doubled == g.n - (tt - s)
        r_geq_w = tt >= s
    return WrcReport(s, tt, c_mask.bit_count(), r_independent, no_rc_edges, connected_rule_ok, optimal, eq1, r_geq_w)


# ---------------------------------------------------------------------------
# fractional perfect matching partitions


@dataclass(frozen=True)
class FpmPart:
    kind: str  # "K2" or "ODD_CYCLE"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class FpmPartition:
    parts: tuple[FpmPart, ...]

    def to_text(self) -> str:
        lines = []
        for part in self.parts:
            if part.kind == "K2":
                lines.append(f"part K2 {part.vertices[0]} {part.vertices[1]}")
            else:
                lines.append("part CYCLE " + " ".join(str(v) for v in part.vertices))
        return "\n".join(lines) + ("\n" if lines else "")


def fpm_partition(g: Graph, m: FractionalMatching) -> FpmPartition:
    """Split a canonical fractional perfect matching into K2 and odd-cycle parts."""
    m.validate(g)
    if m.total.doubled < g.n:
        raise GraphError(f"matching is not perfect: total {m.total} < n/2 = {g.n}/2")
    parts: list[FpmPart] = []
    covered = 0
    for (u, v), w in m.doubled_weights:
        if w == 2:
            parts.append(FpmPart("K2", (u, v)))
            covered |= (1 << u) | (1 << v)
    adj = m.half_support_adjacency()
    done: set[int] = set()
    for v0 in sorted(adj):
        if v0 in done:
            continue
        if len(adj[v0]) != 2:
            raise GraphError("non-canonical matching: half-weight support is not a union of cycles")
        cycle = [v0]
        prev, cur = None, v0
        while True:
            nxt = sorted(x for x in adj[cur] if x != prev)[0]
            if nxt == v0:
                break
            if len(adj[nxt]) != 2:
                raise GraphError("non-canonical matching: half-weight support is not a union of cycles")
            cycle.append(nxt)
            prev, cur = cur, nxt
        if len(cycle) % 2 == 0:
            raise GraphError("non-canonical matching: even cycle in the half-weight support")
        done |= set(cycle)
        for x in cycle:
            covered |= 1 << x
        parts.append(FpmPart("ODD_CYCLE", tuple(cycle)))
    if covered != (1 << g.n) - 1:
        raise GraphError("matching does not saturate every vertex")
    return FpmPartition(tuple(sorted(parts, key=lambda p: p.vertices)))
