"""Simple undirected graphs on dense labels 0..n-1, stored as row bitsets.

One Python int per vertex holds its neighbourhood, so neighbourhood scans,
intersections and component sweeps are word-parallel.  Graphs are immutable
after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 2048
ISO_CAP = 10


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple graph; adjacency kept as one int bitmask per vertex."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} exceeds the supported cap {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop edge ({u},{u}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> Graph:
        """Build from per-vertex neighbour masks, validating the relation."""
        if n < 0 or n > MAX_VERTICES or len(rows) != n:
            raise GraphError(f"bad row container for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has neighbour bits outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"row {v} has a loop bit")
        for v, row in enumerate(rows):
            nb = row
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v},{u})")
        return cls._from_rows_unchecked(n, tuple(rows))

    @classmethod
    def _from_rows_unchecked(cls, n: int, rows: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            nb = self.rows[u] >> (u + 1) << (u + 1)
            while nb:
                v = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                yield (u, v)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((r.bit_count() for r in self.rows), reverse=True))

    def permuted(self, perm: Sequence[int]) -> Graph:
        """Relabel: vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v in range(self.n):
            nb = self.rows[v]
            acc = 0
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                acc |= 1 << perm[u]
            rows[perm[v]] = acc
        return Graph._from_rows_unchecked(self.n, tuple(rows))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with exactly the given edges, deduplicated."""
    return Graph(n, edges)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._from_rows_unchecked(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    return Graph._from_rows_unchecked(n, (0,) * n)


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are relabelled by offset g1.n."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"union would exceed the vertex cap {MAX_VERTICES}")
    rows = list(g1.rows) + [r << g1.n for r in g2.rows]
    return Graph._from_rows_unchecked(n, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all g1.n * g2.n cross edges."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"join would exceed the vertex cap {MAX_VERTICES}")
    left_mask = (1 << g1.n) - 1
    right_mask = ((1 << g2.n) - 1) << g1.n
    rows = [r | right_mask for r in g1.rows]
    rows += [(r << g1.n) | left_mask for r in g2.rows]
    return Graph._from_rows_unchecked(n, tuple(rows))


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph on ``members``, relabelled by their sorted order."""
    verts = sorted(set(members))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        nb = g.rows[v]
        acc = 0
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            if u in index:
                acc |= 1 << index[u]
        rows[index[v]] = acc
    return Graph._from_rows_unchecked(len(verts), tuple(rows))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree undefined for the empty graph")
    return min(r.bit_count() for r in g.rows)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree undefined for the empty graph")
    return max(r.bit_count() for r in g.rows)


def _closure_mask(rows: Sequence[int], start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            u = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= rows[u]
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return _closure_mask(g.rows, 0) == (1 << g.n) - 1


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    out: list[frozenset[int]] = []
    unseen = (1 << g.n) - 1
    while unseen:
        v = (unseen & -unseen).bit_length() - 1
        comp = _closure_mask(g.rows, v)
        out.append(frozenset(_bits(comp)))
        unseen &= ~comp
    return out


# ---------------------------------------------------------------------------
# isomorphism


def _refine_colors(g1: Graph, g2: Graph) -> tuple[list[int], list[int]]:
    # Joint colour refinement so class ids are comparable across both graphs.
    n = g1.n
    cols = [[g.degree(v) for v in range(n)] for g in (g1, g2)]
    for _ in range(n):
        table: dict[tuple, int] = {}
        new = []
        for g, col in zip((g1, g2), cols):
            nc = []
            for v in range(n):
                sig = (col[v], tuple(sorted(col[u] for u in g.neighbors(v))))
                nc.append(table.setdefault(sig, len(table)))
            new.append(nc)
        if new == cols:
            break
        cols = new
    return cols[0], cols[1]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by pruned permutation search (n <= 10)."""
    if g1.n != g2.n:
        return False
    n = g1.n
    if n > ISO_CAP:
        raise GraphError(f"isomorphism search capped at {ISO_CAP} vertices, got {n}")
    if g1.edge_count() != g2.edge_count():
        return False
    if n == 0:
        return True
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    c1, c2 = _refine_colors(g1, g2)
    if sorted(c1) != sorted(c2):
        return False

    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(c2[w], []).append(w)
    # map rarest colour classes first
    order = sorted(range(n), key=lambda v: (len(by_color.get(c1[v], ())), c1[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color.get(c1[v], ()):
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# graph6 codec
#
# Header byte 63+n for n <= 62; '~' + 3 bytes for n < 2^18 and '~~' + 6 bytes
# beyond are accepted on input.  The upper triangle is packed in column order
# x(0,1), x(0,2), x(1,2), x(0,3), ..., zero-padded to a multiple of six bits,
# each 6-bit group (most significant bit first) stored as value+63.


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError(f"graph6 output supports n <= 62, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + acc))
                acc = 0
                filled = 0
    if filled:
        out.append(chr(63 + (acc << (6 - filled))))
    return "".join(out)


def _g6_byte(s: str, pos: int) -> int:
    if pos >= len(s):
        raise Graph6Error("truncated graph6 string", len(s))
    val = ord(s[pos]) - 63
    if not 0 <= val <= 63:
        raise Graph6Error(f"invalid graph6 byte {s[pos]!r}", pos)
    return val


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    if s.startswith(">>graph6<<"):
        s = s[10:]
    pos = 0
    first = _g6_byte(s, 0)
    if first == 63:  # '~' prefix forms
        second = _g6_byte(s, 1)
        if second == 63:
            n = 0
            for pos_ in range(2, 8):
                n = n << 6 | _g6_byte(s, pos_)
            pos = 8
        else:
            n = second
            for pos_ in (2, 3):
                n = n << 6 | _g6_byte(s, pos_)
            pos = 4
    else:
        n = first
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph on {n} vertices exceeds the cap {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) != pos + nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(s) - pos}",
            min(len(s), pos + nbytes),
        )
    rows = [0] * n
    bit = 0
    for k in range(nbytes):
        val = _g6_byte(s, pos + k)
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if val >> shift & 1:
                    raise Graph6Error("nonzero padding bits", pos + k)
                continue
            if val >> shift & 1:
                i, j = _PAIR_CACHE_LOOKUP(n, bit)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph._from_rows_unchecked(n, tuple(rows))


_pair_cache: dict[int, list[tuple[int, int]]] = {}


def pairs_colex(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    if n not in _pair_cache:
        _pair_cache[n] = [(i, j) for j in range(1, n) for i in range(j)]
    return _pair_cache[n]


def _PAIR_CACHE_LOOKUP(n: int, bit: int) -> tuple[int, int]:
    return pairs_colex(n)[bit]


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"edge-list header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"edge-list header must be 'n m', got {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphError(f"edge-list declares {m} edges but has {len(lines) - 1} edge lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"bad edge line {ln!r}") from exc
    return Graph(n, edges)
