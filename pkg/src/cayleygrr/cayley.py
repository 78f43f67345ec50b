"""Cayley graphs, coset quotients, and graph file formats.

Graphs are undirected and simple, stored in compressed sparse rows with each
neighbor list sorted ascending.  A Cayley graph Cay(G, S) has the group
elements as vertices (numbered by their table index, identity = vertex 0)
and g ~ h exactly when h * g^{-1} lies in the connection set S; S must be
inverse-closed and avoid the identity, which makes the relation symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import perm

VERTEX_LIMIT = 10_000


class VertexLimitExceeded(ValueError):
    """A graph would have more vertices than the configured limit."""


class Graph:
    """Undirected simple graph on vertices 0..n-1 (CSR adjacency)."""

    def __init__(self, n, indptr, nbr):
        self.n = n
        self.indptr = indptr
        self.nbr = nbr
        self._adj_sets = None

    @classmethod
    def from_edges(cls, n, edges):
        """Build from an iterable of (u, v) pairs; loops are rejected,
        duplicates collapse."""
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        deg = [0] * n
        for u, v in seen:
            deg[u] += 1
            deg[v] += 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        nbr = np.zeros(indptr[-1], dtype=np.int32)
        fill = indptr[:-1].copy()
        for u, v in sorted(seen):
            nbr[fill[u]] = v
            fill[u] += 1
            nbr[fill[v]] = u
            fill[v] += 1
        for u in range(n):
            nbr[indptr[u] : indptr[u + 1]].sort()
        return cls(n, indptr, nbr)

    def neighbors(self, v):
        return self.nbr[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def edge_count(self):
        return len(self.nbr) // 2

    def adjacency_sets(self):
        if self._adj_sets is None:
            self._adj_sets = [
                frozenset(int(w) for w in self.neighbors(v)) for v in range(self.n)
            ]
        return self._adj_sets

    def has_edge(self, u, v):
        return v in self.adjacency_sets()[u]

    def edges(self):
        for u in range(self.n):
            for w in self.neighbors(u):
                if u < w:
                    yield u, int(w)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.nbr, other.nbr)
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class ConnectionSet:
    """Inverse-closed, identity-free subset of a group, by element index."""

    members: tuple  # sorted element indices
    x: int  # index of the cyclic part's generator
    y: int  # index of the involution
    k: int


class DuplicateConnectionMember(ValueError):
    """Two defining members of a connection set coincide."""


def standard_connection_set(table, x, y, k):
    """The k-valent connection set built from symmetric powers of ``x``
    plus an involution.

    For odd k the members are x^{±1}, ..., x^{±(k-1)/2} and y; for even k
    they are x^{±1}, ..., x^{±(k-2)/2}, y and x^{-1} y x.  Requires
    order(x) > 2*floor((k-1)/2), order(y) = 2, and (even k only)
    x^{-1} y x != y.  Raises :class:`DuplicateConnectionMember` when the
    defining members collide, listing the collision.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    xi = x if isinstance(x, int) else table.idx(x)
    yi = y if isinstance(y, int) else table.idx(y)
    xp = table.elements[xi]
    yp = table.elements[yi]
    half = (k - 1) // 2
    if perm.order_of(xp) <= 2 * half:
        raise ValueError(
            f"order of x is {perm.order_of(xp)}, need more than {2 * half}"
        )
    if perm.order_of(yp) != 2:
        raise ValueError("y must be an involution")
    named = []
    for j in range(1, half + 1):
        named.append((f"x^{j}", table.idx(perm.power(xp, j))))
        named.append((f"x^-{j}", table.idx(perm.power(xp, -j))))
    named.append(("y", yi))
    if k % 2 == 0:
        conj = table.idx(
            perm.compose(perm.compose(perm.inverse(xp), yp), xp)
        )
        if conj == yi:
            raise ValueError("x^-1 y x equals y; even valency needs them distinct")
        named.append(("x^-1yx", conj))
    seen = {}
    for name, idx in named:
        if idx in seen:
            raise DuplicateConnectionMember(
                f"connection members {seen[idx]} and {name} coincide "
                f"(element {perm.format_cycles(table.elements[idx])})"
            )
        seen[idx] = name
    members = tuple(sorted(seen))
    assert len(members) == k
    return ConnectionSet(members=members, x=xi, y=yi, k=k)


def validate_connection_set(table, members):
    """Check a raw member list: no identity, inverse-closed."""
    mset = set(members)
    if 0 in mset:
        raise ValueError("connection set contains the identity")
    for m in mset:
        if table.inv(m) not in mset:
            raise ValueError(
                f"connection set not inverse-closed at element {m}"
            )
    return tuple(sorted(mset))


def cayley_graph(table, conn):
    """Cay(G, S) with vertex i = element i of the table.

    ``conn`` may be a :class:`ConnectionSet` or a plain iterable of element
    indices (validated for inverse closure).  Vertices g and h are adjacent
    iff h * g^{-1} is in S, i.e. the neighbors of g are the products s * g.
    """
    members = conn.members if isinstance(conn, ConnectionSet) else tuple(conn)
    members = validate_connection_set(table, members)
    n = table.order
    if n > VERTEX_LIMIT:
        raise VertexLimitExceeded(
            f"group order {n} exceeds vertex limit {VERTEX_LIMIT}")
    k = len(members)
    indptr = np.arange(0, (n + 1) * k, k, dtype=np.int64)
    nbr = np.empty(n * k, dtype=np.int32)
    rows = []
    for s in members:
        sp = table.elements[s]
        rows.append([table.index[perm.compose(sp, e)] for e in table.elements])
    for g in range(n):
        nbr[g * k : (g + 1) * k] = sorted(rows[j][g] for j in range(k))
    return Graph(n, indptr, nbr)


def is_connected(graph):
    """Breadth-first reachability of every vertex from vertex 0."""
    if graph.n == 0:
        return True
    seen = np.zeros(graph.n, dtype=bool)
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in graph.neighbors(v):
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(int(w))
    return count == graph.n


def coset_partition(table, subgroup_members):
    """Right-coset partition of the group by a subgroup given as element
    indices.  Returns ``(block_of, blocks)`` where ``block_of[i]`` is the
    block id of element i and blocks are numbered by first appearance.
    """
    members = sorted(set(subgroup_members))
    if 0 not in members:
        raise ValueError("subgroup must contain the identity")
    mset = set(members)
    for a in members:
        if table.inv(a) not in mset:
            raise ValueError("subgroup not closed under inversion")
        for b in members:
            if table.mul(a, b) not in mset:
                raise ValueError("subgroup not closed under multiplication")
    n = table.order
    block_of = [-1] * n
    blocks = []
    for g in range(n):
        if block_of[g] != -1:
            continue
        bid = len(blocks)
        blk = sorted(table.mul(h, g) for h in members)
        for e in blk:
            if block_of[e] != -1:
                raise ValueError("coset overlap; input is not a subgroup")
            block_of[e] = bid
        blocks.append(tuple(blk))
    return block_of, blocks


def quotient_graph(graph, block_of, block_count=None):
    """Block quotient: blocks are adjacent iff some edge joins them.

    Intra-block edges are dropped; the result is a plain :class:`Graph` on
    the blocks.
    """
    if block_count is None:
        block_count = max(block_of) + 1
    edges = set()
    for u, v in graph.edges():
        bu, bv = block_of[u], block_of[v]
        if bu != bv:
            edges.add((bu, bv) if bu < bv else (bv, bu))
    return Graph.from_edges(block_count, edges)


def circulant_graph(n, offsets):
    """Cay(Z/n, {+-d : d in offsets}) without building a group table.

    Offsets are taken mod n and closed under negation; an offset of 0
    (a loop) raises.
    """
    if n < 1:
        raise ValueError("n must be positive")
    chords = set()
    for d in offsets:
        d = d % n
        if d == 0:
            raise ValueError("offset 0 would be a loop")
        chords.add(d)
        chords.add(n - d)
    edges = set()
    for v in range(n):
        for d in chords:
            u = (v + d) % n
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def edges_between_blocks(graph, block_of, b1, b2):
    """Number of graph edges with one end in block b1 and the other in b2."""
    if b1 == b2:
        raise ValueError("blocks must be distinct")
    count = 0
    for u in range(graph.n):
        if block_of[u] != b1:
            continue
        for w in graph.neighbors(u):
            if block_of[int(w)] == b2:
                count += 1
    return count


# ---------------------------------------------------------------------------
# graph6 and DIMACS
# ---------------------------------------------------------------------------


def to_graph6(graph):
    """graph6 encoding (data bytes only, no optional header, no newline).

    Standard layout: N(n) followed by the upper-triangle adjacency bits in
    column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian into
    6-bit groups, each group + 63.
    """
    n = graph.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError("graph too large for this writer")
    bits = []
    adj = graph.adjacency_sets()
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if v in adj[u] else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = (group << 1) | b
        body.append(group + 63)
    return head + bytes(body)


def from_graph6(data):
    """Inverse of :func:`to_graph6`; tolerates a trailing newline."""
    data = data.rstrip(b"\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise ValueError("empty graph6 data")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise ValueError("unsupported graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        rest = data[4:]
    else:
        n = data[0] - 63
        rest = data[1:]
    if not 0 <= n <= 258047:
        raise ValueError("bad graph6 vertex count")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ValueError(f"graph6 body length {len(rest)}, expected {need}")
    bits = []
    for ch in rest:
        if not 63 <= ch <= 126:
            raise ValueError("graph6 byte out of range")
        bits.extend((ch - 63) >> (5 - i) & 1 for i in range(6))
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bits[pos]:
                edges.append((u, v))
            pos += 1
    return Graph.from_edges(n, edges)


def to_dimacs(graph):
    """DIMACS edge format: ``p edge n m`` then one ``e u v`` line per edge,
    vertices 1-indexed, each edge written once with u < v."""
    lines = [f"p edge {graph.n} {graph.edge_count}"]
    for u, v in graph.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def from_dimacs(text):
    """Parse DIMACS edge format (comment lines ``c ...`` are skipped)."""
    n = None
    m = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"bad problem line: {raw!r}")
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise ValueError("edge before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise ValueError(f"unrecognized DIMACS line: {raw!r}")
    if n is None:
        raise ValueError("missing problem line")
    if m is not None and m != len(edges):
        raise ValueError(f"problem line declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)
