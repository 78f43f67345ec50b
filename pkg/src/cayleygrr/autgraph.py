"""Exact graph automorphism groups via individualization-refinement.

The search follows the classic scheme: refine a vertex coloring until it is
equitable, pick a smallest non-singleton cell, and branch on which of its
vertices to individualize.  The first root-to-leaf path fixes a reference
labeling; every other leaf whose refinement trace matches it is compared
against that labeling, and matches are automorphisms.  Pruning uses the
orbits of the generators found so far (standard base-change-free variant),
plus immediate backjumping once a node off the first path yields any
automorphism.

The returned order is the product of base-orbit sizes, and is cross-checked
by rebuilding the group from the discovered generators with a stabilizer
chain; a mismatch raises instead of returning a wrong answer.
"""

import itertools
from collections import deque

from . import perm
from .cayley import VertexLimitExceeded

DEFAULT_NODE_BUDGET = 100_000_000
DEFAULT_VERTEX_LIMIT = 10_000


class NodeBudgetExceeded(RuntimeError):
    """Raised when the search tree exceeds the configured node budget."""


class Coloring:
    """Vertex coloring as both a lookup list and an ordered cell list.

    ``color_of[v]`` is the color of vertex v; colors must be contiguous
    integers 0..c-1.  ``cells[c]`` lists the vertices of color c in
    ascending order.
    """

    __slots__ = ("color_of", "cells")

    def __init__(self, color_of):
        self.color_of = list(color_of)
        n_cells = max(self.color_of) + 1 if self.color_of else 0
        cells = [[] for _ in range(n_cells)]
        for v, c in enumerate(self.color_of):
            if not 0 <= c < n_cells:
                raise ValueError(f"color {c} out of range")
            cells[c].append(v)
        if any(not cell for cell in cells):
            raise ValueError("colors must be contiguous 0..c-1")
        self.cells = tuple(tuple(cell) for cell in cells)

    def __eq__(self, other):
        if isinstance(other, Coloring):
            return self.color_of == other.color_of
        return NotImplemented

    def __repr__(self):
        return f"Coloring(cells={self.cells})"


class _Partition:
    """Ordered partition of 0..n-1 with O(1) cell lookup.

    ``order`` lists the vertices grouped by cell, ``pos`` inverts it,
    ``cstart[v]`` is the start position of v's cell (which also serves as
    the cell's identifier), and ``clen[s]`` is the cell length, valid only
    at start positions.
    """

    __slots__ = ("n", "order", "pos", "cstart", "clen")

    def __init__(self, n, order, pos, cstart, clen):
        self.n = n
        self.order = order
        self.pos = pos
        self.cstart = cstart
        self.clen = clen

    @classmethod
    def from_coloring(cls, n, coloring=None):
        if coloring is None:
            order = list(range(n))
            pos = list(range(n))
            cstart = [0] * n
            clen = [0] * n
            if n:
                clen[0] = n
            return cls(n, order, pos, cstart, clen)
        if isinstance(coloring, Coloring):
            coloring = coloring.color_of
        if len(coloring) != n:
            raise ValueError("coloring length must equal the vertex count")
        order = sorted(range(n), key=lambda v: (coloring[v], v))
        pos = [0] * n
        cstart = [0] * n
        clen = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        start = 0
        for i, v in enumerate(order):
            if i > 0 and coloring[v] != coloring[order[i - 1]]:
                clen[start] = i - start
                start = i
            cstart[v] = start
        if n:
            clen[start] = n - start
        return cls(n, order, pos, cstart, clen)

    def copy(self):
        return _Partition(self.n, self.order[:], self.pos[:],
                          self.cstart[:], self.clen[:])

    def cell_starts(self):
        s = 0
        while s < self.n:
            yield s
            s += self.clen[s]

    def is_discrete(self):
        return all(self.clen[s] == 1 for s in self.cell_starts())

    def individualize(self, v):
        """Split v off as a singleton at the front of its cell.

        Returns the singleton's cell id (for seeding refinement).
        """
        c = self.cstart[v]
        length = self.clen[c]
        if length < 2:
            raise ValueError("cannot individualize inside a singleton cell")
        order, pos, cstart, clen = self.order, self.pos, self.cstart, self.clen
        p = pos[v]
        w = order[c]
        order[c], order[p] = v, w
        pos[v], pos[w] = c, p
        clen[c] = 1
        clen[c + 1] = length - 1
        for i in range(c + 1, c + length):
            cstart[order[i]] = c + 1
        return c

    def refine(self, adj, worklist=None, expect=None):
        """Drive the partition to its coarsest equitable refinement.

        ``worklist`` holds the cell ids to use as splitters (defaults to all
        cells).  The returned trace is a flat list of ints recording every
        split (cell id, fragment count, then count/size pairs); when
        ``expect`` is given the trace is compared against it incrementally
        and refinement aborts with ok=False on the first divergence.
        """
        order, pos, cstart, clen = self.order, self.pos, self.cstart, self.clen
        n = self.n
        if worklist is None:
            work = deque(self.cell_starts())
        else:
            work = deque(worklist)
        in_work = set(work)
        cnt = [0] * n
        trace = []
        ei = 0
        while work:
            s = work.popleft()
            in_work.discard(s)
            touched = []
            for v in order[s:s + clen[s]]:
                for u in adj[v]:
                    if cnt[u] == 0:
                        touched.append(u)
                    cnt[u] += 1
            affected = {}
            for u in touched:
                c = cstart[u]
                if clen[c] > 1:
                    affected.setdefault(c, []).append(u)
            for c in sorted(affected):
                length = clen[c]
                hit = affected[c]
                if len(hit) == length and len({cnt[u] for u in hit}) == 1:
                    continue
                buckets = {}
                for x in order[c:c + length]:
                    buckets.setdefault(cnt[x], []).append(x)
                if len(buckets) == 1:
                    continue
                keys = sorted(buckets)
                trace.append(c)
                trace.append(len(keys))
                for kk in keys:
                    trace.append(kk)
                    trace.append(len(buckets[kk]))
                if expect is not None:
                    if trace[ei:] != expect[ei:len(trace)]:
                        for u in touched:
                            cnt[u] = 0
                        return trace, False
                    ei = len(trace)
                p = c
                frags = []
                for kk in keys:
                    members = buckets[kk]
                    frags.append((p, len(members)))
                    for x in members:
                        order[p] = x
                        pos[x] = p
                        p += 1
                for fs, fl in frags:
                    clen[fs] = fl
                    for i in range(fs, fs + fl):
                        cstart[order[i]] = fs
                if c in in_work:
                    for fs, _ in frags[1:]:
                        work.append(fs)
                        in_work.add(fs)
                else:
                    biggest = 0
                    for i in range(1, len(frags)):
                        if frags[i][1] > frags[biggest][1]:
                            biggest = i
                    for i, (fs, _) in enumerate(frags):
                        if i != biggest:
                            work.append(fs)
                            in_work.add(fs)
            for u in touched:
                cnt[u] = 0
        if expect is not None and len(trace) != len(expect):
            return trace, False
        return trace, True

    def target_cell(self):
        """First non-singleton cell of minimum size (positional order)."""
        best = None
        best_len = None
        for s in self.cell_starts():
            length = self.clen[s]
            if length > 1 and (best_len is None or length < best_len):
                best, best_len = s, length
                if length == 2:
                    break
        return best

    def colors(self):
        """Cell index (in positional order) of each vertex."""
        out = [0] * self.n
        for ci, s in enumerate(self.cell_starts()):
            for i in range(s, s + self.clen[s]):
                out[self.order[i]] = ci
        return out


def refine_equitable(graph, coloring=None):
    """Coarsest equitable refinement of ``coloring`` (default: all one cell).

    In the result every cell has a uniform neighbor count into every cell.
    Cells split deterministically (by sorted neighbor-count signatures), so
    equal inputs give equal outputs and refining twice is a no-op.
    """
    part = _Partition.from_coloring(graph.n, coloring)
    adj = graph.adjacency_sets()
    part.refine(adj)
    return Coloring(part.colors())


class AutGroup:
    """Automorphism group search result.

    ``order`` comes from the product of base-orbit sizes and is verified
    against a stabilizer chain over ``generators``; ``nodes`` counts search
    tree nodes.
    """

    def __init__(self, degree, generators, order, base, nodes, chain):
        self.degree = degree
        self.generators = generators
        self.order = order
        self.base = base
        self.nodes = nodes
        self.chain = chain

    def __repr__(self):
        return (f"AutGroup(degree={self.degree}, order={self.order}, "
                f"generators={len(self.generators)}, nodes={self.nodes})")

    def orbit_of(self, v):
        return perm.orbit(self.generators, v)

    def contains(self, g):
        return perm.contains(self.chain, g)


def _is_automorphism(g, adj):
    for v, gv in enumerate(g):
        adj_gv = adj[gv]
        for u in adj[v]:
            if g[u] not in adj_gv:
                return False
    return True


def automorphism_group(graph, coloring=None, node_budget=None,
                       vertex_limit=None):
    """Exact automorphism group of ``graph`` (optionally color-preserving).

    ``coloring`` restricts to automorphisms preserving each color class.
    Raises NodeBudgetExceeded when the search tree outgrows ``node_budget``
    (default DEFAULT_NODE_BUDGET) and ValueError when the graph has more
    than ``vertex_limit`` vertices (default DEFAULT_VERTEX_LIMIT).
    """
    n = graph.n
    if node_budget is None:
        node_budget = DEFAULT_NODE_BUDGET
    if vertex_limit is None:
        vertex_limit = DEFAULT_VERTEX_LIMIT
    if n > vertex_limit:
        raise VertexLimitExceeded(
            f"graph has {n} vertices, above the limit of {vertex_limit}")
    if n <= 1:
        chain = perm.build_chain([], degree=max(n, 1))
        return AutGroup(n, [], 1, [], 1, chain)

    adj = graph.adjacency_sets()
    root = _Partition.from_coloring(n, coloring)
    root.refine(adj)

    first_leaf = []
    base = []
    base_traces = []
    level_gens = []
    generators = []
    nodes = 0

    def orbit_at(depth):
        gens = [g for d in range(depth, len(level_gens)) for g in level_gens[d]]
        return perm.orbit(gens, base[depth])

    def explore(state, depth, on_base):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise NodeBudgetExceeded(
                f"automorphism search exceeded {node_budget} nodes")
        cell = state.target_cell()
        if cell is None:
            if not first_leaf:
                first_leaf.extend(state.order)
                return None
            g = [0] * n
            for i, v in enumerate(first_leaf):
                g[v] = state.order[i]
            g = tuple(g)
            if not perm.is_identity(g) and _is_automorphism(g, adj):
                return g
            return None
        vs = state.order[cell:cell + state.clen[cell]]
        if on_base:
            beta = vs[0]
            base.append(beta)
            level_gens.append([])
            child = state.copy()
            seed = child.individualize(beta)
            trace, _ = child.refine(adj, worklist=[seed])
            base_traces.append(trace)
            explore(child, depth + 1, True)
            orb = set(orbit_at(depth))
            for v in vs[1:]:
                if v in orb:
                    continue
                child = state.copy()
                seed = child.individualize(v)
                _, ok = child.refine(adj, worklist=[seed],
                                     expect=base_traces[depth])
                if not ok:
                    continue
                g = explore(child, depth + 1, False)
                if g is not None:
                    level_gens[depth].append(g)
                    generators.append(g)
                    orb = set(orbit_at(depth))
            return None
        for v in vs:
            child = state.copy()
            seed = child.individualize(v)
            _, ok = child.refine(adj, worklist=[seed],
                                 expect=base_traces[depth])
            if not ok:
                continue
            g = explore(child, depth + 1, False)
            if g is not None:
                # backjump: one automorphism per off-path subtree suffices
                return g
        return None

    explore(root, 0, True)

    order = 1
    for d in range(len(base)):
        order *= len(orbit_at(d))
    chain = perm.build_chain(generators, degree=n, known_order=order)
    if chain.order != order:
        raise RuntimeError(
            "internal inconsistency: orbit product and stabilizer chain "
            f"disagree ({order} vs {chain.order})")
    return AutGroup(n, generators, order, list(base), nodes, chain)


def brute_force_automorphisms(graph):
    """Automorphism group by scanning all n! candidate maps (n <= 10)."""
    n = graph.n
    if n > 10:
        raise ValueError("brute force capped at 10 vertices")
    if n == 0:
        return AutGroup(0, [], 1, [], 0, perm.build_chain([], degree=1))
    adj = graph.adjacency_sets()
    edges = list(graph.edges())
    found = []
    for cand in itertools.permutations(range(n)):
        for u, w in edges:
            if cand[w] not in adj[cand[u]]:
                break
        else:
            found.append(cand)
    generators = [g for g in found if not perm.is_identity(g)]
    chain = perm.build_chain(generators, degree=n, known_order=len(found))
    if chain.order != len(found):
        raise RuntimeError(
            "internal inconsistency: exhaustive scan found "
            f"{len(found)} automorphisms but they generate {chain.order}")
    return AutGroup(n, generators, len(found), [], 0, chain)


def vertex_stabilizer_order(aut, v):
    """Order of the stabilizer of vertex ``v`` (orbit-stabilizer)."""
    orb = perm.orbit(aut.generators, v)
    if aut.order % len(orb):
        raise RuntimeError("orbit size does not divide the group order")
    return aut.order // len(orb)


def _generators_of(group_or_gens):
    if isinstance(group_or_gens, AutGroup):
        return group_or_gens.generators
    return list(group_or_gens)


def is_partition_invariant(aut, block_of):
    """Does the group permute the blocks of ``block_of`` among themselves?

    ``aut`` may be an AutGroup or a plain list of generators; invariance
    under the generators implies invariance under the whole group.
    """
    for g in _generators_of(aut):
        image = {}
        for v, gv in enumerate(g):
            b = block_of[v]
            prev = image.get(b)
            if prev is None:
                image[b] = block_of[gv]
            elif prev != block_of[gv]:
                return False
    return True


def block_action(aut, block_of, n_blocks=None):
    """Induced permutations of the blocks; raises if some generator does
    not respect the partition."""
    if n_blocks is None:
        n_blocks = max(block_of) + 1 if len(block_of) else 0
    out = []
    for g in _generators_of(aut):
        image = [-1] * n_blocks
        for v, gv in enumerate(g):
            b = block_of[v]
            if image[b] == -1:
                image[b] = block_of[gv]
            elif image[b] != block_of[gv]:
                raise ValueError("partition is not invariant under the "
                                 "given generators")
        if -1 in image or len(set(image)) != n_blocks:
            raise ValueError("induced block map is not a permutation")
        out.append(tuple(image))
    return out


def normalizer_order_of_regular_subgroup(aut, table):
    """Order of the normalizer, inside the full automorphism group ``aut``
    of a Cayley graph of ``table``'s group, of the right-translation copy
    of that group.

    Requires every right translation to lie in ``aut`` and the index
    [aut : translations] to be at most 64 (enough for vertex stabilizers
    of the graphs this package certifies).  Uses the factorization
    A = A_0 * R(G) with A_0 the stabilizer of the identity vertex: a coset
    R(G)b normalizes iff b does, so only |A_0| elements need testing.
    """
    n = table.order
    if aut.degree != n:
        raise ValueError("automorphism group degree differs from group order")
    trans_gens = []
    for gp in range(len(table.gen_perms)):
        row = tuple(table.mul(i, table.gen_indices[gp]) for i in range(n))
        trans_gens.append(row)
    trans_chain = perm.build_chain(trans_gens, degree=n, known_order=n)
    if trans_chain.order != n:
        raise RuntimeError("right translations did not close into the group")
    for t in trans_gens:
        if not perm.contains(aut.chain, t):
            raise ValueError("a right translation is missing from the "
                             "automorphism group")
    index = aut.order // n
    if aut.order % n or index > 64:
        raise ValueError(f"index {aut.order}/{n} out of supported range")
    stab_chain = perm.build_chain(aut.generators, degree=n,
                                  known_order=aut.order, base_prefix=[0])
    normalizing = 0
    for b in perm.stabilizer_elements(stab_chain, 1):
        b_inv = perm.inverse(b)
        if all(perm.contains(trans_chain,
                                   perm.compose(perm.compose(b_inv, t), b))
               for t in trans_gens):
            normalizing += 1
    return normalizing * n
