"""Permutations on {0, ..., n-1} and deterministic stabilizer chains.

Conventions used throughout the package:

* a permutation is an immutable tuple of images, ``g[i]`` being the image
  of point ``i``;
* points act on the right, ``i^(ab) = (i^a)^b``, so ``compose(a, b)`` is
  "apply ``a`` first, then ``b``" and maps ``i -> b[a[i]]``;
* cycle notation is 1-indexed on input and output, internals are 0-indexed.

Stabilizer chains are built with the deterministic Schreier-Sims procedure
(base point = first moved point at each level, generators processed in input
order), so chain contents and orders are reproducible across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# comfortably above the Cayley-graph vertex limit, so automorphism groups
# of the largest supported graphs still fit through the chain machinery
MAX_DEGREE = 16384

Perm = tuple


def identity(degree):
    """The identity permutation on ``degree`` points."""
    _check_degree(degree)
    return tuple(range(degree))


def _check_degree(degree):
    if not 0 <= degree <= MAX_DEGREE:
        raise ValueError(f"degree {degree} outside supported range 0..{MAX_DEGREE}")


def _check_perm(g):
    n = len(g)
    _check_degree(n)
    if sorted(g) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {g!r}")


def compose(a, b):
    """Product "apply ``a`` then ``b``": the permutation ``i -> b[a[i]]``."""
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(b[i] for i in a)


def inverse(g):
    """Inverse permutation."""
    inv = [0] * len(g)
    for i, j in enumerate(g):
        inv[j] = i
    return tuple(inv)


def power(g, e):
    """``g`` raised to an arbitrary integer exponent, by repeated squaring."""
    if e < 0:
        return power(inverse(g), -e)
    acc = identity(len(g))
    sq = tuple(g)
    while e:
        if e & 1:
            acc = compose(acc, sq)
        sq = compose(sq, sq)
        e >>= 1
    return acc


def is_identity(g):
    return all(i == j for i, j in enumerate(g))


def cycles_of(g):
    """Nontrivial cycles of ``g`` as 0-indexed tuples, each starting at its
    smallest point, listed by smallest point."""
    seen = [False] * len(g)
    out = []
    for start in range(len(g)):
        if seen[start] or g[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        j = g[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = g[j]
        out.append(tuple(cyc))
    return out


def order_of(g):
    """Multiplicative order: lcm of the cycle lengths."""
    ord_ = 1
    for cyc in cycles_of(g):
        ord_ = math.lcm(ord_, len(cyc))
    return ord_


def sign(g):
    """+1 for even permutations, -1 for odd ones."""
    s = 1
    for cyc in cycles_of(g):
        if len(cyc) % 2 == 0:
            s = -s
    return s


def moved_points(g):
    return [i for i in range(len(g)) if g[i] != i]


def parse_cycles(text, degree):
    """Parse 1-indexed cycle notation into a permutation on ``degree`` points.

    Grammar: zero or more parenthesised cycles, e.g. ``"(1,2,3)(4,5)"``.
    Whitespace is ignored.  Cycles need not be disjoint; they are applied
    left to right, matching :func:`compose`.  The empty string (or ``"()"``)
    is the identity.
    """
    _check_degree(degree)
    result = list(range(degree))
    i = 0
    s = "".join(text.split())
    while i < len(s):
        if s[i] != "(":
            raise ValueError(f"expected '(' at position {i} in {text!r}")
        j = s.index(")", i) if ")" in s[i:] else -1
        if j < 0:
            raise ValueError(f"unbalanced parenthesis in {text!r}")
        body = s[i + 1 : j]
        i = j + 1
        if not body:
            continue
        pts = []
        for tok in body.split(","):
            if not tok.isdigit():
                raise ValueError(f"bad point {tok!r} in {text!r}")
            p = int(tok)
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            pts.append(p - 1)
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point inside one cycle in {text!r}")
        cyc = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            cyc[a] = b
        result = [cyc[result[k]] for k in range(degree)]
    return tuple(result)


def format_cycles(g):
    """1-indexed cycle notation; the identity prints as ``"()"``."""
    cycs = cycles_of(g)
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(p + 1) for p in cyc) + ")" for cyc in cycs)


def orbit(generators, point):
    """Sorted orbit of ``point`` under the group the generators produce."""
    if not generators:
        return [point]
    degree = len(generators[0])
    if not 0 <= point < degree:
        raise ValueError(f"point {point} out of range")
    seen = {point}
    queue = [point]
    while queue:
        a = queue.pop()
        for g in generators:
            b = g[a]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return sorted(seen)


# ---------------------------------------------------------------------------
# Stabilizer chains
# ---------------------------------------------------------------------------


@dataclass
class _Level:
    beta: int
    # indices into chain.strong of the generators valid at this level
    gen_ids: list = field(default_factory=list)
    # orbit point -> inverse transversal element (numpy array mapping the
    # point back to beta); beta maps to the identity array
    trans_inv: dict = field(default_factory=dict)
    # Schreier pairs (orbit point, gen id) not yet sifted
    pending: list = field(default_factory=list)
    # BFS frontier bookkeeping: orbit points in discovery order
    orbit_order: list = field(default_factory=list)


class StabilizerChain:
    """Base and strong generating set for a permutation group.

    ``base`` lists the stabilized points level by level, ``order`` is the
    exact group order (arbitrary precision).  Use :func:`build_chain` to
    construct one and :func:`contains` for membership tests.
    """

    def __init__(self, degree):
        _check_degree(degree)
        self.degree = degree
        self.levels = []
        self.strong = []  # numpy arrays
        self._strong_inv = []
        self._id = np.arange(degree, dtype=np.int32)

    @property
    def base(self):
        return [lvl.beta for lvl in self.levels]

    @property
    def order(self):
        n = 1
        for lvl in self.levels:
            n *= len(lvl.trans_inv)
        return n

    def generators(self):
        """Strong generators as plain tuples (empty for the trivial group)."""
        return [tuple(int(i) for i in g) for g in self.strong]

    # -- internals ----------------------------------------------------------

    def _sift(self, arr):
        """Sift ``arr`` through the chain; return (residue, drop_level)."""
        g = arr
        for d, lvl in enumerate(self.levels):
            b = int(g[lvl.beta])
            if b == lvl.beta:
                continue
            u_inv = lvl.trans_inv.get(b)
            if u_inv is None:
                return g, d
            g = u_inv[g]
        return g, len(self.levels)

    def _add_strong(self, arr):
        """Record a new strong generator; returns its drop level."""
        g = arr.astype(np.int32, copy=True)
        g.setflags(write=False)
        residue, d = self._sift(g)
        if np.array_equal(residue, self._id) and d == len(self.levels):
            return None
        # the original generator (not the residue) is stored: it fixes the
        # base points of every level it passed, which is all we need
        first_moved = None
        for i in range(self.degree):
            if g[i] != i:
                first_moved = i
                break
        if first_moved is None:
            return None
        drop = 0
        for drop, lvl in enumerate(self.levels):
            if g[lvl.beta] != lvl.beta:
                break
        else:
            drop = len(self.levels)
        if drop == len(self.levels):
            self.levels.append(_Level(beta=first_moved))
            lvl = self.levels[-1]
            lvl.trans_inv[first_moved] = self._id
            lvl.orbit_order.append(first_moved)
        gid = len(self.strong)
        self.strong.append(g)
        inv = np.empty(self.degree, dtype=np.int32)
        inv[g] = np.arange(self.degree, dtype=np.int32)
        inv.setflags(write=False)
        self._strong_inv.append(inv)
        for d in range(drop + 1):
            lvl = self.levels[d]
            lvl.gen_ids.append(gid)
            for pt in lvl.orbit_order:
                lvl.pending.append((pt, gid))
            self._grow_orbit(d, new_gid=gid)
        return drop

    def _grow_orbit(self, d, new_gid=None):
        """Extend level ``d``'s orbit/transversal.

        With ``new_gid`` set, only images of existing points under that one
        generator seed the search; freshly discovered points are then chased
        with the full generator list.
        """
        lvl = self.levels[d]
        seed_gids = [new_gid] if new_gid is not None else lvl.gen_ids
        frontier = []
        for gid in seed_gids:
            g = self.strong[gid]
            g_inv = self._strong_inv[gid]
            for a in list(lvl.orbit_order):
                b = int(g[a])
                if b not in lvl.trans_inv:
                    t = lvl.trans_inv[a][g_inv]
                    t.setflags(write=False)
                    lvl.trans_inv[b] = t
                    lvl.orbit_order.append(b)
                    frontier.append(b)
                    for g2 in lvl.gen_ids:
                        lvl.pending.append((b, g2))
        while frontier:
            a = frontier.pop()
            ua_inv = lvl.trans_inv[a]
            for gid in lvl.gen_ids:
                b = int(self.strong[gid][a])
                if b not in lvl.trans_inv:
                    t = ua_inv[self._strong_inv[gid]]
                    t.setflags(write=False)
                    lvl.trans_inv[b] = t
                    lvl.orbit_order.append(b)
                    frontier.append(b)
                    for g2 in lvl.gen_ids:
                        lvl.pending.append((b, g2))

    def _schreier_closure(self, target_order=None):
        """Deterministic completion: sift every Schreier generator, adding
        residues until all sift to the identity (Schreier-Sims).

        ``target_order``, when given, must be an upper bound attained only
        by the full group; reaching it proves the chain complete, so the
        remaining pending pairs are dropped unprocessed.
        """
        while True:
            d = max(
                (i for i, lvl in enumerate(self.levels) if lvl.pending),
                default=None,
            )
            if d is None:
                return
            lvl = self.levels[d]
            pt, gid = lvl.pending.pop()
            g = self.strong[gid]
            b = int(g[pt])
            # Schreier generator u_pt * g * u_b^{-1}, built directly from the
            # stored inverse transversal entries
            u_pt_inv = lvl.trans_inv[pt]
            u_pt = np.empty(self.degree, dtype=np.int32)
            u_pt[u_pt_inv] = np.arange(self.degree, dtype=np.int32)
            sg = lvl.trans_inv[b][g[u_pt]]
            residue, _ = self._sift(sg)
            if not np.array_equal(residue, self._id):
                self._add_strong(residue)
                if target_order is not None and self.order == target_order:
                    for level in self.levels:
                        level.pending.clear()
                    return


def build_chain(generators, degree=None, known_order=None, base_prefix=()):
    """Deterministic Schreier-Sims chain for ``<generators>``.

    ``known_order``, when given, must be the order of some group containing
    the generators; the construction stops early once the chain's order
    reaches it (then the chain is provably complete), using a fixed word
    schedule before falling back to the full Schreier closure.  Without it
    the full closure always runs.  Same inputs always give the same chain.

    ``base_prefix`` forces the first base points (useful for reading off
    point stabilizers); remaining base points are still the first moved
    point at each level.
    """
    if degree is None:
        if not generators:
            raise ValueError("degree required when the generator list is empty")
        degree = len(generators[0])
    chain = StabilizerChain(degree)
    for beta in base_prefix:
        if not 0 <= beta < degree:
            raise ValueError(f"base point {beta} out of range")
        lvl = _Level(beta=beta)
        lvl.trans_inv[beta] = chain._id
        lvl.orbit_order.append(beta)
        chain.levels.append(lvl)
    gens = []
    for g in generators:
        _check_perm(g)
        if len(g) != degree:
            raise ValueError("generators of mixed degree")
        if not is_identity(g):
            gens.append(np.array(g, dtype=np.int32))
    for g in gens:
        chain._add_strong(g)
    if known_order is not None and gens:
        if chain.order == known_order:
            for lvl in chain.levels:
                lvl.pending.clear()
            return chain
        import random as _random

        rng = _random.Random(0x5EED)
        pool = gens + [inv for inv in chain._strong_inv[: len(gens)]]
        word = chain._id
        misses = 0
        budget = 64 + 8 * known_order.bit_length()
        for _ in range(budget):
            word = pool[rng.randrange(len(pool))][word]
            residue, _d = chain._sift(word)
            if np.array_equal(residue, chain._id):
                misses += 1
            else:
                chain._add_strong(residue)
                misses = 0
                if chain.order == known_order:
                    for lvl in chain.levels:
                        lvl.pending.clear()
                    return chain
                if chain.order > known_order:
                    raise ValueError("known_order smaller than the generated group")
            if misses > 48:
                break
    chain._schreier_closure(target_order=known_order)
    if known_order is not None and chain.order > known_order:
        raise ValueError("known_order smaller than the generated group")
    return chain


def contains(chain, g):
    """Exact membership test against a stabilizer chain."""
    if len(g) != chain.degree:
        raise ValueError("degree mismatch")
    arr = np.array(g, dtype=np.int32)
    residue, _ = chain._sift(arr)
    return bool(np.array_equal(residue, chain._id))


def chain_elements(chain):
    """Iterate over every group element (tuples), via transversal products.

    Intended for small groups; the iteration order is deterministic.
    """
    degree = chain.degree
    if not chain.levels:
        yield tuple(range(degree))
        return

    def rec(d, acc):
        if d < 0:
            yield tuple(int(i) for i in acc)
            return
        lvl = chain.levels[d]
        for pt in lvl.orbit_order:
            u_inv = lvl.trans_inv[pt]
            u = np.empty(degree, dtype=np.int32)
            u[u_inv] = np.arange(degree, dtype=np.int32)
            # sifting factors the element as u_deepest * ... * u_0 with the
            # deepest factor applied first, hence u[acc] and not acc[u]
            yield from rec(d - 1, u[acc])

    yield from rec(len(chain.levels) - 1, chain._id)


def stabilizer_elements(chain, fixed):
    """Iterate over the elements fixing ``chain.base[:fixed]`` pointwise.

    These are exactly the transversal products over levels ``fixed`` and
    deeper, so the subgroup comes out without any filtering.
    """
    degree = chain.degree
    if fixed < 0 or fixed > len(chain.levels):
        raise ValueError("fixed must be between 0 and the base length")

    def rec(d, acc):
        if d < fixed:
            yield tuple(int(i) for i in acc)
            return
        lvl = chain.levels[d]
        for pt in lvl.orbit_order:
            u_inv = lvl.trans_inv[pt]
            u = np.empty(degree, dtype=np.int32)
            u[u_inv] = np.arange(degree, dtype=np.int32)
            yield from rec(d - 1, u[acc])

    yield from rec(len(chain.levels) - 1, chain._id)


# ---------------------------------------------------------------------------
# Block systems and primitivity
# ---------------------------------------------------------------------------


def _minimal_blocks(generators, degree, beta):
    """Finest block system whose blocks merge points 0 and ``beta``
    (union-find closure over generator images)."""
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return True

    union(0, beta)
    queue = [(0, beta)]
    while queue:
        a, b = queue.pop()
        for g in generators:
            if union(g[a], g[b]):
                queue.append((g[a], g[b]))
    blocks = {}
    for x in range(degree):
        blocks.setdefault(find(x), []).append(x)
    return sorted(tuple(b) for b in blocks.values())


def is_primitive(generators):
    """Primitivity of the generated group on all of {0, ..., n-1}.

    Returns ``(True, None)`` or ``(False, blocks)`` where ``blocks`` is a
    nontrivial proper block system witnessing imprimitivity.  Raises
    ``ValueError`` on intransitive input.
    """
    if not generators:
        raise ValueError("no generators")
    degree = len(generators[0])
    if degree == 0:
        raise ValueError("empty domain")
    if len(orbit(generators, 0)) != degree:
        raise ValueError("group is not transitive")
    if degree <= 2:
        return True, None
    for beta in range(1, degree):
        blocks = _minimal_blocks(generators, degree, beta)
        if 1 < len(blocks) < degree:
            return False, blocks
    return True, None
