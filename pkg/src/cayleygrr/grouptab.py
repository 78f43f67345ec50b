"""Explicit element tables for small permutation groups.

A :class:`GroupTable` enumerates every element of a generated group (bounded
by a cap), indexes them 0..order-1 with the identity at index 0, and carries
the multiplication structure needed by the Cayley-graph and certification
code: left-multiplication rows for the generators, inverses, conjugacy
classes, and homomorphism extension by generator images.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm

DEFAULT_CAP = 1_000_000


class EnumerationCapExceeded(Exception):
    """The breadth-first closure outgrew the element cap."""


class GroupTable:
    """Element table of ``<generators>``, identity at index 0.

    Elements are stored as image tuples in breadth-first discovery order
    (identity first, then products by generators in input order), so the
    numbering is deterministic.
    """

    def __init__(self, generators, cap=DEFAULT_CAP):
        if not generators:
            raise ValueError("no generators")
        degree = len(generators[0])
        for g in generators:
            if len(g) != degree:
                raise ValueError("generators of mixed degree")
        self.degree = degree
        gens = [tuple(g) for g in generators]
        ident = perm.identity(degree)
        elements = [ident]
        index = {ident: 0}
        # parent[i] = (j, gen_pos) with element i == gens[gen_pos] * element j,
        # used for word propagation when extending generator maps
        parent = [None]
        frontier = [0]
        while frontier:
            nxt = []
            for ei in frontier:
                e = elements[ei]
                for gp, g in enumerate(gens):
                    p = perm.compose(g, e)
                    if p not in index:
                        if len(elements) >= cap:
                            raise EnumerationCapExceeded(
                                f"group exceeds enumeration cap {cap}"
                            )
                        index[p] = len(elements)
                        elements.append(p)
                        parent.append((ei, gp))
                        nxt.append(index[p])
            frontier = nxt
        self.elements = elements
        self.index = index
        self.gen_perms = gens
        self.gen_indices = [index[g] for g in gens]
        self._parent = parent
        # left_mul[gp][i] = index of gens[gp] * elements[i]
        self.left_mul = [
            [index[perm.compose(g, e)] for e in elements] for g in gens
        ]
        self._inverse = None
        self._orders = None
        self._classes = None

    @property
    def order(self):
        return len(self.elements)

    def idx(self, g):
        """Index of a permutation (raises ``KeyError`` if not an element)."""
        return self.index[tuple(g)]

    def mul(self, i, j):
        """Index of ``elements[i] * elements[j]``."""
        return self.index[perm.compose(self.elements[i], self.elements[j])]

    def inv(self, i):
        if self._inverse is None:
            self._inverse = [self.index[perm.inverse(e)] for e in self.elements]
        return self._inverse[i]

    def element_order(self, i):
        if self._orders is None:
            self._orders = [perm.order_of(e) for e in self.elements]
        return self._orders[i]


def enumerate_group(generators, cap=DEFAULT_CAP):
    """Build the full element table of ``<generators>`` (see GroupTable)."""
    return GroupTable(generators, cap=cap)


@dataclass(frozen=True)
class ElementAutomorphism:
    """A group automorphism presented as a permutation of element indices."""

    images: tuple

    def __call__(self, i):
        return self.images[i]

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def after(self, other):
        """Composite automorphism: ``self`` applied first, then ``other``."""
        return ElementAutomorphism(tuple(other.images[i] for i in self.images))


def extend_generator_map(table, sources, targets):
    """Extend ``sources[i] -> targets[i]`` to an automorphism of the group.

    ``sources`` and ``targets`` are element indices; the sources must
    generate.  Returns an :class:`ElementAutomorphism` when a (necessarily
    unique) bijective homomorphism with those images exists, else ``None``.
    The extension is propagated breadth-first and then re-verified on every
    (source, element) product, which pins the homomorphism property on all
    of the group.
    """
    n = table.order
    if len(sources) != len(targets):
        raise ValueError("sources/targets length mismatch")
    src_perms = [table.elements[s] for s in sources]
    left_rows = [
        [table.index[perm.compose(s, e)] for e in table.elements]
        for s in src_perms
    ]
    # generation check first: a None result below means "no such
    # automorphism", which is only a sound conclusion when the sources
    # reach the whole group
    reached = [False] * n
    reached[0] = True
    frontier = [0]
    while frontier:
        nxt = []
        for ei in frontier:
            for row in left_rows:
                e2 = row[ei]
                if not reached[e2]:
                    reached[e2] = True
                    nxt.append(e2)
        frontier = nxt
    if not all(reached):
        raise ValueError("sources do not generate the group")
    images = [None] * n
    images[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for ei in frontier:
            for row, t in zip(left_rows, targets):
                e2 = row[ei]
                img = table.mul(t, images[ei])
                if images[e2] is None:
                    images[e2] = img
                    nxt.append(e2)
                elif images[e2] != img:
                    return None
        frontier = nxt
    # full verification: f(s*e) == f(s)*f(e) for every source s and element e
    for row, t in zip(left_rows, targets):
        for ei in range(n):
            if images[row[ei]] != table.mul(t, images[ei]):
                return None
    if len(set(images)) != n:
        return None
    return ElementAutomorphism(tuple(images))


def conjugacy_classes(table):
    """Conjugacy classes as sorted tuples of element indices, ordered by
    smallest member (so the identity class comes first)."""
    if table._classes is not None:
        return table._classes
    n = table.order
    assigned = [False] * n
    classes = []
    gen_data = [
        (perm.inverse(g), g) for g in table.gen_perms
    ]
    for start in range(n):
        if assigned[start]:
            continue
        members = [start]
        assigned[start] = True
        queue = [start]
        while queue:
            c = queue.pop()
            ce = table.elements[c]
            for g_inv, g in gen_data:
                conj = table.index[perm.compose(perm.compose(g_inv, ce), g)]
                if not assigned[conj]:
                    assigned[conj] = True
                    members.append(conj)
                    queue.append(conj)
        classes.append(tuple(sorted(members)))
    table._classes = classes
    return classes


def count_involutions(table):
    """Number of elements of order exactly 2."""
    return sum(1 for i in range(table.order) if table.element_order(i) == 2)


def cyclic_membership(table, x, g):
    """Whether element ``g`` lies in the cyclic subgroup generated by ``x``.

    ``x`` and ``g`` may be element indices or permutations.
    """
    xi = x if isinstance(x, int) else table.idx(x)
    gi = g if isinstance(g, int) else table.idx(g)
    powers = {0}
    cur = xi
    while cur != 0:
        powers.add(cur)
        cur = table.mul(cur, xi)
    return gi in powers


def _cyclic_quotient_kernel(table, modulus):
    """Kernel of some surjective homomorphism onto Z/modulus, or ``None``.

    Candidate maps are generator-image assignments; each candidate is filled
    in along the enumeration's parent links and then verified on every
    (generator, element) product, so accepted maps are genuine homomorphisms.
    """
    import itertools

    n = table.order
    g_count = len(table.gen_perms)
    for assignment in itertools.product(range(modulus), repeat=g_count):
        if not any(assignment):
            continue
        val = [0] * n
        ok = True
        for i in range(1, n):
            j, gp = table._parent[i]
            val[i] = (assignment[gp] + val[j]) % modulus
        for gp in range(g_count):
            row = table.left_mul[gp]
            a = assignment[gp]
            if any(val[row[i]] != (a + val[i]) % modulus for i in range(n)):
                ok = False
                break
        if ok and len(set(val)) == modulus:
            return tuple(sorted(i for i in range(n) if val[i] == 0))
    return None


def has_subgroup_of_index_lt4(table):
    """Whether the group has a proper subgroup of index 2 or 3.

    Such a subgroup exists exactly when some normal subgroup has quotient
    C2, C3, or S3 (the kernel of the action on < 4 cosets).  An S3 quotient
    forces an index-2 normal subgroup as well (pull back A3), so it is
    enough to look for surjective homomorphisms onto C2 and C3; the search
    runs over generator-image assignments.  Returns ``(flag, witness)`` with
    the witness the kernel as a sorted tuple of element indices (or
    ``None``).
    """
    for modulus in (2, 3):
        if table.order % modulus:
            continue
        kernel = _cyclic_quotient_kernel(table, modulus)
        if kernel is not None:
            return True, kernel
    return False, None
