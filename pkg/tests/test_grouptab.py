"""Group element tables, generator-map extension, subgroup probes."""

import pytest

from cayleygrr import grouptab, perm


def pc(text, degree):
    return perm.parse_cycles(text, degree)


class TestGroupTable:
    def test_s3_order_and_identity(self):
        t = grouptab.enumerate_group([pc("(1,2)", 3), pc("(1,2,3)", 3)])
        assert t.order == 6
        assert t.elements[0] == perm.identity(3)

    def test_mul_matches_composition(self, a5_table):
        t = a5_table
        for i in (1, 5, 17):
            for j in (2, 9, 33):
                expected = perm.compose(t.elements[i], t.elements[j])
                assert t.elements[t.mul(i, j)] == expected

    def test_inv(self, a5_table):
        t = a5_table
        for i in range(0, t.order, 7):
            assert t.mul(i, t.inv(i)) == 0

    def test_element_order(self, a5_table):
        orders = {a5_table.element_order(i) for i in range(a5_table.order)}
        assert orders == {1, 2, 3, 5}

    def test_deterministic_numbering(self):
        gens = [pc("(1,2,3)", 5), pc("(1,2,3,4,5)", 5)]
        t1 = grouptab.enumerate_group(gens)
        t2 = grouptab.enumerate_group(gens)
        assert t1.elements == t2.elements

    def test_cap(self):
        gens = [pc("(1,2)", 5), pc("(1,2,3,4,5)", 5)]
        with pytest.raises(grouptab.EnumerationCapExceeded):
            grouptab.enumerate_group(gens, cap=100)

    def test_no_generators(self):
        with pytest.raises(ValueError):
            grouptab.enumerate_group([])


class TestConjugacyAndCounts:
    def test_a5_class_sizes(self, a5_table):
        sizes = sorted(len(c) for c in grouptab.conjugacy_classes(a5_table))
        assert sizes == [1, 12, 12, 15, 20]

    def test_class_sizes_partition_group(self, f42_table):
        classes = grouptab.conjugacy_classes(f42_table)
        assert sum(len(c) for c in classes) == f42_table.order

    def test_count_involutions(self, a5_table, f42_table):
        assert grouptab.count_involutions(a5_table) == 15
        assert grouptab.count_involutions(f42_table) == 7


class TestCyclicMembership:
    def test_powers_of_x(self, a5_table):
        x = pc("(1,2,3,4,5)", 5)
        assert grouptab.cyclic_membership(a5_table, x, perm.power(x, 3))
        assert grouptab.cyclic_membership(a5_table, x, perm.identity(5))
        assert not grouptab.cyclic_membership(a5_table, x, pc("(1,2)(3,4)", 5))

    def test_index_form(self, a5_table):
        xi = a5_table.idx(pc("(1,2,3,4,5)", 5))
        assert grouptab.cyclic_membership(a5_table, xi, a5_table.mul(xi, xi))


class TestExtendGeneratorMap:
    def test_inner_automorphism(self, a5_table):
        t = a5_table
        c = pc("(1,2,3)", 5)
        sources = [t.idx(g) for g in t.gen_perms]
        targets = [t.idx(perm.compose(perm.compose(perm.inverse(c), g), c))
                   for g in t.gen_perms]
        alpha = grouptab.extend_generator_map(t, sources, targets)
        assert alpha is not None
        for i in range(t.order):
            g = t.elements[i]
            img = perm.compose(perm.compose(perm.inverse(c), g), c)
            assert alpha(i) == t.idx(img)

    def test_identity_map(self, a5_table):
        t = a5_table
        sources = [t.idx(g) for g in t.gen_perms]
        alpha = grouptab.extend_generator_map(t, sources, sources)
        assert alpha is not None and alpha.is_identity()

    def test_impossible_map_returns_none(self, a5_table):
        t = a5_table
        sources = [t.idx(g) for g in t.gen_perms]
        # sending an order-3 generator to an order-5 element cannot extend
        order5 = next(i for i in range(t.order) if t.element_order(i) == 5)
        assert grouptab.extend_generator_map(
            t, sources, [order5, sources[1]]) is None

    def test_non_generating_sources_raise(self, a5_table):
        t = a5_table
        x = t.idx(pc("(1,2,3,4,5)", 5))
        with pytest.raises(ValueError):
            grouptab.extend_generator_map(t, [x], [x])

    def test_after_composes_left_to_right(self, a5_table):
        t = a5_table
        c1 = pc("(1,2,3)", 5)
        c2 = pc("(1,2,3,4,5)", 5)
        sources = [t.idx(g) for g in t.gen_perms]

        def conj_map(c):
            targets = [
                t.idx(perm.compose(perm.compose(perm.inverse(c), g), c))
                for g in t.gen_perms]
            return grouptab.extend_generator_map(t, sources, targets)

        a1, a2, a12 = conj_map(c1), conj_map(c2), conj_map(perm.compose(c1, c2))
        combined = a1.after(a2)
        assert combined.images == a12.images


class TestSubgroupProbe:
    def test_a5_has_none(self, a5_table):
        small, members = grouptab.has_subgroup_of_index_lt4(a5_table)
        assert not small and members is None

    def test_s4_has_a4(self):
        t = grouptab.enumerate_group([pc("(1,2)", 4), pc("(1,2,3,4)", 4)])
        small, members = grouptab.has_subgroup_of_index_lt4(t)
        assert small
        assert len(members) == 12
        assert all(perm.sign(t.elements[i]) == 1 for i in members)

    def test_f42_has_index_two(self, f42_table):
        small, members = grouptab.has_subgroup_of_index_lt4(f42_table)
        assert small and len(members) == 21

    def test_cyclic_six(self):
        t = grouptab.enumerate_group([pc("(1,2,3,4,5,6)", 6)])
        small, members = grouptab.has_subgroup_of_index_lt4(t)
        assert small and len(members) in (2, 3)

    def test_m11_has_none(self, m11_table):
        small, members = grouptab.has_subgroup_of_index_lt4(m11_table)
        assert not small
