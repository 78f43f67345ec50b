"""Certificates: hypotheses, connection-set stabilizers, constructions."""

import math

import pytest

from cayleygrr import grrcert, perm

X5 = "(1,2,3,4,5)"
X7 = "(1,2,3,4,5,6,7)"
Y22 = "(1,2)(3,4)"


def pc(text, degree):
    return perm.parse_cycles(text, degree)


class TestValencyBounds:
    def test_values(self):
        assert grrcert.min_prime_for_valency(5) == 7
        assert grrcert.min_prime_for_valency(6) == 7
        assert grrcert.min_prime_for_valency(7) == 10
        assert grrcert.min_prime_for_valency(8) == 10

    def test_matches_window_midpoint_identity(self):
        # with m the odd window width 2*floor((k-1)/2)+1, the bound equals
        # (3m-1)/2 for every valency
        for k in range(5, 41):
            m = 2 * ((k - 1) // 2) + 1
            assert grrcert.min_prime_for_valency(k) == (3 * m - 1) // 2

    def test_small_valency_rejected(self):
        with pytest.raises(ValueError):
            grrcert.min_prime_for_valency(4)


class TestCyclicStabilizerCount:
    def test_frozen_values(self):
        assert grrcert.cyclic_connection_stabilizer_order(5, 7) == 2
        assert grrcert.cyclic_connection_stabilizer_order(7, 10) == 2
        # below the (3m-1)/2 threshold extra multipliers can appear
        assert grrcert.cyclic_connection_stabilizer_order(7, 8) == 4

    def test_rejects_even_or_small_m(self):
        with pytest.raises(ValueError):
            grrcert.cyclic_connection_stabilizer_order(4, 9)
        with pytest.raises(ValueError):
            grrcert.cyclic_connection_stabilizer_order(1, 9)

    def test_rejects_l_not_exceeding_m(self):
        with pytest.raises(ValueError):
            grrcert.cyclic_connection_stabilizer_order(5, 5)


class TestPrimeWindow:
    def test_frozen_windows(self):
        assert grrcert.prime_window(14) == [11]
        assert grrcert.prime_window(17) == [11, 13]
        assert grrcert.prime_window(30) == [19, 23]

    def test_empty_below_fourteen(self):
        assert grrcert.prime_window(13) == []
        assert grrcert.prime_window(6) == []

    def test_window_bounds_hold(self):
        for n in range(14, 200):
            for p in grrcert.prime_window(n):
                assert 2 * p > n + 4
                assert p <= n - 3


class TestConstruction:
    def test_frozen_even_instance(self):
        c = grrcert.construct_an(14)
        assert (c.n, c.p, c.parity_branch) == (14, 11, "even")
        assert perm.format_cycles(c.x) == "(1,2,3,4,5,6,7,8,9,10,11)"
        assert perm.format_cycles(c.y) == "(2,13)(3,14)(9,10)(11,12)"

    def test_frozen_odd_instance(self):
        c = grrcert.construct_an(15, 11)
        assert c.parity_branch == "odd"
        assert perm.format_cycles(c.y) == "(2,13)(3,14)(4,15)(11,12)"

    def test_pair_generates_alternating_group(self):
        c = grrcert.construct_an(14)
        chain = perm.build_chain([c.x, c.y], degree=14,
                                 known_order=math.factorial(14) // 2)
        assert chain.order == math.factorial(14) // 2

    def test_x_is_p_cycle_and_y_even_involution(self):
        for n in (14, 15, 16, 17):
            c = grrcert.construct_an(n)
            assert perm.order_of(c.x) == c.p
            assert perm.order_of(c.y) == 2
            assert perm.sign(c.y) == 1

    def test_default_p_is_window_max(self):
        assert grrcert.construct_an(17).p == 13

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            grrcert.construct_an(13)

    def test_rejects_prime_outside_window(self):
        with pytest.raises(ValueError):
            grrcert.construct_an(17, 7)

    def test_cached_instances_are_shared(self):
        assert grrcert.construct_an(14) is grrcert.construct_an(14)


class TestFixedPointSets:
    def test_frozen_even(self):
        fix_y, fix_conj = grrcert.fixed_point_sets(grrcert.construct_an(14))
        assert sorted(fix_y) == [1, 4, 5, 6, 7, 8]
        assert sorted(fix_conj) == [2, 5, 6, 7, 8, 9]

    def test_frozen_odd(self):
        fix_y, fix_conj = grrcert.fixed_point_sets(
            grrcert.construct_an(15, 11))
        assert sorted(fix_y) == [1, 5, 6, 7, 8, 9, 10]
        assert sorted(fix_conj) == [2, 6, 7, 8, 9, 10, 11]

    def test_conjugate_fixes_are_x_image_of_y_fixes(self):
        for n in (14, 15, 18, 21):
            c = grrcert.construct_an(n)
            fix_y, fix_conj = grrcert.fixed_point_sets(c)
            image = {c.x[i - 1] + 1 for i in fix_y}
            assert image == set(fix_conj)

    def test_sizes_match_parity(self):
        for n in range(14, 26):
            c = grrcert.construct_an(n)
            fix_y, fix_conj = grrcert.fixed_point_sets(c)
            expected = 2 * c.p - n if n % 2 else 2 * c.p - n - 2
            assert len(fix_y) == len(fix_conj) == expected


class TestConnectionSetStabilizer:
    def test_a7_both_valencies(self, a7_table):
        x, y = pc(X7, 7), pc(Y22, 7)
        for k in (5, 6):
            stab = grrcert.connection_set_stabilizer(a7_table, x, y, k)
            assert len(stab) == 2
            witness = next(a for a in stab if not a.is_identity())
            assert witness(a7_table.idx(x)) == a7_table.idx(perm.inverse(x))

    def test_m11_trivial(self, m11_table):
        stab = grrcert.connection_set_stabilizer(
            m11_table, m11_table.gen_perms[0], m11_table.gen_perms[1], 5)
        assert len(stab) == 1
        assert stab[0].is_identity()

    def test_small_prime_rejected(self, a5_table):
        with pytest.raises(ValueError):
            grrcert.connection_set_stabilizer(
                a5_table, pc(X5, 5), pc(Y22, 5), 5)

    def test_members_preserved(self, a7_table):
        from cayleygrr import cayley

        x, y = pc(X7, 7), pc(Y22, 7)
        conn = cayley.standard_connection_set(a7_table, x, y, 6)
        members = set(conn.members)
        for alpha in grrcert.connection_set_stabilizer(a7_table, x, y, 6):
            assert {alpha(s) for s in members} == members


class TestInvertingWitness:
    def test_a5_has_one(self, a5_table):
        alpha = grrcert.inverting_involution_witness(
            a5_table, pc(X5, 5), pc(Y22, 5))
        assert alpha is not None
        # the witness is conjugation by (1,4)(2,3)
        c = pc("(1,4)(2,3)", 5)
        for i in range(a5_table.order):
            img = perm.compose(perm.compose(c, a5_table.elements[i]), c)
            assert alpha(i) == a5_table.idx(img)

    def test_m11_has_none(self, m11_table):
        assert grrcert.inverting_involution_witness(
            m11_table, m11_table.gen_perms[0], m11_table.gen_perms[1]) is None

    def test_non_generating_pair_raises(self, a5_table):
        x = pc(X5, 5)
        with pytest.raises(ValueError):
            grrcert.inverting_involution_witness(
                a5_table, x, perm.power(x, 2))


class TestAlternatingStabilizer:
    def test_construction_instances_trivial(self):
        for k in (5, 6, 7, 8):
            stab = grrcert.alternating_connection_stabilizer(14, k)
            assert len(stab) == 1
            assert perm.is_identity(stab[0])

    def test_agrees_with_table_computation_on_a7(self, a7_table):
        # Every automorphism of the alternating group here is conjugation
        # by a symmetric-group element, so the conjugation search and the
        # table search must find stabilizers of the same order.
        x, y = pc(X7, 7), pc(Y22, 7)
        for k in (5, 6):
            table_stab = grrcert.connection_set_stabilizer(a7_table, x, y, k)
            conj_stab = grrcert.alternating_connection_stabilizer(
                7, k, p=7, y=y)
            assert len(table_stab) == len(conj_stab)

    def test_frozen_nontrivial_instance(self):
        y = pc("(1,6)(2,5)(3,4)(8,9)", 9)
        stab = grrcert.alternating_connection_stabilizer(9, 5, p=7, y=y)
        witnesses = {perm.format_cycles(t) for t in stab}
        assert witnesses == {"()", "(8,9)", "(1,6)(2,5)(3,4)",
                             "(1,6)(2,5)(3,4)(8,9)"}

    def test_witnesses_preserve_connection_set(self):
        y = pc("(1,6)(2,5)(3,4)(8,9)", 9)
        x = pc(X7, 9)
        conn = {perm.power(x, e) for e in (1, 2, -1, -2)} | {y}
        for t in grrcert.alternating_connection_stabilizer(9, 5, p=7, y=y):
            ti = perm.inverse(t)
            conj = {perm.compose(perm.compose(ti, s), t) for s in conn}
            assert conj == conn

    def test_n6_rejected(self):
        with pytest.raises(ValueError):
            grrcert.alternating_connection_stabilizer(6, 5, p=5)

    def test_small_p_rejected(self):
        with pytest.raises(ValueError):
            grrcert.alternating_connection_stabilizer(9, 7, p=5)


class TestCertify:
    def test_a7_not_grr(self, a7_table):
        x, y = pc(X7, 7), pc(Y22, 7)
        for k in (5, 6):
            cert = grrcert.certify_grr(a7_table, x, y, k)
            assert all(cert["checks"].values())
            assert cert["verdict"] == "not_GRR_autgs_nontrivial"
            assert cert["aut_gs_order"] == 2
            assert cert["witness"]["x_image"] == "(1,7,6,5,4,3,2)"

    def test_m11_grr(self, m11_table):
        cert = grrcert.certify_grr(
            m11_table, m11_table.gen_perms[0], m11_table.gen_perms[1], 5)
        assert cert["verdict"] == "GRR_certified"
        assert cert["aut_gs_order"] == 1
        assert cert["witness"] is None

    def test_a5_fails_prime_bound_only(self, a5_table):
        cert = grrcert.certify_grr(a5_table, pc(X5, 5), pc(Y22, 5), 5)
        assert cert["verdict"] == "hypotheses_failed"
        failing = {name for name, ok in cert["checks"].items() if not ok}
        assert failing == {"p_large_enough"}

    def test_f42_fails_generation_and_small_index(self, f42_table):
        cert = grrcert.certify_grr(
            f42_table, pc(X7, 7), pc("(2,7)(3,6)(4,5)", 7), 5)
        failing = {name for name, ok in cert["checks"].items() if not ok}
        # the involution inverts x, so the pair only generates a dihedral
        # subgroup and yxy lands inside <x>
        assert failing == {"two_p_generated", "yxy_outside_cyclic",
                           "no_small_index_subgroup"}

    def test_check_names_stable(self, a5_table):
        cert = grrcert.certify_grr(a5_table, pc(X5, 5), pc(Y22, 5), 5)
        assert tuple(cert["checks"]) == grrcert.CHECK_NAMES


class TestCertifyAlternating:
    def test_n14_all_valencies_grr(self):
        for k in (5, 6, 7, 8):
            cert = grrcert.certify_alternating(14, k)
            assert cert["verdict"] == "GRR_certified"
            assert cert["group_order"] == math.factorial(14) // 2

    def test_large_valency_fails_prime_bound(self):
        cert = grrcert.certify_alternating(14, 9)
        assert cert["verdict"] == "hypotheses_failed"
        assert not cert["checks"]["p_large_enough"]

    def test_matches_table_certificate_on_a7(self, a7_table):
        # A_7 is small enough for both code paths; their verdicts and
        # stabilizer orders must agree on the construction pair
        c = grrcert.construct_an(15, 11)  # just to keep the cache warm
        table_cert = grrcert.certify_grr(
            a7_table, pc(X7, 7), pc(Y22, 7), 5)
        assert table_cert["aut_gs_order"] == len(
            grrcert.alternating_connection_stabilizer(7, 5, p=7, y=pc(Y22, 7)))


class TestVerifyExhaustive:
    def test_a7_k5(self, a7_table):
        v = grrcert.verify_grr_exhaustive(a7_table, pc(X7, 7), pc(Y22, 7), 5)
        assert v["aut_order"] == 5040
        assert v["group_order"] == 2520
        assert not v["is_grr"]
        assert v["vertex_stabilizer_order"] == 2

    def test_a7_k6(self, a7_table):
        v = grrcert.verify_grr_exhaustive(a7_table, pc(X7, 7), pc(Y22, 7), 6)
        assert v["aut_order"] == 5040
        assert not v["is_grr"]

    def test_m11_k5(self, m11_table):
        v = grrcert.verify_grr_exhaustive(
            m11_table, m11_table.gen_perms[0], m11_table.gen_perms[1], 5)
        assert v["aut_order"] == 7920
        assert v["is_grr"]
        assert v["vertex_stabilizer_order"] == 1

    def test_a5_k5(self, a5_table):
        v = grrcert.verify_grr_exhaustive(a5_table, pc(X5, 5), pc(Y22, 5), 5)
        assert v["aut_order"] == 120
        assert v["vertex_stabilizer_order"] == 2
