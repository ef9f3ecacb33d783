"""Burnside counts, direct orbit cross-checks, slot-assignment counts."""

import pytest

from pentile import build as b
from pentile import orbits as o
from pentile import tiling as tm
from pentile import transforms as tr
from pentile.tiling import ORIENTED, UNORIENTED


SIGN_COUNTS = {"cube": 10, "octahedron": 23,
               "dodecahedron": 96, "icosahedron": 17824}


class TestBurnside:
    @pytest.mark.parametrize("solid,count", sorted(SIGN_COUNTS.items()))
    def test_face_sign_counts(self, solid, count):
        assert o.burnside_face_signs(solid) == count

    @pytest.mark.parametrize("solid", sorted(SIGN_COUNTS))
    def test_direct_enumeration_agrees(self, solid):
        assert o.direct_orbit_count(solid) == SIGN_COUNTS[solid]

    def test_trivial_predicate_all_plus(self):
        assert o.direct_orbit_count(
            "cube", predicate=lambda signs: all(signs)) == 1

    def test_rotation_group_is_a_group(self):
        perms = o.face_permutations(b.platonic("cube"), ORIENTED)
        assert len(perms) == 24
        table = {p for p in perms}
        for p in perms:
            for q in perms:
                assert tuple(p[i] for i in q) in table


class TestAutomorphisms:
    def test_identity_present(self, pp6):
        group = o.automorphisms(pp6, ORIENTED)
        n = len(pp6.twin)
        assert tuple(range(n)) in {tuple(g) for g in group}
        assert len(group) == 24

    def test_unoriented_vs_oriented_on_achiral_map(self):
        c = b.platonic("cube")
        assert len(o.automorphisms(c, UNORIENTED)) == \
            2 * len(o.automorphisms(c, ORIENTED))


class TestBetaAssignments:
    def test_skeleton_count(self, pp6):
        t = tr.reduce_tiling(pp6, tr.get_map("3B2"))
        pairs = o.beta_slot_pairs(t)
        assert len(pairs) == 24
        orbit_count, raw = o.count_beta_assignments(t, pairs, ORIENTED)
        assert raw == 4 ** 8
        assert orbit_count == 2836

    def test_same_under_the_unoriented_group(self, pp6):
        t = tr.reduce_tiling(pp6, tr.get_map("3B2"))
        pairs = o.beta_slot_pairs(t)
        assert o.count_beta_assignments(t, pairs, UNORIENTED)[0] == 2836

    def test_raw_count_invariant_under_relabeling(self, pp6):
        import random
        t = tr.reduce_tiling(pp6, tr.get_map("3B2"))
        raw0 = o.count_beta_assignments(t, o.beta_slot_pairs(t),
                                        ORIENTED)[1]
        t2 = tm.shuffle_ids(t, random.Random(11))
        raw2 = o.count_beta_assignments(t2, o.beta_slot_pairs(t2),
                                        ORIENTED)[1]
        assert raw0 == raw2

    def test_slot_pair_error(self, pp6):
        with pytest.raises(ValueError, match="slot pair"):
            o.beta_slot_pairs(pp6)


class TestExchangeSlotPairs:
    def test_gray_pair_per_face(self, pp6):
        pairs = o.exchange_slot_pairs(pp6, 3, 4)
        assert len(pairs) == 24
        for a, bb in pairs:
            assert pp6.corner[a] == 3 and pp6.corner[bb] == 4

    def test_missing_label_is_an_error(self, pp6):
        t = tr.reduce_tiling(pp6, tr.get_map("2D"))
        with pytest.raises(ValueError):
            o.exchange_slot_pairs(t, 3, 4)
