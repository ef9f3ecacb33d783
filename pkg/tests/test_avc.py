"""AVC model: grammar, consistency, pentagon arrangements, deduction."""

import pytest

from conftest import AVC, avc
from pentile.avc import (Avc, PentagonArrangement, VertexType, avc_emt,
                         enumerate_arrangements, match_vertex,
                         neighbors_of_label, parse_avc)


class TestGrammar:
    def test_render_parse_roundtrip(self):
        for name, text in AVC.items():
            a = parse_avc(text)
            again = parse_avc(a.render())
            assert again.pentagon == a.pentagon
            assert again.f == a.f
            assert sorted((vt.vec, c) for vt, c in again.vertices) == \
                sorted((vt.vec, c) for vt, c in a.vertices)

    def test_missing_colon(self):
        with pytest.raises(ValueError, match="missing ':'"):
            parse_avc("24 abcde 24 a b c")

    def test_bad_term_position(self):
        with pytest.raises(ValueError, match="bad vertex term"):
            parse_avc("24 abcde : 24 a b c, 8 d?3, 6 e^4")

    def test_label_balance_rejected(self):
        with pytest.raises(ValueError, match="balance"):
            parse_avc("24 abcde : 24 a b c, 8 d^3, 6 d^4")

    def test_euler_vertex_count_rejected(self):
        with pytest.raises(ValueError, match="vertex count"):
            parse_avc("24 abcde : 23 a b c, 1 a b c, 8 d^3, 5 e^4")


class TestArrangements:
    @pytest.mark.parametrize("labels,count", [
        ((0, 1, 2, 3, 4), 12),
        ((0, 0, 1, 2, 3), 6),
        ((0, 0, 0, 1, 2), 2),
        ((0, 0, 1, 1, 2), 4),
        ((0, 0, 0, 0, 1), 1),
    ])
    def test_counts(self, labels, count):
        assert len(enumerate_arrangements(labels)) == count

    def test_needs_five(self):
        with pytest.raises(ValueError, match="5 labels"):
            enumerate_arrangements((0, 1, 2))

    def test_cyclic_dihedral_identity(self):
        a = PentagonArrangement((0, 3, 1, 2, 4))
        assert a == PentagonArrangement((3, 1, 2, 4, 0))      # rotation
        assert a == PentagonArrangement((4, 2, 1, 3, 0))      # reflection

    def test_nonadjacent_de_neighbors(self):
        # arrangement α,δ,β,γ,ε: δ between α and β, ε between γ and α
        a = PentagonArrangement((0, 3, 1, 2, 4))
        assert neighbors_of_label(a, 3) == [0, 1]
        assert neighbors_of_label(a, 4) == [0, 2]

    def test_adjacent_de_neighbors(self):
        a = PentagonArrangement((0, 1, 2, 3, 4))
        assert 4 in neighbors_of_label(a, 3)

    def test_variants_cover_both_orientations(self):
        a = PentagonArrangement((0, 3, 1, 2, 4))
        vs = a.variants()
        assert len(vs) == 10
        assert tuple(reversed(vs[0])) in [v[i:] + v[:i]
                                          for v in vs for i in range(5)]


class TestMatchVertex:
    def test_partial_beta_forces_abc(self):
        out = match_vertex([1], avc("5A24"))
        assert [vt.vec[:5] for vt in out] == [(1, 1, 1, 0, 0)]

    def test_partial_alpha_has_options(self):
        out = match_vertex([0], avc("5A24"))
        assert len(out) == 1
        out = match_vertex([3], avc("5A24"))
        assert [vt.vec[:5] for vt in out] == [(0, 0, 0, 3, 0)]


class TestEmtFamily:
    def test_f12_has_degenerate_types(self):
        a = avc_emt(12, 2)
        assert a.f == 12
        assert sum(c for _, c in a.vertices) == 2 + 3 * 12 // 2

    def test_f16_shape(self):
        a = avc_emt(16, 2)
        assert a.f == 16

    def test_rejects_bad_f(self):
        with pytest.raises(ValueError):
            avc_emt(14, 2)

    def test_modification_variant_needs_f_4_mod_8(self):
        avc_emt(12, 0)
        with pytest.raises(ValueError):
            avc_emt(16, 0)


class TestVertexType:
    def test_degree_and_order(self):
        vt = VertexType([0, 0, 1])
        assert vt.degree == 3
        assert vt.vec[:2] == (2, 1)

    def test_avc_direct_construction_checks(self):
        with pytest.raises(ValueError):
            Avc(4, [0, 0, 0, 0], [])
