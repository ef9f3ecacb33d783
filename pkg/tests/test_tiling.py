"""Half-edge map core: validation, canonical codes, isomorphism."""

import random

import pytest

from pentile import build as b
from pentile import tiling as tm
from pentile.tiling import ORIENTED, UNORIENTED, Tiling


def euler(t):
    return t.vertex_count - t.edge_count + t.face_count


class TestShape:
    def test_cube_shape(self):
        c = b.platonic("cube")
        assert c.face_count == 6
        assert c.vertex_count == 8
        assert c.edge_count == 12
        assert euler(c) == 2
        assert all(len(f) == 4 for f in c.faces())
        assert c.vertex_degree() == [3] * 8

    @pytest.mark.parametrize("name,f,v", [
        ("tetrahedron", 4, 4), ("cube", 6, 8), ("octahedron", 8, 6),
        ("dodecahedron", 12, 20), ("icosahedron", 20, 12)])
    def test_platonic_euler(self, name, f, v):
        t = b.platonic(name)
        assert t.face_count == f and t.vertex_count == v
        assert euler(t) == 2
        assert tm.validate(t) == []

    def test_subdivision_shape(self, pp6):
        assert pp6.face_count == 24
        assert euler(pp6) == 2
        assert all(len(f) == 5 for f in pp6.faces())
        assert tm.validate(pp6, 5) == []

    def test_validate_rejects_broken_twin(self, pp6):
        twin = list(pp6.twin)
        twin[0] = 0
        assert tm.validate(Tiling(twin, pp6.nxt, pp6.corner)) != []


class TestCanonical:
    def test_stable_under_100_random_relabelings(self, pp6):
        rng = random.Random(7)
        code = tm.canonical_code(pp6, ORIENTED)
        ucode = tm.canonical_code(pp6, UNORIENTED)
        for _ in range(100):
            t2 = tm.shuffle_ids(pp6, rng)
            assert tm.canonical_code(t2, ORIENTED) == code
            assert tm.canonical_code(t2, UNORIENTED) == ucode

    def test_canonical_form_fixpoint(self, pp6):
        cf = tm.canonical_form(pp6, ORIENTED)
        assert tm.canonical_code(cf, ORIENTED) == \
            tm.canonical_code(pp6, ORIENTED)
        assert cf == tm.canonical_form(cf, ORIENTED)

    def test_isomorphic_after_shuffle(self, pp6):
        t2 = tm.shuffle_ids(pp6, random.Random(3))
        assert tm.isomorphic(pp6, t2, ORIENTED)
        assert tm.isomorphic(pp6, t2, UNORIENTED)


class TestMirror:
    def test_involution(self, pp6):
        back = tm.mirror(tm.mirror(pp6))
        assert tm.isomorphic(back, pp6, ORIENTED)

    def test_subdivision_is_chiral(self, pp6):
        m = tm.mirror(pp6)
        assert not tm.isomorphic(pp6, m, ORIENTED)
        assert tm.isomorphic(pp6, m, UNORIENTED)

    def test_cube_is_achiral(self):
        c = b.platonic("cube")
        assert tm.isomorphic(c, tm.mirror(c), ORIENTED)

    def test_chirality_parameter_builds_the_mirror(self):
        left = b.pentagonal_subdivision(b.platonic("cube"), "left")
        right = b.pentagonal_subdivision(b.platonic("cube"), "right")
        assert tm.isomorphic(left, tm.mirror(right), ORIENTED)
        assert not tm.isomorphic(left, right, ORIENTED)


class TestAutomorphisms:
    def test_subdivision_group_orders(self, pp6):
        # chiral skeleton: no orientation-reversing symmetry, so both
        # policies give the rotation group of the cube
        assert tm.automorphism_group(pp6, ORIENTED)[0] == 24
        assert tm.automorphism_group(pp6, UNORIENTED)[0] == 24

    def test_cube_group_orders(self):
        c = b.platonic("cube")
        assert tm.automorphism_group(c, ORIENTED)[0] == 24
        assert tm.automorphism_group(c, UNORIENTED)[0] == 48


class TestDual:
    def test_dual_swaps_faces_and_vertices(self):
        c = b.platonic("cube")
        d = tm.dual(c)
        assert d.face_count == 8 and d.vertex_count == 6
        assert tm.isomorphic(d, b.platonic("octahedron"), UNORIENTED)
        assert tm.isomorphic(tm.dual(d), c, UNORIENTED)


class TestLetters:
    def test_letter_greek_roundtrip(self):
        for l in range(8):
            assert tm.label_from_letter(tm.letter(l)) == l
        assert tm.letter(0) == "a" and tm.greek(0) == "α"
        assert tm.greek(4) == "ε"
