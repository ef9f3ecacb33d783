"""Planar embedding and export formats."""

import xml.etree.ElementTree as ET

import numpy as np
import pytest

from pentile import build as b
from pentile import draw


class TestEmbed:
    def test_positions_are_finite_and_distinct(self, pp6):
        pos = draw.embed(pp6)
        assert pos.shape == (pp6.vertex_count, 2)
        assert np.isfinite(pos).all()
        dists = {tuple(np.round(p, 9)) for p in pos}
        assert len(dists) == pp6.vertex_count

    def test_interior_points_inside_outer_polygon(self, pp6):
        pos = draw.embed(pp6)
        # barycentric embedding keeps everything within the pinned circle
        assert (np.hypot(pos[:, 0], pos[:, 1]) <= 1 + 1e-9).all()

    def test_straight_line_drawing_has_no_crossings(self):
        t = b.platonic("cube")
        pos = draw.embed(t)
        segs = []
        for h in range(t.half_edge_count):
            if t.twin[h] < h:
                continue
            segs.append((pos[t.vertex_of[h]], pos[t.vertex_of[t.nxt[h]]]))

        def crosses(s1, s2):
            (a, bb), (c, d) = s1, s2
            def orient(p, q, r):
                u, v = q - p, r - p
                return np.sign(u[0] * v[1] - u[1] * v[0])
            if any(np.allclose(p, q) for p in (a, bb) for q in (c, d)):
                return False
            return (orient(a, bb, c) != orient(a, bb, d)
                    and orient(c, d, a) != orient(c, d, bb))

        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                assert not crosses(segs[i], segs[j])


class TestSvg:
    def test_valid_xml_with_counts(self, pp6):
        root = ET.fromstring(draw.svg_text(pp6))
        assert root.tag.endswith("svg")
        assert root.get("version") == "1.1"
        ns = root.tag[:-3]
        assert len(root.findall(ns + "line")) == pp6.edge_count
        assert len(root.findall(ns + "circle")) == pp6.vertex_count
        assert len(root.findall(ns + "text")) == pp6.half_edge_count

    def test_save(self, tmp_path, pp6):
        p = tmp_path / "t.svg"
        draw.save_svg(p, pp6)
        assert p.read_text().startswith("<?xml")


class TestDot:
    def test_graph_text(self, pp6):
        text = draw.dot_text(pp6)
        assert text.startswith("graph")
        assert text.count(" -- ") == pp6.edge_count
        assert text.count("label=") == pp6.vertex_count

    def test_save(self, tmp_path, pp6):
        p = tmp_path / "t.dot"
        draw.save_dot(p, pp6)
        assert p.read_text().rstrip().endswith("}")


class TestPng:
    def test_render(self, tmp_path, pp6):
        p = tmp_path / "t.png"
        draw.save_png(p, pp6, title="x")
        assert p.stat().st_size > 1000
