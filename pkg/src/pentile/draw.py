"""Planar drawings of tilings for human inspection.

A tiling is embedded in the plane by pinning one face as the outer
boundary and placing every other vertex at the barycenter of its
neighbors (a Tutte-style embedding).  The drawing can be written as
SVG 1.1 text, as Graphviz dot text, or rendered to a PNG through
matplotlib.  No geometric meaning is attached to the coordinates.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .tiling import Tiling, greek, letter


def _face_vertex_cycle(t: Tiling, cyc):
    return [t.vertex_of[h] for h in cyc]


def pick_outer_face(t: Tiling) -> int:
    """A face whose vertex cycle has no repeats, preferring high total
    vertex degree so the drawing opens up."""
    deg = t.vertex_degree()
    best, best_key = 0, None
    for i, cyc in enumerate(t.faces()):
        vs = _face_vertex_cycle(t, cyc)
        if len(set(vs)) != len(vs):
            continue
        key = sum(deg[v] for v in vs)
        if best_key is None or key > best_key:
            best, best_key = i, key
    return best


def embed(t: Tiling, outer_face: int | None = None):
    """Vertex -> (x, y) array for a straight-line drawing with the
    chosen face on the outside."""
    faces = t.faces()
    if outer_face is None:
        outer_face = pick_outer_face(t)
    outer = _face_vertex_cycle(t, faces[outer_face])
    if len(set(outer)) != len(outer):
        raise ValueError("outer face revisits a vertex")
    n = t.vertex_count
    pos = np.zeros((n, 2))
    fixed = np.zeros(n, dtype=bool)
    k = len(outer)
    for i, v in enumerate(outer):
        # clockwise pin so the ccw face cycle bounds the unbounded side
        ang = -2 * math.pi * i / k + math.pi / 2
        pos[v] = (math.cos(ang), math.sin(ang))
        fixed[v] = True
    neighbors = [set() for _ in range(n)]
    for h in range(t.half_edge_count):
        a, b = t.vertex_of[h], t.vertex_of[t.nxt[h]]
        neighbors[a].add(b)
        neighbors[b].add(a)
    free = [v for v in range(n) if not fixed[v]]
    if free:
        index = {v: i for i, v in enumerate(free)}
        a = np.zeros((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for v in free:
            i = index[v]
            a[i, i] = len(neighbors[v])
            for w in neighbors[v]:
                if fixed[w]:
                    rhs[i] += pos[w]
                else:
                    a[i, index[w]] -= 1
        pos[free] = np.linalg.solve(a, rhs)
    return pos


def _corner_spots(t: Tiling, pos, pull=0.3):
    """(x, y, label) for every corner, nudged toward its face center."""
    spots = []
    for cyc in t.faces():
        center = pos[[t.vertex_of[h] for h in cyc]].mean(axis=0)
        for h in cyc:
            p = pos[t.vertex_of[h]]
            q = p + pull * (center - p)
            spots.append((q[0], q[1], t.corner[h]))
    return spots


def svg_text(t: Tiling, outer_face: int | None = None, size: int = 480,
             labels: bool = True) -> str:
    """The tiling drawn as a standalone SVG 1.1 document."""
    pos = embed(t, outer_face)
    margin = 0.15
    scale = size / (2 * (1 + margin))

    def xy(p):
        return ((p[0] + 1 + margin) * scale, (1 + margin - p[1]) * scale)

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           'width="%d" height="%d" viewBox="0 0 %d %d">'
           % (size, size, size, size)]
    seen = set()
    for h in range(t.half_edge_count):
        g = t.twin[h]
        if (g, h) in seen:
            continue
        seen.add((h, g))
        x1, y1 = xy(pos[t.vertex_of[h]])
        x2, y2 = xy(pos[t.vertex_of[t.nxt[h]]])
        out.append('<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" '
                   'stroke="black" stroke-width="1"/>' % (x1, y1, x2, y2))
    for v in range(t.vertex_count):
        x, y = xy(pos[v])
        out.append('<circle cx="%.2f" cy="%.2f" r="2.5" fill="black"/>'
                   % (x, y))
    if labels:
        for px, py, lbl in _corner_spots(t, pos):
            x, y = xy((px, py))
            out.append('<text x="%.2f" y="%.2f" font-size="%d" '
                       'text-anchor="middle" dominant-baseline="middle" '
                       'fill="#c03030">%s</text>'
                       % (x, y, max(8, size // 48), escape(greek(lbl))))
    out.append('</svg>')
    return "\n".join(out) + "\n"


def dot_text(t: Tiling) -> str:
    """The tiling's vertex-edge graph as Graphviz dot text; each node is
    labeled with the sorted corner letters around the vertex."""
    out = ["graph tiling {", "  node [shape=circle fontsize=10];"]
    for v, word in enumerate(t.vertex_labels()):
        out.append('  v%d [label="%s"];'
                   % (v, "".join(letter(l) for l in word)))
    seen = set()
    for h in range(t.half_edge_count):
        g = t.twin[h]
        if (g, h) in seen:
            continue
        seen.add((h, g))
        out.append("  v%d -- v%d;" % (t.vertex_of[h], t.vertex_of[t.nxt[h]]))
    out.append("}")
    return "\n".join(out) + "\n"


def save_svg(path, t: Tiling, **kw) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(svg_text(t, **kw))


def save_dot(path, t: Tiling) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dot_text(t))


def save_png(path, t: Tiling, title: str = "", outer_face=None) -> None:
    """Render the embedding to a PNG through matplotlib."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pos = embed(t, outer_face)
    fig, ax = plt.subplots(figsize=(5, 5))
    seen = set()
    for h in range(t.half_edge_count):
        g = t.twin[h]
        if (g, h) in seen:
            continue
        seen.add((h, g))
        a = pos[t.vertex_of[h]]
        b = pos[t.vertex_of[t.nxt[h]]]
        ax.plot([a[0], b[0]], [a[1], b[1]], color="black", linewidth=0.8)
    ax.scatter(pos[:, 0], pos[:, 1], s=8, color="black", zorder=3)
    for px, py, lbl in _corner_spots(t, pos):
        ax.text(px, py, greek(lbl), fontsize=7, color="#c03030",
                ha="center", va="center")
    if title:
        ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
