"""Deterministic builders: Platonic maps, pentagonal subdivisions,
earth maps and their rotation modifications, simple pentagonal
subdivisions of quadrilateral tilings, and the fixed gluing patches."""

from __future__ import annotations

from itertools import product

from . import tiling as tm
from .tiling import A, B, C, D, E, Tiling, dual, from_faces, from_face_vertices
from .avc import Avc, VertexType, avc_emt


# -- Platonic base maps ------------------------------------------------

def _fv(faces):
    return from_face_vertices([[(v, 0) for v in f] for f in faces])


def platonic(name: str) -> Tiling:
    """The combinatorial map of a Platonic solid (labels all zero)."""
    if name == "tetrahedron":
        return _fv([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
    if name == "cube":
        return _fv([(0, 3, 2, 1), (4, 5, 6, 7), (0, 1, 5, 4),
                    (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7)])
    if name == "octahedron":
        return _fv([(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
                    (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4)])
    if name == "icosahedron":
        up = lambda i: 1 + i % 5
        lo = lambda i: 6 + i % 5
        faces = []
        for i in range(5):
            faces.append((0, up(i), up(i + 1)))
            faces.append((up(i), lo(i), up(i + 1)))
            faces.append((lo(i), lo(i + 1), up(i + 1)))
            faces.append((11, lo(i + 1), lo(i)))
        return _fv(faces)
    if name == "dodecahedron":
        return dual(platonic("icosahedron"))
    raise ValueError("unknown solid %r" % name)


PLATONIC_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron",
                  "icosahedron")


# -- pentagonal subdivision --------------------------------------------

def pentagonal_subdivision(base: Tiling, chirality: str = "right") -> Tiling:
    """One pentagon per half-edge of the base map (2E tiles).

    Each base edge gains two interior vertices, each base face a center
    vertex joined by spokes.  The pentagon of half-edge h runs
    (center, a_h, tail(h), b_prev(h), a_prev(h)) with corner labels
    (epsilon, alpha, delta, beta, gamma); a_h is the subdivision point
    nearer the tail of h and b_h = a_twin(h) the one nearer the head.
    """
    if chirality == "left":
        return tm.mirror(pentagonal_subdivision(base, "right"))
    if chirality != "right":
        raise ValueError("chirality must be 'left' or 'right'")
    prev = base.prev()
    face_of = base.face_of()
    edge_id = [min(h, base.twin[h]) for h in range(len(base.twin))]

    def a(h):  # subdivision vertex of edge(h) nearer tail(h)
        return ("a", h)

    def b(h):  # nearer head(h); the same point as a(twin(h))
        return ("a", base.twin[h])

    faces = []
    for h in range(len(base.twin)):
        p = prev[h]
        f = face_of[h]
        faces.append([
            (("c", f), ("spoke", h), E),
            (a(h), ("seg", h), A),
            (("v", base.vertex_of[h]), ("seg", base.twin[p]), D),
            (b(p), ("mid", edge_id[p]), B),
            (a(p), ("spoke", p), C),
        ])
    return from_faces(faces)


# -- earth map tilings -------------------------------------------------

def earth_map(f: int) -> Tiling:
    """The earth map tiling: f/4 four-tile time zones between two poles."""
    if f % 4 or f < 8:
        raise ValueError("f must be a multiple of 4, at least 8")
    n = f // 4
    P = lambda i: ("P", i % n)
    Q = lambda i: ("Q", i % n)
    R = lambda i: ("R", i % n)
    T = lambda i: ("T", i % n)
    U = lambda i: ("U", i % n)
    V = lambda i: ("V", i % n)
    faces = []
    for i in range(n):
        faces.append([("N", D), (P(i - 1), A), (T(i - 1), E),
                      (Q(i), C), (P(i), B)])                      # north tile
        faces.append([(P(i), C), (Q(i), B), (R(i), D),
                      (U(i), A), (T(i), E)])                      # upper middle
        faces.append([(T(i), D), (U(i), B), (V(i), C),
                      (R(i + 1), E), (Q(i + 1), A)])              # lower middle
        faces.append([("S", D), (V(i), B), (U(i), C),
                      (R(i), E), (V(i - 1), A)])                  # south tile
    return from_face_vertices(faces)


def _earth_map_halves(f: int):
    """Tile indices of the two half earth maps inside earth_map(f)."""
    q = (f - 4) // 8
    first = set()
    for i in range(q + 1):
        first.add(4 * i)       # north tile of zone i
        first.add(4 * i + 1)   # upper middle of zone i
    for i in range(q):
        first.add(4 * i + 2)
        first.add(4 * i + 3)
    return first


def half_earth_map(f: int):
    """The half earth map: the tiling, the tile set of one half, and its
    boundary ring (half-edges of the half whose twin lies outside).

    Returns (tiling, tiles, ring, word) where word is the boundary
    corner-group sequence: per ring edge, the labels of the half's
    corners clustered at the edge's head vertex.
    """
    if f % 8 != 4:
        raise ValueError("f must be 4 mod 8")
    t = earth_map(f)
    tiles = _earth_map_halves(f)
    face_of = t.face_of()
    inside = [face_of[h] in tiles for h in range(len(t.twin))]
    boundary = [h for h in range(len(t.twin))
                if inside[h] and not inside[t.twin[h]]]
    # ring order: from a boundary half-edge, walk inside the half around
    # the head vertex to the next boundary half-edge
    succ = {}
    for h in boundary:
        g = t.nxt[h]
        while inside[t.twin[g]]:
            g = t.nxt[t.twin[g]]
        succ[h] = g
    ring = [boundary[0]]
    while True:
        g = succ[ring[-1]]
        if g == ring[0]:
            break
        ring.append(g)
    word = []
    for h in ring:
        # corners of the half clustered at head(h), scanned inside the gap
        labels = []
        g = t.nxt[h]
        labels.append(t.corner[g])
        while inside[t.twin[g]]:
            g = t.nxt[t.twin[g]]
            labels.append(t.corner[g])
        word.append(tuple(labels))
    return t, tiles, ring, word


def rotation_modification(f: int, turns: int) -> Tiling:
    """Re-glue the two halves of earth_map(f) with a 1/3-period offset."""
    if f % 8 != 4:
        raise ValueError("f must be 4 mod 8")
    if turns not in (1, 2):
        raise ValueError("turns must be 1 or 2")
    t, tiles, ring, _ = half_earth_map(f)
    L = len(ring)
    if L % 3:
        raise ValueError("boundary period %d not divisible by 3" % L)
    shift = turns * (L // 3)
    twin = list(t.twin)
    outer = [t.twin[h] for h in ring]
    for k, h in enumerate(ring):
        g = outer[(k + shift) % L]
        twin[h] = g
        twin[g] = h
    out = Tiling(twin, t.nxt, t.corner)
    problems = tm.validate(out, 5)
    if problems:
        raise AssertionError("rotation modification broke the map: %s"
                             % problems)
    return out


# -- simple pentagonal subdivision of quadrilateral tilings ------------

def _cut_assignments(quad: Tiling):
    """For each quad face pick opposite edge pair 0 or 1 so that every
    edge of the map is picked by exactly one of its two faces."""
    faces = quad.faces()
    edge_id = [min(h, quad.twin[h]) for h in range(len(quad.twin))]
    used = set()
    out = []

    def rec(i):
        if i == len(faces):
            if len(used) == len(quad.twin) // 2:
                out.append(tuple(choice))
            return
        cyc = faces[i]
        for pick in (0, 1):
            eids = [edge_id[cyc[pick]], edge_id[cyc[pick + 2]]]
            if eids[0] in used or eids[1] in used or eids[0] == eids[1]:
                continue
            used.update(eids)
            choice.append(pick)
            rec(i + 1)
            choice.pop()
            used.difference_update(eids)

    choice = []
    rec(0)
    return out


def simple_pentagonal_subdivisions(quad: Tiling):
    """All simple pentagonal subdivisions of a quadrilateral tiling with
    corner labels assigned by the delta/epsilon propagation rules:
    every new degree-3 vertex gets alpha corners, every original
    degree-3 vertex delta^3, every original degree-4 vertex delta
    epsilon^3, and each pentagon carries exactly one delta and one
    epsilon at its two original corners."""
    problems = tm.validate(quad, 4)
    if problems:
        raise ValueError("invalid quad map: %s" % problems)
    deg = quad.vertex_degree()
    results = []
    for assignment in _cut_assignments(quad):
        skeletons = _split_faces(quad, assignment)
        results.extend(_label_subdivision(quad, skeletons, deg))
    return results


def _split_faces(quad: Tiling, assignment):
    """Pentagon faces (vertex, edge_key, corner-slot) for one cut choice.

    Corner slots are either ("m", edge) for a midpoint corner or
    ("v", h) for the corner at the original vertex tail(h) in this
    pentagon; labels are filled in later.
    """
    edge_id = [min(h, quad.twin[h]) for h in range(len(quad.twin))]
    face_of = quad.face_of()
    out = []
    for pick, cyc in zip(assignment, quad.faces()):
        for s in (pick, pick + 2):
            h0, h1 = cyc[s], cyc[(s + 1) % 4]
            h2 = cyc[(s + 2) % 4]
            e0, e1, e2 = edge_id[h0], edge_id[h1], edge_id[h2]
            v0 = quad.vertex_of[h1]   # head of h0
            v1 = quad.vertex_of[h2]   # head of h1
            fid = ("cut", face_of[h0])
            out.append([
                (("m", e0), ("sub", e0, v0), ("m", e0)),
                (("o", v0), ("sub", e1, v0), ("v", h1)),
                (("m", e1), ("sub", e1, v1), ("m", e1)),
                (("o", v1), ("sub", e2, v1), ("v", h2)),
                (("m", e2), fid, ("m", e2)),
            ])
    return out


def _label_subdivision(quad: Tiling, skeletons, deg):
    """Enumerate consistent delta/epsilon labelings of the skeleton."""
    # one decision per original-vertex corner slot ("v", h)
    slots = sorted({face[si][2] for face in skeletons for si in (1, 3)})
    # pentagons pair their two original corners; exactly one is delta
    pairs = [(face[1][2], face[3][2]) for face in skeletons]
    at_vertex = {}
    for s in slots:
        at_vertex.setdefault(quad.vertex_of[s[1]], []).append(s)

    def propagate(label):
        """Extend by forced choices; False on contradiction."""
        changed = True
        while changed:
            changed = False
            for sa, sb in pairs:
                la, lb = label.get(sa), label.get(sb)
                if la is not None and lb is not None:
                    if la == lb:
                        return False
                elif la is not None:
                    label[sb] = E if la == D else D
                    changed = True
                elif lb is not None:
                    label[sa] = E if lb == D else D
                    changed = True
            for v, cs in at_vertex.items():
                want_d = deg[v] if deg[v] == 3 else 1
                ds = sum(1 for s in cs if label.get(s) == D)
                es = sum(1 for s in cs if label.get(s) == E)
                if ds > want_d or es > len(cs) - want_d:
                    return False
                fill = None
                if ds == want_d:
                    fill = E
                elif es == len(cs) - want_d:
                    fill = D
                if fill is not None:
                    for s in cs:
                        if s not in label:
                            label[s] = fill
                            changed = True
        return True

    results = []

    def rec(label):
        if not propagate(label):
            return
        free = [s for s in slots if s not in label]
        if not free:
            results.append(label)
            return
        for choice in (D, E):
            branch = dict(label)
            branch[free[0]] = choice
            rec(branch)

    seed = {}
    for v, cs in at_vertex.items():   # degree-3 vertices are all delta
        if deg[v] == 3:
            for s in cs:
                seed[s] = D
    rec(seed)
    out = []
    for res in results:
        faces = []
        for face in skeletons:
            faces.append([
                (v, ek, A if slot[0] == "m" else res[slot])
                for v, ek, slot in face
            ])
        out.append(from_faces(faces))
    return out


# -- gluing patches for the 36-tile alpha^4 epsilon search -------------

def _patch_faces(which: int):
    """Corner cycles of patch N1..N4 (vertices named by drawing coords)."""
    u = (0, 0)
    w = (-8, -5)
    v = (-8, 0)
    core = [
        [(u, E), ((0, 5), A), ((-4, 8), A), ((-8, 5), A), (v, A)],
        [(u, E), ((8, 0), A), ((8, 5), A), ((4, 8), A), ((0, 5), A)],
        [(u, E), ((0, -5), A), ((4, -8), A), ((8, -5), A), ((8, 0), A)],
    ]
    if which == 1:
        t4 = [(u, A), (v, E), (w, A), ((-4, -8), A), ((0, -5), A)]
        t5 = [(v, E), ((-16, 0), A), ((-16, -5), A), ((-12, -8), A), (w, A)]
        t6 = [(v, E), ((-8, 5), A), ((-12, 8), A), ((-16, 5), A), ((-16, 0), A)]
    else:
        t4 = [(u, A), (v, A), (w, E), ((-4, -8), A), ((0, -5), A)]
        if which == 2:
            t5 = [(w, E), ((-12, -9), A), ((-12, -13), A),
                  ((-4, -13), A), ((-4, -8), A)]
            t6 = [(w, E), ((-12, -1), A), ((-17, -1), A),
                  ((-17, -9), A), ((-12, -9), A)]
        elif which == 3:
            t5 = [(w, E), ((-12, -9), A), ((-12, -13), A),
                  ((-4, -13), A), ((-4, -8), A)]
            t6 = [(w, E), (v, A), ((-8, 5), A), ((-14, 5), A), ((-14, -5), A)]
        elif which == 4:
            t5 = [(w, E), ((-14, -5), A), ((-17, -9), A),
                  ((-17, -13), A), ((-8, -13), A)]
            t6 = [(w, E), (v, A), ((-8, 5), A), ((-14, 5), A), ((-14, -5), A)]
        else:
            raise ValueError("patch index must be 1..4")
    return core + [t4, t5, t6]


def patch_unit(which: int):
    """Patch N1..N4 as a gluable six-tile disk unit."""
    from .search import unit_from_faces
    faces = []
    for face in _patch_faces(which):
        k = len(face)
        faces.append([(v, frozenset((v, face[(j + 1) % k][0])), lbl)
                      for j, (v, lbl) in enumerate(face)])
    return unit_from_faces(faces, 5)


def glue_patch_tilings(policy: str = tm.UNORIENTED, jobs: int = 1):
    """Closed 36-tile tilings glued from six copies of the patches
    N1..N4, verifying the two-label vertex list 44 a^3 + 12 a e^3;
    one representative per unlabeled canonical code."""
    from . import search as s
    from .avc import parse_avc
    avc = parse_avc("36 aaaae : 44 a^3, 12 a e^3")
    units = [patch_unit(i) for i in (1, 2, 3, 4)]
    config = s.SearchConfig(mirror_policy=tm.ORIENTED, parallel_width=jobs)
    reps, _ = s.enumerate_glued(avc, units, config=config)
    out = {}
    for t in reps:
        blank = Tiling(t.twin, t.nxt, [0] * len(t.corner))
        out.setdefault(tm.canonical_code(blank, policy), t)
    return [out[key] for key in sorted(out)]
