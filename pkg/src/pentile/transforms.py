"""Label reductions and splittings between corner alphabets, and
orientation flips of vertex neighborhoods."""

from __future__ import annotations

from collections import Counter

from . import tiling as tm
from .tiling import Tiling, greek, relabel_corners
from .avc import Avc, PentagonArrangement, VertexType
from .search import face_words


class LabelMap:
    """A surjection from a source corner alphabet onto a target one,
    given as the image of each source label in order."""

    __slots__ = ("name", "mapping")

    def __init__(self, mapping, name=None):
        if isinstance(mapping, dict):
            if sorted(mapping) != list(range(len(mapping))):
                raise ValueError("mapping keys must be 0..n-1, got %r"
                                 % (sorted(mapping),))
            mapping = tuple(mapping[l] for l in range(len(mapping)))
        self.mapping = tuple(mapping)
        self.name = name
        target = max(self.mapping) + 1
        if set(self.mapping) != set(range(target)):
            raise ValueError("mapping %r is not onto an initial alphabet"
                             % (self.mapping,))

    @property
    def source_size(self):
        return len(self.mapping)

    @property
    def target_size(self):
        return max(self.mapping) + 1

    def __call__(self, label):
        return self.mapping[label]

    def __eq__(self, other):
        return isinstance(other, LabelMap) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __repr__(self):
        arrow = "".join(greek(l) for l in self.mapping)
        return "LabelMap(%s%s)" % ("%s: " % self.name if self.name else "",
                                   arrow)


def _named(table):
    return {name: LabelMap(mapping, name) for name, mapping in table.items()}


# Built-in reductions, keyed by taxonomy name.  Five-label maps list
# the images of alpha..epsilon; shorter ones act on smaller alphabets.
NAMED_MAPS = _named({
    "4A1": (1, 0, 0, 2, 3),
    "4A2": (0, 1, 0, 2, 3),
    "4A3": (0, 0, 1, 2, 3),
    "4D1": (0, 2, 1, 0, 3),
    "4D2": (1, 0, 2, 0, 3),
    "4D3": (1, 2, 0, 0, 3),
    "4E1": (0, 1, 2, 3, 0),
    "4E2": (1, 0, 2, 3, 0),
    "4E3": (1, 2, 0, 3, 0),
    "3A": (0, 0, 0, 1, 2),
    "3B1": (1, 0, 0, 0, 2),
    "3B2": (0, 1, 0, 0, 2),
    "3B3": (0, 0, 1, 0, 2),
    "3C1": (1, 0, 0, 2, 0),
    "3C2": (0, 1, 0, 2, 0),
    "3C3": (0, 0, 1, 2, 0),
    "3D1": (1, 0, 0, 1, 2),
    "3D2": (0, 1, 0, 1, 2),
    "3D3": (0, 0, 1, 1, 2),
    "3E1": (1, 0, 0, 2, 1),
    "3E2": (0, 1, 0, 2, 1),
    "3E3": (0, 0, 1, 2, 1),
    "2D": (0, 0, 0, 0, 1),
    "3A-2D": (0, 0, 1),
    "3B-2D": (0, 0, 1),
    "3D-2D": (0, 0, 1),
    "4A-3A": (0, 0, 1, 2),
    "4D-3D": (1, 0, 0, 2),
    "4E-3E": (1, 0, 0, 2),
})


def get_map(name: str) -> LabelMap:
    try:
        return NAMED_MAPS[name]
    except KeyError:
        raise ValueError("unknown label map %r (have: %s)"
                         % (name, ", ".join(sorted(NAMED_MAPS))))


def reduce_tiling(t: Tiling, m: LabelMap) -> Tiling:
    """Relabel every corner through the map; structure unchanged."""
    if any(l >= m.source_size for l in t.corner):
        raise ValueError("map %r undefined on some corner labels" % (m,))
    return relabel_corners(t, dict(enumerate(m.mapping)))


def reduce_avc(a: Avc, m: LabelMap) -> Avc:
    """Push an AVC through the map; merged vertex types add counts."""
    pentagon = []
    for l, mult in enumerate(a.pentagon):
        if not mult:
            continue
        if l >= m.source_size:
            raise ValueError("map %r undefined on label %s" % (m, greek(l)))
        pentagon.extend([m(l)] * mult)
    merged = Counter()
    for vt, count in a.vertices:
        labels = tuple(sorted(m(l) for l in vt.sorted_word()))
        merged[labels] += count
    vertices = [(VertexType(labels), count)
                for labels, count in sorted(merged.items())]
    return Avc(a.f, pentagon, vertices)


def split_tilings(t: Tiling, target_arrangement: PentagonArrangement,
                  m: LabelMap, target_avc: Avc):
    """All corner relabelings of ``t`` whose tiles realize the target
    arrangement, reduce back to ``t`` through ``m``, and realize the
    target AVC.  Backtracking over faces with vertex-type pruning."""
    if any(l >= m.source_size for l in target_arrangement.cycle):
        raise ValueError("map %r undefined on arrangement %r"
                         % (m, target_arrangement))
    reduced = tuple(m(l) for l in target_arrangement.cycle)
    faces = t.faces()
    want_pent = Counter(reduced)
    for cyc in faces:
        if Counter(t.corner[h] for h in cyc) != want_pent:
            raise ValueError(
                "arrangement %r reduces to %s which does not match the "
                "tile corners" % (target_arrangement,
                                  "".join(greek(l) for l in sorted(reduced))))
    # per face: candidate assignments of target labels to its half-edges
    candidates = []
    for cyc in faces:
        opts = []
        for w in target_arrangement.variants():
            if all(m(w[i]) == t.corner[cyc[i]] for i in range(5)):
                assign = tuple(zip(cyc, w))
                if assign not in opts:
                    opts.append(assign)
        if not opts:
            return []
        candidates.append(opts)
    # order faces so neighbors come early (propagation bites sooner)
    order = _face_order(t, faces)
    type_vecs = {vt.vec: count for vt, count in target_avc.vertices}
    used = Counter()
    degree = {v: 0 for v in range(t.vertex_count)}
    for h in range(len(t.twin)):
        degree[t.vertex_of[h]] += 1
    partial = {v: [] for v in range(t.vertex_count)}
    corner = list(t.corner)
    out = []

    def vertex_ok(v):
        vec = tuple(Counter(partial[v]).get(l, 0)
                    for l in range(len(next(iter(type_vecs)))))
        if len(partial[v]) == degree[v]:
            if vec not in type_vecs:
                return False
            if used[vec] >= type_vecs[vec]:
                return False
            used[vec] += 1
            return True
        return any(all(vec[l] <= tv[l] for l in range(len(tv)))
                   for tv in type_vecs)

    def rec(i):
        if i == len(order):
            out.append(Tiling(list(t.twin), list(t.nxt), list(corner)))
            return
        fi = order[i]
        for assign in candidates[fi]:
            touched = []
            completed = []
            ok = True
            for h, lbl in assign:
                corner[h] = lbl
                v = t.vertex_of[h]
                partial[v].append(lbl)
                touched.append((h, v))
                full = len(partial[v]) == degree[v]
                if not vertex_ok(v):
                    ok = False
                    break
                if full:
                    completed.append(tuple(Counter(partial[v]).get(l, 0)
                                     for l in range(len(next(iter(type_vecs))))))
            if ok:
                rec(i + 1)
            for vec in completed:
                used[vec] -= 1
            for h, v in reversed(touched):
                partial[v].pop()
                corner[h] = t.corner[h]
        return

    rec(0)
    return out


def _face_order(t: Tiling, faces):
    """Face indices in breadth-first adjacency order."""
    face_of = t.face_of()
    adj = [set() for _ in faces]
    for h in range(len(t.twin)):
        adj[face_of[h]].add(face_of[t.twin[h]])
    order = [0]
    seen = {0}
    head = 0
    while head < len(order):
        for g in sorted(adj[order[head]]):
            if g not in seen:
                seen.add(g)
                order.append(g)
        head += 1
    return order


class Neighborhood:
    """A vertex together with the tiles meeting it (a closed star)."""

    __slots__ = ("vertex",)

    def __init__(self, vertex):
        self.vertex = vertex


def reorient_neighborhood(t: Tiling, n) -> Tiling:
    """Re-glue the star of a vertex in reversed cyclic order (flip its
    orientation).  Defined only when some reflection of the star's
    boundary matches the surrounding tiling; raises otherwise."""
    v = n.vertex if isinstance(n, Neighborhood) else n
    face_of = t.face_of()
    star_faces = {face_of[h] for h in range(len(t.twin))
                  if t.vertex_of[h] == v}
    star = {h for h in range(len(t.twin)) if face_of[h] in star_faces}
    if len(star) == len(t.twin):
        raise ValueError("the star of vertex %d is the whole tiling" % v)
    prev = t.prev()
    # star boundary in ring order: s_i runs w_i -> w_{i+1}
    bnd = [h for h in sorted(star) if t.twin[h] not in star]
    s0 = bnd[0]
    ring = [s0]
    g = t.nxt[s0]
    while g != s0:
        if t.twin[g] in star:
            g = t.nxt[t.twin[g]]
        else:
            ring.append(g)
            g = t.nxt[g]
    if len(ring) != len(bnd):
        raise ValueError("the tiles around vertex %d do not form a disk" % v)
    k = len(ring)
    ring_pos = {s: i for i, s in enumerate(ring)}
    w = [t.vertex_of[s] for s in ring]
    if len(set(w)) != k or v in w:
        raise ValueError("the star boundary around vertex %d is not a "
                         "simple circle" % v)

    def edge_key(h):
        return min(h, t.twin[h])

    complement = []
    for fi, cyc in enumerate(t.faces()):
        if fi not in star_faces:
            complement.append([(t.vertex_of[h], edge_key(h), t.corner[h])
                               for h in cyc])
    census = tm.vertex_census(t)
    results = []
    for c in range(k):
        def vsub(u):
            if u == v:
                return u
            return w[(c + 1 - ring_pos_by_vertex[u]) % k]
        ring_pos_by_vertex = {u: i for i, u in enumerate(w)}
        faces2 = list(complement)
        ok = True
        for fi in sorted(star_faces):
            cyc = t.faces()[fi]
            kf = len(cyc)
            rev = []
            for j in range(kf):
                h = cyc[-j % kf]
                e = prev[h]
                if e in ring_pos:
                    key = edge_key(ring[(c - ring_pos[e]) % k])
                else:
                    key = edge_key(e)
                u = t.vertex_of[h]
                rev.append((vsub(u) if u == v or u in ring_pos_by_vertex
                            else u, key, t.corner[h]))
            faces2.append(rev)
        try:
            flipped = tm.from_faces(faces2)
        except ValueError:
            continue
        if tm.vertex_census(flipped) != census:
            continue
        results.append(flipped)
    if not results:
        raise ValueError("no reflection of the star at vertex %d matches "
                         "its surroundings" % v)
    return results[0]
