"""Half-edge combinatorial maps of the sphere with labeled corners.

A tiling is stored as a pair of permutations on half-edge ids 0..2E-1:
``twin`` (a fixed-point-free involution pairing the two sides of each
edge) and ``nxt`` (whose orbits are the counterclockwise face boundary
cycles).  The vertex permutation is sigma(h) = nxt(twin(h)); its orbits
are the half-edges leaving a common vertex.  Each half-edge carries one
corner label: the corner of face(h) at the origin vertex of h.
"""

from __future__ import annotations

import random
from array import array
from collections import Counter

ALPHABET = "abcdefgh"
GREEK = "αβγδεζηθ"
MAX_LABELS = len(ALPHABET)

ORIENTED = "oriented"
UNORIENTED = "unoriented"

A, B, C, D, E = range(5)


def letter(lbl: int) -> str:
    return ALPHABET[lbl]


def greek(lbl: int) -> str:
    return GREEK[lbl]


def label_from_letter(ch: str) -> int:
    i = ALPHABET.find(ch)
    if i < 0:
        raise ValueError("unknown label letter %r" % ch)
    return i


def _sigma_vertices(twin, nxt):
    """Vertex ids (dense, orbit order) from sigma(h) = nxt(twin(h))."""
    n = len(twin)
    vid = [-1] * n
    count = 0
    for h in range(n):
        if vid[h] >= 0:
            continue
        g = h
        while vid[g] < 0:
            vid[g] = count
            g = nxt[twin[g]]
        count += 1
    return vid


class Tiling:
    """Closed oriented combinatorial map with one label per corner."""

    __slots__ = ("twin", "nxt", "corner", "vertex_of")

    def __init__(self, twin, nxt, corner, vertex_of=None):
        self.twin = tuple(twin)
        self.nxt = tuple(nxt)
        self.corner = tuple(corner)
        if vertex_of is None:
            vertex_of = _sigma_vertices(self.twin, self.nxt)
        self.vertex_of = tuple(vertex_of)

    # -- basic shape ---------------------------------------------------

    @property
    def half_edge_count(self) -> int:
        return len(self.twin)

    @property
    def edge_count(self) -> int:
        return len(self.twin) // 2

    @property
    def vertex_count(self) -> int:
        return max(self.vertex_of) + 1 if self.vertex_of else 0

    def faces(self):
        """Face cycles as tuples of half-edges, in ``nxt`` orbit order."""
        seen = [False] * len(self.nxt)
        out = []
        for h in range(len(self.nxt)):
            if seen[h]:
                continue
            cyc = []
            g = h
            while not seen[g]:
                seen[g] = True
                cyc.append(g)
                g = self.nxt[g]
            out.append(tuple(cyc))
        return out

    @property
    def face_count(self) -> int:
        return len(self.faces())

    def face_of(self):
        """Array mapping half-edge -> face index."""
        fo = [-1] * len(self.nxt)
        for i, cyc in enumerate(self.faces()):
            for h in cyc:
                fo[h] = i
        return fo

    def prev(self):
        """Inverse of ``nxt`` as a list."""
        p = [0] * len(self.nxt)
        for h, g in enumerate(self.nxt):
            p[g] = h
        return p

    def vertex_degree(self):
        deg = [0] * (self.vertex_count)
        for v in self.vertex_of:
            deg[v] += 1
        return deg

    def vertex_labels(self):
        """Per vertex, the sorted tuple of corner labels around it."""
        acc = [[] for _ in range(self.vertex_count)]
        for h, v in enumerate(self.vertex_of):
            acc[v].append(self.corner[h])
        return [tuple(sorted(ls)) for ls in acc]

    def __eq__(self, other):
        return (isinstance(other, Tiling) and self.twin == other.twin
                and self.nxt == other.nxt and self.corner == other.corner)

    def __hash__(self):
        return hash((self.twin, self.nxt, self.corner))


def vertex_census(t: Tiling) -> Counter:
    """Multiset of vertex label-multisets, e.g. {(a,b,c): 24, (d,d,d): 8}."""
    return Counter(t.vertex_labels())


def census_text(census) -> str:
    parts = []
    for word, count in sorted(census.items(), key=lambda kv: (len(kv[0]), kv[0])):
        parts.append("%d %s" % (count, "".join(greek(l) for l in word)))
    return ", ".join(parts)


# -- validation --------------------------------------------------------


def validate(t: Tiling, face_degree: int | None = None):
    """Return the list of violated invariants (empty = valid sphere map)."""
    problems = []
    n = len(t.twin)
    if n == 0:
        return ["empty map"]
    if n % 2:
        problems.append("odd number of half-edges")
    ids = range(n)
    if any(not (0 <= t.twin[h] < n) for h in ids) or any(
            not (0 <= t.nxt[h] < n) for h in ids):
        return problems + ["half-edge id out of range"]
    if any(t.twin[t.twin[h]] != h for h in ids):
        problems.append("twin not involutive")
    if any(t.twin[h] == h for h in ids):
        problems.append("twin has a fixed point")
    if sorted(t.nxt) != list(ids):
        problems.append("nxt is not a permutation")
        return problems
    face_cycles = t.faces()
    if face_degree is not None:
        for cyc in face_cycles:
            if len(cyc) != face_degree:
                problems.append("face of degree %d" % len(cyc))
                break
    if t.vertex_of != tuple(_sigma_vertices(t.twin, t.nxt)):
        problems.append("vertex_of inconsistent with sigma orbits")
    v = t.vertex_count
    e = n // 2
    f = len(face_cycles)
    if v - e + f != 2:
        problems.append("Euler characteristic %d != 2" % (v - e + f))
    # connectivity over the union of nxt and twin moves
    seen = [False] * n
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        h = stack.pop()
        for g in (t.nxt[h], t.twin[h]):
            if not seen[g]:
                seen[g] = True
                reached += 1
                stack.append(g)
    if reached != n:
        problems.append("map not connected")
    return problems


# -- construction helpers ----------------------------------------------


def from_faces(faces):
    """Build a Tiling from faces given as [(vertex, edge_key, label), ...].

    Each face is its counterclockwise corner cycle; consecutive entries
    (v_i, e_i, l_i) and (v_{i+1}, ...) mean the face walks edge ``e_i``
    from v_i to v_{i+1}.  Every edge key must occur exactly twice, in
    opposite directions, which also enforces a consistent orientation.
    """
    by_edge = {}
    twin = []
    nxt = []
    corner = []
    verts = []
    vid = {}
    h = 0
    for face in faces:
        k = len(face)
        base = h
        for i, (v, ekey, lbl) in enumerate(face):
            tail = v
            head = face[(i + 1) % k][0]
            by_edge.setdefault(ekey, []).append((h, tail, head))
            nxt.append(base + (i + 1) % k)
            corner.append(lbl)
            verts.append(vid.setdefault(v, len(vid)))
            twin.append(-1)
            h += 1
    for ekey, uses in by_edge.items():
        if len(uses) != 2:
            raise ValueError("edge %r used %d times" % (ekey, len(uses)))
        (h1, t1, d1), (h2, t2, d2) = uses
        if (t1, d1) != (d2, t2):
            raise ValueError("edge %r not antiparallel (orientation flaw)" % (ekey,))
        twin[h1] = h2
        twin[h2] = h1
    t = Tiling(twin, nxt, corner)
    # the declared vertex identities must agree with the sigma orbits
    pairing = {}
    for h2, v in enumerate(t.vertex_of):
        w = verts[h2]
        if pairing.setdefault(v, w) != w:
            raise ValueError("declared vertices disagree with sigma orbits")
    return t


def from_face_vertices(faces):
    """Like ``from_faces`` but with edge keys derived from vertex pairs.

    ``faces`` is a list of [(vertex, label), ...] cycles.  Fails when the
    map has doubled edges; pass explicit keys via ``from_faces`` then.
    """
    keyed = []
    for face in faces:
        k = len(face)
        keyed.append([
            (v, frozenset((v, face[(i + 1) % k][0])), lbl)
            for i, (v, lbl) in enumerate(face)
        ])
    return from_faces(keyed)


def relabel_corners(t: Tiling, mapping) -> Tiling:
    """Apply a label -> label mapping pointwise to all corners."""
    return Tiling(t.twin, t.nxt, tuple(mapping[c] for c in t.corner),
                  t.vertex_of)


def shuffle_ids(t: Tiling, rng: random.Random) -> Tiling:
    """The same map under a random permutation of half-edge ids."""
    n = len(t.twin)
    perm = list(range(n))
    rng.shuffle(perm)
    twin = [0] * n
    nxt = [0] * n
    corner = [0] * n
    for h in range(n):
        twin[perm[h]] = perm[t.twin[h]]
        nxt[perm[h]] = perm[t.nxt[h]]
        corner[perm[h]] = t.corner[h]
    return Tiling(twin, nxt, corner)


def mirror(t: Tiling) -> Tiling:
    """The orientation-reversed map, corner labels carried along."""
    prev = t.prev()
    edge_key = [min(h, t.twin[h]) for h in range(len(t.twin))]
    faces = []
    for cyc in t.faces():
        k = len(cyc)
        # reversed vertex cycle: corner i keeps its vertex, the outgoing
        # edge becomes the one previously walked into the corner
        rev = []
        for j in range(k):
            h = cyc[-j % k]
            rev.append((t.vertex_of[h], edge_key[prev[h]], t.corner[h]))
        faces.append(rev)
    return from_faces(faces)


def dual(t: Tiling) -> Tiling:
    """The dual map (faces <-> vertices), labels reset to 0."""
    face_of = t.face_of()
    # around vertex v, sigma lists outgoing half-edges counterclockwise;
    # the faces seen are face(h) for each outgoing h
    orbits = {}
    for h, v in enumerate(t.vertex_of):
        orbits.setdefault(v, h)
    faces = []
    for v in sorted(orbits):
        h0 = orbits[v]
        cyc = []
        h = h0
        while True:
            cyc.append((face_of[h], min(h, t.twin[h]), 0))
            h = t.nxt[t.twin[h]]
            if h == h0:
                break
        cyc.reverse()  # dual orientation flips; keep twins antiparallel
        faces.append(cyc)
    try:
        return from_faces(faces)
    except ValueError:
        return from_faces([list(reversed(f)) for f in faces])


# -- canonical codes and isomorphism -----------------------------------


def _bfs_order(twin, nxt, root):
    n = len(twin)
    new = [-1] * n
    order = [root]
    new[root] = 0
    head = 0
    while head < len(order):
        h = order[head]
        head += 1
        for g in (nxt[h], twin[h]):
            if new[g] < 0:
                new[g] = len(order)
                order.append(g)
    return new, order

def _code_stream(twin, nxt, corner, root):
    new, order = _bfs_order(twin, nxt, root)
    out = []
    for h in order:
        out.append(new[nxt[h]])
        out.append(new[twin[h]])
        out.append(corner[h])
    return out


def _min_code(twin, nxt, corner):
    n = len(twin)
    best = None
    for root in range(n):
        code = _code_stream(twin, nxt, corner, root)
        if best is None or code < best:
            best = code
    return best


def canonical_code(t: Tiling, policy: str = ORIENTED) -> bytes:
    """Byte code equal for two tilings iff they are isomorphic.

    Under ``unoriented`` the code also identifies mirror images.
    """
    best = _min_code(t.twin, t.nxt, t.corner)
    if policy == UNORIENTED:
        m = mirror(t)
        other = _min_code(m.twin, m.nxt, m.corner)
        if other < best:
            best = other
    elif policy != ORIENTED:
        raise ValueError("unknown mirror policy %r" % policy)
    return array("H", best).tobytes()


def canonical_form(t: Tiling, policy: str = ORIENTED) -> Tiling:
    """The canonical representative of the isomorphism class of ``t``.

    Two tilings are isomorphic (under the given mirror policy) iff their
    canonical forms have equal arrays.
    """
    best = _min_code(t.twin, t.nxt, t.corner)
    if policy == UNORIENTED:
        m = mirror(t)
        other = _min_code(m.twin, m.nxt, m.corner)
        if other < best:
            best = other
    elif policy != ORIENTED:
        raise ValueError("unknown mirror policy %r" % policy)
    n = len(best) // 3
    return Tiling([best[3 * i + 1] for i in range(n)],
                  [best[3 * i] for i in range(n)],
                  [best[3 * i + 2] for i in range(n)])


def isomorphic(a: Tiling, b: Tiling, policy: str = ORIENTED) -> bool:
    if len(a.twin) != len(b.twin):
        return False
    if _find_isomorphism(a, b) is not None:
        return True
    if policy == UNORIENTED:
        return _find_isomorphism(a, mirror(b)) is not None
    return False


def _signature(t: Tiling):
    """Cheap per-half-edge invariant used to restrict isomorphism roots."""
    deg = t.vertex_degree()
    return [
        (t.corner[h], deg[t.vertex_of[h]], t.corner[t.nxt[h]],
         t.corner[t.twin[h]], deg[t.vertex_of[t.twin[h]]])
        for h in range(len(t.twin))
    ]


def invariant_key(t: Tiling):
    """Hashable isomorphism invariant (equal codes => equal keys)."""
    sig = _signature(t)
    return (tuple(sorted(vertex_census(t).items())),
            tuple(sorted(Counter(sig).items())))


def _find_isomorphism(a: Tiling, b: Tiling):
    """A half-edge bijection a->b commuting with twin/nxt/corner, or None."""
    n = len(a.twin)
    sig_a = _signature(a)
    sig_b = _signature(b)
    root_a = 0
    for root_b in range(n):
        if sig_b[root_b] != sig_a[root_a]:
            continue
        m = [-1] * n
        m[root_a] = root_b
        stack = [root_a]
        ok = True
        while stack and ok:
            h = stack.pop()
            g = m[h]
            if a.corner[h] != b.corner[g]:
                ok = False
                break
            for ha, hb in ((a.nxt[h], b.nxt[g]), (a.twin[h], b.twin[g])):
                if m[ha] < 0:
                    m[ha] = hb
                    stack.append(ha)
                elif m[ha] != hb:
                    ok = False
                    break
        if ok and sorted(m) == list(range(n)):
            return m
    return None


def automorphism_group(t: Tiling, policy: str = ORIENTED):
    """Order and generating permutations of the label-preserving
    automorphism group (as half-edge permutations)."""
    n = len(t.twin)
    best = None
    hits = []
    for root in range(n):
        code = _code_stream(t.twin, t.nxt, t.corner, root)
        if best is None or code < best:
            best = code
            hits = [(False, root)]
        elif code == best:
            hits.append((False, root))
    mirrored = 0
    if policy == UNORIENTED:
        m = mirror(t)
        for root in range(n):
            code = _code_stream(m.twin, m.nxt, m.corner, root)
            if code == best:
                mirrored += 1
    order = len(hits) + mirrored
    # each hit root r yields the automorphism sending the canonical
    # traversal from hits[0] onto the traversal from r
    base_new, _ = _bfs_order(t.twin, t.nxt, hits[0][1])
    gens = []
    for _, root in hits[1:]:
        new, _ = _bfs_order(t.twin, t.nxt, root)
        inv = [0] * n
        for h in range(n):
            inv[new[h]] = h
        perm = tuple(inv[base_new[h]] for h in range(n))
        gens.append(perm)
    return order, gens
