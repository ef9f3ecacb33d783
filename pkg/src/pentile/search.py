"""Backtracking enumeration of tilings realizing an AVC.

The search grows a disk: it keeps the boundary ring of a partial map
and repeatedly either closes the corner gap at a boundary vertex (by
gluing its two flanking boundary edges) or glues a new unit (a single
tile, or a multi-tile patch) along a boundary edge.  Branching always
happens at the open vertex with the fewest legal moves, so forced
deductions (adjacent-corner propagation, vertex matching) are applied
before any guessing.
"""

from __future__ import annotations

import time
from collections import Counter

from . import tiling as tm
from .tiling import ORIENTED, UNORIENTED, Tiling
from .avc import Avc, PentagonArrangement, enumerate_arrangements


class SearchStats:
    __slots__ = ("nodes", "dead_ends", "propagation_steps", "solutions",
                 "wall_time")

    def __init__(self):
        self.nodes = 0
        self.dead_ends = 0
        self.propagation_steps = 0
        self.solutions = 0
        self.wall_time = 0.0

    def merge(self, other):
        self.nodes += other.nodes
        self.dead_ends += other.dead_ends
        self.propagation_steps += other.propagation_steps
        self.solutions += other.solutions
        self.wall_time = max(self.wall_time, other.wall_time)

    def as_dict(self):
        return {k: getattr(self, k) for k in self.__slots__}


class SearchConfig:
    def __init__(self, arrangements=None, mirror_policy=ORIENTED,
                 seed_rule=None, solution_cap=None, parallel_width=1):
        self.arrangements = arrangements
        self.mirror_policy = mirror_policy
        self.seed_rule = seed_rule       # VertexType to instantiate first
        self.solution_cap = solution_cap
        self.parallel_width = parallel_width


class ClassSet:
    """Solutions deduplicated up to isomorphism under a mirror policy."""

    def __init__(self, policy=ORIENTED):
        self.policy = policy
        self.buckets = {}
        self.count = 0

    def _key(self, t, mirrored):
        k = tm.invariant_key(t)
        if self.policy == UNORIENTED:
            k = min(k, tm.invariant_key(mirrored))
        return k

    def add(self, t: Tiling) -> bool:
        mirrored = tm.mirror(t) if self.policy == UNORIENTED else None
        key = self._key(t, mirrored)
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if tm._find_isomorphism(t, rep) is not None:
                return False
            if mirrored is not None and \
                    tm._find_isomorphism(mirrored, rep) is not None:
                return False
        bucket.append(t)
        self.count += 1
        return True

    def merge(self, other):
        for t in other.reps():
            self.add(t)

    def reps(self):
        out = []
        for bucket in self.buckets.values():
            out.extend(bucket)
        return out

    def sorted_reps(self):
        return sorted(self.reps(), key=lambda t: tm.canonical_code(t, self.policy))


# label count vectors are packed one byte per label into a single int;
# containment tests use the usual carry-guard trick
_GUARD = 0x8080808080808080


def pack_counts(vec) -> int:
    out = 0
    for l, m in enumerate(vec):
        out |= m << (8 * l)
    return out


def unpack_counts(packed, nl):
    return tuple((packed >> (8 * l)) & 0xFF for l in range(nl))


class Unit:
    """A labeled disk complex glued into the search one piece at a time."""

    __slots__ = ("twin", "nxt", "corner", "vloc", "nv", "rnext",
                 "vcount", "vpacked", "vgaps", "ntiles", "boundary",
                 "interior", "nl")

    def __init__(self, twin, nxt, corner, vloc, nl):
        self.twin = list(twin)
        self.nxt = list(nxt)
        self.corner = list(corner)
        self.vloc = list(vloc)
        self.nv = max(vloc) + 1
        self.nl = nl
        self.vcount = [[0] * nl for _ in range(self.nv)]
        for h, v in enumerate(vloc):
            self.vcount[v][corner[h]] += 1
        self.vpacked = [pack_counts(v) for v in self.vcount]
        seen = [False] * len(twin)
        self.ntiles = 0
        for h in range(len(twin)):
            if not seen[h]:
                self.ntiles += 1
                g = h
                while not seen[g]:
                    seen[g] = True
                    g = nxt[g]
        self.boundary = [h for h in range(len(twin)) if twin[h] < 0]
        self.rnext = {}
        for h in self.boundary:
            g = self.nxt[h]
            while self.twin[g] >= 0:
                g = self.nxt[self.twin[g]]
            self.rnext[h] = g
        self.vgaps = [0] * self.nv
        for h in self.boundary:
            self.vgaps[vloc[nxt[h]]] += 1
        self.interior = [v for v in range(self.nv) if self.vgaps[v] == 0]


def tile_unit(word, nl) -> Unit:
    g = len(word)
    return Unit([-1] * g, [(i + 1) % g for i in range(g)], list(word),
                list(range(g)), nl)


def unit_from_faces(faces, nl) -> Unit:
    """Build a Unit from corner cycles [(vertex, edge_key, label), ...];
    edge keys used once become boundary."""
    by_edge = {}
    twin, nxt, corner, vloc = [], [], [], []
    vid = {}
    h = 0
    for face in faces:
        k = len(face)
        base = h
        for i, (v, ekey, lbl) in enumerate(face):
            head = face[(i + 1) % k][0]
            by_edge.setdefault(ekey, []).append((h, v, head))
            nxt.append(base + (i + 1) % k)
            corner.append(lbl)
            vloc.append(vid.setdefault(v, len(vid)))
            twin.append(-1)
            h += 1
    for ekey, uses in by_edge.items():
        if len(uses) == 1:
            continue
        if len(uses) != 2:
            raise ValueError("edge %r used %d times" % (ekey, len(uses)))
        (h1, t1, d1), (h2, t2, d2) = uses
        if (t1, d1) != (d2, t2):
            raise ValueError("edge %r not antiparallel" % (ekey,))
        twin[h1], twin[h2] = h2, h1
    return Unit(twin, nxt, corner, vloc, nl)


class _Problem:
    """Engine-level description: face degree, tile budget, vertex types
    with multiplicities, and the units that may be glued."""

    def __init__(self, g, f, nl, type_vecs, caps, units, glues=None,
                 forbid_deg=None):
        self.g = g
        self.f = f
        self.nl = nl
        self.type_vecs = [tuple(v[:nl]) for v in type_vecs]
        self.caps = list(caps)
        self.units = units               # list of Unit
        self.forbid_deg = forbid_deg
        self.type_ints = [pack_counts(v) for v in self.type_vecs]
        self.type_pre = [ti | _GUARD for ti in self.type_ints]
        self.type_index = {ti: i for i, ti in enumerate(self.type_ints)}
        self.degrees = [sum(v) for v in self.type_vecs]
        if glues is None:
            glues = [(ui, be) for ui, unit in enumerate(units)
                     for be in unit.boundary]
        # per glue option: packed label counts added at the two endpoint
        # vertices of the host edge
        self.glue_info = []
        for ui, be in glues:
            unit = units[ui]
            tailvec = unit.vpacked[unit.vloc[be]]
            headvec = unit.vpacked[unit.vloc[unit.nxt[be]]]
            self.glue_info.append((ui, be, tailvec, headvec))


class StopSearch(Exception):
    pass


class Engine:
    """Grows a planar complex whose boundary is a set of rings.  Every
    state satisfies (Euler characteristic) + (number of rings) = 2, so a
    state with empty boundary is a sphere.  At a pivot boundary edge e
    the decision "what is twin(e)" is branched exhaustively: the ring
    neighbor on either side (closing a corner gap), a distant edge of
    the same ring (the ring splits in two; gluing different rings would
    force positive genus and is pruned), or an edge of a freshly glued
    unit.  Tilings with a loop edge (an edge whose endpoints coincide)
    are pruned; they cannot occur in tilings by simple geodesic arcs."""

    def __init__(self, prob: _Problem, on_solution):
        self.p = prob
        self.on_solution = on_solution
        self.twin = []
        self.nxt = []
        self.corner = []
        self.vof = []          # origin vertex node per half-edge
        self.rnext = []        # ring successor of a boundary edge
        self.rprev = []
        self.parent = []       # per node: its current root (flat forest)
        self.members = []      # per root: all nodes merged into it
        self.vcnt = []         # per root: packed label counts
        self.vrep = []         # per node: one half-edge leaving it
        self.gaps = []         # per root: open corner gaps at the vertex
        self.open = {}         # boundary edges, insertion ordered
        self.closed = {}       # root -> type index
        self.type_used = [0] * len(prob.type_vecs)
        self.tiles = 0
        self.trail = []
        self.stats = SearchStats()

    # -- vertex identification (flat forest, O(1) lookup) ---------------

    def find(self, v):
        return self.parent[v]

    # -- viability against the AVC -------------------------------------

    def viable(self, cnt):
        """Some vertex type with remaining capacity contains the packed
        count vector."""
        used = self.type_used
        caps = self.p.caps
        for i, pre in enumerate(self.p.type_pre):
            if used[i] < caps[i] and (pre - cnt) & _GUARD == _GUARD:
                return True
        return False

    def closable(self, cnt):
        i = self.p.type_index.get(cnt, -1)
        return i >= 0 and self.type_used[i] < self.p.caps[i]

    # -- trail ---------------------------------------------------------

    def undo_to(self, mark):
        trail = self.trail
        while len(trail) > mark:
            kind, a, b = trail.pop()
            if kind == 0:      # twin
                self.twin[a] = b
            elif kind == 1:    # rnext
                self.rnext[a] = b
            elif kind == 2:    # rprev
                self.rprev[a] = b
            elif kind == 3:    # vcnt increment: a=root, b=packed delta
                self.vcnt[a] -= b
            elif kind == 4:    # reparent: a=node, b=old root
                self.parent[a] = b
            elif kind == 5:    # close: a=root, b=type index
                del self.closed[a]
                self.type_used[b] -= 1
            elif kind == 6:    # growth: a=#half-edges, b=#vertex nodes
                del self.twin[a:]
                del self.nxt[a:]
                del self.corner[a:]
                del self.vof[a:]
                del self.rnext[a:]
                del self.rprev[a:]
                del self.parent[b:]
                del self.members[b:]
                del self.vcnt[b:]
                del self.vrep[b:]
                del self.gaps[b:]
            elif kind == 7:    # tile counter: a=delta
                self.tiles -= a
            elif kind == 9:    # gap counter: a=root, b=delta
                self.gaps[a] -= b
            elif kind == 10:   # boundary edge added
                del self.open[a]
            elif kind == 11:   # boundary edge removed
                self.open[a] = True
            elif kind == 12:   # member list extended: a=root, b=old size
                del self.members[a][b:]

    def _set_ring(self, a, b):
        self.trail.append((1, a, self.rnext[a]))
        self.rnext[a] = b
        self.trail.append((2, b, self.rprev[b]))
        self.rprev[b] = a

    def _open_add(self, e):
        self.open[e] = True
        self.trail.append((10, e, None))

    def _open_remove(self, e):
        del self.open[e]
        self.trail.append((11, e, None))

    def _gaps_add(self, root, d):
        self.gaps[root] += d
        self.trail.append((9, root, d))

    def _merge(self, a, b):
        """Fold root b into root a (a stays a valid root)."""
        for m in self.members[b]:
            self.trail.append((4, m, b))
            self.parent[m] = a
        self.trail.append((12, a, len(self.members[a])))
        self.members[a].extend(self.members[b])
        self._add_counts(a, self.vcnt[b])
        self._gaps_add(a, self.gaps[b])

    def _add_counts(self, root, packed):
        self.vcnt[root] += packed
        self.trail.append((3, root, packed))

    def _close_vertex(self, root):
        ti = self.p.type_index.get(self.vcnt[root], -1)
        if ti < 0 or self.type_used[ti] >= self.p.caps[ti]:
            return False
        if self.p.forbid_deg is not None and \
                self.p.degrees[ti] == self.p.forbid_deg:
            h0 = self.vrep[root]
            h = h0
            while True:
                nb = self.find(self.vof[self.nxt[h]])
                nti = self.closed.get(nb)
                if nti is not None and \
                        self.p.degrees[nti] == self.p.forbid_deg:
                    return False
                if self.twin[h] < 0:
                    return False   # fan not complete; cannot close
                h = self.nxt[self.twin[h]]
                if h == h0:
                    break
        self.closed[root] = ti
        self.type_used[ti] += 1
        self.trail.append((5, root, ti))
        return True

    # -- moves ---------------------------------------------------------

    def _glue_pair(self, e1, h):
        """Glue boundary edges e1 and h antiparallel (twin them).  For
        h = rnext(e1) this closes the corner gap at head(e1); otherwise
        it splits their ring in two.  Returns False on contradiction."""
        v = self.find(self.vof[self.nxt[e1]])   # head of e1
        u1 = self.find(self.vof[e1])            # tail of e1
        hh = self.find(self.vof[self.nxt[h]])   # head of h
        self.trail.append((0, e1, self.twin[e1]))
        self.twin[e1] = h
        self.trail.append((0, h, self.twin[h]))
        self.twin[h] = e1
        self._open_remove(e1)
        self._open_remove(h)
        self._gaps_add(v, -1)
        self._gaps_add(hh, -1)
        w = self.rprev[e1]
        x = self.rnext[e1]
        y = self.rprev[h]
        z = self.rnext[h]
        if h == x:              # close the gap at v
            if z != e1:
                if z == w:
                    return False    # 3-ring close would make w a loop edge
                self._set_ring(w, z)
                if u1 == hh:
                    return False    # a single-edge ring cannot complete
                self._merge(u1, hh)
                if not self.viable(self.vcnt[u1]):
                    return False
            else:               # the 2-ring [e1, h] disappears
                if u1 != hh:
                    return False
                if self.gaps[u1] == 0:
                    if not self._close_vertex(u1):
                        return False
                elif not self.viable(self.vcnt[u1]):
                    return False
            if self.gaps[v] == 0:
                return self._close_vertex(v)
            return self.viable(self.vcnt[v])
        # distant gluing: ring splits into x..y and z..w
        if y == x or z == w:
            return False        # a split part would be a single edge
        th = self.find(self.vof[h])             # tail of h
        if th == v or hh == u1:
            return False        # would force positive genus
        self._set_ring(y, x)
        self._set_ring(w, z)
        self._merge(v, th)
        a, b = self.find(u1), self.find(hh)
        if a == b:
            return False        # second merge collapsed: positive genus
        self._merge(a, b)
        return self.viable(self.vcnt[v]) and self.viable(self.vcnt[a])

    def _instantiate(self, unit, vmap_pairs):
        """Append the unit's half-edges and vertices; ``vmap_pairs``
        pins local vertices onto existing roots.  Returns (base, vmap)."""
        base = len(self.twin)
        vbase = len(self.parent)
        self.trail.append((6, base, vbase))
        vmap = [-1] * unit.nv
        for lv, node in vmap_pairs:
            vmap[lv] = node
        nfresh = 0
        for lv in range(unit.nv):
            if vmap[lv] < 0:
                vmap[lv] = vbase + nfresh
                nfresh += 1
        for _ in range(nfresh):
            node = len(self.parent)
            self.parent.append(node)
            self.members.append([node])
            self.vcnt.append(0)
            self.vrep.append(-1)
            self.gaps.append(0)
        for h in range(len(unit.twin)):
            t = unit.twin[h]
            self.twin.append(-1 if t < 0 else base + t)
            self.nxt.append(base + unit.nxt[h])
            self.corner.append(unit.corner[h])
            node = vmap[unit.vloc[h]]
            self.vof.append(node)
            if self.vrep[node] < 0:
                self.vrep[node] = base + h
            self.rnext.append(-1)
            self.rprev.append(-1)
        for lv in range(unit.nv):
            self._add_counts(vmap[lv], unit.vpacked[lv])
            if unit.vgaps[lv]:
                self._gaps_add(vmap[lv], unit.vgaps[lv])
        self.trail.append((7, unit.ntiles, None))
        self.tiles += unit.ntiles
        return base, vmap

    def place_unit(self, host_edge, ui, uedge):
        """Glue unit boundary edge ``uedge`` onto ``host_edge``; the unit
        then lies behind the host edge with its end corners joining the
        two endpoint vertices.  Returns False on a dead contradiction."""
        unit = self.p.units[ui]
        v = self.find(self.vof[self.nxt[host_edge]])    # head of host edge
        u1 = self.find(self.vof[host_edge])             # tail
        base, vmap = self._instantiate(
            unit, [(unit.vloc[uedge], v), (unit.vloc[unit.nxt[uedge]], u1)])
        ge = base + uedge
        self.trail.append((0, host_edge, self.twin[host_edge]))
        self.twin[host_edge] = ge
        self.twin[ge] = host_edge   # fresh entry; growth undo removes it
        self._open_remove(host_edge)
        self._gaps_add(v, -1)       # the host edge's gap
        self._gaps_add(u1, -1)      # the glued unit edge's gap
        # splice the unit boundary (minus the glued edge) into the ring
        path = []
        g = unit.rnext[uedge]
        while g != uedge:
            path.append(base + g)
            g = unit.rnext[g]
        P = self.rprev[host_edge]
        Nx = self.rnext[host_edge]
        prev = P
        for e in path:
            self._set_ring(prev, e)
            self._open_add(e)
            prev = e
        self._set_ring(prev, Nx)
        for lv in unit.interior:
            if not self._close_vertex(vmap[lv]):
                return False
        return self.viable(self.vcnt[v]) and self.viable(self.vcnt[u1])

    def place_seed(self, unit, close_locals=()):
        """Place the first unit with a fresh boundary ring."""
        if isinstance(unit, int):
            unit = self.p.units[unit]
        base, vmap = self._instantiate(unit, [])
        for be in unit.boundary:
            self._set_ring(base + be, base + unit.rnext[be])
            self._open_add(base + be)
        for lv in unit.interior:
            if not self._close_vertex(vmap[lv]):
                return False
        for lv in close_locals:
            if not self._close_vertex(self.find(vmap[lv])):
                return False
        return True

    # -- search --------------------------------------------------------

    def _screen_close(self, e):
        """Cheap legality test for gluing e with its ring successor."""
        e2 = self.rnext[e]
        v = self.find(self.vof[self.nxt[e]])
        if self.gaps[v] == 1 and not self.closable(self.vcnt[v]):
            return False
        u1 = self.find(self.vof[e])
        u2 = self.find(self.vof[self.nxt[e2]])
        if self.rnext[e2] == e:
            return u1 == u2
        if self.rnext[e2] == self.rprev[e]:
            return False       # would leave a single-edge ring (a loop)
        if u1 == u2:
            return False
        return self.viable(self.vcnt[u1] + self.vcnt[u2])

    def _moves_at(self, e1):
        """Exhaustively screened decisions for twin(e1)."""
        v = self.find(self.vof[self.nxt[e1]])
        cv = self.vcnt[v]
        u1 = self.find(self.vof[e1])
        cu = self.vcnt[u1]
        moves = []
        e2 = self.rnext[e1]
        w = self.rprev[e1]
        if self._screen_close(e1):          # twin(e1) = ring successor
            moves.append((0, e1, 0))
        if w != e2 and self._screen_close(w):   # twin(e1) = ring predecessor
            moves.append((0, w, 0))
        budget = self.p.f - self.tiles
        if budget > 0:                      # twin(e1) = a fresh unit
            for gi, (ui, be, tailvec, headvec) in enumerate(self.p.glue_info):
                if self.p.units[ui].ntiles > budget:
                    continue
                if self.viable(cv + tailvec) and self.viable(cu + headvec):
                    moves.append((1, e1, gi))
        # twin(e1) = a distant edge of the same ring (the ring splits;
        # the two candidates next to the exclusions would leave a
        # single-edge ring and are skipped)
        between = []
        h = e2
        while True:
            h = self.rnext[h]
            if h == w or h == e1:
                break
            between.append(h)
        for h in between[1:-1]:
            th = self.find(self.vof[h])
            hh = self.find(self.vof[self.nxt[h]])
            if th == v or hh == u1:
                continue
            if self.viable(cv + self.vcnt[th]) and \
                    self.viable(cu + self.vcnt[hh]):
                moves.append((2, e1, h))
        return moves

    def _best_gap(self):
        """The boundary edge with the fewest decisions (fail-first).
        Edges are scanned in id order: undo/redo cycles reshuffle the
        ``open`` dict's insertion order, and replaying a recorded
        decision path needs picks that depend on state content only."""
        best = None
        for e in sorted(self.open):
            moves = self._moves_at(e)
            if not moves:
                return []
            if best is None or len(moves) < len(best):
                best = moves
                if len(moves) == 1:
                    break
        return best

    def apply(self, move):
        kind, a, b = move
        if kind == 0:
            return self._glue_pair(a, self.rnext[a])
        if kind == 2:
            return self._glue_pair(a, b)
        ui, be, _, _ = self.p.glue_info[b]
        return self.place_unit(a, ui, be)

    def dfs(self, path_budget=None, path=None, frontier=None):
        """Depth-first search with chronological undo.  When
        ``path_budget`` hits zero at a branch point, the decision path is
        appended to ``frontier`` instead of branching (work splitting)."""
        self.stats.nodes += 1
        mark = len(self.trail)
        try:
            while True:
                if not self.open:
                    if self.tiles == self.p.f and \
                            self.type_used == self.p.caps and \
                            not self._has_loop():
                        self.stats.solutions += 1
                        self.on_solution(self._extract())
                    else:
                        self.stats.dead_ends += 1
                    return
                moves = self._best_gap()
                if not moves:
                    self.stats.dead_ends += 1
                    return
                if len(moves) == 1:
                    self.stats.propagation_steps += 1
                    if not self.apply(moves[0]):
                        self.stats.dead_ends += 1
                        return
                    continue
                if path_budget is not None and path_budget == 0:
                    frontier.append(list(path))
                    return
                for i, mv in enumerate(moves):
                    mark2 = len(self.trail)
                    if path is not None:
                        path.append(i)
                    if self.apply(mv):
                        self.dfs(None if path_budget is None
                                 else path_budget - 1, path, frontier)
                    else:
                        self.stats.dead_ends += 1
                    if path is not None:
                        path.pop()
                    self.undo_to(mark2)
                return
        finally:
            self.undo_to(mark)

    def replay(self, path):
        """Re-apply a recorded decision path; returns False on failure."""
        for idx in path:
            while True:
                if not self.open:
                    return False
                moves = self._best_gap()
                if not moves:
                    return False
                if len(moves) == 1:
                    if not self.apply(moves[0]):
                        return False
                    continue
                if not self.apply(moves[idx]):
                    return False
                break
        return True

    def _has_loop(self):
        """True if some edge has both endpoints at one vertex; such maps
        cannot be tilings by simple arcs."""
        for h in range(len(self.twin)):
            if self.find(self.vof[h]) == self.find(self.vof[self.nxt[h]]):
                return True
        return False

    def _extract(self) -> Tiling:
        n = len(self.twin)
        t = Tiling(self.twin[:n], self.nxt[:n], self.corner[:n])
        assert not tm.validate(t, self.p.g), "search produced an invalid map"
        return t

# -- seed fans ---------------------------------------------------------


def _fan_faces(words, g):
    """Corner cycles for a closed fan of tiles around one vertex; word j
    is read with its first label at the center."""
    d = len(words)
    faces = []
    for j, w in enumerate(words):
        face = [("c", ("s", j), w[0]), (("o", j), ("m", j, 0), w[1])]
        for k in range(2, g - 1):
            face.append((("p", j, k), ("m", j, k - 1), w[k]))
        face.append((("o", (j + 1) % d), ("s", (j + 1) % d), w[g - 1]))
        faces.append(face)
    return faces


def seed_fans(prob: _Problem, placements, center_vec):
    """All closed fans realizing the given center vertex type, up to
    rotation.  Every tiling of the class contains one of them."""
    d = sum(center_vec)
    out = []
    seen = set()
    remaining = list(center_vec)
    chosen = []

    def rec(j):
        if j == d:
            key = min(tuple(chosen[i:] + chosen[:i]) for i in range(d))
            if key in seen:
                return
            seen.add(key)
            out.append(unit_from_faces(_fan_faces(chosen, prob.g), prob.nl))
            return
        for w in placements:
            if remaining[w[0]] <= 0:
                continue
            remaining[w[0]] -= 1
            chosen.append(w)
            rec(j + 1)
            chosen.pop()
            remaining[w[0]] += 1

    rec(0)
    return out


# -- problem construction ----------------------------------------------


def _pentagon_placements(avc: Avc, arrangements=None):
    if arrangements is None:
        labels = []
        for l, m in enumerate(avc.pentagon):
            labels.extend([l] * m)
        arrangements = enumerate_arrangements(labels)
    placements = []
    for arr in arrangements:
        for w in arr.variants():
            if w not in placements:
                placements.append(w)
    return arrangements, placements


def problem_from_avc(avc: Avc, arrangements=None):
    arrangements, placements = _pentagon_placements(avc, arrangements)
    nl = max(l for l, m in enumerate(avc.pentagon) if m) + 1
    units = [tile_unit(w, nl) for w in placements]
    glues = [(ui, 0) for ui in range(len(units))]
    type_vecs = [vt.vec[:nl] for vt, _ in avc.vertices]
    caps = [c for _, c in avc.vertices]
    prob = _Problem(5, avc.f, nl, type_vecs, caps, units, glues)
    prob.placements = placements
    return prob


def pick_seed_type(avc: Avc, seed_rule=None):
    """The vertex type whose star gets instantiated first: the rarest
    one (ties to the smaller degree), unless overridden."""
    if seed_rule is not None:
        for vt, count in avc.vertices:
            if vt == seed_rule:
                return vt
        raise ValueError("seed type %r not in AVC" % (seed_rule,))
    return min(((vt, c) for vt, c in avc.vertices if c > 0),
               key=lambda p: (p[1], p[0].degree, p[0].vec))[0]


# -- drivers -----------------------------------------------------------


def _record(classes, cap, t):
    classes.add(t)
    if cap is not None and classes.count >= cap:
        raise StopSearch


def _worker(args):
    prob, unit, path, policy, cap = args
    classes = ClassSet(policy)
    eng = Engine(prob, lambda t: _record(classes, cap, t))
    try:
        if eng.place_seed(unit) and eng.replay(path):
            eng.dfs()
    except StopSearch:
        pass
    return ([(t.twin, t.nxt, t.corner) for t in classes.reps()],
            eng.stats.as_dict())


def run_search(prob, seeds, policy=ORIENTED, solution_cap=None, jobs=1):
    """Exhaust the search from every seed; returns (canonical
    representatives sorted by code, stats)."""
    t0 = time.time()
    classes = ClassSet(policy)
    stats = SearchStats()
    if jobs <= 1:
        try:
            for unit in seeds:
                eng = Engine(prob, lambda t: _record(classes, solution_cap, t))
                try:
                    if eng.place_seed(unit):
                        eng.dfs()
                finally:
                    stats.merge(eng.stats)
        except StopSearch:
            pass
    else:
        tasks, top = _split_frontier(prob, seeds, policy, solution_cap, jobs)
        classes.merge(top)
        from concurrent.futures import ProcessPoolExecutor
        args = [(prob, seeds[si], path, policy, solution_cap)
                for si, path in tasks]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for reps, st in ex.map(_worker, args):
                for arrays in reps:
                    classes.add(Tiling(*arrays))
                s = SearchStats()
                for k, v in st.items():
                    setattr(s, k, v)
                stats.merge(s)
    reps = [tm.canonical_form(t, policy) for t in classes.reps()]
    reps.sort(key=lambda t: tm.canonical_code(t, policy))
    stats.solutions = len(reps)
    stats.wall_time = time.time() - t0
    return reps, stats


def _split_frontier(prob, seeds, policy, cap, jobs):
    """Expand each seed a few branch decisions deep, returning frontier
    paths as parallel work items plus any solutions found on the way."""
    depth = 1
    while True:
        classes = ClassSet(policy)
        tasks = []
        for si, unit in enumerate(seeds):
            eng = Engine(prob, lambda t: _record(classes, cap, t))
            frontier = []
            try:
                if eng.place_seed(unit):
                    eng.dfs(path_budget=depth, path=[], frontier=frontier)
            except StopSearch:
                pass
            tasks.extend((si, p) for p in frontier)
        if len(tasks) >= 4 * jobs or depth >= 6 or not tasks:
            return tasks, classes
        depth += 1


def enumerate_by_arrangement(avc: Avc, config: SearchConfig = None):
    """Run one search per pentagon arrangement (corner-congruence forces
    every tile of a tiling to share one arrangement).  Returns a list of
    (arrangement, tilings, stats) triples."""
    config = config or SearchConfig()
    arrangements = config.arrangements
    if arrangements is None:
        labels = []
        for l, m in enumerate(avc.pentagon):
            labels.extend([l] * m)
        arrangements = enumerate_arrangements(labels)
    center = pick_seed_type(avc, config.seed_rule)
    out = []
    for arr in arrangements:
        prob = problem_from_avc(avc, [arr])
        seeds = seed_fans(prob, prob.placements, center.vec[:prob.nl])
        reps, stats = run_search(prob, seeds, config.mirror_policy,
                                 config.solution_cap, config.parallel_width)
        out.append((arr, reps, stats))
    return out


def avc_symmetries(avc: Avc):
    """Label permutations fixing the pentagon multiset and every vertex
    type's count."""
    nl = max(l for l, m in enumerate(avc.pentagon) if m) + 1
    pent = avc.pentagon[:nl]
    types = Counter((vt.vec[:nl], c) for vt, c in avc.vertices if c)
    out = []
    from itertools import permutations
    for p in permutations(range(nl)):
        if tuple(pent[p[l]] for l in range(nl)) != tuple(pent):
            continue
        moved = Counter()
        for vec, c in types:
            img = [0] * nl
            for l in range(nl):
                img[p[l]] = vec[l]
            moved[(tuple(img), c)] += types[(vec, c)]
        if moved == types:
            out.append(p)
    return out


def isomorphic_up_to_avc(t1: Tiling, t2: Tiling, avc: Avc,
                         policy=ORIENTED) -> bool:
    """Isomorphism allowing any AVC-preserving corner relabeling."""
    return any(tm.isomorphic(tm.relabel_corners(t1, p), t2, policy)
               for p in avc_symmetries(avc))


def enumerate_tilings(avc: Avc, config: SearchConfig = None):
    """Tilings realizing the AVC, up to isomorphism under the configured
    mirror policy and up to AVC-preserving corner relabelings.
    Returns (tilings, stats)."""
    config = config or SearchConfig()
    raw = []
    stats = SearchStats()
    for _, part, st in enumerate_by_arrangement(avc, config):
        raw.extend(part)
        stats.merge(st)
    syms = avc_symmetries(avc)
    seen = {}
    for t in raw:
        key = min(tm.canonical_code(tm.relabel_corners(t, p),
                                    config.mirror_policy) for p in syms)
        if key not in seen:
            seen[key] = t
    reps = [tm.canonical_form(t, config.mirror_policy)
            for t in seen.values()]
    reps.sort(key=lambda t: tm.canonical_code(t, config.mirror_policy))
    stats.solutions = len(reps)
    return reps, stats


def enumerate_glued(avc: Avc, units, seeds=None, config: SearchConfig = None):
    """Tilings assembled from the given multi-tile units (glued along
    any unit boundary edge).  Seeds default to each unit placed free."""
    config = config or SearchConfig()
    nl = max(l for l, m in enumerate(avc.pentagon) if m) + 1
    type_vecs = [vt.vec[:nl] for vt, _ in avc.vertices]
    caps = [c for _, c in avc.vertices]
    prob = _Problem(5, avc.f, nl, type_vecs, caps, units)
    if seeds is None:
        seeds = units
    return run_search(prob, seeds, config.mirror_policy,
                      config.solution_cap, config.parallel_width)


def enumerate_quad_substrates(face_count, degree_counts,
                              forbid_adjacent_degree=None,
                              policy=UNORIENTED, jobs=1):
    """Unlabeled quadrilateral maps with the given vertex-degree census
    (dict degree -> count), optionally forbidding edges between two
    vertices of one degree."""
    edges = 2 * face_count
    if sum(d * c for d, c in degree_counts.items()) != 2 * edges:
        raise ValueError("degree census does not sum to twice the edges")
    if sum(degree_counts.values()) != 2 + face_count:
        raise ValueError("vertex count is not 2 + F")
    type_vecs = [(d,) for d in sorted(degree_counts)]
    caps = [degree_counts[d] for d in sorted(degree_counts)]
    word = (0, 0, 0, 0)
    units = [tile_unit(word, 1)]
    prob = _Problem(4, face_count, 1, type_vecs, caps, units, [(0, 0)],
                    forbid_deg=forbid_adjacent_degree)
    seed_deg = min((c, d) for d, c in degree_counts.items())[1]
    seeds = seed_fans(prob, [word], (seed_deg,))
    return run_search(prob, seeds, policy, None, jobs)


# -- verification ------------------------------------------------------


def face_words(t: Tiling):
    """The cyclic corner word of every face, as arrangements."""
    return [PentagonArrangement([t.corner[h] for h in cyc]) if len(cyc) == 5
            else tuple(t.corner[h] for h in cyc)
            for cyc in t.faces()]


def verify_tiling(t: Tiling, avc: Avc, arrangements=None) -> list:
    """Problems preventing ``t`` from realizing the AVC with
    corner-congruent tiles; empty list means it verifies."""
    problems = tm.validate(t, 5)
    if problems:
        return problems
    if t.face_count != avc.f:
        problems.append("face count %d != %d" % (t.face_count, avc.f))
    want = Counter()
    for vt, count in avc.vertices:
        if count:
            want[vt.sorted_word()] += count
    have = Counter()
    for vec, count in tm.vertex_census(t).items():
        have[vec] += count
    if have != want:
        problems.append("vertex census %s != AVC %s"
                        % (tm.census_text(have), tm.census_text(want)))
    allowed = set(arrangements) if arrangements is not None else None
    seen = set()
    for arr in face_words(t):
        if not isinstance(arr, PentagonArrangement):
            problems.append("face of degree %d" % len(arr))
            continue
        if arr.multiset() != avc.pentagon:
            problems.append("tile corners %r do not match the pentagon"
                            % (arr,))
        seen.add(arr)
    if allowed is not None and not seen <= allowed:
        extra = seen - allowed
        problems.append("tile arrangement(s) %s not allowed"
                        % ", ".join(sorted(repr(a) for a in extra)))
    return problems


# -- exchange-move quotient --------------------------------------------


def exchange_moves(t: Tiling, first_label: int, second_label: int):
    """Tilings one edge-exchange away from ``t``: for every edge whose
    flanking corner pair is {first, second} within both incident faces,
    swap the two labels on each side.  Only results whose face words
    stay within ``t``'s are kept, so the tile arrangement is
    preserved."""
    pair = {first_label, second_label}
    words = set(face_words(t))
    out = []
    for h in range(t.half_edge_count):
        g = t.twin[h]
        if g < h:
            continue
        if ({t.corner[h], t.corner[t.nxt[h]]} != pair
                or {t.corner[g], t.corner[t.nxt[g]]} != pair):
            continue
        corner = list(t.corner)
        corner[h], corner[t.nxt[h]] = corner[t.nxt[h]], corner[h]
        corner[g], corner[t.nxt[g]] = corner[t.nxt[g]], corner[g]
        t2 = Tiling(t.twin, t.nxt, corner, t.vertex_of)
        if set(face_words(t2)) <= words:
            out.append(t2)
    return out


def exchange_classes(tilings, first_label, second_label,
                     policy=ORIENTED):
    """One representative per orbit of the given tilings under repeated
    exchange moves, with isomorphism decided by the policy."""
    orbit_of = {}
    reps = []
    for t in tilings:
        c0 = tm.canonical_code(t, policy)
        if c0 in orbit_of:
            continue
        frontier = [t]
        seen = {c0}
        while frontier:
            cur = frontier.pop()
            for t2 in exchange_moves(cur, first_label, second_label):
                c2 = tm.canonical_code(t2, policy)
                if c2 not in seen:
                    seen.add(c2)
                    frontier.append(t2)
        hit = next((orbit_of[c] for c in seen if c in orbit_of), None)
        if hit is None:
            hit = len(reps)
            reps.append(t)
        for c in seen:
            orbit_of[c] = hit
    return reps
