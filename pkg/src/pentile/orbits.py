"""Orbit counting: Burnside counts of sign assignments to faces under
rotation groups, direct enumeration cross-checks, and the constrained
corner-exchange count on marked skeletons."""

from __future__ import annotations

from . import tiling as tm
from .tiling import ORIENTED, UNORIENTED, Tiling
from .build import platonic


def automorphisms(t: Tiling, policy: str = ORIENTED):
    """All automorphisms as half-edge permutations (identity included).
    Under the unoriented policy the orientation-reversing ones are
    appended after the rotations."""
    n = len(t.twin)
    best = None
    hits = []
    for root in range(n):
        code = tm._code_stream(t.twin, t.nxt, t.corner, root)
        if best is None or code < best:
            best = code
            hits = [root]
        elif code == best:
            hits.append(root)
    base_new, _ = tm._bfs_order(t.twin, t.nxt, hits[0])
    perms = []

    def close(new):
        inv = [0] * n
        for h in range(n):
            inv[new[h]] = h
        return tuple(inv[base_new[h]] for h in range(n))

    for root in hits:
        new, _ = tm._bfs_order(t.twin, t.nxt, root)
        perms.append(close(new))
    if policy == UNORIENTED:
        m = tm.mirror(t)
        for root in range(n):
            if tm._code_stream(m.twin, m.nxt, m.corner, root) == best:
                new, _ = tm._bfs_order(m.twin, m.nxt, root)
                perms.append(close(new))
    elif policy != ORIENTED:
        raise ValueError("unknown policy %r" % policy)
    return perms


def face_permutations(t: Tiling, policy: str = ORIENTED):
    """The automorphism group as permutations of face ids, verified to
    be closed under composition."""
    face_of = t.face_of()
    rep = {}
    for h in range(len(t.twin)):
        rep.setdefault(face_of[h], h)
    perms = set()
    for p in automorphisms(t, policy):
        perms.add(tuple(face_of[p[rep[f]]] for f in sorted(rep)))
    perms = sorted(perms)
    k = len(perms[0])
    table = set(perms)
    ident = tuple(range(k))
    if ident not in table:
        raise AssertionError("automorphism group lacks the identity")
    for a in perms:
        for b in perms:
            if tuple(a[b[f]] for f in range(k)) not in table:
                raise AssertionError("face permutations not closed")
    return perms


def _cycle_count(perm):
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def burnside_face_signs(solid: str) -> int:
    """Number of +/- assignments to the faces of a Platonic solid up to
    rotation, by Burnside's lemma (mirror images stay distinct)."""
    group = face_permutations(platonic(solid), ORIENTED)
    total = sum(2 ** _cycle_count(g) for g in group)
    assert total % len(group) == 0
    return total // len(group)


def direct_orbit_count(solid: str, predicate=None) -> int:
    """Orbit count of +/- face assignments by explicit enumeration;
    independent cross-check for burnside_face_signs."""
    group = face_permutations(platonic(solid), ORIENTED)
    k = len(group[0])
    if k > 20:
        raise ValueError("2^%d assignments is too many" % k)
    if predicate is not None:
        orbits = 0
        for bits in range(1 << k):
            a = tuple((bits >> f) & 1 for f in range(k))
            if not predicate(a):
                continue
            if min(tuple(a[g[f]] for g_ in (g,) for f in range(k))
                   for g in group) == a:
                orbits += 1
        return orbits
    # sweep with orbit marking; per-element images via half-word tables
    half = k // 2
    lo_mask = (1 << half) - 1
    tables = []
    for g in group:
        lo = [0] * (1 << half)
        hi = [0] * (1 << (k - half))
        for pat in range(1 << half):
            v = 0
            for f in range(k):
                if g[f] < half and (pat >> g[f]) & 1:
                    v |= 1 << f
            lo[pat] = v
        for pat in range(1 << (k - half)):
            v = 0
            for f in range(k):
                if g[f] >= half and (pat >> (g[f] - half)) & 1:
                    v |= 1 << f
            hi[pat] = v
        tables.append((lo, hi))
    visited = bytearray(1 << k)
    orbits = 0
    for a in range(1 << k):
        if visited[a]:
            continue
        orbits += 1
        al, ah = a & lo_mask, a >> half
        for lo, hi in tables:
            visited[lo[al] | hi[ah]] = 1
    return orbits


# -- constrained corner-exchange count ---------------------------------


def exchange_slot_pairs(t: Tiling, first_label: int, second_label: int):
    """Per face, the half-edge pair (corner with first_label, corner
    with second_label); each must occur exactly once in every face."""
    pairs = []
    for cyc in t.faces():
        a = [h for h in cyc if t.corner[h] == first_label]
        b = [h for h in cyc if t.corner[h] == second_label]
        if len(a) != 1 or len(b) != 1:
            raise ValueError("face lacks a unique slot pair")
        pairs.append((a[0], b[0]))
    return pairs


def beta_slot_pairs(t: Tiling, movable_label: int = 1, base_label: int = 0):
    """Per face, the half-edge pair (unique corner with the movable
    label, unique base-label corner sitting at an all-base vertex).
    These are the two ends of the face's marked edge in the skeletons
    whose movable corner may shift onto a bare degree-3 vertex."""
    words = t.vertex_labels()
    bare = {v for v, w in enumerate(words) if set(w) == {base_label}}
    pairs = []
    for cyc in t.faces():
        a = [h for h in cyc if t.corner[h] == movable_label]
        b = [h for h in cyc if t.corner[h] == base_label
             and t.vertex_of[h] in bare]
        if len(a) != 1 or len(b) != 1:
            raise ValueError("face lacks a unique slot pair")
        pairs.append((a[0], b[0]))
    return pairs


def _fixed_assignments(t, pairs, perm):
    """Number of valid slot choices invariant under the half-edge
    permutation.  A choice puts the movable corner at one slot of each
    pair; validity = at most one movable corner per vertex."""
    index = {}
    for i, (a, b) in enumerate(pairs):
        index[a] = (i, 0)
        index[b] = (i, 1)
    # orbit structure: pair i with choice c maps to pair j, choice c^flip
    succ = []
    for a, b in pairs:
        pa, pb = index[perm[a]], index[perm[b]]
        if pa[0] != pb[0]:
            raise AssertionError("permutation does not preserve slot pairs")
        succ.append((pa[0], pa[1]))
    seen = [False] * len(pairs)
    orbits = []
    for i in range(len(pairs)):
        if seen[i]:
            continue
        members = []
        j, flip = i, 0
        while not seen[j]:
            seen[j] = True
            members.append((j, flip))
            j, step = succ[j]
            flip ^= step
        if flip:
            return 0    # inconsistent orbit: no invariant choice
        orbits.append(members)
    vof = t.vertex_of
    used = {}
    count = 0

    def rec(k):
        nonlocal count
        if k == len(orbits):
            count += 1
            return
        for choice in (0, 1):
            placed = []
            ok = True
            for j, flip in orbits[k]:
                slot = pairs[j][choice ^ flip]
                v = vof[slot]
                if used.get(v):
                    ok = False
                    break
                used[v] = True
                placed.append(v)
            if ok:
                rec(k + 1)
            for v in placed:
                used[v] = False
        return

    rec(0)
    return count


def count_beta_assignments(t: Tiling, pairs, policy: str = ORIENTED):
    """Count the ways of moving one corner per face between its two
    marked slots so no vertex receives two, up to the skeleton's
    automorphisms under the policy.  Returns (orbit_count, raw_count)."""
    n = len(t.twin)
    group = automorphisms(t, policy)
    raw = _fixed_assignments(t, pairs, tuple(range(n)))
    total = sum(_fixed_assignments(t, pairs, g) for g in group)
    assert total % len(group) == 0
    return total // len(group), raw
