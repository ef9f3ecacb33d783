"""Anglewise vertex combinations: parsing, balance checks, pentagon
arrangements (dihedral necklaces), and vertex matching."""

from __future__ import annotations

import re
from itertools import permutations

from .tiling import ALPHABET, GREEK, MAX_LABELS, greek, label_from_letter


def _countvec(labels) -> tuple:
    v = [0] * MAX_LABELS
    for l in labels:
        v[l] += 1
    return tuple(v)


def countvec_text(vec) -> str:
    out = []
    for l, m in enumerate(vec):
        if m == 1:
            out.append(greek(l))
        elif m > 1:
            out.append("%s^%d" % (greek(l), m))
    return "".join(out)


class VertexType:
    """A vertex label multiset with its multiplicity, e.g. delta epsilon^2."""

    __slots__ = ("vec", "degree")

    def __init__(self, labels):
        self.vec = _countvec(labels)
        self.degree = sum(self.vec)
        if self.degree < 3:
            raise ValueError("vertex degree %d < 3" % self.degree)

    def sorted_word(self):
        out = []
        for l, m in enumerate(self.vec):
            out.extend([l] * m)
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, VertexType) and self.vec == other.vec

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return "VertexType(%s)" % countvec_text(self.vec)


class Avc:
    """Tile count, pentagon label multiset, and vertex types with counts."""

    def __init__(self, f, pentagon, vertices):
        self.f = f
        self.pentagon = _countvec(pentagon)
        if sum(self.pentagon) != 5:
            raise ValueError("pentagon must have 5 corners")
        self.vertices = [(vt if isinstance(vt, VertexType) else VertexType(vt),
                          count) for vt, count in vertices]
        problems = check_consistency(self)
        if problems:
            raise ValueError("; ".join(problems))

    def render(self) -> str:
        pent = []
        for l, m in enumerate(self.pentagon):
            pent.extend(ALPHABET[l] * m)
        terms = []
        for vt, count in self.vertices:
            factors = []
            for l, m in enumerate(vt.vec):
                if m == 1:
                    factors.append(ALPHABET[l])
                elif m > 1:
                    factors.append("%s^%d" % (ALPHABET[l], m))
            terms.append("%d %s" % (count, " ".join(factors)))
        return "%d %s : %s" % (self.f, "".join(pent), ", ".join(terms))

    def display(self) -> str:
        pent = countvec_text(self.pentagon)
        terms = ["%d%s" % (c, countvec_text(vt.vec)) for vt, c in self.vertices]
        return "{%d%s: %s}" % (self.f, pent, ", ".join(terms))

    def __repr__(self):
        return "Avc(%s)" % self.display()


def check_consistency(avc) -> list:
    """Label balance and Euler balance; empty list means consistent."""
    problems = []
    if avc.f % 2:
        problems.append("tile count %d is odd" % avc.f)
    for l in range(MAX_LABELS):
        have = sum(count * vt.vec[l] for vt, count in avc.vertices)
        want = avc.f * avc.pentagon[l]
        if have != want:
            problems.append("label %s balance: vertices give %d, tiles give %d"
                            % (greek(l), have, want))
    total = sum(count for _, count in avc.vertices)
    if avc.f % 2 == 0 and total != 2 + 3 * avc.f // 2:
        problems.append("vertex count %d != 2 + 3f/2 = %d"
                        % (total, 2 + 3 * avc.f // 2))
    if any(count < 0 for _, count in avc.vertices):
        problems.append("negative vertex count")
    return problems


_TERM = re.compile(r"([a-h])(?:\s*\^\s*(\d+))?")


def parse_avc(text: str) -> Avc:
    """Parse the AVC grammar, e.g. ``24 abcde : 24 abc, 8 d^3, 6 e^4``."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError("missing ':' in AVC %r" % text)
    head_parts = head.split()
    if len(head_parts) != 2:
        raise ValueError("AVC head must be 'COUNT pentagon', got %r" % head)
    f = int(head_parts[0])
    pentagon = [label_from_letter(ch) for ch in head_parts[1]]
    if len(pentagon) != 5:
        raise ValueError("pentagon %r must have exactly 5 letters" % head_parts[1])
    vertices = []
    for term in tail.split(","):
        term = term.strip()
        m = re.match(r"(\d+)\s*(.*)", term)
        if not m:
            raise ValueError("bad vertex term %r at position %d"
                             % (term, text.find(term)))
        count = int(m.group(1))
        body = m.group(2)
        labels = []
        pos = 0
        for fm in _TERM.finditer(body):
            if body[pos:fm.start()].strip():
                raise ValueError("bad vertex term %r at position %d"
                                 % (term, text.find(term)))
            mult = int(fm.group(2)) if fm.group(2) else 1
            labels.extend([label_from_letter(fm.group(1))] * mult)
            pos = fm.end()
        if body[pos:].strip() or not labels:
            raise ValueError("bad vertex term %r at position %d"
                             % (term, text.find(term)))
        vertices.append((VertexType(labels), count))
    return Avc(f, pentagon, vertices)


# -- pentagon arrangements ---------------------------------------------


class PentagonArrangement:
    """A cyclic word of five labels up to rotation and reflection."""

    __slots__ = ("cycle", "chirality_note")

    def __init__(self, word):
        word = tuple(word)
        if len(word) != 5:
            raise ValueError("arrangement needs 5 labels")
        rots = [word[i:] + word[:i] for i in range(5)]
        rev = word[::-1]
        refl = [rev[i:] + rev[:i] for i in range(5)]
        self.cycle = min(rots + refl)
        self.chirality_note = self.cycle in refl

    def multiset(self):
        return _countvec(self.cycle)

    def variants(self):
        """All distinct linear readings: rotations of the word and of its
        reversal (the mirror-image tile)."""
        seen = []
        for w in (self.cycle, self.cycle[::-1]):
            for i in range(5):
                lin = w[i:] + w[:i]
                if lin not in seen:
                    seen.append(lin)
        return seen

    def __eq__(self, other):
        return (isinstance(other, PentagonArrangement)
                and self.cycle == other.cycle)

    def __hash__(self):
        return hash(self.cycle)

    def __repr__(self):
        return "PentagonArrangement(%s)" % "".join(greek(l) for l in self.cycle)


def enumerate_arrangements(labels):
    """All arrangements of a 5-label multiset up to dihedral symmetry."""
    labels = tuple(labels)
    if len(labels) != 5:
        raise ValueError("need exactly 5 labels")
    return sorted({PentagonArrangement(p) for p in permutations(labels)},
                  key=lambda a: a.cycle)


def aad_table(arr: PentagonArrangement):
    """For each corner position of the cycle, its two neighboring labels."""
    w = arr.cycle
    return {i: (w[(i - 1) % 5], w[(i + 1) % 5]) for i in range(5)}


def neighbors_of_label(arr: PentagonArrangement, lbl):
    """Multiset of labels adjacent to occurrences of ``lbl`` in the cycle."""
    table = aad_table(arr)
    out = []
    for i, l in enumerate(arr.cycle):
        if l == lbl:
            out.extend(table[i])
    return sorted(out)


def match_vertex(partial, avc: Avc):
    """Vertex types of the AVC containing the partial label multiset."""
    pv = partial if isinstance(partial, tuple) and len(partial) == MAX_LABELS \
        else _countvec(partial)
    out = []
    for vt, count in avc.vertices:
        if all(pv[l] <= vt.vec[l] for l in range(MAX_LABELS)):
            out.append(vt)
    return out


# -- the AVC families used throughout ----------------------------------


def avc_emt(f: int, y2: int) -> Avc:
    """The earth-map AVC family at concrete f and y2."""
    if f % 4 or f < 8:
        raise ValueError("f must be a multiple of 4, at least 8")
    if not (y2 == 2 or (y2 == 0 and f % 8 == 4)):
        raise ValueError("y2 must be 2, or 0 when f = 4 mod 8")
    vertices = [(VertexType([0, 1, 2]), f)]
    de2 = (f - 4 + 2 * y2) // 2
    if de2:
        vertices.append((VertexType([3, 4, 4]), de2))
    if 4 - 2 * y2:
        if (f + 4) % 8:
            raise ValueError("exponent (f+4)/8 is not an integer")
        vertices.append((VertexType([3] * ((f + 4) // 8) + [4]), 4 - 2 * y2))
    if y2:
        vertices.append((VertexType([3] * (f // 4)), y2))
    return Avc(f, [0, 1, 2, 3, 4], vertices)
