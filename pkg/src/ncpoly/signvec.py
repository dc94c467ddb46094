"""Sign vectors naming the faces of a combinatorial n-cube.

A face of the n-cube is a vector in {+1, -1, 0}^n; zero positions are the
free coordinates, so a face with k zeroes is a k-face.  Vertices are encoded
as bitmasks: bit i set means coordinate i equals +1.
"""

from itertools import combinations, product

CHARS = {-1: "-", 0: "0", 1: "+"}
VALUES = {"-": -1, "0": 0, "+": 1}
# lexicographic face order used throughout: - < 0 < +
LEX = {-1: 0, 0: 1, 1: 2}


def parse(text):
    """Parse a string like '-+00+0' into a sign vector tuple."""
    try:
        return tuple(VALUES[c] for c in text)
    except KeyError:
        raise ValueError(f"bad sign vector {text!r}") from None


def fmt(sv):
    return "".join(CHARS[s] for s in sv)


def lex_key(sv):
    return tuple(LEX[s] for s in sv)


def face_dim(sv):
    return sum(1 for s in sv if s == 0)


def zero_positions(sv):
    return tuple(i for i, s in enumerate(sv) if s == 0)


def is_subface(sub, face):
    """True when ``sub`` is a face of ``face`` (fills some of its zeroes)."""
    return all(f == 0 or s == f for s, f in zip(sub, face))


def meet(a, b):
    """Intersection of two cube faces, or None when they are disjoint."""
    out = []
    for x, y in zip(a, b):
        if x == 0:
            out.append(y)
        elif y == 0 or x == y:
            out.append(x)
        else:
            return None
    return tuple(out)


def vertices_bits(sv):
    """All vertices of a face, as bitmasks over the +1 coordinates."""
    base = 0
    for i, s in enumerate(sv):
        if s == 1:
            base |= 1 << i
    zeros = zero_positions(sv)
    verts = []
    for bits in range(1 << len(zeros)):
        v = base
        for t, pos in enumerate(zeros):
            if bits >> t & 1:
                v |= 1 << pos
        verts.append(v)
    return verts


def vertex_set(sv):
    return frozenset(vertices_bits(sv))


def vertex_tuple_from_bits(bits, n):
    return tuple(1 if bits >> i & 1 else -1 for i in range(n))


def bits_from_vertex_tuple(vt):
    bits = 0
    for i, s in enumerate(vt):
        if s == 1:
            bits |= 1 << i
    return bits


def subfaces(sv, k):
    """All k-faces of the cube face ``sv``."""
    zeros = zero_positions(sv)
    if k > len(zeros):
        return
    sv = list(sv)
    for keep in combinations(zeros, k):
        fill = [p for p in zeros if p not in keep]
        for signs in product((-1, 1), repeat=len(fill)):
            face = sv[:]
            for p, s in zip(fill, signs):
                face[p] = s
            yield tuple(face)


def all_faces(n, max_zeros=None):
    """Every face of the n-cube with at most ``max_zeros`` zeroes."""
    if max_zeros is None:
        max_zeros = n
    for sv in product((-1, 0, 1), repeat=n):
        if face_dim(sv) <= max_zeros:
            yield sv


def cube_face_count(n, k):
    from math import comb

    return comb(n, k) * 2 ** (n - k)
