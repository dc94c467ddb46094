"""The n = d+1 family: explicit constructions, the liftable classification,
and the extremality of the neighborly member.

The liftable polytopes live abstractly inside the boundary of the (d+1)-cube
as the boundary spheres of balls assembled from k opposite facet pairs, l
single facets, and m untouched pairs (k + l + m = d + 1).  Their f-vectors
follow a closed formula whose correction term is minimized, over all valid
triples, exactly by the neighborly one.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from . import signvec
from .complexes import CubicalComplex
from .errors import TheoremViolationError
from .polytope import (
    HPolytope,
    VPolytope,
    face_lattice,
    facets_from_vrep,
    graph_of,
    hypercube_graph_iso,
    is_cubical,
    vertices_from_hrep,
)


# ---------------------------------------------------------------------------
# first construction: conv(Q x 2Q u 2Q x Q)
# ---------------------------------------------------------------------------


def first_construction(d):
    """The symmetric even-dimensional example: H- and V-description of
    conv(Q x 2Q u 2Q x Q) with Q = [-1, 1]^(d/2), cross-checked by the
    oracle in both directions."""
    if d % 2 or d < 2:
        raise ValueError("this construction needs even d >= 2")
    r = d // 2
    pts = set()
    for small in product((-1, 1), repeat=r):
        for big in product((-2, 2), repeat=r):
            pts.add(small + big)
            pts.add(big + small)
    v = VPolytope(d, sorted(pts))
    ineqs = []
    for i in range(d):
        for s in (-1, 1):
            normal = [0] * d
            normal[i] = s
            ineqs.append((normal, 2))
    for i in range(r):
        for j in range(r, d):
            for si, sj in ((-1, -1), (-1, 1), (1, -1), (1, 1)):
                normal = [0] * d
                normal[i] = si
                normal[j] = sj
                ineqs.append((normal, 3))
    h = HPolytope(d, ineqs)
    hv = vertices_from_hrep(h)
    if set(hv.points) != set(v.points):
        raise TheoremViolationError("H- and V-descriptions disagree")
    inc = facets_from_vrep(v)
    want = {tuple(Fraction(x) for x in n) + (Fraction(rhs),) for n, rhs in ineqs}
    got = {tuple(Fraction(x) for x in n) + (Fraction(rhs),) for n, rhs in inc.inequalities}
    if want != got:
        raise TheoremViolationError("oracle facets differ from the stated system")
    return h, v


# ---------------------------------------------------------------------------
# the liftable family
# ---------------------------------------------------------------------------


def valid_triples(d):
    """Normalized triples (k, l, m): k >= m >= 1, l >= 1, k+l+m = d+1."""
    out = []
    for k in range(1, d + 1):
        for m in range(1, k + 1):
            l = d + 1 - k - m
            if l >= 1:
                out.append((k, l, m))
    return sorted(out)


def _ball_facets(d, k, l, m):
    """Ball facets as (position, sign): both sides for the first k pairs,
    the plus side for the next l."""
    facets = [(i, s) for i in range(k) for s in (-1, 1)]
    facets += [(i, 1) for i in range(k, k + l)]
    return facets


def pklm_sphere(d, triple) -> CubicalComplex:
    """Boundary sphere of the ball: faces of the (d+1)-cube lying in a
    facet of the ball and in a facet of its complement."""
    k, l, m = triple
    if k + l + m != d + 1 or l < 1 or k < 0 or m < 0:
        raise ValueError("invalid triple")
    ball = set(_ball_facets(d, k, l, m))
    comp = [
        (i, s)
        for i in range(d + 1)
        for s in (-1, 1)
        if (i, s) not in ball
    ]
    faces_by_dim = {}
    for sv in signvec.all_faces(d + 1, max_zeros=d - 1):
        in_ball = any(sv[i] == s for i, s in ball)
        in_comp = any(sv[i] == s for i, s in comp)
        if in_ball and in_comp:
            faces_by_dim.setdefault(signvec.face_dim(sv), set()).add(
                signvec.vertex_set(sv)
            )
    return CubicalComplex(faces_by_dim)


def pklm_fvector(d, triple):
    """Closed-form f-vector (f_0, ..., f_{d-1}) of the boundary sphere."""
    k, l, m = triple
    out = []
    for i in range(d + 1, 1, -1):  # f_{d+1-i} for i = d+1 .. 2
        total = comb(d + 1, i) * 2 ** i - delta(i, k, l, m)
        out.append(total)
    return tuple(out)


def delta(i, k, l, m) -> int:
    """Correction term subtracted from the cube-face count."""
    return sum(
        comb(l, i - j) * (comb(k, j) + comb(m, j)) * 2 ** j for j in range(i + 1)
    )


def neighborly_triples(d):
    """Triples whose sphere shares the cube's floor(d/2)-1 skeleton.

    A triple qualifies exactly when m >= r+1 (with k >= m forcing the twin
    condition).  For even d there is one triple; for odd d exactly two, tied
    through delta(i, k, 2, k) = delta(i, k+1, 1, k).
    """
    if d < 4:
        raise ValueError("need d >= 4")
    r = d // 2 - 1
    return [t for t in valid_triples(d) if t[2] >= r + 1]


@dataclass
class UBCReport:
    d: int
    checked: int
    failures: list
    minimizers: dict
    neighborly: list

    @property
    def ok(self):
        return not self.failures


def ubc_polytope_case(d) -> UBCReport:
    """Exhaustively verify the four monotonicity facts about delta and that
    the neighborly triple(s) minimize it (so maximize every f_i)."""
    triples = valid_triples(d)
    neighborly = neighborly_triples(d)
    failures = []
    checked = 0
    for i in range(0, d + 2):
        for (k, l, m) in triples:
            if k > m:
                checked += 1
                if delta(i, k, l, m) < delta(i, k - 1, l, m + 1):
                    failures.append(("shift-pair", i, (k, l, m)))
            if l >= 2:
                checked += 1
                if delta(i, k, l, m) < delta(i, k + 1, l - 2, m + 1):
                    failures.append(("split-l", i, (k, l, m)))
            if l == 2 and k > m:
                checked += 1
                if delta(i, k, 2, m) < delta(i, k, 1, m + 1):
                    failures.append(("drop-l2", i, (k, l, m)))
            if l == 2 and k == m:
                checked += 1
                if delta(i, k, 2, k) != delta(i, k + 1, 1, k):
                    failures.append(("tie", i, (k, l, m)))
    minimizers = {}
    for i in range(2, d + 2):
        best = min(delta(i, *t) for t in triples)
        argmin = [t for t in triples if delta(i, *t) == best]
        minimizers[i] = argmin
        for t in neighborly:
            if delta(i, *t) != best:
                failures.append(("neighborly-not-minimal", i, t))
    report = UBCReport(d, checked, failures, minimizers, neighborly)
    if failures:
        raise TheoremViolationError(f"delta relations failed: {failures[:3]}")
    return report


# ---------------------------------------------------------------------------
# the two ambiguity witnesses: 4-polytopes with the 5-cube graph
# ---------------------------------------------------------------------------


def _sign_expand(rows):
    pts = []
    for a, b, c, e in rows:
        for sa in (-1, 1):
            for sb in (-1, 1):
                pts.append((sa * Fraction(a), sb * Fraction(b), Fraction(c), Fraction(e)))
    return pts


CUBICAL_WITNESS_POINTS = _sign_expand(
    [
        (1, 1, 1, 1),
        (1, 1, 4, 1),
        (2, 2, 3, Fraction(4, 5)),
        (2, 2, 2, Fraction(4, 5)),
        (3, 3, 2, Fraction(1, 2)),
        (3, 3, 3, Fraction(1, 2)),
        (4, 4, 0, 0),
        (4, 4, 5, 0),
    ]
)

# The last coordinate is a lifting height over the 12-vertex base facet at
# x4 = 0; the five heights are pinned exactly by requiring the 22 non-base
# facets to be planar (see the coplanarity test).
NONCUBICAL_WITNESS_POINTS = _sign_expand(
    [
        (1, 1, 1, 0),
        (2, 2, 4, 0),
        (3, 3, 3, 1),
        (3, 3, 2, Fraction(5, 4)),
        (4, 4, 2, Fraction(41, 20)),
        (4, 4, 3, Fraction(9, 5)),
        (Fraction(56, 13), Fraction(56, 13), 0, Fraction(779, 260)),
        (5, 5, 16, 0),
    ]
)


@dataclass
class WitnessReport:
    all_vertices: bool
    cube_graph: bool
    cubical: bool
    cube_facet_at_base: bool
    large_facet_sizes: list

    @property
    def ok(self):
        return self.all_vertices and self.cube_graph


def _witness_report(points):
    v = VPolytope(4, points)
    inc = facets_from_vrep(v)
    lattice = face_lattice(inc)
    all_vertices = len(lattice.get(0, ())) == len(points)
    iso = hypercube_graph_iso(graph_of(inc), 5)
    cubical = is_cubical(inc)
    base = [
        f
        for f, (normal, rhs) in zip(inc.incidence, inc.inequalities)
        if normal == (0, 0, 0, -1) and rhs == 0
    ]
    cube_facet_at_base = False
    if base and len(base[0]) == 8:
        idx = sorted(base[0])
        sub = VPolytope(3, [v.points[i][:3] for i in idx])
        cube_facet_at_base = is_cubical(facets_from_vrep(sub))
    large = sorted(len(f) for f in inc.incidence if len(f) > 8)
    return WitnessReport(
        all_vertices=all_vertices,
        cube_graph=iso is not None,
        cubical=cubical,
        cube_facet_at_base=cube_facet_at_base,
        large_facet_sizes=large,
    )


def verify_ambiguity_witnesses():
    """Check both embedded 32-point polytopes: the cubical one (with a
    3-cube facet in the x4 = 0 hyperplane) and the non-cubical one (with a
    single 12-vertex facet), both carrying the 5-cube graph."""
    cub = _witness_report(CUBICAL_WITNESS_POINTS)
    noncub = _witness_report(NONCUBICAL_WITNESS_POINTS)
    return cub, noncub
