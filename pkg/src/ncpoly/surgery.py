"""Local surgery on the boundary of the 64-vertex cubical 4-polytope.

A chain of three facets A, B, C (3-cubes sharing two quadrilaterals) is cut
out of the boundary complex and replaced by a cubical ball on the same 16
vertices: one central cube stretched between the free quadrilaterals of A
and C, four side cubes wrapping around it, four new edges and eight new
quadrilaterals, no new vertices.  The result is a cubical 3-sphere with
more facets than the polytope it came from.
"""

from dataclasses import dataclass

from . import signvec
from .complexes import CubicalComplex, from_cube_facets
from .errors import ConstructionError
from .gale import facets_gale, to_sign_vector

N = 6
D = 4

FACET_A = signvec.parse("-+00+0")
FACET_B = signvec.parse("-00++0")
FACET_C = signvec.parse("--0+00")


def boundary_facets():
    """Facet sign vectors of the 64-vertex projected cube."""
    return [to_sign_vector(a, N) for a in facets_gale(N, D)]


def boundary_complex() -> CubicalComplex:
    return from_cube_facets(N, boundary_facets())


def _quad_between():
    ab = signvec.meet(FACET_A, FACET_B)
    bc = signvec.meet(FACET_B, FACET_C)
    if ab is None or bc is None or signvec.meet(FACET_A, FACET_C) is not None:
        raise ConstructionError("the three facets do not form a chain")
    return ab, bc


def build_phi() -> CubicalComplex:
    """The chain A u B u C as a subcomplex of the boundary."""
    facets = set(boundary_facets())
    for f in (FACET_A, FACET_B, FACET_C):
        if f not in facets:
            raise ConstructionError("chain facet missing from the facet list")
    return from_cube_facets(N, [FACET_A, FACET_B, FACET_C])


def phi_boundary_faces():
    """2-faces of the chain lying in exactly one of its three cubes."""
    ab, bc = _quad_between()
    quads = []
    for top in (FACET_A, FACET_B, FACET_C):
        quads.extend(signvec.subfaces(top, 2))
    counts = {}
    for q in quads:
        counts[q] = counts.get(q, 0) + 1
    inner = {ab, bc}
    return [q for q, c in counts.items() if c == 1 and q not in inner]


def phi_boundary_complex() -> CubicalComplex:
    return from_cube_facets(N, phi_boundary_faces())


def intersection_lemma_check() -> bool:
    """Every other facet meets the chain boundary in at most one face.

    Additionally re-checks the three disjointness facts behind it: no facet
    sees vertices of both members of (A-B, B-A), (B-C, C-B), (A-B, C-B).
    """
    ab, bc = _quad_between()
    a_minus_b = _opposite(FACET_A, ab)
    b_minus_a = _opposite(FACET_B, ab)
    b_minus_c = _opposite(FACET_B, bc)
    c_minus_b = _opposite(FACET_C, bc)

    others = [f for f in boundary_facets() if f not in (FACET_A, FACET_B, FACET_C)]

    boundary = phi_boundary_faces()
    boundary_all = set()
    for q in boundary:
        for k in range(3):
            boundary_all.update(signvec.subfaces(q, k))
    for facet in others:
        common = [w for w in boundary_all if signvec.is_subface(w, facet)]
        if not common:
            continue
        maximal = [
            w
            for w in common
            if not any(u != w and signvec.is_subface(w, u) for u in common)
        ]
        if len(maximal) != 1:
            return False
        top = maximal[0]
        if set(common) != set(
            sub for k in range(signvec.face_dim(top) + 1) for sub in signvec.subfaces(top, k)
        ):
            return False

    for x, y in ((a_minus_b, b_minus_a), (b_minus_c, c_minus_b), (a_minus_b, c_minus_b)):
        xv = set(signvec.vertices_bits(x))
        yv = set(signvec.vertices_bits(y))
        for facet in others:
            fv = signvec.vertex_set(facet)
            if fv & xv and fv & yv:
                return False
    return True


def _opposite(facet, quad):
    """Face of ``facet`` opposite to the subface ``quad``."""
    out = list(facet)
    changed = False
    for i, (f, q) in enumerate(zip(facet, quad)):
        if f == 0 and q != 0:
            out[i] = -q
            changed = True
    if not changed:
        raise ConstructionError("quad is not a proper subface")
    return tuple(out)


def _glue_ball_cells():
    """New cells of the surgery: 4 edges, 8 quads, 5 cubes (vertex bitmask
    sets).  The central cube stretches from A-B down to C-B; a side cube for
    each free coordinate value wraps between a central side quad and the
    chain boundary."""
    ab, bc = _quad_between()
    top = _opposite(FACET_A, ab)  # A - B
    bottom = _opposite(FACET_C, bc)  # C - B
    free = signvec.zero_positions(top)
    if signvec.zero_positions(bottom) != free or len(free) != 2:
        raise ConstructionError("top and bottom quads do not share free coordinates")
    p, q = free

    def vert(base, sp, sq):
        sv = list(base)
        sv[p] = sp
        sv[q] = sq
        return signvec.bits_from_vertex_tuple(tuple(sv))

    edges = []
    for sp in (-1, 1):
        for sq in (-1, 1):
            edges.append(frozenset({vert(top, sp, sq), vert(bottom, sp, sq)}))

    central = frozenset(
        vert(base, sp, sq)
        for base in (top, bottom)
        for sp in (-1, 1)
        for sq in (-1, 1)
    )

    side_quads = []
    for pos, other in ((p, q), (q, p)):
        for s in (-1, 1):
            quad = set()
            for base in (top, bottom):
                for t in (-1, 1):
                    sv = list(base)
                    sv[pos] = s
                    sv[other] = t
                    quad.add(signvec.bits_from_vertex_tuple(tuple(sv)))
            side_quads.append((pos, s, frozenset(quad)))

    # path quads: top edge -> its A-quad edge -> B-quad edge -> bottom edge,
    # closed by a new edge; one for each (sign at p, sign at q) pair
    ab_face = ab
    bc_face = bc
    path_quads = []
    for sp in (-1, 1):
        for sq in (-1, 1):
            quad = {
                vert(top, sp, sq),
                vert(ab_face, sp, sq),
                vert(bc_face, sp, sq),
                vert(bottom, sp, sq),
            }
            path_quads.append((sp, sq, frozenset(quad)))

    phi_vertices = signvec.vertex_set(FACET_A) | signvec.vertex_set(FACET_B) | signvec.vertex_set(FACET_C)
    side_cubes = []
    for pos, s, quad in side_quads:
        cube = frozenset(
            b for b in phi_vertices if signvec.vertex_tuple_from_bits(b, N)[pos] == s
        )
        if len(cube) != 8:
            raise ConstructionError("side cube does not have 8 vertices")
        side_cubes.append(cube)

    new_quads = [fq for _, _, fq in side_quads] + [fq for _, _, fq in path_quads]
    cubes = [central] + side_cubes
    return edges, new_quads, cubes


def build_psi() -> CubicalComplex:
    """Perform the surgery and validate the resulting complex."""
    if not intersection_lemma_check():
        raise ConstructionError("intersection lemma fails; surgery unsafe")
    ab, bc = _quad_between()
    base = boundary_complex()
    remove_3 = {signvec.vertex_set(f) for f in (FACET_A, FACET_B, FACET_C)}
    remove_2 = {signvec.vertex_set(ab), signvec.vertex_set(bc)}
    edges, quads, cubes = _glue_ball_cells()
    faces_by_dim = {
        0: set(base.faces_by_dim[0]),
        1: set(base.faces_by_dim[1]) | set(edges),
        2: (set(base.faces_by_dim[2]) - remove_2) | set(quads),
        3: (set(base.faces_by_dim[3]) - remove_3) | set(cubes),
    }
    psi = CubicalComplex(faces_by_dim)
    psi.validate()
    if not psi.is_pseudomanifold():
        raise ConstructionError("surgered complex is not a pseudomanifold")
    return psi


@dataclass
class SphereReport:
    ridges_in_two_facets: bool
    connected: bool
    euler_zero: bool
    links_ok: bool

    @property
    def ok(self):
        return (
            self.ridges_in_two_facets
            and self.connected
            and self.euler_zero
            and self.links_ok
        )


def verify_sphere_like(cx: CubicalComplex) -> SphereReport:
    """Certificate that a cubical 3-complex looks like a closed 3-sphere:
    pseudomanifold, connected, Euler characteristic 0, and every vertex link
    a closed connected surface with Euler characteristic 2."""
    ridges = cx.is_pseudomanifold()
    connected = cx.is_connected()
    euler = cx.euler_characteristic() == 0
    links = all(cx.vertex_link_surface_check(v) for v in sorted(cx.vertex_ids))
    return SphereReport(ridges, connected, euler, links)


def chain_edge_facet_degrees():
    """Facet degrees, in the unmodified boundary, of the eight edges of the
    two quadrilaterals B-C and B-A."""
    ab, bc = _quad_between()
    b_minus_c = _opposite(FACET_B, bc)
    b_minus_a = _opposite(FACET_B, ab)
    facets = boundary_facets()
    degrees = {}
    for quad in (b_minus_c, b_minus_a):
        for edge in signvec.subfaces(quad, 1):
            degrees[edge] = sum(
                1 for f in facets if signvec.is_subface(edge, f)
            )
    return degrees
