"""Exact polytope representations and the brute-force geometric oracle.

Both enumeration directions work by exhaustive subset enumeration with
rational arithmetic: vertices of an H-polytope come from solving all tight
square subsystems, facets of a V-polytope from all hyperplanes spanned by
affinely independent point subsets.  This is deliberately simple; at desk
scale (at most a few million subsets) auditability beats asymptotics.
"""

from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import (
    DimensionError,
    EmptyPolytopeError,
    SpanError,
    UnboundedPolytopeError,
)
from .intops import (
    bareiss_det,
    echelon_kernel,
    int_rank,
    primitive,
    reduce_row,
)


class HPolytope:
    """Inequality description: normal . x <= rhs, in a fixed order.

    The order of the inequality list is part of the identity; constraint
    indices are meaningful to callers.
    """

    __slots__ = ("dim", "inequalities")

    def __init__(self, dim, inequalities):
        self.dim = dim
        ineqs = []
        for normal, rhs in inequalities:
            normal = tuple(Fraction(x) for x in normal)
            if len(normal) != dim:
                raise DimensionError("normal length differs from dimension")
            if not any(normal):
                raise ValueError("all-zero normal")
            ineqs.append((normal, Fraction(rhs)))
        self.inequalities = tuple(ineqs)

    def __eq__(self, other):
        return (
            isinstance(other, HPolytope)
            and self.dim == other.dim
            and self.inequalities == other.inequalities
        )

    def to_json_dict(self):
        return {
            "dim": self.dim,
            "inequalities": [
                {"normal": [str(x) for x in n], "rhs": str(r)}
                for n, r in self.inequalities
            ],
        }


class VPolytope:
    """Vertex description with optional sign-vector labels per point."""

    __slots__ = ("dim", "points", "labels")

    def __init__(self, dim, points, labels=None):
        self.dim = dim
        pts = tuple(tuple(Fraction(x) for x in p) for p in points)
        if any(len(p) != dim for p in pts):
            raise DimensionError("point length differs from dimension")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        self.points = pts
        if labels is not None:
            labels = tuple(tuple(s) for s in labels)
            if len(labels) != len(pts):
                raise ValueError("one label per point required")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be pairwise distinct")
            if len({len(s) for s in labels}) > 1:
                raise ValueError("labels must have uniform length")
        self.labels = labels

    def to_json_dict(self):
        d = {
            "dim": self.dim,
            "points": [[str(x) for x in p] for p in self.points],
        }
        if self.labels is not None:
            d["labels"] = ["".join("+" if s > 0 else "-" for s in lab) for lab in self.labels]
        return d


class IncidenceStructure:
    """Vertex-facet incidence plus the face lattice derived from it."""

    def __init__(self, vertex_count, incidence, coords=None, labels=None, inequalities=None):
        self.vertex_count = vertex_count
        self.incidence = tuple(frozenset(s) for s in incidence)
        self.facet_count = len(self.incidence)
        if any(not s for s in self.incidence):
            raise ValueError("empty facet")
        self.coords = coords
        self.labels = labels
        self.inequalities = inequalities
        self._lattice = None

    def to_json_dict(self):
        d = {
            "vertex_count": self.vertex_count,
            "facet_count": self.facet_count,
            "incidence": [sorted(s) for s in self.incidence],
        }
        if self.inequalities is not None:
            d["inequalities"] = [
                {"normal": [str(x) for x in n], "rhs": str(r)}
                for n, r in self.inequalities
            ]
        if self._lattice is not None:
            d["faces_by_dim"] = {
                str(k): [sorted(f) for f in faces] for k, faces in self._lattice.items()
            }
        return d


def canonical_inequality(normal, rhs):
    """Primitive integer form of normal . x <= rhs (positive scaling only)."""
    mult = lcm(*(x.denominator for x in normal), Fraction(rhs).denominator)
    row = [int(x * mult) for x in normal] + [int(Fraction(rhs) * mult)]
    row = primitive(row)
    return tuple(row[:-1]), row[-1]


def _scaled_int_points(points):
    """Clear denominators globally; scaling all points preserves the hull."""
    mult = 1
    for p in points:
        for x in p:
            mult = lcm(mult, x.denominator)
    return [tuple(int(x * mult) for x in p) for p in points], mult


def affine_rank(points):
    """Dimension of the affine hull of a rational point set."""
    if not points:
        return -1
    ipts, _ = _scaled_int_points([tuple(Fraction(x) for x in p) for p in points])
    base = ipts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in ipts[1:]]
    return int_rank(diffs)


# ---------------------------------------------------------------------------
# vertex enumeration from an H-description
# ---------------------------------------------------------------------------


def _fm_feasible(rows, d):
    """Fourier-Motzkin feasibility for rows (normal..., rhs) over ints."""
    rows = [list(r) for r in rows]
    for col in range(d):
        pos, neg, rest = [], [], []
        for r in rows:
            (pos if r[col] > 0 else neg if r[col] < 0 else rest).append(r)
        for p in pos:
            for q in neg:
                rest.append(
                    [p[j] * -q[col] + q[j] * p[col] for j in range(d + 1)]
                )
        rows = [list(primitive(r)) for r in rest]
    return all(r[d] >= 0 for r in rows)


def _has_unbounded_ray(normals, d):
    """True when the recession cone {x : normals . x <= 0} is nontrivial.

    The cone is pointed here (normals have full rank), so nontrivial means
    some extreme ray, and every extreme ray is tight on d-1 independent rows.
    """
    for subset in combinations(range(len(normals)), d - 1):
        rows = [normals[i] for i in subset]
        red = []
        ok = True
        for row in rows:
            res = reduce_row(row, red)
            if not any(res):
                ok = False
                break
            red.append((res, next(i for i, x in enumerate(res) if x)))
        if not ok:
            continue
        ray = echelon_kernel(red, d)
        for u in (ray, tuple(-x for x in ray)):
            if all(sum(a * b for a, b in zip(n, u)) <= 0 for n in normals):
                return True
    return False


def vertices_from_hrep(h: HPolytope) -> VPolytope:
    """All vertices of a bounded H-polytope, by tight-subsystem enumeration.

    Raises UnboundedPolytopeError / EmptyPolytopeError when the system does
    not describe a (nonempty, bounded) polytope.
    """
    d = h.dim
    int_rows = []
    for normal, rhs in h.inequalities:
        mult = lcm(*(x.denominator for x in normal), rhs.denominator)
        int_rows.append(tuple(int(x * mult) for x in normal) + (int(rhs * mult),))
    normals = [r[:-1] for r in int_rows]
    if int_rank(normals) < d:
        if _fm_feasible(int_rows, d):
            raise UnboundedPolytopeError("normals do not span; feasible set has a line")
        raise EmptyPolytopeError("inconsistent inequality system")

    verts = []
    seen = set()
    for subset in combinations(range(len(int_rows)), d):
        mat = [normals[i] for i in subset]
        det = bareiss_det(mat)
        if det == 0:
            continue
        point = []
        for j in range(d):
            col_swapped = [
                row[:j] + (int_rows[i][-1],) + row[j + 1:]
                for i, row in zip(subset, mat)
            ]
            point.append(Fraction(bareiss_det(col_swapped), det))
        point = tuple(point)
        if point in seen:
            continue
        if all(
            sum(n * x for n, x in zip(normal, point)) <= rhs
            for normal, rhs in h.inequalities
        ):
            seen.add(point)
            verts.append(point)
    if not verts:
        raise EmptyPolytopeError("no basic feasible point")
    if _has_unbounded_ray(normals, d):
        raise UnboundedPolytopeError("recession cone has an extreme ray")
    verts.sort()
    return VPolytope(d, verts)


# ---------------------------------------------------------------------------
# facet enumeration from a V-description (the geometric oracle)
# ---------------------------------------------------------------------------


_FACET_CACHE = {}


def facets_from_vrep(v: VPolytope) -> IncidenceStructure:
    """All facets of conv(points), by spanning-subset enumeration.

    Every hyperplane spanned by an affinely independent d-subset of points
    is tested for being supporting; supporting ones are canonicalized and
    merged.  The subset walk shares elimination work along common prefixes
    and prunes affinely dependent prefixes, which every facet survives.
    Results are memoized: the enumeration is pure and the big instances are
    queried by several verification passes.
    """
    cache_key = (v.dim, v.points, v.labels)
    hit = _FACET_CACHE.get(cache_key)
    if hit is not None:
        return hit
    d = v.dim
    pts = v.points
    n_pts = len(pts)
    ipts, mult = _scaled_int_points(pts)
    hom = [p + (1,) for p in ipts]
    if int_rank(hom) != d + 1:
        raise SpanError("points do not affinely span the ambient space")
    width = d + 1

    # Fixed pseudo-shuffled probe order makes early exits fast on the
    # structured, symmetric point sets this oracle mostly runs on.
    probe = sorted(range(n_pts), key=lambda i: (i * 2654435761) % (1 << 32))

    supporting = {}
    non_supporting = set() if n_pts <= 32 else None

    def classify(u):
        if u in supporting:
            return
        if non_supporting is not None and u in non_supporting:
            return
        neg = pos = False
        for i in probe:
            s = sum(a * b for a, b in zip(u, hom[i]))
            if s > 0:
                pos = True
                if neg:
                    break
            elif s < 0:
                neg = True
                if pos:
                    break
        if pos and neg:
            if non_supporting is not None:
                non_supporting.add(u)
            return
        out = u if pos else tuple(-x for x in u)
        # out . (x, 1) >= 0 on all points: outward form is -out[:d] . x <= out[d]
        normal = tuple(Fraction(-a) for a in out[:d])
        rhs = Fraction(out[d], mult)
        inc = frozenset(
            i for i in range(n_pts) if sum(a * b for a, b in zip(u, hom[i])) == 0
        )
        supporting[u] = (inc, canonical_inequality(normal, rhs))

    def walk(start, red):
        complete = len(red) == d - 1
        for j in range(start, n_pts):
            res = reduce_row(hom[j], red)
            if not any(res):
                continue
            pc = next(i for i, x in enumerate(res) if x)
            if complete:
                classify(echelon_kernel(red + [(res, pc)], width))
            else:
                walk(j + 1, red + [(res, pc)])

    walk(0, [])

    entries = sorted(supporting.values(), key=lambda e: e[1])
    result = IncidenceStructure(
        vertex_count=n_pts,
        incidence=[inc for inc, _ in entries],
        coords=pts,
        labels=v.labels,
        inequalities=tuple(ineq for _, ineq in entries),
    )
    _FACET_CACHE[cache_key] = result
    return result


# ---------------------------------------------------------------------------
# face lattice, graph, cubicality
# ---------------------------------------------------------------------------


def face_lattice(inc: IncidenceStructure, up_to_dim=None):
    """Faces (as canonical vertex sets) grouped by dimension.

    Faces are all nonempty intersections of facet vertex sets, so the family
    is closed under intersection by construction.  Dimension comes from the
    affine rank of the coordinates when present, else from chain length.
    """
    if inc._lattice is None:
        facets = set(inc.incidence)
        known = set(facets)
        frontier = facets
        while frontier:
            fresh = set()
            for f in frontier:
                for g in inc.incidence:
                    h = f & g
                    if h and h not in known:
                        fresh.add(h)
            known |= fresh
            frontier = fresh
        by_dim = {}
        if inc.coords is not None:
            for f in known:
                k = affine_rank([inc.coords[i] for i in f])
                by_dim.setdefault(k, []).append(f)
        else:
            dims = {}
            for f in sorted(known, key=len):
                below = [dims[g] for g in dims if g < f]
                dims[f] = max(below, default=-1) + 1
            for f, k in dims.items():
                by_dim.setdefault(k, []).append(f)
        inc._lattice = {
            k: tuple(sorted(faces, key=sorted)) for k, faces in sorted(by_dim.items())
        }
    if up_to_dim is None:
        return inc._lattice
    return {k: fs for k, fs in inc._lattice.items() if k <= up_to_dim}


def polytope_dim(inc: IncidenceStructure):
    if inc.coords is not None:
        return affine_rank(inc.coords)
    return max(face_lattice(inc)) + 1


def graph_of(inc: IncidenceStructure):
    """1-faces as sorted unordered vertex-index pairs."""
    lattice = face_lattice(inc)
    return sorted(tuple(sorted(e)) for e in lattice.get(1, ()))


def f_vector(inc: IncidenceStructure):
    lattice = face_lattice(inc)
    top = polytope_dim(inc)
    return tuple(len(lattice.get(k, ())) for k in range(top))


def is_cubical(inc: IncidenceStructure) -> bool:
    """Every proper face a combinatorial cube, certified by 2^k vertex counts."""
    lattice = face_lattice(inc)
    top = polytope_dim(inc)
    for k in range(top):
        for f in lattice.get(k, ()):
            if len(f) != 2 ** k:
                return False
    return True


# ---------------------------------------------------------------------------
# hypercube graph recognition
# ---------------------------------------------------------------------------


def hypercube_graph_iso(edges, n):
    """Labeling of a graph by {-1,+1}^n realizing an isomorphism with the
    n-cube graph, or None.

    Anchor an arbitrary vertex at the all-minus label, give its neighbors the
    unit flips, then propagate: a vertex all of whose lower-level neighbors
    are labeled gets the union of their bitmasks.  A final pass checks that
    every edge is a single-coordinate flip, which makes the search exact.
    """
    verts = sorted({x for e in edges for x in e})
    if len(verts) != 2 ** n:
        return None
    adj = {x: set() for x in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    anchor = verts[0]
    if len(adj[anchor]) != n:
        return None
    label = {anchor: 0}
    level = {anchor: 0}
    for i, w in enumerate(sorted(adj[anchor])):
        label[w] = 1 << i
        level[w] = 1
    frontier = sorted(adj[anchor])
    k = 1
    while frontier:
        nxt = set()
        for w in frontier:
            for x in adj[w]:
                if x not in level:
                    nxt.add(x)
        k += 1
        frontier = sorted(nxt)
        for x in frontier:
            preds = [label[w] for w in adj[x] if level.get(w) == k - 1]
            if len(preds) < 2:
                return None
            m = 0
            for p in preds:
                m |= p
            if bin(m).count("1") != k or m in label.values():
                return None
            label[x] = m
            level[x] = k
    if len(label) != 2 ** n:
        return None
    if len(edges) != n * 2 ** (n - 1):
        return None
    for a, b in edges:
        x = label[a] ^ label[b]
        if x == 0 or x & (x - 1):
            return None
    return {
        v: tuple(1 if label[v] >> i & 1 else -1 for i in range(n)) for v in verts
    }


# ---------------------------------------------------------------------------
# OFF export (inspection only, dim <= 3)
# ---------------------------------------------------------------------------


def _decimal_or_fraction(x: Fraction) -> str:
    num, den = x.numerator, x.denominator
    d = den
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d != 1:
        return f"{num}/{den}"
    digits = 0
    scaled = num
    while scaled % den:
        scaled *= 10
        digits += 1
    q = scaled // den
    if digits == 0:
        return str(q)
    s = str(abs(q)).rjust(digits + 1, "0")
    return ("-" if q < 0 else "") + s[:-digits] + "." + s[-digits:]


def _facet_cycle(face, edges):
    """Order the vertices of a 2-face along its edge cycle."""
    adj = {}
    for a, b in edges:
        if a in face and b in face:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    start = min(face)
    cycle = [start]
    prev = None
    cur = start
    while True:
        nbrs = [x for x in adj[cur] if x != prev]
        if not nbrs:
            return sorted(face)
        prev, cur = cur, nbrs[0]
        if cur == start:
            return cycle
        cycle.append(cur)


def to_off(inc: IncidenceStructure) -> str:
    """OFF text for objects of dimension at most 3, with exact coordinates."""
    if inc.coords is None:
        raise ValueError("OFF export needs coordinates")
    top = polytope_dim(inc)
    if top > 3:
        raise DimensionError("OFF export is limited to dimension <= 3")
    pts = [p + (Fraction(0),) * (3 - len(p)) for p in inc.coords]
    if top == 3:
        faces = [sorted(f) for f in face_lattice(inc)[2]]
        edges = [tuple(sorted(e)) for e in face_lattice(inc)[1]]
    elif top == 2:
        faces = [sorted(range(inc.vertex_count))]
        edges = [tuple(sorted(e)) for e in face_lattice(inc).get(1, ())]
    else:
        faces, edges = [], []
    lines = ["OFF", f"{len(pts)} {len(faces)} {len(edges)}"]
    for p in pts:
        lines.append(" ".join(_decimal_or_fraction(x) for x in p))
    for f in faces:
        cyc = _facet_cycle(frozenset(f), edges) if edges else f
        lines.append(f"{len(cyc)} " + " ".join(map(str, cyc)))
    return "\n".join(lines) + "\n"
