from itertools import product

import pytest

from ncpoly import signvec
from ncpoly.polytope import VPolytope, facets_from_vrep
from ncpoly.skeleton import (
    cube_skeleton,
    dehn_sommerville_check,
    double_r_cubicality_check,
    upper_face_subdivision,
    verify_skeleton_equivalence,
)


def test_cube_skeleton_counts():
    sk = cube_skeleton(3, 1)
    by_dim = {}
    for sv in sk:
        by_dim[signvec.face_dim(sv)] = by_dim.get(signvec.face_dim(sv), 0) + 1
    assert by_dim == {0: 8, 1: 12}

    sk6 = cube_skeleton(6, 1)
    by_dim6 = {}
    for sv in sk6:
        by_dim6[signvec.face_dim(sv)] = by_dim6.get(signvec.face_dim(sv), 0) + 1
    assert by_dim6 == {0: 64, 1: 192}

    assert len(cube_skeleton(5, 0)) == 32


def test_cube_skeleton_range_check():
    with pytest.raises(ValueError):
        cube_skeleton(3, 4)


def _labeled_cube(n):
    pts = list(product((-1, 1), repeat=n))
    return VPolytope(n, pts, labels=pts)


def test_cube_is_skeleton_equivalent_to_itself():
    inc = facets_from_vrep(_labeled_cube(3))
    for r in range(0, 3):
        assert verify_skeleton_equivalence(inc, 3, r)


def test_skeleton_equivalence_needs_labels():
    inc = facets_from_vrep(VPolytope(2, [(-1, -1), (-1, 1), (1, -1), (1, 1)]))
    with pytest.raises(ValueError):
        verify_skeleton_equivalence(inc, 2, 0)


def test_shadow_skeleton_equivalence(constructed):
    pc, inc = constructed(5, 4)
    assert verify_skeleton_equivalence(inc, 5, 1)
    assert not verify_skeleton_equivalence(inc, 5, 2)


def test_dehn_sommerville_known_vectors():
    assert dehn_sommerville_check((8, 12, 6), 3)
    assert dehn_sommerville_check((64, 192, 192, 64), 4)
    assert dehn_sommerville_check((64, 196, 198, 66), 4)
    assert dehn_sommerville_check((32, 80, 72, 24), 4)
    assert not dehn_sommerville_check((8, 12, 7), 3)
    assert not dehn_sommerville_check((64, 192, 192, 63), 4)


def test_dehn_sommerville_length_check():
    with pytest.raises(ValueError):
        dehn_sommerville_check((8, 12, 6), 4)


def _simplex(d):
    pts = [tuple(0 for _ in range(d))]
    for i in range(d):
        p = [0] * d
        p[i] = 1
        pts.append(tuple(p))
    return VPolytope(d, pts)


def test_double_r_cubicality():
    cube = facets_from_vrep(_labeled_cube(3))
    assert double_r_cubicality_check(cube, 1)
    for d in (3, 4):
        simplex = facets_from_vrep(_simplex(d))
        assert not double_r_cubicality_check(simplex, 1)


def test_double_r_on_shadow(constructed):
    pc, inc = constructed(5, 4)
    assert double_r_cubicality_check(inc, 1)


def test_upper_face_subdivision_5_4():
    sub = upper_face_subdivision(5, 4)
    # one cell per upper facet of the five-dimensional deformed cube: the
    # sigma=+1 side of constraint 1 plus both sides of constraints 2 and 4
    assert len(sub.facets()) == 5
    assert sub.f_vector()[0] == 32
    sub.validate()


def test_upper_face_subdivision_needs_room():
    with pytest.raises(ValueError):
        upper_face_subdivision(4, 4)


def _solve_remaining_f_entries(known, d):
    # solve the Dehn-Sommerville system for the unknown high f-entries
    from fractions import Fraction
    from math import comb

    r = len(known) - 1
    unknowns = list(range(r + 1, d))
    rows = []
    for k in range(0, d - 1):
        coeff = {i: Fraction((-1) ** i * 2 ** (i - k) * comb(i, k)) for i in range(k, d)}
        coeff[k] = coeff.get(k, Fraction(0)) - Fraction((-1) ** (d - 1))
        rhs = -sum(coeff.get(i, Fraction(0)) * known[i] for i in range(r + 1))
        rows.append([coeff.get(i, Fraction(0)) for i in unknowns] + [rhs])
    # exact Gaussian elimination
    piv = 0
    for col in range(len(unknowns)):
        pivot = next((i for i in range(piv, len(rows)) if rows[i][col]), None)
        assert pivot is not None, "system must determine every unknown"
        rows[piv], rows[pivot] = rows[pivot], rows[piv]
        pv = rows[piv][col]
        rows[piv] = [x / pv for x in rows[piv]]
        for i in range(len(rows)):
            if i != piv and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv])]
        piv += 1
    for i in range(piv, len(rows)):
        assert rows[i][-1] == 0, "overdetermined system must stay consistent"
    return {u: rows[j][-1] for j, u in enumerate(unknowns)}


@pytest.mark.parametrize("d", [4, 6])
def test_even_d_facet_count_follows_from_skeleton_and_dehn_sommerville(d):
    from math import comb

    from ncpoly.gale import f_formula

    r = d // 2 - 1
    for n in range(d, 11):
        known = [comb(n, k) * 2 ** (n - k) for k in range(r + 1)]
        solved = _solve_remaining_f_entries(known, d)
        assert solved[d - 1] == f_formula(n, d)


def test_shadow_graph_regularity(constructed):
    # 32 vertices, 80 edges, 5-regular: the 5-cube graph seen in dimension 4
    from ncpoly.polytope import graph_of

    pc, inc = constructed(5, 4)
    edges = graph_of(inc)
    assert len(edges) == 80
    degree = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    assert set(degree.values()) == {5}
