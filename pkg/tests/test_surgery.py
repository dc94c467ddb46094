from ncpoly import signvec
from ncpoly.skeleton import dehn_sommerville_check
from ncpoly.surgery import (
    FACET_A,
    FACET_B,
    FACET_C,
    boundary_complex,
    boundary_facets,
    build_phi,
    build_psi,
    chain_edge_facet_degrees,
    intersection_lemma_check,
    phi_boundary_complex,
    verify_sphere_like,
)


def test_chain_meets():
    ab = signvec.meet(FACET_A, FACET_B)
    bc = signvec.meet(FACET_B, FACET_C)
    assert ab == signvec.parse("-+0++0")
    assert bc == signvec.parse("--0++0")
    assert signvec.meet(FACET_A, FACET_C) is None
    assert len(signvec.vertex_set(ab)) == 4
    assert len(signvec.vertex_set(bc)) == 4


def test_phi_has_16_vertices():
    phi = build_phi()
    # three 3-cubes sharing two quadrilaterals: 8 + 8 + 8 - 4 - 4
    assert phi.f_vector()[0] == 16
    assert len(phi.facets()) == 3


def test_phi_boundary_is_a_2_sphere():
    bd = phi_boundary_complex()
    assert bd.dim == 2
    assert bd.euler_characteristic() == 2
    assert bd.is_connected()
    quads = bd.faces_by_dim[2]
    for e in bd.faces_by_dim[1]:
        assert sum(1 for q in quads if e < q) == 2
    assert len(quads) == 14


def test_rejected_candidate_patterns_are_not_facets():
    # facets of the shape (-,0,u,0,+,v) or (-,0,w,+,0,x) would break the
    # chain-disjointness argument; none may exist
    facets = set(boundary_facets())
    for f in facets:
        assert not (f[0] == -1 and f[1] == 0 and f[3] == 0 and f[4] == 1)
        assert not (f[0] == -1 and f[1] == 0 and f[3] == 1 and f[4] == 0)


def test_intersection_lemma():
    assert intersection_lemma_check()
    assert len(boundary_facets()) - 3 == 61


def test_psi_f_vector():
    psi = build_psi()
    base = boundary_complex()
    assert psi.f_vector() == (64, 196, 198, 66)
    assert base.f_vector() == (64, 192, 192, 64)
    diff = tuple(a - b for a, b in zip(psi.f_vector(), base.f_vector()))
    assert diff == (0, 4, 6, 2)


def test_psi_stays_cubical_and_valid():
    psi = build_psi()
    psi.validate()  # 2^k vertex counts, cover counts, intersection closure
    assert dehn_sommerville_check(psi.f_vector(), 4)


def test_psi_sphere_certificate():
    report = verify_sphere_like(build_psi())
    assert report.ridges_in_two_facets
    assert report.connected
    assert report.euler_zero
    assert report.links_ok
    assert report.ok


def test_unmodified_boundary_passes_certificate():
    report = verify_sphere_like(boundary_complex())
    assert report.ok


def test_phi_alone_fails_closedness():
    report = verify_sphere_like(build_phi())
    assert not report.ridges_in_two_facets
    assert not report.ok


def test_chain_edge_degrees():
    degrees = chain_edge_facet_degrees()
    assert len(degrees) == 8
    values = sorted(degrees.values())
    assert all(v >= 4 for v in values)
    assert values.count(5) == 4


def test_counter_example_property():
    from ncpoly.gale import f_formula

    psi = build_psi()
    assert psi.f_vector()[3] == 66 > f_formula(6, 4) == 64
