from fractions import Fraction
from itertools import combinations, product

import pytest

from ncpoly import signvec
from ncpoly.deformed import choose_epsilon
from ncpoly.gale import (
    alpha_is_positive_circuit,
    f_formula,
    facets_gale,
    gap_even,
    initial_run,
    is_positive_circuit,
    to_sign_vector,
)
from ncpoly.intops import cramer_left_kernel


def test_special_value_n_equals_d():
    for d in range(2, 11):
        assert f_formula(d, d) == 2 * d
        assert len(facets_gale(d, d)) == 2 * d


def test_special_value_n_equals_d_plus_1():
    for d in range(2, 10):
        assert f_formula(d + 1, d) == d * d + d + 2 * (d // 2)


def test_special_values_low_dimensions():
    for n in range(2, 11):
        assert f_formula(n, 2) == 2 ** n
    for n in range(3, 11):
        assert f_formula(n, 3) == 2 ** n - 2
    for n in range(4, 11):
        assert f_formula(n, 4) == (n - 2) * 2 ** (n - 2)
    for n in range(5, 11):
        assert f_formula(n, 5) == (n - 4) * 2 ** (n - 2) + 2


def test_enumeration_matches_formula_everywhere():
    for n in range(2, 11):
        for d in range(2, n + 1):
            assert len(facets_gale(n, d)) == f_formula(n, d)


def test_labels_are_valid_and_distinct():
    for (n, d) in [(6, 4), (7, 3), (8, 6)]:
        out = facets_gale(n, d)
        assert len(set(out)) == len(out)
        for alpha in out:
            assert len(alpha) == n - d + 1
            assert not (alpha & {-a for a in alpha})


def test_enumeration_order_is_sign_vector_lex():
    out = facets_gale(6, 4)
    keys = [signvec.lex_key(to_sign_vector(a, 6)) for a in out]
    assert keys == sorted(keys)


def test_chain_facet_sign_vectors():
    # the three facets used by the surgery, with their signed labels
    assert to_sign_vector(frozenset({-1, 2, 5}), 6) == signvec.parse("-+00+0")
    assert to_sign_vector(frozenset({-1, 4, 5}), 6) == signvec.parse("-00++0")
    assert to_sign_vector(frozenset({-1, -2, 4}), 6) == signvec.parse("--0+00")
    facets = set(facets_gale(6, 4))
    for alpha in (frozenset({-1, 2, 5}), frozenset({-1, 4, 5}), frozenset({-1, -2, 4})):
        assert alpha in facets


def test_initial_run():
    assert initial_run({-1, 2, 5}) == 2
    assert initial_run({-1, 4, 5}) == 1
    assert initial_run({3, 5}) == 0
    assert initial_run({-1, 2, -3}) == 3


def test_gap_even():
    assert gap_even((2, 3, 4))
    assert gap_even((2, 5, 6))
    assert not gap_even((2, 4))


def test_full_run_case_accepts_both_signs():
    # when the label is a pure prefix, both signs of the last element work
    out = set(facets_gale(5, 4))
    assert frozenset({-1, 2}) in out
    assert frozenset({-1, -2}) in out


def test_positive_circuit_vacuous_when_n_equals_d():
    assert is_positive_circuit(3, 3, {1: 1}, (2,), Fraction(1, 2))


def test_positive_circuit_equivalence_small():
    for n in range(2, 7):
        for d in range(2, n + 1):
            eps = choose_epsilon(n, d)
            facets = set(facets_gale(n, d))
            size = n - d + 1
            for support in combinations(range(1, n + 1), size):
                for signs in product((-1, 1), repeat=size):
                    alpha = frozenset(s * k for s, k in zip(signs, support))
                    assert (alpha in facets) == alpha_is_positive_circuit(
                        n, d, alpha, eps
                    ), (n, d, alpha)


def _bbar_rows(n, d):
    # rows ((-1)^k (k-1)^(j-1)) for k = 2..n, j = 1..n-d
    return {
        k: tuple((-1) ** k * (k - 1) ** j for j in range(n - d)) for k in range(2, n + 1)
    }


def _is_alternating(seq):
    return all((a + b) % 2 == 1 for a, b in zip(seq, seq[1:]))


@pytest.mark.parametrize("n,d", [(5, 3), (6, 4), (6, 3), (7, 5)])
def test_limit_matrix_positive_circuits_are_alternating_subsets(n, d):
    # at eps = 0 the deformation matrix rows become the alternating-signed
    # moment rows; a row subset is a positive circuit exactly when its
    # indices alternate in parity.  Undoing the row signs (back to pure
    # moment rows) must always leave coefficients alternating by position.
    rows = _bbar_rows(n, d)
    size = n - d + 1
    for subset in combinations(range(2, n + 1), size):
        v = cramer_left_kernel([rows[k] for k in subset])
        assert v is not None
        positive = all(x > 0 for x in v) or all(x < 0 for x in v)
        assert positive == _is_alternating(subset), subset
        over_moment = [x * (-1) ** k for x, k in zip(v, subset)]
        assert all(a * b < 0 for a, b in zip(over_moment, over_moment[1:]))


def test_three_forms_agree_via_formula_error_guard():
    # f_formula raises internally if its three closed forms ever disagree;
    # sweeping a large range exercises that assertion
    for n in range(2, 16):
        for d in range(2, n + 1):
            f_formula(n, d)


def _tight_label_sets(n):
    # geometric facets of the unprojected cube, via tightness in the
    # defining inequality system (the hull oracle for the n = d case)
    from ncpoly.deformed import build_deformed_cube, cube_vertices_labeled

    eps = choose_epsilon(n, n)
    h = build_deformed_cube(n, eps)
    v = cube_vertices_labeled(n, eps)
    out = set()
    for normal, rhs in h.inequalities:
        tight = frozenset(
            v.labels[i]
            for i, p in enumerate(v.points)
            if sum(a * x for a, x in zip(normal, p)) == rhs
        )
        out.add(tight)
    return out


@pytest.mark.parametrize(
    "n,d",
    [(2, 2), (3, 2), (3, 3), (4, 4), (5, 5), (6, 2), (6, 3), (6, 6)],
)
def test_oracle_equivalence_remaining_small_pairs(n, d):
    from ncpoly.deformed import projected_cube
    from ncpoly.gale import facet_vertex_label_sets
    from ncpoly.polytope import facets_from_vrep, is_cubical

    expected = facet_vertex_label_sets(n, d)
    if n == d:
        assert _tight_label_sets(n) == expected
    else:
        pc = projected_cube(n, d)
        inc = facets_from_vrep(pc.shadow)
        oracle = {frozenset(pc.shadow.labels[i] for i in f) for f in inc.incidence}
        assert oracle == expected
        assert is_cubical(inc)
