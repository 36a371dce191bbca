"""Monomial, ideal, complex and Hilbert-data unit tests.

Derived expectations are recomputed here by brute force where feasible,
independently of the library code paths.
"""

from itertools import product
from math import comb

import pytest

from hilbdiag.gridcore import (KPolynomial, Monomial, MonomialIdeal,
                               SimplicialComplex, all_grid_vars,
                               complex_to_ideal, diagonal_k_polynomial, hf_at,
                               k_polynomial, monomials_of_degree, multidegree,
                               multidegree_of_ideal, series_equals_diagonal,
                               stanley_reisner, target_hf)
from hilbdiag.borel import build_z
from hilbdiag.tangent import chain_ideal


def brute_force_facets(ideal):
    """Maximal subsets of the variables containing no generator support."""
    verts = all_grid_vars(ideal.d, ideal.n)
    supports = [g.support for g in ideal.gens]
    faces = []
    for mask in range(1 << len(verts)):
        s = frozenset(v for k, v in enumerate(verts) if mask >> k & 1)
        if not any(sup <= s for sup in supports):
            faces.append(s)
    return sorted((f for f in faces if not any(f < g for g in faces)),
                  key=sorted)


def brute_force_hf(ideal, u):
    return sum(1 for m in monomials_of_degree(ideal.d, ideal.n, u)
               if not any(g.divides(m) for g in ideal.gens))


def test_multidegree_examples():
    assert multidegree(Monomial({(1, 1): 1, (2, 2): 1}), 2) == (1, 1)
    assert multidegree(Monomial({}), 3) == (0, 0, 0)
    assert multidegree(Monomial({(1, 1): 2, (1, 2): 1}), 2) == (2, 1)


def test_monomial_arithmetic():
    a = Monomial({(1, 1): 1})
    b = Monomial({(1, 1): 1, (2, 2): 2})
    assert a.divides(b)
    assert not b.divides(a)
    assert (a * b).exps == Monomial({(1, 1): 2, (2, 2): 2}).exps
    assert a.lcm(b) == b
    assert b.quotient(a) == Monomial({(2, 2): 2})
    with pytest.raises(ValueError):
        a.quotient(b)


def test_ideal_minimalizes_generators():
    gens = [Monomial({(1, 1): 1}), Monomial({(1, 1): 1, (1, 2): 1})]
    ideal = MonomialIdeal(2, 2, gens)
    assert len(ideal.gens) == 1
    assert Monomial({(1, 1): 1, (2, 2): 3}) in ideal
    assert Monomial({(2, 1): 1}) not in ideal


def test_ideal_json_roundtrip():
    z = build_z(3, 3)
    assert MonomialIdeal.from_json(z.to_json()) == z


def test_stanley_reisner_z22():
    cx = stanley_reisner(build_z(2, 2))
    assert set(cx.facets) == {frozenset({(1, 1), (2, 1), (2, 2)}),
                              frozenset({(2, 1), (1, 2), (2, 2)})}


def test_stanley_reisner_zero_ideal():
    cx = stanley_reisner(MonomialIdeal(1, 2, []))
    assert cx.facets == (frozenset({(1, 1), (1, 2)}),)


def test_stanley_reisner_z23():
    cx = stanley_reisner(build_z(2, 3))
    assert len(cx.facets) == 3
    for f in cx.facets:
        row1 = [v for v in f if v[0] == 1]
        assert len(row1) == 1  # each facet keeps one top-row variable


@pytest.mark.parametrize("ideal", [
    build_z(2, 2), build_z(2, 3), build_z(3, 3),
    chain_ideal(2, 3), chain_ideal(3, 3),
    MonomialIdeal(2, 2, []),
])
def test_facets_match_brute_force(ideal):
    assert list(stanley_reisner(ideal).facets) == brute_force_facets(ideal)


def test_stanley_reisner_rejects_non_squarefree():
    with pytest.raises(ValueError):
        stanley_reisner(MonomialIdeal(2, 2, [Monomial({(1, 1): 2})]))


def test_complex_ideal_roundtrip():
    for ideal in (build_z(2, 3), build_z(3, 3), chain_ideal(3, 3)):
        cx = stanley_reisner(ideal)
        assert complex_to_ideal(cx, ideal.d, ideal.n) == ideal


def test_complex_drops_non_maximal_facets():
    cx = SimplicialComplex([(1, 1), (1, 2)], [{(1, 1)}, {(1, 1), (1, 2)}])
    assert cx.facets == (frozenset({(1, 1), (1, 2)}),)


def test_multidegree_of_ideal_examples():
    assert multidegree_of_ideal(build_z(2, 2)) == KPolynomial(
        2, {(1, 0): 1, (0, 1): 1})
    md33 = multidegree_of_ideal(build_z(3, 3))
    assert md33.terms == {u: 1 for u in product(range(3), repeat=3)
                          if sum(u) == 4}
    assert multidegree_of_ideal(MonomialIdeal(2, 2, [])) == KPolynomial(
        2, {(0, 0): 1})


def test_k_polynomial_examples():
    assert k_polynomial(MonomialIdeal(1, 1, [])) == KPolynomial(1, {(0,): 1})
    kp = k_polynomial(MonomialIdeal(2, 2, [Monomial({(1, 1): 1, (1, 2): 1})]))
    assert kp == KPolynomial(2, {(0, 0): 1, (1, 1): -1})
    # two ideals of the same scheme share the K-polynomial
    assert k_polynomial(build_z(2, 3)) == k_polynomial(chain_ideal(2, 3))


def test_hf_at_examples():
    assert hf_at(build_z(2, 2), (1, 1)) == 3
    assert hf_at(build_z(3, 3), (0, 0, 0)) == 1
    assert hf_at(build_z(3, 3), (1, 1, 0)) == 6


def test_hf_at_brute_force_agreement():
    for ideal in (build_z(2, 3), chain_ideal(3, 2)):
        for u in product(range(3), repeat=ideal.n):
            assert hf_at(ideal, u) == brute_force_hf(ideal, u)


def test_hf_at_non_squarefree():
    ideal = MonomialIdeal(2, 2, [Monomial({(1, 1): 2})])
    assert hf_at(ideal, (2, 0)) == brute_force_hf(ideal, (2, 0)) == 2


def test_target_hf_examples():
    assert target_hf(2, (1, 1, 1)) == 4
    assert target_hf(3, (0, 0, 0)) == 1
    assert target_hf(3, (2, 2, 2)) == 28


def test_series_equals_diagonal_examples():
    assert series_equals_diagonal(build_z(2, 3))
    assert series_equals_diagonal(chain_ideal(3, 3))
    assert not series_equals_diagonal(
        MonomialIdeal(2, 2, [Monomial({(1, 1): 1})]))


def series_coefficient(kp, d, u):
    """Coefficient of t^u in kp / prod_j (1 - t_j)^d."""
    total = 0
    for v, c in kp.terms.items():
        if all(vj <= uj for vj, uj in zip(v, u)):
            w = 1
            for vj, uj in zip(v, u):
                w *= comb(uj - vj + d - 1, d - 1)
            total += c * w
    return total


@pytest.mark.parametrize("ideal", [
    build_z(2, 2), build_z(3, 3), build_z(2, 4),
    chain_ideal(2, 3), chain_ideal(3, 3),
])
def test_series_expansion_matches_hf(ideal):
    kp = k_polynomial(ideal)
    for u in product(range(4), repeat=ideal.n):
        if sum(u) > 6:
            continue
        assert series_coefficient(kp, ideal.d, u) == hf_at(ideal, u)


def test_diagonal_k_polynomial_matches_z():
    for d, n in [(2, 2), (2, 3), (3, 3), (4, 3)]:
        assert diagonal_k_polynomial(d, n) == k_polynomial(build_z(d, n))


def test_k_polynomial_json_roundtrip():
    kp = k_polynomial(build_z(2, 3))
    assert KPolynomial.from_json(kp.to_json()) == kp
