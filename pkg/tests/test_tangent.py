"""Tangent-space dimensions and the explicit chain-ideal basis."""

import pytest

from hilbdiag.borel import build_z
from hilbdiag.gridcore import Monomial, MonomialIdeal
from hilbdiag.tangent import (GradedHom, chain_basis, chain_ideal,
                              standard_monomials, tangent_dimension,
                              verify_basis)


def test_chain_ideal_examples():
    x = Monomial.variable
    assert chain_ideal(2, 3) == MonomialIdeal(2, 3, [
        x(1, 1) * x(2, 2), x(1, 1) * x(2, 3), x(1, 2) * x(2, 3)])
    assert chain_ideal(2, 2) == MonomialIdeal(2, 2, [x(1, 1) * x(2, 2)])
    assert len(chain_ideal(3, 3).gens) == 9


def test_standard_monomials():
    M = chain_ideal(2, 2)
    basis = standard_monomials(M, (1, 1))
    assert len(basis) == 3
    assert Monomial({(1, 1): 1, (2, 2): 1}) not in basis


@pytest.mark.parametrize("d,n", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_chain_tangent_dimension(d, n):
    assert tangent_dimension(chain_ideal(d, n)) == (d * d - 1) * (n - 1)


def test_single_generator_ideal():
    ideal = MonomialIdeal(2, 2, [Monomial({(1, 1): 1, (1, 2): 1})])
    assert tangent_dimension(ideal) == 3


def test_star_tangent_dimension():
    # the all-out star: n(n-1) once the center has degree at least three
    for n in (3, 4, 5):
        assert tangent_dimension(build_z(2, n)) == n * (n - 1)
    # at n=2 the star is a two-edge path, a smooth point
    assert tangent_dimension(build_z(2, 2)) == 3


def test_z33_tangent_dimension():
    assert tangent_dimension(build_z(3, 3)) == 18


@pytest.mark.parametrize("d,n", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_chain_basis_counts_and_verification(d, n):
    maps = chain_basis(d, n)
    assert len(maps) == (d * d - 1) * (n - 1)
    assert verify_basis(chain_ideal(d, n), maps)


def test_chain_basis_33_class_counts():
    maps = chain_basis(3, 3)
    sizes = sorted(len(h.images) for h in maps)
    # 4 swaps move one generator; 12 shifts move up to (j-i)(l-1) generators
    assert len(maps) == 16
    assert sizes.count(1) >= 4


def test_verify_basis_rejects_wrong_sets():
    M = chain_ideal(2, 2)
    maps = chain_basis(2, 2)
    # dropping a map breaks spanning
    assert not verify_basis(M, maps[:-1])
    # a duplicate breaks independence
    assert not verify_basis(M, maps + [maps[0]])
    # an image inside the ideal is not allowed
    g = M.gens[0]
    bad = GradedHom({g: {g: 1}})
    assert not verify_basis(M, maps[:-1] + [bad])


def test_verify_basis_empty_only_for_rigid():
    ideal = MonomialIdeal(2, 2, [Monomial({(1, 1): 1, (1, 2): 1})])
    assert not verify_basis(ideal, [])  # tangent dimension is 3, not 0
