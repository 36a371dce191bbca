"""Tangent spaces at monomial ideals, via degree-zero homomorphisms.

A tangent vector at a monomial ideal I assigns to each minimal generator
g an element of the standard-monomial span of the quotient in the same
multidegree.  The constraints come from the pairwise syzygies: for
generators g, h with least common multiple L, the element
(L/g) phi(g) - (L/h) phi(h) must vanish in the quotient.  Pairwise
syzygies generate the whole syzygy module of a monomial ideal, so the
nullity of this linear system is the tangent space dimension.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .gridcore import (Monomial, MonomialIdeal, monomials_of_degree,
                       multidegree)
from .linalg import rank_sparse


def chain_ideal(d: int, n: int) -> MonomialIdeal:
    """The ideal of quadrics x_ik x_jl with i < j and k < l."""
    gens = [Monomial({(i, k): 1, (j, l): 1})
            for i in range(1, d + 1) for j in range(i + 1, d + 1)
            for k in range(1, n + 1) for l in range(k + 1, n + 1)]
    return MonomialIdeal(d, n, gens)


def standard_monomials(ideal: MonomialIdeal, u) -> list:
    """Monomials of multidegree u outside the ideal, sorted."""
    return sorted(m for m in monomials_of_degree(ideal.d, ideal.n, u)
                  if m not in ideal)


def syzygy_system(ideal: MonomialIdeal):
    """Unknown indexing and constraint rows for the tangent space at I.

    Returns (index, rows): `index` maps (generator, standard monomial)
    to an unknown number, and each row is a {unknown: coefficient} dict
    that must vanish.
    """
    n = ideal.n
    gens = list(ideal.gens)
    basis = {g: standard_monomials(ideal, multidegree(g, n)) for g in gens}
    index = {}
    for g in gens:
        for m in basis[g]:
            index[(g, m)] = len(index)
    rows = []
    for g, h in combinations(gens, 2):
        L = g.lcm(h)
        lg, lh = L.quotient(g), L.quotient(h)
        # coefficient of the monomial w in (L/g) phi(g) - (L/h) phi(h);
        # the lift m -> (L/g) m is injective, so each w sees at most one
        # unknown from each side
        byw = {}
        for m in basis[g]:
            byw.setdefault(lg * m, {})[index[(g, m)]] = 1
        for m in basis[h]:
            w = lh * m
            row = byw.setdefault(w, {})
            row[index[(h, m)]] = row.get(index[(h, m)], 0) - 1
        for w, row in byw.items():
            if w in ideal:
                continue  # that coefficient is already zero in the quotient
            row = {k: v for k, v in row.items() if v}
            if row:
                rows.append(row)
    return index, rows


def tangent_dimension(ideal: MonomialIdeal) -> int:
    """Dimension of the space of degree-zero homomorphisms I -> R/I."""
    index, rows = syzygy_system(ideal)
    return len(index) - rank_sparse(rows)


class GradedHom:
    """A degree-preserving assignment generator -> quotient element."""

    __slots__ = ("images",)

    def __init__(self, images):
        # images: {generator monomial: {standard monomial: coefficient}}
        self.images = {g: {m: Fraction(c) for m, c in img.items() if c}
            for g, img in images.items()}

    def vector(self, index) -> dict:
        vec = {}
        for g, img in self.images.items():
            for m, c in img.items():
                vec[index[(g, m)]] = c
        return vec

    def __repr__(self):
        return "GradedHom(%d generators moved)" % sum(
            1 for img in self.images.values() if img)


def chain_basis(d: int, n: int) -> list:
    """The explicit tangent basis at the chain ideal.

    Three families: row shifts (images x_hk x_jl -> x_hk x_il for
    i <= h < j), column shifts (x_ik x_hl -> x_jk x_hl for i < h <= j),
    and the local swaps x_{i,k} x_{i+1,k+1} -> x_{i,k+1} x_{i+1,k}.
    Their count is (n-1)(d-1) + 2(n-1)*binom(d,2) = (d^2-1)(n-1).
    """
    maps = []

    def gen(i, k, j, l):
        return Monomial({(i, k): 1, (j, l): 1})

    # class rho: indices i < j, column l > 1
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            for l in range(2, n + 1):
                images = {}
                for h in range(i, j):
                    for k in range(1, l):
                        images[gen(h, k, j, l)] = {gen(h, k, i, l): 1}
                maps.append(GradedHom(images))
    # class sigma: indices i < j, column k < n
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            for k in range(1, n):
                images = {}
                for h in range(i + 1, j + 1):
                    for l in range(k + 1, n + 1):
                        images[gen(i, k, h, l)] = {gen(j, k, h, l): 1}
                maps.append(GradedHom(images))
    # class tau: adjacent swaps
    for i in range(1, d):
        for k in range(1, n):
            images = {gen(i, k, i + 1, k + 1): {gen(i, k + 1, i + 1, k): 1}}
            maps.append(GradedHom(images))
    return maps


def verify_basis(ideal: MonomialIdeal, maps) -> bool:
    """True iff the maps are well-defined tangent vectors that form a basis."""
    index, rows = syzygy_system(ideal)
    vectors = []
    for hom in maps:
        for g, img in hom.images.items():
            if g not in ideal.gens:
                return False
            dg = multidegree(g, ideal.n)
            for m in img:
                if multidegree(m, ideal.n) != dg or m in ideal:
                    return False
        vectors.append(hom.vector(index))
    # each map must satisfy every syzygy constraint
    for row in rows:
        for vec in vectors:
            if sum(c * vec.get(k, 0) for k, c in row.items()):
                return False
    independent = rank_sparse(vectors) == len(vectors)
    spanning = len(vectors) == len(index) - rank_sparse(rows)
    return independent and spanning
