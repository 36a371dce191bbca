"""Sparse polynomials over the rationals and Buchberger's algorithm.

The ring is a fixed variable list: the d x n grid variables in row-major
order, optionally followed by auxiliary variables (a deformation
parameter z, elimination helpers).  Term orders are weight vectors
refined by lex on the variable list, with an optional elimination block
that is compared first.  Everything is exact Fraction arithmetic.

On top of that sit the pipeline operations: the two-by-two minors and
the column-wise matrix action, initial ideals, seeded generic-initial
sampling, pairwise ideal intersection and saturation by the added
variable trick, the z-parameter special fiber with its weight-order
shortcut, Alexander duals, and graded-piece dimensions by exact rank.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from random import Random

from .gridcore import (Monomial, MonomialIdeal, all_grid_vars,
                       monomials_of_degree, series_equals_diagonal,
                       stanley_reisner)
from .linalg import rank_sparse


class PolyRing:
    """An ordered list of variables; grid rings remember the (row, col)
    layout of their first d*n variables."""

    __slots__ = ("names", "index", "gridshape", "gridvars")

    def __init__(self, names, gridshape=None):
        self.names = tuple(names)
        self.index = {nm: k for k, nm in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise ValueError("duplicate variable names")
        self.gridshape = gridshape
        self.gridvars = {}
        if gridshape:
            d, n = gridshape
            cells = all_grid_vars(d, n)
            for k, cell in enumerate(cells):
                self.gridvars[k] = cell

    @property
    def nvars(self):
        return len(self.names)

    def zero(self):
        return RatPoly(self, {})

    def one(self):
        return RatPoly(self, {(0,) * self.nvars: Fraction(1)})

    def var(self, name):
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return RatPoly(self, {tuple(e): Fraction(1)})

    def grid_var(self, i, j):
        d, n = self.gridshape
        return self.var(self.names[(i - 1) * n + (j - 1)])

    def grid_index(self, i, j):
        d, n = self.gridshape
        return (i - 1) * n + (j - 1)

    def monomial_poly(self, m: Monomial, coeff=1):
        e = [0] * self.nvars
        for (i, j), ex in m.exps:
            e[self.grid_index(i, j)] = ex
        return RatPoly(self, {tuple(e): Fraction(coeff)})

    def extend(self, extra):
        return PolyRing(self.names + tuple(extra), gridshape=self.gridshape)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names \
            and self.gridshape == other.gridshape

    def __hash__(self):
        return hash((self.names, self.gridshape))

    def __repr__(self):
        return "PolyRing(%s)" % ", ".join(self.names)


def grid_var_names(d, n):
    if d <= 3:
        return ["xyz"[i - 1] + str(j) for i in range(1, d + 1) for j in range(1, n + 1)]
    return ["x%d%d" % (i, j) for i in range(1, d + 1) for j in range(1, n + 1)]


def grid_ring(d, n, extra=()):
    return PolyRing(grid_var_names(d, n) + list(extra), gridshape=(d, n))


class RatPoly:
    """A polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly(self.ring, {(0,) * self.ring.nvars: Fraction(other)})
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return RatPoly(self.ring, out)

    def __neg__(self):
        return RatPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly(self.ring, {(0,) * self.ring.nvars: Fraction(other)})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return RatPoly(self.ring, {m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return RatPoly(self.ring, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.ring == other.ring \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def substitute(self, images: dict) -> "RatPoly":
        """Replace variables by polynomials: images maps var index -> RatPoly."""
        ring = next(iter(images.values())).ring if images else self.ring
        out = RatPoly(ring, {})
        for m, c in self.terms.items():
            term = RatPoly(ring, {(0,) * ring.nvars: c})
            for k, e in enumerate(m):
                if not e:
                    continue
                img = images.get(k)
                if img is None:
                    img = ring.var(self.ring.names[k])
                for _ in range(e):
                    term = term * img
            out = out + term
        return out

    def inject(self, bigring: "PolyRing") -> "RatPoly":
        """View in an extension ring that appends variables at the end."""
        pad = bigring.nvars - self.ring.nvars
        if pad < 0 or bigring.names[:self.ring.nvars] != self.ring.names:
            raise ValueError("not an extension ring")
        return RatPoly(bigring, {m + (0,) * pad: c for m, c in self.terms.items()})

    def project(self, smallring: "PolyRing") -> "RatPoly":
        """Drop trailing variables, which must not occur."""
        k = smallring.nvars
        if self.ring.names[:k] != smallring.names:
            raise ValueError("not a restriction ring")
        out = {}
        for m, c in self.terms.items():
            if any(m[k:]):
                raise ValueError("polynomial involves a dropped variable")
            out[m[:k]] = c
        return RatPoly(smallring, out)

    def substitute_value(self, name, value) -> "RatPoly":
        """Evaluate one variable at a rational constant (same ring)."""
        k = self.ring.index[name]
        value = Fraction(value)
        out = {}
        for m, c in self.terms.items():
            coeff = c * value ** m[k]
            if not coeff:
                continue
            w = m[:k] + (0,) + m[k + 1:]
            v = out.get(w, 0) + coeff
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return RatPoly(self.ring, out)

    def grid_multidegree(self):
        """Column-degree vector; requires Z^n-homogeneity."""
        d, n = self.ring.gridshape
        deg = None
        for m in self.terms:
            u = [0] * n
            for k, e in enumerate(m):
                if not e:
                    continue
                cell = self.ring.gridvars.get(k)
                if cell is None:
                    raise ValueError("term involves a non-grid variable")
                u[cell[1] - 1] += e
            u = tuple(u)
            if deg is None:
                deg = u
            elif deg != u:
                raise ValueError("polynomial is not multigraded-homogeneous")
        return deg

    def to_grid_monomial(self) -> Monomial:
        if len(self.terms) != 1:
            raise ValueError("not a monomial")
        (m, _), = self.terms.items()
        exps = {}
        for k, e in enumerate(m):
            if not e:
                continue
            cell = self.ring.gridvars.get(k)
            if cell is None:
                raise ValueError("monomial involves a non-grid variable")
            exps[cell] = e
        return Monomial(exps)

    def pretty(self, order=None) -> str:
        if not self.terms:
            return "0"
        keyf = order.key if order else None
        items = sorted(self.terms.items(), key=(lambda t: keyf(t[0])) if keyf else None,
                       reverse=bool(keyf))
        if keyf is None:
            items = sorted(self.terms.items(), reverse=True)
        parts = []
        for m, c in items:
            mono = "*".join(
                "%s^%d" % (self.ring.names[k], e) if e > 1 else self.ring.names[k]
                for k, e in enumerate(m) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-%s" % mono)
            else:
                parts.append("%s*%s" % (c, mono))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return self.pretty()


class TermOrder:
    """Weight order refined by lex; optional leading elimination block."""

    __slots__ = ("ring", "weights", "elim")

    def __init__(self, ring, weights=None, elim=()):
        self.ring = ring
        self.weights = tuple(Fraction(w) for w in weights) if weights else None
        if self.weights and len(self.weights) != ring.nvars:
            raise ValueError("weight vector length mismatch")
        self.elim = tuple(sorted(elim))

    def key(self, exps):
        parts = []
        if self.elim:
            parts.append(sum(exps[k] for k in self.elim))
        if self.weights:
            parts.append(sum(w * e for w, e in zip(self.weights, exps)))
        parts.append(exps)
        return tuple(parts)

    def leading_term(self, f: RatPoly):
        m = max(f.terms, key=self.key)
        return m, f.terms[m]

    def weight_of(self, exps):
        if not self.weights:
            return 0
        return sum(w * e for w, e in zip(self.weights, exps))

    def weight_decisive(self, f: RatPoly) -> bool:
        """Whether the weight vector alone picks f's leading monomial."""
        if not self.weights or len(f.terms) <= 1:
            return True
        best = max(self.weight_of(m) for m in f.terms)
        return sum(1 for m in f.terms if self.weight_of(m) == best) == 1


def lex_order(ring) -> TermOrder:
    return TermOrder(ring)


class IndecisiveWeights(ValueError):
    """A weight vector failed to single out leading monomials."""


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def normal_form(f: RatPoly, basis, order: TermOrder) -> RatPoly:
    """Fully reduce f modulo a list of (lt, lc, terms) triples."""
    key = order.key
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        reduced = False
        for lt, lc, terms in basis:
            if _divides(lt, m):
                q = tuple(a - b for a, b in zip(m, lt))
                scale = c / lc
                for mg, cg in terms.items():
                    if mg == lt:
                        continue
                    w = tuple(a + b for a, b in zip(mg, q))
                    v = work.get(w, 0) - scale * cg
                    if v:
                        work[w] = v
                    else:
                        work.pop(w, None)
                reduced = True
                break
        if not reduced:
            rem[m] = c
    return RatPoly(f.ring, rem)


def _prepare(gens, order):
    """Deduplicate, drop zeros, sort deterministically."""
    key = order.key
    uniq = []
    seen = set()
    for g in gens:
        if g.is_zero():
            continue
        lt, lc = order.leading_term(g)
        monic = g * (1 / lc)
        sig = tuple(sorted(monic.terms.items()))
        if sig not in seen:
            seen.add(sig)
            uniq.append(monic)
    uniq.sort(key=lambda g: (key(order.leading_term(g)[0]),
                             sorted(g.terms.items())))
    return uniq


def buchberger(gens, order: TermOrder) -> list:
    """Reduced Groebner basis, deterministic for a given input set.

    Pair selection is by smallest lcm in the term order; pairs with
    coprime leading monomials are skipped.
    """
    ring = gens[0].ring if gens else None
    work = _prepare(gens, order)
    if not work:
        return []
    key = order.key
    basis = []  # (lt, lc, terms)
    for g in work:
        lt, lc = order.leading_term(g)
        basis.append((lt, lc, g.terms))

    pairs = []
    for i, j in combinations(range(len(basis)), 2):
        _push_pair(pairs, basis, i, j, key)

    while pairs:
        _, _, i, j, lcm = heapq.heappop(pairs)
        lti = basis[i][0]
        ltj = basis[j][0]
        if tuple(a + b for a, b in zip(lti, ltj)) == lcm:
            continue  # coprime leading monomials reduce to zero
        fi = RatPoly(ring, basis[i][2])
        fj = RatPoly(ring, basis[j][2])
        qi = tuple(a - b for a, b in zip(lcm, lti))
        qj = tuple(a - b for a, b in zip(lcm, ltj))
        s = _shift(fi, qi) * (1 / basis[i][1]) - _shift(fj, qj) * (1 / basis[j][1])
        r = normal_form(s, basis, order)
        if r.is_zero():
            continue
        lt, lc = order.leading_term(r)
        r = r * (1 / lc)
        k = len(basis)
        basis.append((lt, Fraction(1), r.terms))
        for idx in range(k):
            _push_pair(pairs, basis, idx, k, key)

    return _interreduce([RatPoly(ring, t) for _, _, t in basis], order)


def _shift(f, q):
    return RatPoly(f.ring, {tuple(a + b for a, b in zip(m, q)): c
                            for m, c in f.terms.items()})


def _push_pair(pairs, basis, i, j, key):
    lcm = tuple(max(a, b) for a, b in zip(basis[i][0], basis[j][0]))
    heapq.heappush(pairs, (key(lcm), (i, j), i, j, lcm))


def _interreduce(polys, order):
    """Minimalize leading terms, then reduce tails; canonical sorted output."""
    key = order.key
    lts = [order.leading_term(g)[0] for g in polys]
    keep = []
    for k, lt in enumerate(lts):
        dominated = False
        for k2, lt2 in enumerate(lts):
            if k2 == k:
                continue
            if _divides(lt2, lt) and (lt2 != lt or k2 < k):
                dominated = True
                break
        if not dominated:
            keep.append(polys[k])
    out = []
    for k, g in enumerate(keep):
        others = [(order.leading_term(h)[0], Fraction(1),
                   {m: c / order.leading_term(h)[1] for m, c in h.terms.items()})
                  for k2, h in enumerate(keep) if k2 != k]
        r = normal_form(g, others, order)
        if not r.is_zero():
            lt, lc = order.leading_term(r)
            out.append(r * (1 / lc))
    out.sort(key=lambda g: key(order.leading_term(g)[0]))
    return out


def is_groebner(basis, order) -> bool:
    """Every S-pair reduces to zero; used as a self-check in tests."""
    prepared = [(order.leading_term(g)[0], order.leading_term(g)[1], g.terms)
                for g in basis]
    for i, j in combinations(range(len(basis)), 2):
        lti, ltj = prepared[i][0], prepared[j][0]
        lcm = tuple(max(a, b) for a, b in zip(lti, ltj))
        qi = tuple(a - b for a, b in zip(lcm, lti))
        qj = tuple(a - b for a, b in zip(lcm, ltj))
        s = _shift(basis[i], qi) * (1 / prepared[i][1]) \
            - _shift(basis[j], qj) * (1 / prepared[j][1])
        if not normal_form(s, prepared, order).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# the determinantal ideal and the group action

def minors_ideal(d, n, ring=None) -> list:
    """All 2x2 minors x_ik x_jl - x_jk x_il of the variable grid."""
    if ring is None:
        ring = grid_ring(d, n)
    if d < 2:
        return []
    gens = []
    for i, j in combinations(range(1, d + 1), 2):
        for k, l in combinations(range(1, n + 1), 2):
            gens.append(ring.grid_var(i, k) * ring.grid_var(j, l)
                        - ring.grid_var(j, k) * ring.grid_var(i, l))
    return gens


def _entry_poly(entry, ring):
    if isinstance(entry, RatPoly):
        return entry.inject(ring) if entry.ring != ring else entry
    return RatPoly(ring, {(0,) * ring.nvars: Fraction(entry)})


def matrix_det(matrix, ring=None):
    """Exact determinant; entries may be numbers or polynomials."""
    size = len(matrix)
    if ring is None:
        rows = [[Fraction(x) for x in row] for row in matrix]
        if size == 1:
            return rows[0][0]
        det = 0
        from itertools import permutations
        for perm in permutations(range(size)):
            sign = 1
            seen = list(perm)
            # count inversions
            inv = sum(1 for a in range(size) for b in range(a + 1, size)
                      if seen[a] > seen[b])
            sign = -1 if inv % 2 else 1
            prod_ = Fraction(1)
            for r in range(size):
                prod_ *= rows[r][perm[r]]
            det += sign * prod_
        return det
    from itertools import permutations
    det = ring.zero()
    for perm in permutations(range(size)):
        inv = sum(1 for a in range(size) for b in range(a + 1, size)
                  if perm[a] > perm[b])
        term = ring.one() * (-1 if inv % 2 else 1)
        for r in range(size):
            term = term * _entry_poly(matrix[r][perm[r]], ring)
        det = det + term
    return det


def apply_matrices(matrices, gens) -> list:
    """Substitute column j of the grid by A_j times that column.

    Matrix entries may be rational numbers or polynomials in the
    generators' ring (e.g. in the deformation variable z); every matrix
    must be invertible over the fraction field.
    """
    ring = gens[0].ring
    d, n = ring.gridshape
    if len(matrices) != n:
        raise ValueError("need one matrix per column")
    images = {}
    for j, mat in enumerate(matrices, start=1):
        if len(mat) != d or any(len(row) != d for row in mat):
            raise ValueError("matrix %d is not %dx%d" % (j, d, d))
        det = matrix_det(mat, ring if _has_poly(mat) else None)
        if (det.is_zero() if isinstance(det, RatPoly) else det == 0):
            raise ValueError("matrix %d is singular" % j)
        for i in range(1, d + 1):
            img = ring.zero()
            for k in range(1, d + 1):
                img = img + _entry_poly(mat[i - 1][k - 1], ring) * ring.grid_var(k, j)
            images[ring.grid_index(i, j)] = img
    return [g.substitute(images) for g in gens]


def _has_poly(mat):
    return any(isinstance(x, RatPoly) for row in mat for x in row)


def initial_ideal(gens, order: TermOrder):
    """Initial monomial ideal of the generated ideal.

    Returns (ideal, decisive) where `decisive` records whether the
    weight part of the order already singled out every leading monomial
    of the reduced basis (ties are broken by lex either way).
    """
    gb = buchberger(gens, order)
    ring = gens[0].ring
    d, n = ring.gridshape
    decisive = all(order.weight_decisive(g) for g in gb)
    lts = []
    for g in gb:
        lt, _ = order.leading_term(g)
        lts.append(RatPoly(ring, {lt: Fraction(1)}).to_grid_monomial())
    return MonomialIdeal(d, n, lts), decisive


# ---------------------------------------------------------------------------
# intersection and saturation via one added variable

def intersect(gens_a, gens_b) -> list:
    """Generators of the intersection of two ideals in the same ring."""
    if not gens_a or not gens_b:
        return []
    ring = gens_a[0].ring
    big = ring.extend(("@s",))
    s = big.var("@s")
    lifted = [s * f.inject(big) for f in gens_a]
    lifted += [(big.one() - s) * g.inject(big) for g in gens_b]
    order = TermOrder(big, elim=(big.nvars - 1,))
    gb = buchberger(lifted, order)
    out = []
    for g in gb:
        if all(m[-1] == 0 for m in g.terms):
            out.append(g.project(ring))
    return out


def intersect_many(ideal_gens) -> list:
    out = None
    for gens in ideal_gens:
        out = gens if out is None else intersect(out, gens)
    return out if out is not None else []


def saturate_z(gens, zname="z") -> list:
    """Saturate with respect to the variable z: adjoin 1 - t*z, eliminate t,
    then strip z-contents from the output generators."""
    if not gens:
        return []
    ring = gens[0].ring
    iz = ring.index[zname]
    big = ring.extend(("@t",))
    t = big.var("@t")
    z = big.var(zname)
    lifted = [g.inject(big) for g in gens]
    lifted.append(big.one() - t * z)
    order = TermOrder(big, elim=(big.nvars - 1,))
    gb = buchberger(lifted, order)
    out = []
    for g in gb:
        if all(m[-1] == 0 for m in g.terms):
            out.append(_strip_z(g.project(ring), iz))
    return out


def _strip_z(f: RatPoly, iz: int) -> RatPoly:
    if f.is_zero():
        return f
    k = min(m[iz] for m in f.terms)
    if k == 0:
        return f
    return RatPoly(f.ring, {m[:iz] + (m[iz] - k,) + m[iz + 1:]: c
                            for m, c in f.terms.items()})


def special_fiber(matrices, d, n) -> list:
    """Set z to zero in the saturated, z-content-free transformed minors.

    `matrices` is one invertible d x d matrix per column, entries in Q[z]
    (RatPoly over grid_ring(d, n, ["z"]) or plain rationals).
    """
    ring = grid_ring(d, n, ("z",))
    iz = ring.nvars - 1
    mats = [[[_entry_poly(x, ring) for x in row] for row in mat] for mat in matrices]
    for j, mat in enumerate(mats):
        det = matrix_det(mat, ring)
        if det.is_zero():
            raise ValueError("matrix %d is singular over Q(z)" % (j + 1))
    gens = apply_matrices(mats, minors_ideal(d, n, ring))
    gens = [_strip_z(g, iz) for g in gens if not g.is_zero()]
    sat = saturate_z(gens, "z")
    fiber = [g.substitute_value("z", 0) for g in sat]
    fiber = [g for g in fiber if not g.is_zero()]
    small = grid_ring(d, n)
    fiber = [g.project(small) for g in fiber]
    return buchberger(fiber, lex_order(small))


def fiber_monomial_ideal(fiber_gens, d, n) -> MonomialIdeal:
    """Interpret a special fiber as a monomial ideal; fails if it is not one."""
    if not all(g.is_monomial() for g in fiber_gens):
        raise ValueError("special fiber is not a monomial ideal")
    return MonomialIdeal(d, n, [g.to_grid_monomial() for g in fiber_gens])


def weight_initial_route(weights, matrices, d, n) -> MonomialIdeal:
    """Initial ideal of the transformed minors under a generic weight order.

    Raises IndecisiveWeights when the weights do not single out every
    leading monomial; the result is checked squarefree.
    """
    ring = grid_ring(d, n)
    flat = _flatten_weights(weights, d, n)
    order = TermOrder(ring, weights=flat)
    gens = apply_matrices(matrices, minors_ideal(d, n, ring))
    ideal, decisive = initial_ideal(gens, order)
    if not decisive:
        raise IndecisiveWeights("weight vector has ties on the reduced basis")
    if not ideal.is_squarefree():
        raise AssertionError("initial ideal is not squarefree: %r" % (ideal,))
    return ideal


def _flatten_weights(weights, d, n):
    if len(weights) == d and all(len(row) == n for row in weights):
        return [w for row in weights for w in row]
    flat = list(weights)
    if len(flat) != d * n:
        raise ValueError("weights must be d*n values or a d x n matrix")
    return flat


# ---------------------------------------------------------------------------
# seeded sampling

def random_invertible(d, rng: Random, shape="full"):
    """Random integer matrix with entries in [-9, 9] and nonzero determinant.

    shape = "full" for arbitrary invertible, "borel" for the triangular
    group stabilizing the distinguished ideal under the column action
    (zero above the diagonal, nonzero diagonal).
    """
    while True:
        if shape == "full":
            mat = [[rng.randint(-9, 9) for _ in range(d)] for _ in range(d)]
        elif shape == "borel":
            mat = [[rng.randint(-9, 9) if i > j else
                    (rng.choice([x for x in range(-9, 10) if x]) if i == j else 0)
                    for j in range(d)] for i in range(d)]
        else:
            raise ValueError("unknown shape %r" % shape)
        if matrix_det(mat) != 0:
            return mat


def random_weights(d, n, rng: Random, hierarchic=False):
    """Generic integer weights; hierarchic draws keep each column strictly
    decreasing down the rows (so the order refines the row filtration)."""
    while True:
        w = [[rng.randint(1, 10 ** 6) for _ in range(n)] for _ in range(d)]
        cols = [[w[i][j] for i in range(d)] for j in range(n)]
        if any(len(set(c)) != d for c in cols):
            continue
        if hierarchic:
            for j in range(n):
                col = sorted((w[i][j] for i in range(d)), reverse=True)
                for i in range(d):
                    w[i][j] = col[i]
        return w


@dataclass
class GinTrial:
    kind: str
    squarefree: bool
    series_ok: bool
    equals_z: bool | None
    redraws: int


@dataclass
class GinReport:
    d: int
    n: int
    seed: int
    trials: list = field(default_factory=list)

    @property
    def all_ok(self):
        for t in self.trials:
            if not (t.squarefree and t.series_ok):
                return False
            if t.kind == "borel" and not t.equals_z:
                return False
        return True


def gin_sample(d, n, trials, seed, borel_trials=None) -> GinReport:
    """Seeded sampling of initial ideals of transformed minors.

    Generic invertible tuples must give squarefree initial ideals with
    the scheme's Hilbert series; tuples from the stabilizing triangular
    group with row-refining weights must reproduce the distinguished
    Borel-fixed ideal exactly.
    """
    from .borel import build_z
    rng = Random(seed)
    report = GinReport(d=d, n=n, seed=seed)
    z_ref = build_z(d, n)
    if borel_trials is None:
        borel_trials = max(1, trials // 5)
    for kind, count in (("generic", trials), ("borel", borel_trials)):
        for _ in range(count):
            mats = [random_invertible(d, rng,
                                      "full" if kind == "generic" else "borel")
                    for _ in range(n)]
            redraws = 0
            while True:
                w = random_weights(d, n, rng, hierarchic=(kind == "borel"))
                try:
                    ideal = weight_initial_route(w, mats, d, n)
                    break
                except IndecisiveWeights:
                    redraws += 1
                    if redraws > 20:
                        raise
            report.trials.append(GinTrial(
                kind=kind,
                squarefree=ideal.is_squarefree(),
                series_ok=series_equals_diagonal(ideal),
                equals_z=(ideal == z_ref) if kind == "borel" else None,
                redraws=redraws))
    return report


# ---------------------------------------------------------------------------
# duals and graded pieces

def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Squarefree dual: generators are the complements of the facets."""
    if not ideal.is_squarefree():
        raise ValueError("Alexander dual needs a squarefree ideal")
    cx = stanley_reisner(ideal)
    allv = set(all_grid_vars(ideal.d, ideal.n))
    gens = [Monomial.from_vars(allv - set(f)) for f in cx.facets]
    return MonomialIdeal(ideal.d, ideal.n, gens)


def graded_piece_dim(gens, u, ring=None) -> int:
    """Dimension of the quotient's graded piece at multidegree u.

    Builds the coefficient matrix of all multiplier-times-generator
    products of degree u against the monomial basis and subtracts its
    exact rank from the number of monomials.
    """
    if not gens:
        if ring is None:
            raise ValueError("zero ideal needs an explicit ring")
        d, n = ring.gridshape
        return len(monomials_of_degree(d, n, tuple(u)))
    ring = gens[0].ring
    d, n = ring.gridshape
    u = tuple(u)
    basis = {m: k for k, m in enumerate(monomials_of_degree(d, n, u))}
    rows = []
    for g in gens:
        dg = g.grid_multidegree()  # validates homogeneity
        diff = tuple(a - b for a, b in zip(u, dg))
        if any(x < 0 for x in diff):
            continue
        for mult in monomials_of_degree(d, n, diff):
            mp = ring.monomial_poly(mult)
            prod_ = mp * g
            row = {}
            for m, c in prod_.terms.items():
                mono = RatPoly(ring, {m: Fraction(1)}).to_grid_monomial()
                row[basis[mono]] = c
            rows.append(row)
    return len(basis) - rank_sparse(rows)


# ---------------------------------------------------------------------------
# parsing for matrices over z

_TERM_RE = re.compile(r"""\s*([+-]?)\s*            # sign
                          ([0-9]+(?:/[0-9]+)?)?    # coefficient
                          \s*(\*)?\s*
                          (z(?:\^([0-9]+))?)?\s*$  # power of z
                       """, re.VERBOSE)


def parse_z_poly(text, ring):
    """Parse strings like "z^2-3/2*z+1" into a polynomial of `ring`
    (which must contain the variable z)."""
    if isinstance(text, (int, float)):
        return _entry_poly(Fraction(text), ring)
    text = text.strip()
    if not text:
        raise ValueError("empty entry")
    out = ring.zero()
    z = ring.var("z")
    # split into signed terms
    chunks = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group(2) is None and m.group(4) is None):
            raise ValueError("cannot parse %r" % chunk)
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(4):
            power = int(m.group(5)) if m.group(5) else 1
            term = z * 1
            for _ in range(power - 1):
                term = term * z
        else:
            term = ring.one()
        out = out + term * (sign * coeff)
    return out


def load_matrices_json(data, d, n):
    """Matrices from parsed JSON: a list of n matrices, entries numbers or
    strings over z."""
    ring = grid_ring(d, n, ("z",))
    mats = []
    for mat in data:
        rows = []
        for row in mat:
            rows.append([parse_z_poly(x, ring) if isinstance(x, str)
                         else _entry_poly(x, ring) for x in row])
        mats.append(rows)
    return mats
