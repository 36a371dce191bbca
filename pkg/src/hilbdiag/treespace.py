"""Trees with labeled directed edges, and the d = 2 monomial ideals.

Monomial ideals in the 2 x n case correspond bijectively to trees on
n+1 unlabeled vertices carrying n labeled directed edges.  For distinct
edge labels i, j the symbol z_ij is the variable x_j when edge j points
away from edge i and y_j otherwise; the ideal of the tree is generated
by the products z_ij z_ji over label pairs.  Because the ideal is read
off the complete symbol table, that table doubles as the canonical form
of a tree and no graph-canonization machinery is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .gridcore import Monomial, MonomialIdeal
from . import groebner


class NotATreeIdeal(ValueError):
    """The given ideal does not come from a directed edge-labeled tree."""


class Tree:
    """n labeled directed edges on n+1 unlabeled vertices.

    edges[k] = (tail, head) for the edge labeled k+1; vertex names are
    internal only and carry no identity.
    """

    __slots__ = ("n", "edges")

    def __init__(self, edges):
        edges = [tuple(e) for e in edges]
        self.n = len(edges)
        verts = sorted({v for e in edges for v in e})
        if len(verts) != self.n + 1:
            raise ValueError("expected %d vertices, got %d" % (self.n + 1, len(verts)))
        relabel = {v: k for k, v in enumerate(verts)}
        self.edges = tuple((relabel[t], relabel[h]) for t, h in edges)
        if not self._connected():
            raise ValueError("edges do not form a tree")

    def _connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n + 1

    def adjacency(self):
        adj = {v: [] for v in range(self.n + 1)}
        for k, (t, h) in enumerate(self.edges):
            adj[t].append((h, k))
            adj[h].append((t, k))
        return adj

    def degrees(self):
        deg = [0] * (self.n + 1)
        for t, h in self.edges:
            deg[t] += 1
            deg[h] += 1
        return deg

    def key(self):
        return ztable(self)

    def __eq__(self, other):
        return isinstance(other, Tree) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Tree(%r)" % (list(self.edges),)


def _vertex_distances(tree: Tree):
    """All-pairs distances by BFS; the graphs have at most a few vertices."""
    adj = tree.adjacency()
    nv = tree.n + 1
    dist = [[None] * nv for _ in range(nv)]
    for s in range(nv):
        dist[s][s] = 0
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for w, _ in adj[v]:
                    if dist[s][w] is None:
                        dist[s][w] = dist[s][v] + 1
                        nxt.append(w)
            queue = nxt
    return dist


def facing_table(tree: Tree):
    """facing[i][j] = endpoint of edge j nearest to edge i (both 0-based)."""
    dist = _vertex_distances(tree)
    n = tree.n
    facing = [[None] * n for _ in range(n)]
    for i in range(n):
        ai, bi = tree.edges[i]
        for j in range(n):
            if i == j:
                continue
            c, dvert = tree.edges[j]
            dc = min(dist[c][ai], dist[c][bi])
            dd = min(dist[dvert][ai], dist[dvert][bi])
            facing[i][j] = c if dc < dd else dvert
    return facing


def ztable(tree: Tree) -> tuple:
    """Symbols z_ij over ordered pairs, flattened in (i, j) order.

    Entry is 'x' when edge j points away from edge i (its tail faces i).
    """
    facing = facing_table(tree)
    out = []
    for i in range(tree.n):
        for j in range(tree.n):
            if i == j:
                continue
            out.append('x' if facing[i][j] == tree.edges[j][0] else 'y')
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple:
    """All trees with n labeled directed edges, up to isomorphism.

    Vertex-labeled trees on {0..n} are generated from their code
    sequences; rooting at vertex 0 and pushing each vertex label onto
    its parent edge yields every edge-labeled tree (n+1 times over), and
    the 2^n orientations are layered on top.  Deduplication is by symbol
    table; since the facing endpoints do not depend on orientations, the
    symbol tables of all 2^n orientations are bit-flips of one base
    table.  The count is 2^n (n+1)^(n-2).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    npairs = n * (n - 1)
    # bit positions of the ordered pairs with a fixed second label j
    colmask = [0] * n
    pos = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            colmask[j] |= 1 << pos
            pos += 1
    seen = {}
    out = []
    for code in product(range(n + 1), repeat=max(n - 1, 0)):
        parent = _tree_from_code(code, n)
        base = [(parent[v], v) for v in range(1, n + 1)]  # edge label v
        tree = Tree(base)
        facing = facing_table(tree)
        packed = 0  # bit set where edge j faces edge i tail-first
        pos = 0
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if facing[i][j] == tree.edges[j][0]:
                    packed |= 1 << pos
                pos += 1
        for bits in range(1 << n):
            flip = 0
            b = bits
            while b:
                low = b & -b
                flip |= colmask[low.bit_length() - 1]
                b ^= low
            key = packed ^ flip
            if key in seen:
                continue
            edges = [(t, h) if not bits >> k & 1 else (h, t)
                     for k, (t, h) in enumerate(base)]
            seen[key] = len(out)
            out.append(Tree(edges))
    return tuple(sorted(out, key=lambda t: t.key()))


def _tree_from_code(code, n):
    """Parent array (rooted at 0) of the labeled tree with the given
    Pruefer-style code on vertex set {0..n}."""
    nv = n + 1
    degree = [1] * nv
    for v in code:
        degree[v] += 1
    adj = {v: set() for v in range(nv)}
    leaves = sorted(v for v in range(nv) if degree[v] == 1)
    code = list(code)
    import heapq
    heap = leaves[:]
    heapq.heapify(heap)
    for v in code:
        leaf = heapq.heappop(heap)
        adj[leaf].add(v)
        adj[v].add(leaf)
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    u = heapq.heappop(heap)
    w = heapq.heappop(heap)
    adj[u].add(w)
    adj[w].add(u)
    # root at 0
    parent = [None] * nv
    stack = [0]
    seen = {0}
    while stack:
        v = stack.pop()
        for w2 in adj[v]:
            if w2 not in seen:
                seen.add(w2)
                parent[w2] = v
                stack.append(w2)
    return parent


def tree_to_ideal(tree: Tree) -> MonomialIdeal:
    """The monomial ideal generated by z_ij z_ji over all label pairs."""
    n = tree.n
    facing = facing_table(tree)
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            # z_ij: variable in column j+1, row 1 for x, row 2 for y
            rj = 1 if facing[i][j] == tree.edges[j][0] else 2
            ri = 1 if facing[j][i] == tree.edges[i][0] else 2
            gens.append(Monomial({(rj, j + 1): 1, (ri, i + 1): 1}))
    return MonomialIdeal(2, n, gens)


def _symbols_from_ideal(ideal: MonomialIdeal):
    """Recover the z_ij table from a candidate tree ideal."""
    n = ideal.n
    if ideal.d != 2:
        raise NotATreeIdeal("tree ideals live on a 2-row grid")
    if len(ideal.gens) != n * (n - 1) // 2:
        raise NotATreeIdeal("expected one generator per column pair")
    z = {}
    seen_pairs = set()
    for g in ideal.gens:
        if not g.is_squarefree() or g.total_degree != 2:
            raise NotATreeIdeal("generators must be squarefree quadrics")
        (r1, c1), (r2, c2) = [v for v, _ in g.exps]
        if c1 == c2:
            raise NotATreeIdeal("generator does not mix two columns")
        pair = (min(c1, c2), max(c1, c2))
        if pair in seen_pairs:
            raise NotATreeIdeal("duplicate column pair")
        seen_pairs.add(pair)
        # z_{i j} is the column-j variable of the pair generator
        z[(c2 - 1, c1 - 1)] = 'x' if r1 == 1 else 'y'
        z[(c1 - 1, c2 - 1)] = 'x' if r2 == 1 else 'y'
    if len(seen_pairs) != n * (n - 1) // 2:
        raise NotATreeIdeal("missing column pairs")
    return z


def ideal_to_tree(ideal: MonomialIdeal) -> Tree:
    """Reconstruct the unique tree whose ideal is the given one.

    Two edges are adjacent iff no third edge separates them (all other
    edges face them on the same side); adjacent edges are glued at the
    facing endpoints.  The result is verified by recomputing its ideal.
    """
    n = ideal.n
    z = _symbols_from_ideal(ideal)
    if n == 1:
        return Tree([(0, 1)])

    def side(k, i):
        # endpoint of edge k facing edge i: tail iff z_ik == 'x'
        return 0 if z[(i, k)] == 'x' else 1

    # union-find over endpoints (edge, 0=tail / 1=head)
    parent = {}

    def find(a):
        while parent.get(a, a) != a:
            parent[a] = parent.get(parent[a], parent[a])
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i in range(n):
        for j in range(i + 1, n):
            if all(side(k, i) == side(k, j) for k in range(n) if k not in (i, j)):
                union((i, side(i, j)), (j, side(j, i)))
    classes = {}
    for i in range(n):
        for s in (0, 1):
            classes.setdefault(find((i, s)), len(classes))
    if len(classes) != n + 1:
        raise NotATreeIdeal("symbol table is not realizable")
    edges = [(classes[find((i, 0))], classes[find((i, 1))]) for i in range(n)]
    try:
        tree = Tree(edges)
    except ValueError as exc:
        raise NotATreeIdeal(str(exc))
    if tree_to_ideal(tree) != ideal:
        raise NotATreeIdeal("reconstructed tree does not match the ideal")
    return tree


def vertex_tangent_count(a: int) -> int:
    """Tangent directions contributed by a vertex of the given degree."""
    return 3 * (a - 1) if a <= 3 else a * (a - 1)


def tree_tangent_dim(tree: Tree) -> int:
    """Tangent space dimension from the vertex-degree formula."""
    return sum(vertex_tangent_count(a) for a in tree.degrees())


def is_smooth(tree: Tree) -> bool:
    """Smooth iff no vertex exceeds degree three (tangent dim = 3(n-1))."""
    return max(tree.degrees()) <= 3


# ---------------------------------------------------------------------------
# the graph of monomial ideals

def _move_results(tree: Tree):
    """All single moves: re-hang edge subsets across an incident edge."""
    adj = tree.adjacency()
    for v in range(tree.n + 1):
        incident = [k for _, k in adj[v]]
        if len(incident) < 2:
            continue
        for ell in incident:
            others = [k for k in incident if k != ell]
            w = tree.edges[ell][0] if tree.edges[ell][1] == v else tree.edges[ell][1]
            for r in range(1, len(others) + 1):
                for subset in combinations(others, r):
                    edges = list(tree.edges)
                    for k in subset:
                        t, h = edges[k]
                        edges[k] = (w if t == v else t, w if h == v else h)
                    yield Tree(edges), ell, subset


def _swap_results(tree: Tree):
    """All bivalent-vertex swaps, preserving each edge's sense along the path."""
    adj = tree.adjacency()
    for v in range(tree.n + 1):
        if len(adj[v]) != 2:
            continue
        (pu, k), (qu, ell) = adj[v]
        edges = list(tree.edges)
        # edge k moves across v to span (v, qu) and ell to span (pu, v);
        # each keeps its sense along the path, so the far endpoint's role
        # (tail or head) is preserved
        t, _ = edges[k]
        edges[k] = (qu, v) if t == v else (v, qu)
        t, _ = edges[ell]
        edges[ell] = (pu, v) if t == v else (v, pu)
        yield Tree(edges), (k, ell)


class MovesGraph:
    """Graph on the trees: vertices are canonical symbol tables."""

    __slots__ = ("n", "nodes", "edges")

    def __init__(self, n, nodes, edges):
        self.n = n
        self.nodes = nodes      # key -> Tree
        self.edges = edges      # frozenset({key1, key2}) -> set of move tags

    def edge_count(self, kind=None) -> int:
        if kind is None:
            return len(self.edges)
        return sum(1 for tags in self.edges.values()
                   if any(t[0] == kind for t in tags))

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj = {k: set() for k in self.nodes}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        start = next(iter(self.nodes))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.nodes)


def moves_graph(n: int) -> MovesGraph:
    """Vertices: all trees; edges: single subset-moves and bivalent swaps."""
    nodes = {t.key(): t for t in enumerate_trees(n)}
    edges = {}
    for key, tree in nodes.items():
        for other, ell, subset in _move_results(tree):
            ok = other.key()
            if ok == key:
                continue  # moves that land on an isomorphic tree are dropped
            edges.setdefault(frozenset((key, ok)), set()).add(
                ("move", ell + 1, tuple(sorted(k + 1 for k in subset))))
        for other, (k, ell) in _swap_results(tree):
            ok = other.key()
            if ok == key:
                continue
            edges.setdefault(frozenset((key, ok)), set()).add(
                ("swap", tuple(sorted((k + 1, ell + 1)))))
    return MovesGraph(n, nodes, edges)


# ---------------------------------------------------------------------------
# decorated trees of lines and their exact ideals

class DecoratedTree:
    """A tree of projective lines with matrices and attachment points.

    components: list of (labels, matrices) where labels is an iterable of
    factor indices in 1..n forming a partition block and matrices maps
    each of its labels to an invertible 2x2 rational matrix.
    attachments: list of (a, b, point_a, point_b) joining components a
    and b; each point is a nonzero parameter pair (s, t) on that
    component's line, up to scale.
    """

    def __init__(self, n, components, attachments):
        self.n = n
        self.components = []
        seen = set()
        for labels, matrices in components:
            labels = frozenset(labels)
            mats = {i: tuple(tuple(Fraction(x) for x in row) for row in matrices[i])
                    for i in labels}
            for i, m in mats.items():
                if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
                    raise ValueError("singular decoration matrix on factor %d" % i)
            if labels & seen:
                raise ValueError("component labels overlap")
            seen |= labels
            self.components.append((labels, mats))
        if seen != set(range(1, n + 1)):
            raise ValueError("labels must partition 1..n")
        self.attachments = []
        for a, b, pa, pb in attachments:
            pa, pb = tuple(map(Fraction, pa)), tuple(map(Fraction, pb))
            if pa == (0, 0) or pb == (0, 0):
                raise ValueError("attachment points must be nonzero")
            self.attachments.append((a, b, pa, pb))
        if len(self.attachments) != len(self.components) - 1 or not self._connected():
            raise ValueError("attachments must form a tree on the components")

    def _connected(self):
        nc = len(self.components)
        adj = {c: set() for c in range(nc)}
        for a, b, _, _ in self.attachments:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == nc

    def component_of(self, label: int) -> int:
        for c, (labels, _) in enumerate(self.components):
            if label in labels:
                return c
        raise KeyError(label)

    def first_step(self, src: int, dst: int):
        """First attachment on the tree path from component src to dst;
        returns the parameter point on the src side."""
        adj = {}
        for a, b, pa, pb in self.attachments:
            adj.setdefault(a, []).append((b, pa))
            adj.setdefault(b, []).append((a, pb))
        prev = {src: None}
        queue = [src]
        while queue:
            nxt = []
            for v in queue:
                for w, _ in adj.get(v, []):
                    if w not in prev:
                        prev[w] = v
                        nxt.append(w)
            queue = nxt
        # walk back from dst to the neighbor of src
        v = dst
        while prev[v] != src:
            v = prev[v]
        for w, point in adj[src]:
            if w == v:
                return point
        raise RuntimeError("unreachable")


def decorated_tree_ideal(deco: DecoratedTree) -> list:
    """Generators of the intersection ideal of a decorated tree of lines.

    Per component: transformed minors of its column submatrix, plus one
    linear form per outside factor read off the nearest attachment point
    of that factor's component.
    """
    n = deco.n
    ring = groebner.grid_ring(2, n)
    component_ideals = []
    for cidx, (labels, mats) in enumerate(deco.components):
        gens = []
        cols = sorted(labels)
        # minors of the transformed submatrix on this component's columns
        for k, l in combinations(cols, 2):
            ak, al = mats[k], mats[l]
            xk = ring.grid_var(1, k) * ak[0][0] + ring.grid_var(2, k) * ak[0][1]
            yk = ring.grid_var(1, k) * ak[1][0] + ring.grid_var(2, k) * ak[1][1]
            xl = ring.grid_var(1, l) * al[0][0] + ring.grid_var(2, l) * al[0][1]
            yl = ring.grid_var(1, l) * al[1][0] + ring.grid_var(2, l) * al[1][1]
            gens.append(xk * yl - yk * xl)
        for i in range(1, n + 1):
            if i in labels:
                continue
            ci = deco.component_of(i)
            s, t = deco.first_step(ci, cidx)
            # image of the parameter point under the factor-i matrix
            mi = deco.components[ci][1][i]
            p = mi[0][0] * s + mi[0][1] * t
            q = mi[1][0] * s + mi[1][1] * t
            gens.append(ring.grid_var(1, i) * q - ring.grid_var(2, i) * p)
        component_ideals.append(gens)
    result = component_ideals[0]
    for gens in component_ideals[1:]:
        result = groebner.intersect(result, gens)
    return result


def torus_fixed_decoration(tree: Tree) -> DecoratedTree:
    """The decorated tree of a monomial tree: singleton components with
    identity matrices, attachments at the torus-fixed endpoints."""
    n = tree.n
    ident = ((1, 0), (0, 1))
    components = [({i + 1}, {i + 1: ident}) for i in range(n)]
    attachments = []
    adj = tree.adjacency()
    for v in range(n + 1):
        incident = sorted(k for _, k in adj[v])
        hub = incident[0]
        for k in incident[1:]:
            # parameter of vertex v on edge e: (0,1) at the tail, (1,0) at head
            pa = (0, 1) if tree.edges[hub][0] == v else (1, 0)
            pb = (0, 1) if tree.edges[k][0] == v else (1, 0)
            attachments.append((hub, k, pa, pb))
    return DecoratedTree(n, components, attachments)


def cross_ratio_family(t) -> list:
    """Four lines meeting a fifth at 0, 1, infinity and t; the intersection
    ideal depends on the cross ratio, so distinct t give distinct orbits."""
    t = Fraction(t)
    if t in (0, 1):
        raise ValueError("t must keep the four marked points distinct")
    ident = ((1, 0), (0, 1))
    components = [({i}, {i: ident}) for i in range(1, 6)]
    marks = [(0, 1), (1, 1), (1, 0), (t, 1)]
    attachments = [(4, j, marks[j], (0, 1)) for j in range(4)]
    return decorated_tree_ideal(DecoratedTree(5, components, attachments))
