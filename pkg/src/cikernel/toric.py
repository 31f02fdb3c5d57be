"""Integer linear algebra and toric ideals.

toric_ideal(A) realizes the prime binomial ideal attached to an integer
matrix: binomials p^{u+} - p^{u-} for u in the integer kernel, saturated
by the product of all variables.  design_matrix builds the 0/1
clique-marginal design of a discrete undirected graphical model, whose
toric ideal is the model's vanishing ideal.
"""

from __future__ import annotations

import itertools

from .ideals import Ideal, saturate_by_variables
from .models import CIStatement, DiscreteModel, markov_ring, state_tuples
from .poly import RingContext


class IntMatrix:
    """Dense rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
        self.rows = rows

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def mul_vector(self, v):
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.rows)

    def to_csv(self):
        return "\n".join(",".join(str(x) for x in row) for row in self.rows) + "\n"

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols})"


def integer_kernel(A: IntMatrix):
    """Basis of the saturated integer kernel lattice {u : A u = 0}.

    Unimodular column operations reduce A to column echelon form; the
    columns of the transformation matrix sitting over the zero columns
    form a basis, and because the transformation is invertible over the
    integers the basis spans the full kernel lattice (no finite-index
    sublattice issues)."""
    h, r = A.nrows, A.ncols
    M = [list(row) for row in A.rows]
    U = [[1 if i == j else 0 for j in range(r)] for i in range(r)]

    def col_addmul(dst, src, q):
        for i in range(h):
            M[i][dst] += q * M[i][src]
        for i in range(r):
            U[i][dst] += q * U[i][src]

    def col_swap(a, b):
        for i in range(h):
            M[i][a], M[i][b] = M[i][b], M[i][a]
        for i in range(r):
            U[i][a], U[i][b] = U[i][b], U[i][a]

    pivot = 0
    for i in range(h):
        active = [j for j in range(pivot, r) if M[i][j]]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda j: abs(M[i][j]))
            j0 = active[0]
            for j in active[1:]:
                col_addmul(j, j0, -(M[i][j] // M[i][j0]))
            active = [j for j in active if M[i][j]]
        j0 = active[0]
        if j0 != pivot:
            col_swap(j0, pivot)
        pivot += 1

    basis = []
    for j in range(pivot, r):
        vec = tuple(U[i][j] for i in range(r))
        lead = next((x for x in vec if x), 1)
        if lead < 0:
            vec = tuple(-x for x in vec)
        basis.append(vec)
    basis.sort()
    return basis


def kernel_binomial(ring, u):
    """p^{u+} - p^{u-} for an integer vector u."""
    plus = tuple(max(x, 0) for x in u)
    minus = tuple(max(-x, 0) for x in u)
    return ring.monomial(plus) - ring.monomial(minus)


def toric_ideal(A: IntMatrix, ring: RingContext) -> Ideal:
    """The toric ideal of A in the given ring: the lattice-basis binomial
    ideal saturated by every variable."""
    if A.ncols != ring.arity:
        raise ValueError("matrix width must match ring arity")
    basis = integer_kernel(A)
    if not basis:
        return Ideal(ring, ())
    gens = [kernel_binomial(ring, u) for u in basis]
    return saturate_by_variables(Ideal(ring, gens), ring.variables)


class UndirectedGraph:
    """Simple undirected graph on vertices 1..m."""

    __slots__ = ("m", "edges")

    def __init__(self, m, edges):
        m = int(m)
        if m < 1:
            raise ValueError("need at least one vertex")
        canon = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError("no loops allowed")
            if not (1 <= a <= m and 1 <= b <= m):
                raise ValueError("edge endpoint out of range")
            canon.add((min(a, b), max(a, b)))
        self.m = m
        self.edges = frozenset(canon)

    def neighbors(self, v):
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, UndirectedGraph)
            and self.m == other.m
            and self.edges == other.edges
        )

    def __repr__(self):
        return f"UndirectedGraph({self.m}, {sorted(self.edges)})"

    @classmethod
    def from_json(cls, obj):
        return cls(obj["vertices"], obj["edges"])


def path_graph(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def maximal_cliques(G: UndirectedGraph):
    """All maximal cliques, sorted; Bron-Kerbosch without pivoting (the
    graphs here have a handful of vertices)."""
    cliques = []
    adj = {v: G.neighbors(v) for v in range(1, G.m + 1)}

    def expand(R, P, X):
        if not P and not X:
            cliques.append(tuple(sorted(R)))
            return
        for v in sorted(P):
            expand(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(range(1, G.m + 1)), set())
    return sorted(cliques)


def design_matrix(G: UndirectedGraph, sizes) -> IntMatrix:
    """0/1 design of the graphical model: rows indexed by (maximal clique,
    clique cell), columns by joint states; entry 1 iff the state restricts
    to the cell."""
    sizes = tuple(int(r) for r in sizes)
    if len(sizes) != G.m:
        raise ValueError("sizes length must equal vertex count")
    states = list(state_tuples(sizes))
    rows = []
    for clique in maximal_cliques(G):
        cells = itertools.product(*(range(1, sizes[v - 1] + 1) for v in clique))
        for cell in cells:
            row = [
                1 if all(state[v - 1] == c for v, c in zip(clique, cell)) else 0
                for state in states
            ]
            rows.append(row)
    return IntMatrix(rows)


def is_chordal(G: UndirectedGraph) -> bool:
    """Maximum cardinality search; chordal iff the resulting order is a
    perfect elimination ordering."""
    n = G.m
    adj = {v: G.neighbors(v) for v in range(1, n + 1)}
    weight = {v: 0 for v in range(1, n + 1)}
    order = []
    seen = set()
    for _ in range(n):
        v = max(
            (u for u in range(1, n + 1) if u not in seen),
            key=lambda u: (weight[u], -u),
        )
        order.append(v)
        seen.add(v)
        for u in adj[v]:
            if u not in seen:
                weight[u] += 1
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in adj[v] if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: position[u])
        if any(u != parent and u not in adj[parent] for u in earlier):
            return False
    return True


def global_markov_statements(G: UndirectedGraph):
    """Global Markov CI statements for the graphs the catalog uses (the
    three-vertex path and the four-cycle); other graphs are rejected."""
    if G == path_graph(3):
        return [CIStatement([1], [3], [2])]
    if G == cycle_graph(4):
        return [CIStatement([1], [3], [2, 4]), CIStatement([2], [4], [1, 3])]
    raise ValueError("unsupported graph: no hard-coded global Markov list")


def graphical_model_ring(G: UndirectedGraph, sizes, order="grevlex"):
    return markov_ring(DiscreteModel(sizes), order)
