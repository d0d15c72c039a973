r"""
Integral homology of an origami and the induced action of the T and R
moves, realized at the level of the square complex.

The cell structure of an origami with squares ``0..N-1``:

- one 2-cell per square;
- one horizontal edge ``h_i`` (bottom side of square i, oriented
  rightward) and one vertical edge ``v_i`` (left side, oriented upward)
  per square, so 2N edges indexed ``h_i -> i`` and ``v_i -> N + i``;
- vertices are the identified corner classes; the class of the
  bottom-left corner of square i is the commutator cycle through i.

The face boundary is ``h_i + v_{pi_h(i)} - h_{pi_v(i)} - v_i``.  The
first homology of the closed surface is the integer cycle space modulo
these boundaries; it is free of rank 2g, so the boundary lattice is a
direct summand and a Smith normal form of its inclusion yields an
integral basis of a complement together with an integral projection.

The intersection pairing is evaluated combinatorially from the ribbon
structure.  Around a vertex of cone angle 2 pi k the 4k incident
half-edges come in a counterclockwise cyclic order (per quadrant sheet
``i``: the outgoing ``h_i``, the outgoing ``v_i``, the incoming
``h_{pi_h^-1(i)}``, the incoming ``v_{pi_v^-1 pi_h^-1(i)}``, then the
next sheet).  For 1-cycles ``a, b`` with inward flows ``A_m, B_m``
through the ordered half-edges of a vertex, the local crossing count is
``(1/2) sum_{m<l} (A_m B_l - A_l B_m)`` (rotation-invariant because the
flows of a cycle sum to zero around the vertex), and the intersection
number is the sum over vertices.  On the unit torus this gives
``[h].[v] = +1``.

Chain maps realizing the generators (new complex on the right):

- ``T``: ``h_i -> h'_i`` and ``v_i -> h'_i + v'_{pi_h(i)}`` (the sheared
  vertical edge becomes the diagonal of a new square, taken as the
  right-then-up edge path);
- ``R``: ``h_i -> v'_{pi_v^-1(i)}`` and ``v_i -> -h'_i`` (quarter turn).

Both send face boundaries to face boundaries on the nose, act on the
tautological plane ``span([sum h], [sum v])`` by ``[[1,1],[0,1]]`` and
``[[0,-1],[1,0]]`` respectively (the pushforward convention; the
inverse-transpose convention would give the transposed inverses), and
preserve the intersection form exactly.  Every constructed matrix is
verified against both properties and a :class:`ConsistencyError` is
raised on any violation.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import DomainError, ConsistencyError
from .origami import Origami, apply_generator, stratum_of
from .permutations import perm_commutator, perm_cycles, perm_inverse


# -- exact integer linear algebra (small dense matrices) ------------------


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += c * bk[j]
    return out


def _int_det(mat):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _smith_normal_form(mat):
    """Smith normal form with row transforms tracked.

    Returns ``(diag, U, Uinv)`` where ``U mat V = diag(d_1, ..., d_r)``
    for some unimodular column transform V (not returned), ``U`` is
    unimodular and ``Uinv`` its inverse.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    m = [row[:] for row in mat]
    u = _identity(rows)
    uinv = _identity(rows)

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]
        for r in range(rows):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def row_add(i, j, c):
        # row_i += c * row_j; inverse: column_j -= c * column_i
        for t in range(cols):
            m[i][t] += c * m[j][t]
        for t in range(rows):
            u[i][t] += c * u[j][t]
        for r in range(rows):
            uinv[r][j] -= c * uinv[r][i]

    def row_negate(i):
        for t in range(cols):
            m[i][t] = -m[i][t]
        for t in range(rows):
            u[i][t] = -u[i][t]
        for r in range(rows):
            uinv[r][i] = -uinv[r][i]

    def col_swap(i, j):
        for r in range(rows):
            m[r][i], m[r][j] = m[r][j], m[r][i]

    def col_add(i, j, c):
        for r in range(rows):
            m[r][i] += c * m[r][j]

    diag = []
    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate a nonzero pivot of minimal magnitude
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        # clear row t and column t; restart if a reduction was inexact
        clean = False
        while not clean:
            clean = True
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    row_add(i, t, -q)
                    if m[i][t] != 0:
                        row_swap(t, i)
                        clean = False
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    col_add(j, t, -q)
                    if m[t][j] != 0:
                        col_swap(t, j)
                        clean = False
        if m[t][t] < 0:
            row_negate(t)
        # enforce divisibility of the remaining block by the pivot
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        diag.append(m[t][t])
        t += 1
    return diag, u, uinv


# -- the square complex ----------------------------------------------------


@dataclass(frozen=True)
class HomologyData:
    """Integral homology package of one origami.

    Matrices are integer numpy arrays; edge coordinates are ordered
    ``(h_0..h_{N-1}, v_0..v_{N-1})``.
    """

    origami: Origami
    rank: int  # = 2g
    vertex_of_square: tuple
    cycle_basis: np.ndarray  # 2N x (N + 2g - 1), fundamental cycles
    boundary_basis: np.ndarray  # 2N x (N - 1), face boundaries
    homology_basis: np.ndarray  # 2N x 2g, cycle representatives
    projection: np.ndarray  # 2g x 2N, coordinates mod boundaries
    intersection_form: np.ndarray  # 2g x 2g, antisymmetric, unimodular
    taut_h: np.ndarray  # class of sum of horizontal edges
    taut_v: np.ndarray  # class of sum of vertical edges


def _vertex_classes(o):
    comm = perm_commutator(o.h, o.v)
    vertex_of = [0] * o.n_squares
    for idx, cyc in enumerate(perm_cycles(comm)):
        for x in cyc:
            vertex_of[x] = idx
    return tuple(vertex_of), len(perm_cycles(comm))


def _edge_endpoints(o, vertex_of):
    n = o.n_squares
    tails = []
    heads = []
    for i in range(n):
        tails.append(vertex_of[i])
        heads.append(vertex_of[o.h[i]])
    for i in range(n):
        tails.append(vertex_of[i])
        heads.append(vertex_of[o.v[i]])
    return tails, heads


def _cycle_basis(o):
    """Fundamental cycles of the 1-skeleton from a BFS spanning tree.

    Returns ``(F, nontree)`` where the columns of the 2N x D integer
    matrix ``F`` are the fundamental cycles and ``nontree`` lists the
    defining non-tree edge of each column.
    """
    n = o.n_squares
    vertex_of, n_vertices = _vertex_classes(o)
    tails, heads = _edge_endpoints(o, vertex_of)
    n_edges = 2 * n

    adjacency = [[] for _ in range(n_vertices)]
    for e in range(n_edges):
        adjacency[tails[e]].append((e, heads[e], 1))
        adjacency[heads[e]].append((e, tails[e], -1))

    parent = [None] * n_vertices  # (edge, direction) toward the root side
    order = [0]
    seen = [False] * n_vertices
    seen[0] = True
    tree_edges = set()
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for e, w, d in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = (e, d)
                tree_edges.add(e)
                order.append(w)
    if not all(seen):
        raise ConsistencyError("1-skeleton of a connected origami is connected")

    # chain of the tree path root -> u, as an edge-coefficient vector
    path = {0: [0] * n_edges}
    for u in order[1:]:
        e, d = parent[u]
        other = tails[e] if d == 1 else heads[e]
        vec = path[other][:]
        vec[e] += d
        path[u] = vec

    nontree = [e for e in range(n_edges) if e not in tree_edges]
    columns = []
    for e in nontree:
        vec = [0] * n_edges
        vec[e] = 1
        pt = path[tails[e]]
        ph = path[heads[e]]
        for t in range(n_edges):
            vec[t] += pt[t] - ph[t]
        columns.append(vec)
    F = np.array(columns, dtype=np.int64).T if columns else np.zeros(
        (n_edges, 0), dtype=np.int64
    )
    return F, nontree, vertex_of


def _face_boundaries(o):
    n = o.n_squares
    B = np.zeros((2 * n, n), dtype=np.int64)
    for i in range(n):
        B[i, i] += 1
        B[n + o.h[i], i] += 1
        B[o.v[i], i] -= 1
        B[n + i, i] -= 1
    return B


def _corner_half_edges(o):
    """Counterclockwise half-edge lists around each vertex.

    Each list entry is ``(edge_index, inward_sign)``: +1 when the
    half-edge is the head end (flow along the edge enters the vertex),
    -1 when it is the tail end.
    """
    n = o.n_squares
    hinv = perm_inverse(o.h)
    vinv = perm_inverse(o.v)
    # counterclockwise rotation of the quadrant sheet around a corner
    rotation = perm_commutator(o.v, o.h)  # v h v^-1 h^-1
    corners = []
    for cyc in perm_cycles(rotation):
        half_edges = []
        for i in cyc:
            # quadrant sheet with north-east square i, counterclockwise:
            # right, up, left, down
            half_edges.append((i, -1))  # h_i leaves
            half_edges.append((n + i, -1))  # v_i leaves
            half_edges.append((hinv[i], +1))  # h of the NW square enters
            half_edges.append((n + o.h[vinv[hinv[i]]], +1))  # v of the SE square enters
        corners.append(half_edges)
    return corners


def _chain_pairing_doubled(o):
    """Twice the chain-level intersection pairing in edge coordinates.

    ``a . b = (1/2) a^T Q2 b`` for integer 1-cycles ``a, b``; the factor
    keeps the matrix integral.
    """
    n = o.n_squares
    q2 = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for half_edges in _corner_half_edges(o):
        k = len(half_edges)
        for m in range(k):
            em, sm = half_edges[m]
            for l in range(m + 1, k):
                el, sl = half_edges[l]
                q2[em, el] += sm * sl
                q2[el, em] -= sm * sl
    return q2


def homology_data(o):
    """Build the integral homology package of ``o``.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> H = homology_data(make_origami((0,), (0,)))   # unit torus
        >>> H.rank
        2
        >>> H.intersection_form.tolist()
        [[0, 1], [-1, 0]]
    """
    n = o.n_squares
    F, nontree, vertex_of = _cycle_basis(o)
    dim = F.shape[1]
    faces = _face_boundaries(o)
    genus = stratum_of(o).genus
    if dim != n + 2 * genus - 1:
        raise ConsistencyError(
            f"cycle space dimension {dim} disagrees with genus {genus}"
        )

    # face boundaries in fundamental-cycle coordinates: a cycle's
    # coordinates are its coefficients on the non-tree edges
    boundary_cols = [faces[:, i] for i in range(n - 1)]
    bmat = [[int(col[e]) for col in boundary_cols] for e in nontree]
    if boundary_cols:
        coords = np.array(bmat, dtype=np.int64)
        if not np.array_equal(F @ coords, np.stack(boundary_cols, axis=1)):
            raise ConsistencyError("face boundaries do not lie in the cycle space")
    diag, u, uinv = _smith_normal_form(bmat)
    r = len(diag)
    if r != n - 1 or any(d != 1 for d in diag):
        raise ConsistencyError(
            f"boundary lattice is not a rank-{n - 1} direct summand: {diag}"
        )

    u = np.array(u, dtype=np.int64)
    uinv = np.array(uinv, dtype=np.int64)
    homology_basis = F @ uinv[:, r:]

    selection = np.zeros((dim, 2 * n), dtype=np.int64)
    for j, e in enumerate(nontree):
        selection[j, e] = 1
    projection = u[r:, :] @ selection

    if not np.array_equal(projection @ homology_basis, np.eye(dim - r, dtype=np.int64)):
        raise ConsistencyError("projection is not a left inverse of the basis")

    rank = dim - r
    if rank != 2 * genus:
        raise ConsistencyError(f"homology rank {rank} != 2g = {2 * genus}")

    pairing2 = _chain_pairing_doubled(o)
    if np.any(faces.T @ pairing2 @ homology_basis) or np.any(
        homology_basis.T @ pairing2 @ faces
    ):
        raise ConsistencyError("face boundaries do not pair to zero with cycles")
    J2 = homology_basis.T @ pairing2 @ homology_basis
    if np.any(J2 % 2):
        raise ConsistencyError("intersection pairing is not integral on cycles")
    J = J2 // 2
    if not np.array_equal(J, -J.T):
        raise ConsistencyError("intersection form is not antisymmetric")
    det = _int_det([[int(x) for x in row] for row in J])
    if abs(det) != 1:
        raise ConsistencyError(f"intersection form is not unimodular: det = {det}")

    ones_h = np.concatenate([np.ones(n, dtype=np.int64), np.zeros(n, dtype=np.int64)])
    ones_v = np.concatenate([np.zeros(n, dtype=np.int64), np.ones(n, dtype=np.int64)])
    return HomologyData(
        origami=o,
        rank=rank,
        vertex_of_square=tuple(vertex_of),
        cycle_basis=F,
        boundary_basis=faces[:, : n - 1],
        homology_basis=homology_basis,
        projection=projection,
        intersection_form=J,
        taut_h=projection @ ones_h,
        taut_v=projection @ ones_v,
    )


# -- chain maps and the induced action on homology -------------------------


def chain_matrix(o, gen):
    """Edge chain map of the generator, as a matrix from the edge space
    of ``o`` to the edge space of ``apply_generator(o, gen)``."""
    n = o.n_squares
    c = np.zeros((2 * n, 2 * n), dtype=np.int64)
    if gen == "T":
        for i in range(n):
            c[i, i] += 1  # h_i -> h'_i
            c[i, n + i] += 1  # v_i -> h'_i + v'_{h(i)}
            c[n + o.h[i], n + i] += 1
    elif gen == "R":
        vinv = perm_inverse(o.v)
        for i in range(n):
            c[n + vinv[i], i] += 1  # h_i -> v'_{v^-1(i)}
            c[i, n + i] -= 1  # v_i -> -h'_i
    elif gen == "L":
        # mirror of T: the sheared horizontal edge becomes the diagonal,
        # taken as the up-then-right edge path
        for i in range(n):
            c[n + i, n + i] += 1  # v_i -> v'_i
            c[n + i, i] += 1  # h_i -> v'_i + h'_{v(i)}
            c[o.v[i], i] += 1
    else:
        raise DomainError(f"unknown generator {gen!r}")
    return c


def relabel_chain_matrix(sigma, n):
    """Edge chain map of the square relabeling ``i -> sigma(i)``."""
    c = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        c[sigma[i], i] = 1
        c[n + sigma[i], n + i] = 1
    return c


_TAUT_ACTION = {
    # images of ([sum h], [sum v]) in the target tautological basis
    "T": ((1, 0), (1, 1)),
    "R": ((0, 1), (-1, 0)),
    "L": ((1, 1), (0, 1)),
}


def _check_action(A, src, dst, gen):
    J1 = src.intersection_form
    J2 = dst.intersection_form
    if not np.array_equal(A.T @ J2 @ A, J1):
        raise ConsistencyError(f"{gen}-action does not preserve the intersection form")
    (ah, bh), (av, bv) = _TAUT_ACTION[gen]
    if not np.array_equal(A @ src.taut_h, ah * dst.taut_h + bh * dst.taut_v):
        raise ConsistencyError(f"{gen}-action is wrong on the tautological plane")
    if not np.array_equal(A @ src.taut_v, av * dst.taut_h + bv * dst.taut_v):
        raise ConsistencyError(f"{gen}-action is wrong on the tautological plane")


def generator_action(o, gen, src=None, dst=None):
    """Integer matrix of the generator on homology coordinates, from
    the fiber over ``o`` to the fiber over ``apply_generator(o, gen)``.

    The matrix is exactly symplectic (``A^T J' A = J``) and acts on the
    tautological plane by the defining two-by-two matrix of the
    generator in the pushforward convention; both properties are
    verified on every call.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> generator_action(make_origami((0,), (0,)), "T").tolist()
        [[1, 1], [0, 1]]
    """
    if src is None:
        src = homology_data(o)
    o2 = apply_generator(o, gen)
    if dst is None:
        dst = homology_data(o2)
    A = dst.projection @ chain_matrix(o, gen) @ src.homology_basis
    _check_action(A, src, dst, gen)
    return A


# -- holonomy --------------------------------------------------------------


def holonomy_lattice_index(o):
    """Index in Z^2 of the lattice of absolute periods of ``o``.

    The origami is *reduced* (does not factor through a larger torus)
    exactly when the index is 1.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> holonomy_lattice_index(make_origami((1, 0, 2), (2, 1, 0)))
        1
        >>> holonomy_lattice_index(make_origami((1, 0, 3, 2), (2, 3, 0, 1)))
        4
    """
    n = o.n_squares
    F, _, _ = _cycle_basis(o)
    hol = np.zeros((2, F.shape[1]), dtype=np.int64)
    hol[0] = F[:n].sum(axis=0)
    hol[1] = F[n:].sum(axis=0)
    g = 0
    cols = F.shape[1]
    for i in range(cols):
        for j in range(i + 1, cols):
            minor = int(hol[0, i]) * int(hol[1, j]) - int(hol[0, j]) * int(hol[1, i])
            g = gcd(g, abs(minor))
    if g == 0:
        raise ConsistencyError("holonomy lattice has rank below 2")
    return g


def is_reduced(o):
    """True iff the torus cover defined by ``o`` is primitive."""
    return holonomy_lattice_index(o) == 1
