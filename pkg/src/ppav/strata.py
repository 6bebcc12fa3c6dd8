"""Components of the involution locus, their witness families, and the connectivity certificate."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import networkx as nx

from ppav.errors import (
    DimensionMismatch,
    EvenG,
    HyperellipticCase,
    ImaginaryPartNotPositiveDefinite,
    IndexOutOfRange,
    InternalInconsistency,
    OddG,
    PpavError,
    PreconditionViolated,
    VerificationFailed,
)
from ppav.exact import GaussianRational, I, Matrix
from ppav.siegel import SiegelPoint, is_fixed, stratum_contains
from ppav.symplectic import (
    J1,
    InvolutionType,
    SymplecticInvolution,
    classify_involution,
    is_involution,
    is_symplectic,
    reiner_block,
    reiner_normal_form,
)

X_BLOCK_DEFAULT = (I, I)  # (a, b) giving Im X = [[2, 1], [1, 1]] > 0


def x_block(a, b) -> Matrix:
    """``[[2a, a], [a, b]]``: the 2x2 shape commuting with ``J_1`` as ``J_1 X = X J_1^T``."""
    a, b = GaussianRational.coerce(a), GaussianRational.coerce(b)
    return Matrix([[2 * a, a], [a, b]])


# counting -------------------------------------------------------------------


def all_triples(g: int) -> list[InvolutionType]:
    return [
        InvolutionType(x, y, g - 2 * x - y)
        for x in range(g // 2 + 1)
        for y in range(g - 2 * x + 1)
    ]


def admissible_triples(g: int) -> list[InvolutionType]:
    """Types other than ``(0,0,g)`` (identity) and ``(0,g,0)`` (``-id``), lexicographic."""
    if g < 2:
        raise PreconditionViolated("admissible triples need g >= 2")
    return [t for t in all_triples(g) if t.is_admissible]


def component_dimension(t: InvolutionType) -> int:
    x, y, z = t.as_tuple()
    return x * x + x + x * y + x * z + (y * y + y + z * z + z) // 2


def component_count_bound(g: int) -> int:
    if g < 3:
        raise PreconditionViolated("the component bound is stated for g >= 3")
    if g % 2 == 0:
        return g * (g + 6) // 8
    return (g + 5) * (g - 1) // 8


def triple_count(g: int) -> int:
    """Number of non-negative ``(x, y, z)`` with ``2x + y + z = g``."""
    return (g + 2) ** 2 // 4 if g % 2 == 0 else (g + 1) * (g + 3) // 4


@dataclass(frozen=True)
class ComponentClass:
    """A component label up to the ``y <-> z`` identification; ``representative`` has ``y <= z``."""

    representative: InvolutionType
    dual: InvolutionType
    dimension: int

    @classmethod
    def of(cls, t: InvolutionType) -> ComponentClass:
        rep = min(t, t.dual())
        return cls(rep, rep.dual(), component_dimension(rep))

    def __contains__(self, t: InvolutionType) -> bool:
        return t in (self.representative, self.dual)


def dual_classes(g: int) -> list[ComponentClass]:
    if g < 2:
        raise PreconditionViolated("dual classes need g >= 2")
    return list(dict.fromkeys(ComponentClass.of(t) for t in admissible_triples(g)))


def jacobian_type(i: int, g: int) -> InvolutionType:
    """Type of the involution induced on the Jacobian by a curve involution with quotient genus ``i``."""
    if i == 0:
        raise HyperellipticCase("quotient genus 0 (hyperelliptic involution) is excluded")
    if not 1 <= i <= (g + 1) // 2:
        raise IndexOutOfRange(f"quotient genus must lie in 1..{(g + 1) // 2}, got {i}")
    if g % 2 == 1 and i == (g + 1) // 2:
        return InvolutionType((g - 1) // 2, 0, 1)
    return InvolutionType(i, g - 2 * i, 0)


# witness families -------------------------------------------------------------


def _gaussians(values: Sequence, n: int, name: str) -> list[GaussianRational]:
    if len(values) != n:
        raise DimensionMismatch(f"{name} needs {n} entries, got {len(values)}")
    return [GaussianRational.coerce(v) for v in values]


def family_F0_witness(g: int, a: Sequence | None = None) -> SiegelPoint:
    """``diag(a_1, ..., a_g)``: a product of g elliptic curves."""
    a = _gaussians([I] * g if a is None else a, g, "a")
    if any(v.im <= 0 for v in a):
        raise ImaginaryPartNotPositiveDefinite("each a_j needs Im(a_j) > 0")
    return SiegelPoint(Matrix.diag(a))


def _sign_involution(g: int, negative: Sequence[int]) -> SymplecticInvolution:
    """Diagonal involution sending ``lambda_l -> -lambda_l`` for ``l`` and ``l + g``, ``l`` in ``negative``."""
    signs = [1] * g
    for l in negative:
        signs[l] = -1
    return SymplecticInvolution(Matrix.diag(signs + signs))


def phi0_matrix(g: int, y: int) -> SymplecticInvolution:
    """``-1`` on ``lambda_1..lambda_y`` and ``lambda_{g+1}..lambda_{g+y}``, ``+1`` elsewhere."""
    if not 1 <= y <= g - 1:
        raise IndexOutOfRange(f"y must lie in 1..{g - 1}, got {y}")
    inv = _sign_involution(g, range(y))
    t = InvolutionType(0, y, g - y)
    W = reiner_block(t)
    if inv.matrix != Matrix.block_diag(W, W) or inv.type != t:
        raise InternalInconsistency(f"Phi_{y} does not match W{t} + W{t}")
    return inv


def _x_upper_block(x: int, a: Sequence, b: Sequence) -> Matrix:
    """The 2x x 2x symmetric matrix with ``X_j`` blocks filling the upper triangle row-major."""
    n = 2 * x
    M = [[GaussianRational(0)] * n for _ in range(n)]
    k = 0
    for u in range(x):
        for v in range(u, x):
            X = x_block(a[k], b[k])
            for s in range(2):
                for t in range(2):
                    M[2 * u + s][2 * v + t] = X[s, t]
                    M[2 * v + t][2 * u + s] = X[s, t]
            k += 1
    return Matrix(M)


def family_Fx_parameter_count(g: int, x: int) -> int:
    return x * (x + 1) + (g - 2 * x)


def family_Fx_witness(
    g: int,
    x: int,
    a: Sequence | None = None,
    b: Sequence | None = None,
    tail: Sequence | None = None,
) -> SiegelPoint:
    """``Z_1 + diag(b_{2x+1}, ..., b_g)`` with ``Z_1`` built from ``x(x+1)/2`` blocks ``X_j``.

    By default the diagonal ``X_j`` use ``a = b = i``, off-diagonal blocks
    vanish and the tail is ``i``.
    """
    if not 1 <= x <= g // 2:
        raise IndexOutOfRange(f"x must lie in 1..{g // 2}, got {x}")
    nblocks = x * (x + 1) // 2
    diag_idx = {u * x - u * (u - 1) // 2 for u in range(x)}
    default = [I if k in diag_idx else 0 for k in range(nblocks)]
    a = _gaussians(default if a is None else a, nblocks, "a")
    b = _gaussians(default if b is None else b, nblocks, "b")
    tail = _gaussians([I] * (g - 2 * x) if tail is None else tail, g - 2 * x, "tail")
    return SiegelPoint(Matrix.block_diag(_x_upper_block(x, a, b), Matrix.diag(tail)))


def _basis_action_phix(g: int, x: int, y: int) -> Matrix:
    """Matrix of the piecewise lattice map ``Phi_y`` (columns are images of ``lambda_l``)."""
    n = 2 * g
    cols = []
    for l in range(1, n + 1):
        v = [0] * n

        def e(k, s=1):
            v[k - 1] += s

        if l <= 2 * x:
            if l % 2:
                e(l)
                e(l + 1)
            else:
                e(l, -1)
        elif l <= g:
            e(l, -1 if l <= 2 * x + y else 1)
        elif l <= g + 2 * x:
            if (l - g) % 2:
                e(l)
            else:
                e(l - 1)
                e(l, -1)
        else:
            e(l, -1 if l <= 2 * x + y + g else 1)
        cols.append(v)
    return Matrix.from_columns(cols)


def phix_matrix(g: int, x: int, y: int) -> SymplecticInvolution:
    if not 1 <= x <= g // 2 or not 0 <= y <= g - 2 * x:
        raise IndexOutOfRange(f"need 1 <= x <= {g // 2} and 0 <= y <= g - 2x; got x={x}, y={y}")
    t = InvolutionType(x, y, g - 2 * x - y)
    M = _basis_action_phix(g, x, y)
    normal = reiner_normal_form(t)
    if M != normal.matrix:
        raise InternalInconsistency(f"piecewise Phi_{y} differs from W{t} + W{t}^T")
    return normal


def prop4_link(g: int, x: int) -> tuple[SiegelPoint, SymplecticInvolution]:
    """The default ``F_x`` witness with the sign involution of type ``(0, 2x, g-2x)``."""
    if not 1 <= x <= g // 2:
        raise IndexOutOfRange(f"x must lie in 1..{g // 2}, got {x}")
    if g % 2 == 0 and 2 * x == g:
        raise PreconditionViolated("x = g/2 with g even is the (g/2, 0, 0) case; use prop5_link")
    Z = family_Fx_witness(g, x)
    inv = _sign_involution(g, range(2 * x))
    _check_pair(Z, inv, InvolutionType(0, 2 * x, g - 2 * x))
    return Z, inv


def even_link_sign_count(g: int) -> int:
    """How many leading coordinates (per half) the even-g link negates.

    ``g/2`` whenever that keeps every 2x2 block whole (``4 | g``); for
    ``g = 2 mod 4`` a sign change on ``g/2`` coordinates would split the
    middle ``X_j`` block and cannot fix the witness, so ``g/2 - 1`` is used.
    """
    return 2 * (g // 4)


def prop5_link(
    g: int, a: Sequence | None = None, b: Sequence | None = None
) -> tuple[SiegelPoint, SymplecticInvolution]:
    """Block-diagonal ``X_1 + ... + X_{g/2}`` witness with a type-``(0, m, g-m)`` sign involution."""
    if g % 2:
        raise OddG("the (g/2, 0, 0) link needs g even")
    h = g // 2
    m = even_link_sign_count(g)
    if m == 0:
        raise PreconditionViolated("no admissible sign involution keeps the blocks whole for g = 2")
    a = _gaussians([I] * h if a is None else a, h, "a")
    b = _gaussians([I] * h if b is None else b, h, "b")
    Z = SiegelPoint(Matrix.block_diag(*(x_block(u, v) for u, v in zip(a, b))))
    inv = _sign_involution(g, range(m))
    _check_pair(Z, inv, InvolutionType(0, m, g - m))
    return Z, inv


def master_involution(g: int, t: InvolutionType) -> SymplecticInvolution:
    """An involution of type ``t`` fixing the odd-g master witness.

    On the ``(g-1)/2`` two-dimensional blocks use ``J_1`` (x of them), then
    ``-I_2`` (``y // 2`` of them), then ``I_2``; the last coordinate carries
    the parity of ``y``.
    """
    if g % 2 == 0:
        raise EvenG("the master witness needs g odd")
    if t.g != g:
        raise DimensionMismatch(f"type {t} is not of genus {g}")
    k = (g - 1) // 2
    neg = t.y // 2
    blocks = [J1] * t.x + [-Matrix.identity(2)] * neg + [Matrix.identity(2)] * (k - t.x - neg)
    W = Matrix.block_diag(*blocks, Matrix([[-1 if t.y % 2 else 1]]))
    return SymplecticInvolution(Matrix.block_diag(W, W.T))


def odd_g_master_witness(
    g: int,
    a: Sequence | None = None,
    b: Sequence | None = None,
    e=None,
) -> tuple[SiegelPoint, dict[InvolutionType, SymplecticInvolution]]:
    """``X_1 + ... + X_{(g-1)/2} + (e)`` and one verified involution per admissible type."""
    if g % 2 == 0:
        raise EvenG("the master witness needs g odd")
    if g < 3:
        raise PreconditionViolated("the master witness needs g >= 3")
    k = (g - 1) // 2
    a = _gaussians([I] * k if a is None else a, k, "a")
    b = _gaussians([I] * k if b is None else b, k, "b")
    e = GaussianRational.coerce(I if e is None else e)
    Z = SiegelPoint(
        Matrix.block_diag(*(x_block(u, v) for u, v in zip(a, b)), Matrix([[e]]))
    )
    found = {}
    for t in admissible_triples(g):
        inv = master_involution(g, t)
        _check_pair(Z, inv, t)
        found[t] = inv
    return Z, found


def _check_pair(Z: SiegelPoint, inv: SymplecticInvolution, expected: InvolutionType):
    if inv.type != expected:
        raise InternalInconsistency(f"involution has type {inv.type}, expected {expected}")
    if not is_fixed(inv.matrix, Z):
        raise InternalInconsistency(f"involution of type {expected} does not fix the witness")


# connectivity certificate -------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    node_a: int
    node_b: int
    witness: SiegelPoint
    involution_a: SymplecticInvolution
    involution_b: SymplecticInvolution
    source: str
    verified: bool = False


@dataclass(frozen=True)
class ConnectivityCertificate:
    g: int
    nodes: tuple[ComponentClass, ...]
    edges: tuple[Edge, ...]
    connected: bool = field(default=False)

    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.nodes)))
        G.add_edges_from((e.node_a, e.node_b) for e in self.edges if e.verified)
        return G


def verify_edge(nodes: Sequence[ComponentClass], edge: Edge) -> str | None:
    """Re-check one edge from its raw matrices; return a failure reason or ``None``.

    Both involutions must be symplectic, square to the identity, fix the
    witness and classify into the endpoint classes. A witness whose involution
    is in normal form must also lie in the corresponding stratum shape.
    """
    try:
        Z = SiegelPoint(edge.witness.Z)
        for side, inv, node in (
            ("a", edge.involution_a, edge.node_a),
            ("b", edge.involution_b, edge.node_b),
        ):
            R = inv.matrix
            if R.shape != (2 * Z.g, 2 * Z.g):
                return f"involution {side} has shape {R.shape}"
            if not is_symplectic(R):
                return f"involution {side} is not symplectic"
            if not is_involution(R):
                return f"involution {side} does not square to I"
            if not is_fixed(R, Z):
                return f"involution {side} does not fix the witness"
            t = classify_involution(R)
            if t not in nodes[node]:
                return f"involution {side} has type {t}, not in class {nodes[node].representative}"
            if R == reiner_normal_form(t).matrix and not stratum_contains(t, Z):
                return f"witness is not in the stratum S{t}"
    except PpavError as exc:
        return f"{type(exc).__name__}: {exc}"
    return None


def _candidate_edges(g: int, nodes: list[ComponentClass]) -> list[Edge]:
    index = {c: i for i, c in enumerate(nodes)}

    def node_of(t: InvolutionType) -> int:
        return index[ComponentClass.of(t)]

    edges = []
    # all x = 0 classes share the product-of-elliptic-curves witness
    Z0 = family_F0_witness(g)
    zero = [c for c in nodes if c.representative.x == 0]
    for ca, cb in combinations(zero, 2):
        ta, tb = ca.representative, cb.representative
        edges.append(Edge(index[ca], index[cb], Z0, phi0_matrix(g, ta.y), phi0_matrix(g, tb.y), "F0"))
    # for each x >= 1 the F_x witness links every (x, ., .) class
    for x in range(1, g // 2 + 1):
        Zx = family_Fx_witness(g, x)
        same_x = [c for c in nodes if c.representative.x == x]
        for ca, cb in combinations(same_x, 2):
            ta, tb = ca.representative, cb.representative
            edges.append(
                Edge(index[ca], index[cb], Zx, phix_matrix(g, x, ta.y), phix_matrix(g, x, tb.y), "Fx")
            )
    # F_x also carries an x = 0 type
    for x in range(1, g // 2 + 1):
        if g % 2 == 0 and 2 * x == g:
            continue
        Zx, inv = prop4_link(g, x)
        t = InvolutionType(x, 0, g - 2 * x)
        edges.append(Edge(node_of(t), node_of(inv.type), Zx, phix_matrix(g, x, 0), inv, "prop4"))
    if g % 2 == 0:
        Zt, inv = prop5_link(g)
        t = InvolutionType(g // 2, 0, 0)
        edges.append(Edge(node_of(t), node_of(inv.type), Zt, reiner_normal_form(t), inv, "prop5"))
    return edges


def connectivity_certificate(g: int) -> ConnectivityCertificate:
    if g < 3:
        raise PreconditionViolated("certificates are built for g >= 3 only")
    nodes = dual_classes(g)
    verified = []
    for i, edge in enumerate(_candidate_edges(g, nodes)):
        reason = verify_edge(nodes, edge)
        if reason is not None:
            raise VerificationFailed(i, reason)
        verified.append(Edge(edge.node_a, edge.node_b, edge.witness, edge.involution_a,
                             edge.involution_b, edge.source, True))
    cert = ConnectivityCertificate(g, tuple(nodes), tuple(verified))
    connected = nx.is_connected(cert.graph())
    return ConnectivityCertificate(g, cert.nodes, cert.edges, connected)


def recheck_certificate(cert: ConnectivityCertificate) -> list[str]:
    """Verify a (possibly deserialized) certificate from scratch; return all problems found."""
    problems = []
    expected = dual_classes(cert.g)
    if list(cert.nodes) != expected:
        problems.append("node list differs from the dual classes of admissible triples")
    for i, edge in enumerate(cert.edges):
        if not (0 <= edge.node_a < len(cert.nodes) and 0 <= edge.node_b < len(cert.nodes)):
            problems.append(f"edge {i}: node index out of range")
            continue
        reason = verify_edge(cert.nodes, edge)
        if reason is not None:
            problems.append(f"edge {i}: {reason}")
        elif not edge.verified:
            problems.append(f"edge {i}: passes but is not marked verified")
    G = nx.Graph()
    G.add_nodes_from(range(len(cert.nodes)))
    G.add_edges_from((e.node_a, e.node_b) for e in cert.edges)
    if nx.is_connected(G) != cert.connected:
        problems.append("connected flag disagrees with the edge graph")
    return problems
