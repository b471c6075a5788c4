"""Minimal projections onto a subspace as an exact linear program.

Every projection P: X -> Y is P0 + sum c_q L_q over the k(n-k) basis
operators of L_Y(X, Y) = { L : X -> Y, L|_Y = 0 }, so the operator norm
minimization becomes: minimize t subject to f(P x) <= t over the finite
grid of (ball vertex, dual vertex) pairs.  The optimum is the relative
projection constant; tight grid rows are norming pairs; the optimal face
of the LP is exactly the set of minimal projections, and its affine
dimension is read off the implicit-equality rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import NotMinimalError
from .geometry import PolyhedralSpace, Subspace, norm_eval
from .linalg import RMatrix, Vector, dot, inverse, nullspace_basis, rows_rank
from .simplex import (INFEASIBLE, OPTIMAL, LinearProgram, LPSolution, solve,
                      solve_on_face)


@dataclass(frozen=True)
class OperatorPoint:
    """Coordinates of a projection over the operator basis: the realized
    matrix is base_projection + sum coefficients[q] * basis_ops[q]."""

    coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class OperatorBasis:
    """A fixed projection P0 onto Y plus a basis of L_Y(X, Y)."""

    base_projection: RMatrix
    basis_ops: tuple[RMatrix, ...]
    y_basis: tuple[Vector, ...]
    annihilator: tuple[Vector, ...]

    def realize(self, point: OperatorPoint) -> RMatrix:
        if len(point.coefficients) != len(self.basis_ops):
            raise ValueError("coefficient count does not match the operator basis")
        out = self.base_projection
        for c, op in zip(point.coefficients, self.basis_ops):
            if c:
                out = out.add(op.scale(c))
        return out


def build_operator_basis(space: PolyhedralSpace, Y: Subspace) -> OperatorBasis:
    """P0 projects onto Y along the first standard basis vectors independent
    from Y; basis ops are y_i (x) g_j over Y's basis and annihilator."""
    n = space.dim
    k = Y.dim
    ys = tuple(Y.basis_vectors())
    gs = tuple(Y.annihilator_functionals())

    complement: list[Vector] = []
    stack = list(ys)
    for j in range(n):
        e = tuple(Fraction(1) if i == j else Fraction(0) for i in range(n))
        if rows_rank(stack + [e]) > len(stack):
            stack.append(e)
            complement.append(e)
            if len(stack) == n:
                break
    M = RMatrix.from_rows(stack).transpose()
    Minv = inverse(M)
    assert Minv is not None
    D = RMatrix.from_rows([[Fraction(1) if i == j and i < k else Fraction(0)
                            for j in range(n)] for i in range(n)])
    P0 = M.matmul(D).matmul(Minv)

    ops = []
    for y in ys:
        for g in gs:
            ops.append(RMatrix.from_rows([[y[i] * g[j] for j in range(n)]
                                          for i in range(n)]))

    assert P0.matmul(P0).entries == P0.entries
    for y in ys:
        assert P0.apply(y) == y
    for op in ops:
        for y in ys:
            assert all(x == 0 for x in op.apply(y))
    flat = [op.entries for op in ops]
    assert rows_rank(flat) == k * (n - k)
    return OperatorBasis(base_projection=P0, basis_ops=tuple(ops),
                         y_basis=ys, annihilator=gs)


@dataclass(frozen=True)
class PairGrid:
    """One row per antipodal class of (primal vertex, dual vertex) pairs:
    row value at coefficients c is base[r] + coefs[r]·c = f_j(P x_i)."""

    pairs: tuple[tuple[int, int], ...]
    base: tuple[Fraction, ...]
    coefs: tuple[tuple[Fraction, ...], ...]

    @cached_property
    def lp(self) -> LinearProgram:
        """minimize t  s.t.  coefs[r]·c - t <= -base[r]."""
        d = len(self.coefs[0])
        rows = [row + (Fraction(-1),) for row in self.coefs]
        return LinearProgram(
            objective=tuple([Fraction(0)] * d + [Fraction(1)]),
            constraint_matrix=RMatrix.from_rows(rows),
            rhs=tuple(-b for b in self.base),
        )

    def row_value(self, r: int, coefficients: tuple[Fraction, ...]) -> Fraction:
        return self.base[r] + dot(self.coefs[r], coefficients)

    def tight_rows(self, coefficients: tuple[Fraction, ...],
                   lam: Fraction) -> list[int]:
        return [r for r in range(len(self.pairs))
                if self.row_value(r, coefficients) == lam]


def build_pair_grid(space: PolyhedralSpace, Y: Subspace,
                    basis: OperatorBasis) -> PairGrid:
    negp = space.primal_negation
    negd = space.dual_negation
    P0 = basis.base_projection
    # f_j(L_q x_i) factors as g(x_i) * f_j(y) over the rank-one structure.
    g_at = [[dot(g, x) for g in basis.annihilator] for x in space.primal_vertices]
    f_at = [[dot(f, y) for y in basis.y_basis] for f in space.dual_vertices]
    p0x = [P0.apply(x) for x in space.primal_vertices]

    pairs = []
    base = []
    coefs = []
    n_ann = len(basis.annihilator)
    for i in range(len(space.primal_vertices)):
        for j in range(len(space.dual_vertices)):
            if (i, j) > (negp[i], negd[j]):
                continue
            pairs.append((i, j))
            base.append(dot(space.dual_vertices[j], p0x[i]))
            coefs.append(tuple(g_at[i][q % n_ann] * f_at[j][q // n_ann]
                               for q in range(len(basis.basis_ops))))
    return PairGrid(pairs=tuple(pairs), base=tuple(base), coefs=tuple(coefs))


@dataclass
class MinProjReport:
    """Everything known about P_min(X, Y); face fields are filled in by
    face_dimension, which mutates the report in place."""

    space: PolyhedralSpace
    subspace: Subspace
    basis: OperatorBasis
    grid: PairGrid
    lam: Fraction
    witness: OperatorPoint
    norming_pairs_of_witness: frozenset[tuple[int, int]]
    dual_certificate: dict[tuple[int, int], Fraction]
    face_dim: int | None = None
    implicit_pairs: frozenset[tuple[int, int]] | None = None
    interior: OperatorPoint | None = None
    _witness_tight: tuple[int, ...] = field(default=(), repr=False)
    _implicit_rows: tuple[int, ...] = field(default=(), repr=False)


def projection_constant(space: PolyhedralSpace, Y: Subspace) -> MinProjReport:
    """Solve the operator-norm LP exactly: lambda, one minimal projection,
    its norming pairs and the positive dual weights."""
    basis = build_operator_basis(space, Y)
    grid = build_pair_grid(space, Y, basis)
    solution = solve(grid.lp)
    assert solution.status == OPTIMAL  # always feasible (P0) and bounded (t >= 1)
    d = len(basis.basis_ops)
    lam = solution.value
    assert lam >= 1
    witness = OperatorPoint(solution.primal[:d])
    assert solution.primal[d] == lam
    tight = tuple(sorted(solution.tight_set))
    certificate = {grid.pairs[r]: solution.dual[r]
                   for r in range(len(grid.pairs)) if solution.dual[r] > 0}
    return MinProjReport(
        space=space, subspace=Y, basis=basis, grid=grid, lam=lam,
        witness=witness,
        norming_pairs_of_witness=frozenset(grid.pairs[r] for r in tight),
        dual_certificate=certificate,
        _witness_tight=tight,
    )


def operator_norm(space: PolyhedralSpace, matrix: RMatrix) -> Fraction:
    """Exact operator norm: max over ball vertices of the image norm."""
    return max(norm_eval(space, matrix.apply(v)) for v in space.primal_vertices)


def norming_pairs(space: PolyhedralSpace, Y: Subspace, P: OperatorPoint,
                  lam: Fraction, grid: PairGrid | None = None) -> frozenset[tuple[int, int]]:
    """Pairs (vertex index, dual index) with f(P x) = lam, one per antipodal
    class.  Raises NotMinimalError unless the norm of P is exactly lam."""
    if grid is None:
        grid = build_pair_grid(space, Y, build_operator_basis(space, Y))
    values = [grid.row_value(r, P.coefficients) for r in range(len(grid.pairs))]
    top = max(values)
    if top > lam:
        worst = values.index(top)
        raise NotMinimalError(
            f"pair {grid.pairs[worst]} reaches {top} > {lam}: not a minimal projection")
    if top < lam:
        raise NotMinimalError(f"operator norm is {top}, not {lam}")
    return frozenset(grid.pairs[r] for r, v in enumerate(values) if v == lam)


def face_dimension(space: PolyhedralSpace, Y: Subspace,
                   report: MinProjReport) -> tuple[int, frozenset[tuple[int, int]]]:
    """Decide which tight rows are implicit equalities of the optimal face.

    One secondary LP per undecided tight row maximizes that row's slack
    over the face (by minimizing the row's coefficient form); a row whose
    maximal slack is zero is tight at every minimal projection.  Rows
    already slack at some collected optimum are skipped.  The exact
    average of all collected optima lies in the relative interior, and
    its norming pairs are exactly the implicit pairs.  face_dim is the
    coefficient dimension minus the rank of the implicit rows.
    """
    grid = report.grid
    d = len(report.witness.coefficients)
    lam = report.lam
    points: list[tuple[Fraction, ...]] = [report.witness.coefficients]
    implicit_rows: list[int] = []
    for r in report._witness_tight:
        if any(grid.row_value(r, p) != lam for p in points):
            continue
        sub = solve_on_face(grid.lp, lam, grid.coefs[r] + (Fraction(0),))
        assert sub.status == OPTIMAL
        points.append(sub.primal[:d])
        if lam - grid.base[r] - sub.value == 0:
            implicit_rows.append(r)

    face_dim = d - (rows_rank([grid.coefs[r] for r in implicit_rows])
                    if implicit_rows else 0)
    count = Fraction(len(points))
    interior = tuple(sum(p[q] for p in points) / count for q in range(d))
    assert grid.tight_rows(interior, lam) == implicit_rows
    report.face_dim = face_dim
    report.implicit_pairs = frozenset(grid.pairs[r] for r in implicit_rows)
    report.interior = OperatorPoint(interior)
    report._implicit_rows = tuple(implicit_rows)
    return face_dim, report.implicit_pairs


def max_norming_projection(space: PolyhedralSpace, Y: Subspace,
                           report: MinProjReport) -> tuple[OperatorPoint, int]:
    """Greedy tightening from the relative interior of the optimal face:
    visit non-tight grid rows in order and force each tight whenever that
    is jointly feasible with everything forced so far.  The result is a
    minimal projection whose norming-pair set is inclusion-maximal.

    Working coordinates are restricted to the affine hull of the face
    (the implicit rows are quotiented out), which keeps the feasibility
    LPs small; rows whose restricted coefficients vanish can never change
    their slack and are skipped outright.
    """
    if report.face_dim is None:
        face_dimension(space, Y, report)
    grid = report.grid
    lam = report.lam
    d = len(report.witness.coefficients)
    interior = report.interior.coefficients
    fd = report.face_dim
    if fd == 0:
        return report.interior, len(report.implicit_pairs)

    implicit = set(report._implicit_rows)
    if implicit:
        N = nullspace_basis(RMatrix.from_rows([grid.coefs[r] for r in implicit]))
    else:
        N = RMatrix.identity(d)
    assert N.cols == fd
    ncols = [N.col(q) for q in range(fd)]

    restricted: dict[int, tuple[Fraction, ...]] = {}
    slack0: dict[int, Fraction] = {}
    candidates: list[int] = []
    for r in range(len(grid.pairs)):
        if r in implicit:
            continue
        G = tuple(dot(grid.coefs[r], col) for col in ncols)
        s = lam - grid.row_value(r, interior)
        assert s > 0
        if any(G):
            restricted[r] = G
            slack0[r] = s
            candidates.append(r)

    z = tuple([Fraction(0)] * fd)
    forced: list[int] = []
    for r in candidates:
        here = slack0[r] - dot(restricted[r], z)
        if here == 0:
            forced.append(r)
            continue
        rows = [restricted[q] for q in candidates]
        rhs = [slack0[q] for q in candidates]
        for q in forced + [r]:
            rows.append(tuple(-x for x in restricted[q]))
            rhs.append(-slack0[q])
        attempt = solve(LinearProgram(
            objective=tuple([Fraction(0)] * fd),
            constraint_matrix=RMatrix.from_rows(rows),
            rhs=tuple(rhs),
        ))
        if attempt.status == OPTIMAL:
            z = attempt.primal
            forced.append(r)
        else:
            assert attempt.status == INFEASIBLE

    final = tuple(interior[q] + sum(col[q] * zv for col, zv in zip(ncols, z))
                  for q in range(d))
    point = OperatorPoint(final)
    pairs = norming_pairs(space, Y, point, lam, grid=grid)
    assert len(pairs) >= len(report.implicit_pairs) + len(forced)
    return point, len(pairs)
