"""Polyhedral normed spaces, their duals, subspaces and general position.

A space is given by the vertex list of its unit ball (both signs stored
explicitly) together with the vertex list of the dual ball; the dual
side can be computed exactly from the primal side by an incremental
double-description polar computation.  Norms and operator norms then
reduce to finite maxima over these vertex lists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (NotExtremeError, NotFullDimensionalError,
                     NotSymmetricError, SubsetBudgetExceededError)
from .linalg import (RMatrix, Vector, canonical_span, dot, nullspace_basis,
                     rows_rank, solve_linear)
from .simplex import INFEASIBLE, make_lp, solve

_ONE = Fraction(1)


def _as_vector(values: Sequence) -> Vector:
    return tuple(Fraction(x) for x in values)


def _neg(v: Vector) -> Vector:
    return tuple(-x for x in v)


# ---------------------------------------------------------------------------
# extremality and the polar dual


def is_extreme(vertices: Sequence[Vector], v: Vector) -> bool:
    """True iff v is not a convex combination of the other listed points.

    Decided by exact LP feasibility; a duplicated point is therefore not
    extreme (it is a combination of its twin).
    """
    others = [w for w in vertices if w != v]
    removed = len(vertices) - len(others)
    if removed == 0:
        raise ValueError("v must be one of the listed vertices")
    if removed > 1:
        return False  # duplicate
    if not others:
        return True
    n = len(v)
    count = len(others)
    rows = []
    rhs = []
    for c in range(n):
        coords = [w[c] for w in others]
        rows.append(coords)
        rhs.append(v[c])
        rows.append([-x for x in coords])
        rhs.append(-v[c])
    ones = [1] * count
    rows.append(ones)
    rhs.append(1)
    rows.append([-1] * count)
    rhs.append(-1)
    for i in range(count):
        row = [0] * count
        row[i] = -1
        rows.append(row)
        rhs.append(0)
    solution = solve(make_lp([0] * count, rows, rhs))
    return solution.status == INFEASIBLE


def polar_dual(vertices: Sequence[Sequence]) -> tuple[Vector, ...]:
    """Vertices of {f : f·v <= 1 for every listed v}, exactly.

    Incremental double description: start from the parallelotope cut out
    by n independent vertex pairs, then insert the remaining vertices as
    halfspaces, cutting crossed edges.  Intended for small dimensions
    (n <= 6).  The result is sorted, so equal inputs give identical
    output.
    """
    verts = [_as_vector(v) for v in vertices]
    if not verts:
        raise NotFullDimensionalError("empty vertex list")
    n = len(verts[0])
    if any(len(v) != n for v in verts):
        raise ValueError("inconsistent vector lengths")
    vertex_set = set(verts)
    for v in verts:
        if _neg(v) not in vertex_set:
            raise NotSymmetricError(f"vertex {v} has no negation in the list")
    if rows_rank(verts) != n:
        raise NotFullDimensionalError("vertices do not span the ambient space")

    index_of: dict[Vector, int] = {}
    for i, v in enumerate(verts):
        index_of.setdefault(v, i)

    # Greedy independent subset for the bounded initial polytope.
    chosen: list[int] = []
    for i, v in enumerate(verts):
        if rows_rank([verts[j] for j in chosen] + [v]) > len(chosen):
            chosen.append(i)
            if len(chosen) == n:
                break
    V = RMatrix.from_rows([verts[i] for i in chosen])
    points: list[Vector] = []
    tights: list[set[int]] = []
    for signs in itertools.product((1, -1), repeat=n):
        f = solve_linear(V, [Fraction(s) for s in signs])
        assert f is not None
        points.append(f)
        tight = set()
        for pos, i in enumerate(chosen):
            tight.add(i if signs[pos] == 1 else index_of[_neg(verts[i])])
        tights.append(tight)

    handled = set(chosen) | {index_of[_neg(verts[i])] for i in chosen}
    for idx, w in enumerate(verts):
        if idx in handled:
            continue
        handled.add(idx)
        values = [dot(w, p) for p in points]
        inside = [i for i, val in enumerate(values) if val < 1]
        boundary = [i for i, val in enumerate(values) if val == 1]
        outside = [i for i, val in enumerate(values) if val > 1]
        for i in boundary:
            tights[i].add(idx)
        if not outside:
            continue
        new_points: dict[Vector, set[int]] = {}
        for i in inside:
            for j in outside:
                common = tights[i] & tights[j]
                if len(common) < n - 1:
                    continue
                if rows_rank([verts[t] for t in common]) != n - 1:
                    continue
                u, x = points[i], points[j]
                theta = (1 - values[i]) / (values[j] - values[i])
                cut = tuple(a + theta * (b - a) for a, b in zip(u, x))
                tight = common | {idx}
                if cut in new_points:
                    new_points[cut] |= tight
                else:
                    new_points[cut] = tight
        keep_points = [points[i] for i in inside + boundary]
        keep_tights = [tights[i] for i in inside + boundary]
        for cut, tight in new_points.items():
            keep_points.append(cut)
            keep_tights.append(tight)
        points, tights = keep_points, keep_tights

    return tuple(sorted(points))


# ---------------------------------------------------------------------------
# spaces and subspaces


@dataclass(frozen=True)
class PolyhedralSpace:
    """Unit-ball vertex list and dual-ball vertex list of a polyhedral norm."""

    dim: int
    primal_vertices: tuple[Vector, ...]
    dual_vertices: tuple[Vector, ...]

    @classmethod
    def from_vertices(cls, vertices: Sequence[Sequence],
                      dual_vertices: Sequence[Sequence] | None = None,
                      validate: bool = True,
                      strict_duals: bool = False) -> "PolyhedralSpace":
        """Build a space, validating symmetry, full dimension and extremality.

        When dual_vertices is omitted the polar dual is computed exactly.
        A supplied dual list is cross-validated (symmetry, extremality,
        norming values, facet spans); that pass accepts any list that is
        correct on every facet but cannot rule out a missing dual vertex
        strictly inside the hull of the others on a facet -- pass
        strict_duals=True to force the full polar cross-check.
        """
        primal = tuple(_as_vector(v) for v in vertices)
        if not primal:
            raise NotFullDimensionalError("empty vertex list")
        n = len(primal[0])
        if any(len(v) != n for v in primal):
            raise ValueError("inconsistent vector lengths")
        if validate:
            _check_symmetric(primal, "primal")
            if rows_rank(primal) != n:
                raise NotFullDimensionalError("vertices do not span the space")
            for i, v in enumerate(primal):
                if not is_extreme(primal, v):
                    raise NotExtremeError(
                        f"primal vertex {i} is a convex combination of the others")
        if dual_vertices is None:
            dual = polar_dual(primal)
        else:
            dual = tuple(_as_vector(f) for f in dual_vertices)
            if validate:
                _validate_dual_list(primal, dual, n)
            if strict_duals and set(dual) != set(polar_dual(primal)):
                raise NotExtremeError("supplied dual vertices are not the polar vertex set")
        return cls(dim=n, primal_vertices=primal, dual_vertices=dual)

    @cached_property
    def primal_negation(self) -> tuple[int, ...]:
        """Index of -v for each primal vertex v."""
        index = {v: i for i, v in enumerate(self.primal_vertices)}
        return tuple(index[_neg(v)] for v in self.primal_vertices)

    @cached_property
    def dual_negation(self) -> tuple[int, ...]:
        index = {f: i for i, f in enumerate(self.dual_vertices)}
        return tuple(index[_neg(f)] for f in self.dual_vertices)

    @cached_property
    def primal_class_reps(self) -> tuple[int, ...]:
        """One index per antipodal vertex pair (first occurrence)."""
        return tuple(i for i, j in enumerate(self.primal_negation) if i < j)

    @cached_property
    def dual_class_reps(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.dual_negation) if i < j)


def _check_symmetric(vectors: tuple[Vector, ...], side: str) -> None:
    present = set(vectors)
    for v in vectors:
        if _neg(v) not in present:
            raise NotSymmetricError(f"{side} vertex {v} has no negation in the list")


def _validate_dual_list(primal, dual, n) -> None:
    _check_symmetric(dual, "dual")
    if rows_rank(dual) != n:
        raise NotFullDimensionalError("dual vertices do not span the space")
    for j, f in enumerate(dual):
        if not is_extreme(dual, f):
            raise NotExtremeError(
                f"dual vertex {j} is a convex combination of the others")
        if max(dot(f, v) for v in primal) != 1:
            raise NotExtremeError(
                f"dual vertex {j} does not attain value 1 on the ball")
    for i, v in enumerate(primal):
        touching = [f for f in dual if dot(f, v) == 1]
        if max(dot(f, v) for f in dual) != 1:
            raise NotExtremeError(
                f"primal vertex {i} does not have norm 1 under the supplied duals")
        base = touching[0]
        if rows_rank([tuple(a - b for a, b in zip(f, base))
                      for f in touching[1:]]) != n - 1:
            raise NotExtremeError(
                f"duals tight at primal vertex {i} do not span its facet")


def norm_eval(space: PolyhedralSpace, x: Sequence) -> Fraction:
    """The norm of x: max over dual vertices f of f·x."""
    vec = _as_vector(x)
    if len(vec) != space.dim:
        raise ValueError(f"vector length {len(vec)} != dimension {space.dim}")
    return max(dot(f, vec) for f in space.dual_vertices)


@dataclass(frozen=True)
class Subspace:
    """Proper subspace with an explicit basis and annihilator.

    basis has k independent columns spanning Y; annihilator has n-k
    independent columns of functionals vanishing on Y.
    """

    ambient_dim: int
    basis: RMatrix
    annihilator: RMatrix

    def __post_init__(self):
        n, k = self.ambient_dim, self.basis.cols
        if not 1 <= k <= n - 1:
            raise ValueError(f"subspace dimension {k} must be in [1, {n - 1}]")
        if self.basis.rows != n or self.annihilator.rows != n:
            raise ValueError("basis/annihilator row count must equal ambient dimension")
        if self.annihilator.cols != n - k:
            raise ValueError("annihilator must have n-k columns")
        if not self.basis.transpose().matmul(self.annihilator).is_zero():
            raise ValueError("annihilator does not vanish on the basis")
        if rows_rank(self.basis.transpose().row_list()) != k:
            raise ValueError("basis columns are dependent")
        if rows_rank(self.annihilator.transpose().row_list()) != n - k:
            raise ValueError("annihilator columns are dependent")

    @classmethod
    def from_basis(cls, vectors: Sequence[Sequence]) -> "Subspace":
        rows = [_as_vector(v) for v in vectors]
        if not rows:
            raise ValueError("empty basis")
        n = len(rows[0])
        if rows_rank(rows) != len(rows):
            raise ValueError("basis vectors are linearly dependent")
        basis = RMatrix.from_rows(rows).transpose()
        annihilator = nullspace_basis(RMatrix.from_rows(rows))
        return cls(ambient_dim=n, basis=basis, annihilator=annihilator)

    @classmethod
    def from_kernel(cls, functionals: Sequence[Sequence]) -> "Subspace":
        """Subspace cut out as the joint kernel of the given functionals."""
        rows = [_as_vector(f) for f in functionals]
        if not rows:
            raise ValueError("empty functional list")
        basis_cols = nullspace_basis(RMatrix.from_rows(rows))
        return cls.from_basis(basis_cols.transpose().row_list())

    @property
    def dim(self) -> int:
        return self.basis.cols

    def basis_vectors(self) -> list[Vector]:
        return self.basis.transpose().row_list()

    def annihilator_functionals(self) -> list[Vector]:
        return self.annihilator.transpose().row_list()

    def contains(self, vector: Sequence) -> bool:
        vec = _as_vector(vector)
        return all(dot(g, vec) == 0 for g in self.annihilator_functionals())


# ---------------------------------------------------------------------------
# general position


@dataclass(frozen=True)
class GeneralPositionReport:
    in_general_position: bool
    witness_kind: str | None = None  # "span" | "kernel"
    witness: tuple[int, ...] | None = None
    spans_checked: int = 0
    kernels_checked: int = 0


def general_position_check(space: PolyhedralSpace, Y: Subspace,
                           subset_cap: int = 10 ** 6) -> GeneralPositionReport:
    """Check the maximal-joint-span condition of Y against every vertex span
    and every intersection of dual-vertex kernels.

    For each candidate subspace Z (span of a vertex subset, or joint kernel
    of a dual-vertex subset, one representative per antipodal pair, subset
    size at most n, distinct subspaces only), verifies
    dim(Y + Z) = min(dim Y + dim Z, n).  Returns the first violating index
    set as witness.  Enumeration order: spans by (size, lexicographic
    indices), then kernels likewise.
    """
    n = space.dim
    k = Y.dim
    y_rows = Y.basis_vectors()
    budget = subset_cap

    def stacked_rank(z_rows: Iterable[Vector]) -> int:
        return rows_rank(y_rows + list(z_rows))

    spans_checked = 0
    seen_spans: set = set()
    reps = space.primal_class_reps
    for size in range(1, min(n, len(reps)) + 1):
        for subset in itertools.combinations(reps, size):
            spans_checked += 1
            if spans_checked > budget:
                raise SubsetBudgetExceededError(
                    f"vertex-span enumeration exceeded cap {subset_cap}")
            z_rows = canonical_span([space.primal_vertices[i] for i in subset])
            if z_rows in seen_spans:
                continue
            seen_spans.add(z_rows)
            dim_z = len(z_rows)
            if stacked_rank(z_rows) != min(k + dim_z, n):
                return GeneralPositionReport(False, "span", subset,
                                             spans_checked, 0)

    kernels_checked = 0
    seen_kernels: set = set()
    dreps = space.dual_class_reps
    for size in range(1, min(n, len(dreps)) + 1):
        for subset in itertools.combinations(dreps, size):
            kernels_checked += 1
            if spans_checked + kernels_checked > budget:
                raise SubsetBudgetExceededError(
                    f"kernel enumeration exceeded cap {subset_cap}")
            f_span = canonical_span([space.dual_vertices[j] for j in subset])
            if f_span in seen_kernels:
                continue
            seen_kernels.add(f_span)
            kernel_cols = nullspace_basis(RMatrix.from_rows(f_span))
            z_rows = kernel_cols.transpose().row_list()
            dim_z = len(z_rows)
            if stacked_rank(z_rows) != min(k + dim_z, n):
                return GeneralPositionReport(False, "kernel", subset,
                                             spans_checked, kernels_checked)

    return GeneralPositionReport(True, None, None, spans_checked, kernels_checked)
