"""Chalmers-Metcalf certificates: convex combinations T = sum a_i x_i (x) f_i
over norming pairs that annihilate L_Y(X, Y).

A valid certificate leaves Y invariant, is norming for every minimal
projection, and its trace restricted to Y equals the projection
constant, which makes it an exact optimality witness for lambda(Y, X).
The LP dual of the projection solve is one such certificate; a
minimum-support one is found by subset search over the implicit pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (CertificateInvalidError, RankGapViolationError,
                     SupportBudgetExceededError)
from .geometry import PolyhedralSpace, Subspace
from .linalg import RMatrix, dot, rows_rank, solve_linear
from .projections import (MinProjReport, OperatorBasis, OperatorPoint,
                          build_operator_basis)
from .simplex import OPTIMAL, LinearProgram, solve


@dataclass(frozen=True)
class CMFunctional:
    """pairs (vertex index, dual index) with weights.  The defining
    invariants (strictly positive weights summing to one, distinct pairs)
    are judged by verify_cm rather than at construction, so third-party
    certificates can be loaded and reported on instead of rejected."""

    pairs: tuple[tuple[int, int], ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.pairs) != len(self.weights):
            raise ValueError("pairs and weights must have equal length")
        if not self.pairs:
            raise ValueError("empty certificate")


@dataclass(frozen=True)
class CMVerdict:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def cm_operator(space: PolyhedralSpace, cm: CMFunctional) -> RMatrix:
    """The matrix of T = sum a_i x_i (x) f_i."""
    n = space.dim
    entries = [[Fraction(0)] * n for _ in range(n)]
    for (pi, dj), a in zip(cm.pairs, cm.weights):
        x = space.primal_vertices[pi]
        f = space.dual_vertices[dj]
        for r in range(n):
            if x[r]:
                ax = a * x[r]
                for c in range(n):
                    entries[r][c] += ax * f[c]
    return RMatrix.from_rows(entries)


def trace_on_subspace(space: PolyhedralSpace, Y: Subspace,
                      cm: CMFunctional) -> Fraction | None:
    """trace of T restricted to Y, via exact solves in Y's basis;
    None when T does not map Y into Y."""
    T = cm_operator(space, cm)
    total = Fraction(0)
    for b, y in enumerate(Y.basis_vectors()):
        coords = solve_linear(Y.basis, T.apply(y))
        if coords is None:
            return None
        total += coords[b]
    return total


def verify_cm(space: PolyhedralSpace, Y: Subspace, cm: CMFunctional,
              lam: Fraction, P: OperatorPoint,
              basis: OperatorBasis | None = None) -> CMVerdict:
    """Exact check of the certificate: weight sanity plus the four defining
    conditions -- (1) vanishing on every basis operator of L_Y(X, Y),
    (2) T(Y) contained in Y, (3) every pair norming for P, (4) trace of
    T|_Y equal to lam."""
    violations: list[str] = []
    n_p = len(space.primal_vertices)
    n_d = len(space.dual_vertices)
    for pi, dj in cm.pairs:
        if not (0 <= pi < n_p and 0 <= dj < n_d):
            violations.append(f"weights: pair ({pi}, {dj}) out of range")
            return CMVerdict(ok=False, violations=tuple(violations))
    if len(set(cm.pairs)) != len(cm.pairs):
        violations.append("weights: duplicate pairs")
    if any(a <= 0 for a in cm.weights):
        violations.append("weights: non-positive weight")
    total = sum(cm.weights, Fraction(0))
    if total != 1:
        violations.append(f"weights: sum is {total}, not 1")

    if basis is None:
        basis = build_operator_basis(space, Y)
    for q, L in enumerate(basis.basis_ops):
        s = Fraction(0)
        for (pi, dj), a in zip(cm.pairs, cm.weights):
            s += a * dot(space.dual_vertices[dj], L.apply(space.primal_vertices[pi]))
        if s != 0:
            violations.append(f"vanishing: basis operator {q} gives {s}")
            break

    T = cm_operator(space, cm)
    for b, y in enumerate(Y.basis_vectors()):
        if not Y.contains(T.apply(y)):
            violations.append(f"invariance: T(basis vector {b}) leaves Y")
            break

    Pm = basis.realize(P)
    for pi, dj in cm.pairs:
        value = dot(space.dual_vertices[dj], Pm.apply(space.primal_vertices[pi]))
        if value != lam:
            violations.append(
                f"norming: pair ({pi}, {dj}) gives {value}, expected {lam}")
            break

    trace = trace_on_subspace(space, Y, cm)
    if trace is None:
        violations.append("trace: undefined, T does not map Y into Y")
    elif trace != lam:
        violations.append(f"trace: {trace} differs from {lam}")

    return CMVerdict(ok=not violations, violations=tuple(violations))


def cm_from_dual(report: MinProjReport) -> CMFunctional:
    """Certificate from the positive LP dual weights; the weights of an
    exact dual already sum to one.  Verified before being returned."""
    items = sorted(report.dual_certificate.items())
    if not items:
        raise CertificateInvalidError("empty dual certificate")
    total = sum((w for _, w in items), Fraction(0))
    cm = CMFunctional(pairs=tuple(p for p, _ in items),
                      weights=tuple(w / total for _, w in items))
    verdict = verify_cm(report.space, report.subspace, cm, report.lam,
                        report.witness, basis=report.basis)
    if not verdict.ok:
        raise CertificateInvalidError("; ".join(verdict.violations))
    return cm


def minimal_support_cm(space: PolyhedralSpace, Y: Subspace,
                       candidate_pairs: Iterable[tuple[int, int]],
                       lam: Fraction, max_candidates: int = 24,
                       witness: OperatorPoint | None = None) -> tuple[CMFunctional, int]:
    """Smallest-support certificate over the candidate pairs.

    Subsets are enumerated by cardinality, then lexicographically; each is
    tested by an exact LP maximizing the minimal weight tau subject to the
    vanishing conditions and weight sum 1.  The subset is a valid support
    exactly when tau* > 0.  The first hit has globally minimal support
    over the candidate set.
    """
    candidates = sorted(set(candidate_pairs))
    if not candidates:
        raise CertificateInvalidError("no candidate pairs to search")
    if len(candidates) > max_candidates:
        raise SupportBudgetExceededError(
            f"{len(candidates)} candidate pairs exceed the cap of {max_candidates}")

    basis = build_operator_basis(space, Y)
    d = len(basis.basis_ops)
    vanish = {}
    for pair in candidates:
        pi, dj = pair
        x = space.primal_vertices[pi]
        f = space.dual_vertices[dj]
        vanish[pair] = tuple(dot(f, L.apply(x)) for L in basis.basis_ops)

    one = Fraction(1)
    zero = Fraction(0)
    for size in range(1, len(candidates) + 1):
        for subset in itertools.combinations(candidates, size):
            rows: list[list[Fraction]] = []
            rhs: list[Fraction] = []
            for i in range(size):  # a_i >= tau
                row = [zero] * (size + 1)
                row[i] = -one
                row[size] = one
                rows.append(row)
                rhs.append(zero)
            rows.append([one] * size + [zero])  # sum = 1
            rhs.append(one)
            rows.append([-one] * size + [zero])
            rhs.append(-one)
            for q in range(d):  # vanishing, as equality pairs
                row = [vanish[p][q] for p in subset] + [zero]
                rows.append(row)
                rhs.append(zero)
                rows.append([-v for v in row])
                rhs.append(zero)
            rows.append([zero] * size + [one])  # tau <= 1
            rhs.append(one)
            lp = LinearProgram(
                objective=tuple([zero] * size + [-one]),
                constraint_matrix=RMatrix.from_rows(rows),
                rhs=tuple(rhs),
            )
            sol = solve(lp)
            if sol.status != OPTIMAL or -sol.value <= 0:
                continue
            cm = CMFunctional(pairs=subset, weights=sol.primal[:size])
            check = (verify_cm(space, Y, cm, lam, witness, basis=basis)
                     if witness is not None else
                     _verify_without_projection(space, Y, cm, lam, basis))
            if not check.ok:
                raise CertificateInvalidError(
                    "subset search produced an invalid certificate: "
                    + "; ".join(check.violations))
            return cm, size
    raise CertificateInvalidError("no valid certificate over the candidate pairs")


def _verify_without_projection(space, Y, cm, lam, basis) -> CMVerdict:
    """All checks except norming, for callers without a minimal projection
    at hand; pairs drawn from implicit pairs are norming by construction."""
    probe = verify_cm(space, Y, cm, lam, OperatorPoint((Fraction(0),) * len(basis.basis_ops)),
                      basis=basis)
    keep = tuple(v for v in probe.violations if not v.startswith("norming:"))
    return CMVerdict(ok=not keep, violations=keep)


def cm_rank_gap(space: PolyhedralSpace, Y: Subspace, cm: CMFunctional,
                lam: Fraction | None = None) -> tuple[int, int]:
    """Rank of the certificate functionals in X* versus the rank of their
    restrictions to Y.  When lam > 1 is supplied, a missing strict drop
    raises RankGapViolationError: the restricted rank is always strictly
    smaller in that regime, so equality signals an implementation bug."""
    fs = [space.dual_vertices[dj] for _, dj in cm.pairs]
    rank_full = rows_rank(fs)
    restricted = [tuple(dot(f, y) for y in Y.basis_vectors()) for f in fs]
    rank_restricted = rows_rank(restricted)
    if lam is not None and lam > 1 and rank_restricted >= rank_full:
        raise RankGapViolationError(
            f"restricted rank {rank_restricted} does not drop below {rank_full}")
    return rank_full, rank_restricted
