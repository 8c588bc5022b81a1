"""Finite-dimensional modules given by pairwise-commuting quaternion
matrices, and the constructive extraction of common eigenvectors.

A presentation is a left vector space of row vectors over the quaternions,
with the i-th variable acting by right multiplication with the i-th matrix.
A common eigenvector with pairwise commuting eigenvalues realizes a
one-dimensional submodule, i.e. a point ideal annihilator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InternalError, InvalidInput
from .mpoly import CommutingPoint, LeftIdeal, point_ideal
from .scalars import Centralizer, ONE, Quat, ZERO, centralizer_of_set
from .upoly import UPoly, roots_in_centralizer

Matrix = tuple[tuple[Quat, ...], ...]
Vector = tuple[Quat, ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(c if isinstance(c, Quat) else Quat.scalar(c) for c in row) for row in rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(
            sum((a[r][t] * b[t][c] for t in range(n)), ZERO)
            for c in range(n)
        )
        for r in range(n)
    )


def mat_identity(n: int) -> Matrix:
    return tuple(
        tuple(ONE if r == c else ZERO for c in range(n)) for r in range(n)
    )


def vec_mat(v: Vector, a: Matrix) -> Vector:
    m = len(a)
    return tuple(
        sum((v[r] * a[r][c] for r in range(m)), ZERO) for c in range(m)
    )


def vec_scale(q: Quat, v: Vector) -> Vector:
    return tuple(q * c for c in v)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_is_zero(v: Vector) -> bool:
    return not any(v)


class ModulePresentation:
    """m-dimensional row-vector module with n commuting matrix actions."""

    __slots__ = ("m", "mats")

    def __init__(self, m: int, mats: Sequence[Sequence[Sequence[Quat]]]):
        if m < 1:
            raise InvalidInput("module dimension must be positive")
        fixed = tuple(_as_matrix(mat) for mat in mats)
        if not fixed:
            raise InvalidInput("at least one action matrix is required")
        for mat in fixed:
            if len(mat) != m or any(len(row) != m for row in mat):
                raise InvalidInput(f"action matrices must be {m}x{m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mats", fixed)

    def __setattr__(self, name, value):
        raise AttributeError("ModulePresentation is immutable")

    @property
    def nvars(self) -> int:
        return len(self.mats)

    def act(self, i: int, v: Vector) -> Vector:
        return vec_mat(v, self.mats[i])

    def poly_action(self, i: int, p: UPoly, v: Vector) -> Vector:
        """Apply sum_k c_k * (v * A_i^k); coefficients act on the left."""
        out = (ZERO,) * self.m
        current = v
        for k, c in enumerate(p.coeffs):
            if k:
                current = self.act(i, current)
            if c:
                out = vec_add(out, vec_scale(c, current))
        return out

    def __eq__(self, other):
        if not isinstance(other, ModulePresentation):
            return NotImplemented
        return self.m == other.m and self.mats == other.mats

    def __repr__(self):
        return f"ModulePresentation(m={self.m}, nvars={self.nvars})"


@dataclass(frozen=True)
class PresentationReport:
    ok: bool
    violations: tuple[str, ...]


def check_presentation(module: ModulePresentation) -> PresentationReport:
    """Verify that the action matrices pairwise commute, exactly."""
    violations = []
    n = module.nvars
    for i in range(n):
        for j in range(i + 1, n):
            if mat_mul(module.mats[i], module.mats[j]) != mat_mul(module.mats[j], module.mats[i]):
                violations.append(f"actions {i + 1} and {j + 1} do not commute")
    return PresentationReport(not violations, tuple(violations))


@dataclass(frozen=True)
class EigenTuple:
    """Nonzero v with v*A_i = a_i*v for every action; the a_i commute."""

    v: Vector
    point: CommutingPoint


@dataclass(frozen=True)
class RootNotFound:
    """The working scalar field has no root of the polynomial that the
    extraction needed to split; carries the offending polynomial."""

    poly: UPoly
    var_index: int
    search_exhaustive: bool


def annihilator_minpoly(module: ModulePresentation, v: Vector, i: int) -> UPoly:
    """Minimal monic p with sum_k c_k * (v * A_i^k) = 0.

    The annihilators of v under the i-th action form a left ideal in the
    one-variable polynomial ring; its monic generator is found by looking
    for the first linear dependence among v, v*A, v*A^2, ...
    """
    if vec_is_zero(v):
        raise InvalidInput("annihilator of the zero vector is everything")
    m = module.m
    iterates = [v]
    for _ in range(m):
        iterates.append(module.act(i, iterates[-1]))
    full = Centralizer.full()
    for degree in range(1, m + 1):
        # Solve sum_{k<degree} c_k * iterates[k] = iterates[degree] over the
        # whole ring, coordinate by coordinate.
        flat_targets = iterates[degree]
        sol = _solve_vector_combination(iterates[:degree], flat_targets, full)
        if sol is not None:
            coeffs = [-c for c in sol] + [ONE]
            return UPoly(coeffs)
    raise InternalError("no annihilator found within the module dimension")


def _solve_vector_combination(
    vectors: Sequence[Vector], target: Vector, c: Centralizer
) -> list[Quat] | None:
    """Coefficients k_t in c with sum_t k_t * vectors[t] = target, across all
    coordinates simultaneously."""
    from . import linalg

    if not vectors:
        return [] if vec_is_zero(target) else None
    width = len(target)
    basis = c.basis()
    columns = []
    for vec in vectors:
        for e in basis:
            columns.append([e * comp for comp in vec])
    rows = []
    rhs = []
    for coord in range(width):
        for axis in range(4):
            rows.append([col[coord].coords()[axis] for col in columns])
            rhs.append(target[coord].coords()[axis])
    sol = linalg.solve(rows, rhs, len(columns))
    if sol is None:
        return None
    d = len(basis)
    out = []
    for t in range(len(vectors)):
        coeff = ZERO
        for mth, e in enumerate(basis):
            coeff = coeff + e * sol[t * d + mth]
        out.append(coeff)
    return out


def _extract_from_seed(module: ModulePresentation, seed: Vector) -> EigenTuple | RootNotFound:
    v = seed
    values: list[Quat] = []
    for i in range(module.nvars):
        p = annihilator_minpoly(module, v, i)
        c = centralizer_of_set(values)
        for coeff in p.coeffs:
            if not c.contains(coeff):
                raise InternalError(
                    "annihilator coefficients escaped the centralizer of the "
                    "eigenvalues found so far"
                )
        roots, status = roots_in_centralizer(p, c, side="left")
        if not roots:
            exhaustive = status.value == "complete"
            return RootNotFound(p, i, exhaustive)
        a = roots[0]
        quotient, rem = p.divmod_left(UPoly.linear(a))
        if not rem.is_zero():
            raise InternalError("left root failed to split its polynomial")
        v = module.poly_action(i, quotient, v)
        if vec_is_zero(v):
            raise InternalError("eigenvector candidate collapsed to zero")
        values.append(a)
    tup = EigenTuple(v, CommutingPoint(values))
    _verify_eigen_tuple(module, tup)
    return tup


def _verify_eigen_tuple(module: ModulePresentation, tup: EigenTuple):
    if vec_is_zero(tup.v):
        raise InternalError("eigen tuple has a zero vector")
    for i in range(module.nvars):
        if module.act(i, tup.v) != vec_scale(tup.point[i], tup.v):
            raise InternalError(f"eigen identity fails for action {i + 1}")


def find_eigen_tuple(
    module: ModulePresentation, seed: Vector | None = None
) -> EigenTuple | RootNotFound:
    """Extract a common eigenvector with pairwise-commuting eigenvalues.

    Walks the variables in order: take the minimal annihilator of the
    current vector under the next action (its coefficients provably commute
    with the eigenvalues already found), split off a left root inside that
    centralizer, and push the vector through the cofactor.  A missing root
    is a genuine limitation of exact rational scalars and is reported as
    RootNotFound with the offending polynomial, never fudged.

    Seeds are tried in order: the caller's, then the standard basis.
    """
    report = check_presentation(module)
    if not report.ok:
        raise InvalidInput("; ".join(report.violations))
    seeds: list[Vector] = []
    if seed is not None:
        fixed = tuple(c if isinstance(c, Quat) else Quat.scalar(c) for c in seed)
        if len(fixed) != module.m:
            raise InvalidInput("seed vector has the wrong length")
        if vec_is_zero(fixed):
            raise InvalidInput("seed vector must be nonzero")
        seeds.append(fixed)
    for idx in range(module.m):
        e = tuple(ONE if t == idx else ZERO for t in range(module.m))
        if e not in seeds:
            seeds.append(e)
    first_missing: RootNotFound | None = None
    internal: InternalError | None = None
    for s in seeds:
        try:
            outcome = _extract_from_seed(module, s)
        except InternalError as exc:
            internal = exc
            continue
        if isinstance(outcome, EigenTuple):
            return outcome
        if first_missing is None:
            first_missing = outcome
    if first_missing is not None:
        return first_missing
    raise internal if internal else InternalError("no usable seed vector")


@dataclass(frozen=True)
class SimpleModuleReport:
    verdict: str  # "simple" | "non-simple" | "inconclusive"
    point: CommutingPoint | None
    ideal: LeftIdeal | None
    witness: EigenTuple | None
    detail: str


def verify_simple_1dim(module: ModulePresentation) -> SimpleModuleReport:
    """For a one-dimensional module, recover its point ideal; for larger
    ones, exhibit a proper one-dimensional submodule (so the module is not
    simple), or report the root obstruction."""
    report = check_presentation(module)
    if not report.ok:
        raise InvalidInput("; ".join(report.violations))
    if module.m == 1:
        entries = [mat[0][0] for mat in module.mats]
        pt = CommutingPoint(entries)
        return SimpleModuleReport(
            "simple", pt, point_ideal(pt), None,
            "one-dimensional; annihilator is the point ideal of its entries",
        )
    outcome = find_eigen_tuple(module)
    if isinstance(outcome, EigenTuple):
        return SimpleModuleReport(
            "non-simple", outcome.point, point_ideal(outcome.point), outcome,
            "a proper one-dimensional submodule exists",
        )
    return SimpleModuleReport(
        "inconclusive", None, None, None,
        f"no root of {outcome.poly} in the working field "
        f"(variable {outcome.var_index + 1})",
    )
