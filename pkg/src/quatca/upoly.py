"""Univariate polynomials over the rational quaternions with a central x.

Coefficients sit on the left of the powers of x.  Because x commutes with
everything while the coefficients do not, left evaluation p(a) (coefficients
kept left of the powers of a) and right evaluation (powers left of the
coefficients) genuinely differ, and division comes in a right and a left
flavor.  A value a is a *right root* of p when the left evaluation p(a)
vanishes, equivalently when x - a divides p on the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg, ratfactor
from .errors import InternalError, InvalidInput
from .intmath import rational_sqrt, three_squares
from .scalars import (
    BASIS,
    Centralizer,
    ONE,
    Quat,
    ZERO,
    centralizer_of_set,
    left_linear_solve,
    right_linear_solve,
)


class UPoly:
    """Polynomial sum of coeff_k * x^k; coeffs run low to high, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Quat] = ()):
        cs = [c if isinstance(c, Quat) else Quat.scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    # -- construction --------------------------------------------------------

    @classmethod
    def constant(cls, q) -> "UPoly":
        return cls([q])

    @classmethod
    def x(cls) -> "UPoly":
        return cls([ZERO, ONE])

    @classmethod
    def monomial(cls, coeff: Quat, k: int) -> "UPoly":
        return cls([ZERO] * k + [coeff])

    @classmethod
    def linear(cls, a: Quat) -> "UPoly":
        """x - a."""
        return cls([-a, ONE])

    @classmethod
    def from_central(cls, coeffs: Sequence[Fraction]) -> "UPoly":
        return cls([Quat.scalar(c) for c in coeffs])

    # -- structure ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Quat:
        if not self.coeffs:
            raise InvalidInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Quat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def is_central(self) -> bool:
        return all(c.is_central() for c in self.coeffs)

    def central_coeffs(self) -> list[Fraction]:
        if not self.is_central():
            raise InternalError("polynomial has noncentral coefficients")
        return [c.w for c in self.coeffs]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "UPoly") -> "UPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UPoly(out)

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UPoly") -> "UPoly":
        if self.is_zero() or other.is_zero():
            return UPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def scale_left(self, q: Quat) -> "UPoly":
        return UPoly([q * c for c in self.coeffs])

    def scale_right(self, q: Quat) -> "UPoly":
        return UPoly([c * q for c in self.coeffs])

    def monic(self) -> "UPoly":
        """Left-normalize: divide by the leading coefficient on the left,
        which preserves the left ideal generated by the polynomial."""
        if self.is_zero():
            raise InvalidInput("cannot normalize the zero polynomial")
        return self.scale_left(self.lead.inverse())

    # -- evaluation and division ------------------------------------------------

    def eval_left(self, a: Quat) -> Quat:
        """Evaluation with coefficients kept on the left of the powers of a."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def eval_right(self, a: Quat) -> Quat:
        """Evaluation with the powers of a on the left of the coefficients."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = a * acc + c
        return acc

    def divmod_right(self, d: "UPoly") -> tuple["UPoly", "UPoly"]:
        """(q, r) with self = q*d + r and deg r < deg d.

        Dividing by x - a leaves remainder eval_left(self, a).
        """
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_inv = d.lead.inverse()
        dd = d.degree
        rem = list(self.coeffs)
        quot = [ZERO] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            if not rem[k]:
                continue
            factor = rem[k] * lead_inv
            quot[k - dd] = factor
            for idx, dc in enumerate(d.coeffs):
                rem[k - dd + idx] = rem[k - dd + idx] - factor * dc
        return UPoly(quot), UPoly(rem[:dd])

    def divmod_left(self, d: "UPoly") -> tuple["UPoly", "UPoly"]:
        """(q, r) with self = d*q + r and deg r < deg d.

        Dividing by x - a leaves remainder eval_right(self, a).
        """
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_inv = d.lead.inverse()
        dd = d.degree
        rem = list(self.coeffs)
        quot = [ZERO] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            if not rem[k]:
                continue
            factor = lead_inv * rem[k]
            quot[k - dd] = factor
            for idx, dc in enumerate(d.coeffs):
                rem[k - dd + idx] = rem[k - dd + idx] - dc * factor
        return UPoly(quot), UPoly(rem[:dd])

    def conj_poly(self) -> "UPoly":
        """Coefficient-wise quaternion conjugate."""
        return UPoly([c.conjugate() for c in self.coeffs])

    def shift(self, k: int) -> "UPoly":
        if self.is_zero():
            return self
        return UPoly([ZERO] * k + list(self.coeffs))

    def __str__(self) -> str:
        return format_upoly(self)

    def __repr__(self) -> str:
        return f"UPoly({list(self.coeffs)!r})"


# ---------------------------------------------------------------------------
# Display (shared with the CLI grammar)
# ---------------------------------------------------------------------------

def _coeff_text(c: Quat) -> tuple[str, str]:
    """(sign, body) for a coefficient in front of a power of x."""
    nonzero = [v for v in c.coords() if v != 0]
    if len(nonzero) > 1:
        return "+", f"({c})"
    for value, unit in zip(c.coords(), ("", "i", "j", "k")):
        if value != 0:
            sign = "+" if value > 0 else "-"
            mag = value if value > 0 else -value
            if mag == 1 and unit:
                return sign, unit
            return sign, f"{mag}{unit}"
    return "+", "0"


def format_upoly(p: UPoly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        sign, body = _coeff_text(c)
        if k > 0:
            power = var if k == 1 else f"{var}^{k}"
            body = power if body == "1" else f"{body}{power}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# One-sided gcd / common multiples
# ---------------------------------------------------------------------------

def gcrd(p: UPoly, q: UPoly) -> UPoly:
    """Greatest common right divisor: the monic generator of the left ideal
    generated by p and q, via the right-division Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise InvalidInput("gcrd of two zero polynomials")
    a, b = p, q
    while not b.is_zero():
        _, r = a.divmod_right(b)
        a, b = b, r
    return a.monic()


def lclm(p: UPoly, q: UPoly) -> UPoly:
    """Least common left multiple: the monic generator of the intersection
    of the left ideals of p and q.

    Found by solving the coefficient system u*p = v*q of minimal degree
    exactly over rational coordinates rather than by an extended Euclidean
    scheme; degrees here are small and this avoids one-sided bookkeeping.
    """
    if p.is_zero() or q.is_zero():
        raise InvalidInput("lclm requires nonzero polynomials")
    dp, dq = p.degree, q.degree
    for total in range(max(dp, dq), dp + dq + 1):
        du, dv = total - dp, total - dq
        # Unknowns: the quaternion coefficients of u (du+1 of them) and of
        # v (dv+1), expanded over the rational basis.
        ncols = 4 * (du + dv + 2)

        def column(unknown_index: int) -> UPoly:
            block, m = divmod(unknown_index, 4)
            e = BASIS[m]
            if block <= du:
                return UPoly.monomial(e, block) * p
            return UPoly.monomial(e, block - du - 1) * q

        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        columns = [column(idx) for idx in range(ncols)]
        for deg in range(total + 1):
            for coord in range(4):
                row = []
                for block_idx, col in enumerate(columns):
                    sign = 1 if block_idx < 4 * (du + 1) else -1
                    row.append(sign * col.coeff(deg).coords()[coord])
                rows.append(row)
                rhs.append(Fraction(0))
        # Monic constraint: the x^total coefficient of u*p equals one.
        for coord in range(4):
            row = []
            for block_idx, col in enumerate(columns):
                if block_idx < 4 * (du + 1):
                    row.append(col.coeff(total).coords()[coord])
                else:
                    row.append(Fraction(0))
            rows.append(row)
            rhs.append(Fraction(1) if coord == 0 else Fraction(0))
        sol = linalg.solve(rows, rhs, ncols)
        if sol is None:
            continue
        u = UPoly()
        for block in range(du + 1):
            coeff = Quat.from_coords(sol[4 * block : 4 * block + 4])
            u = u + UPoly.monomial(coeff, block)
        result = u * p
        if result.degree == total and result.lead == ONE:
            return result
    raise InternalError("least common left multiple search failed")  # pragma: no cover


# ---------------------------------------------------------------------------
# Root classes (Niven-Jacobson style search through the companion polynomial)
# ---------------------------------------------------------------------------

class RootSearchStatus(Enum):
    COMPLETE = "complete"
    POSSIBLY_INCOMPLETE = "possibly-incomplete"


@dataclass(frozen=True)
class Isolated:
    """A single right root, the only one in its conjugacy class."""

    a: Quat


@dataclass(frozen=True)
class Sphere:
    """A full conjugacy class {a : a^2 - t*a + n = 0} of right roots.

    Requires t^2 - 4n < 0.  The class may contain no point with rational
    coordinates; `sphere_member_in` decides that exactly.
    """

    t: Fraction
    n: Fraction


RootClass = Isolated | Sphere


def companion(p: UPoly) -> UPoly:
    """p times its coefficient-conjugate; always has central coefficients."""
    return p * p.conj_poly()


def right_roots(p: UPoly) -> tuple[list[RootClass], RootSearchStatus]:
    """All conjugacy classes of right roots discoverable over the rationals.

    The central companion polynomial is split into rational roots and monic
    quadratic factors; each quadratic with negative discriminant carries at
    most one candidate class, checked exactly.  Factors that resist this
    (degree > 2 irreducible, or quadratics with irrational real roots) make
    the status POSSIBLY_INCOMPLETE: roots may exist in a larger scalar field
    but have no rational-quaternion representative.
    """
    if p.degree < 1:
        raise InvalidInput("root search needs a nonconstant polynomial")
    comp = companion(p)
    fac = ratfactor.factor_central(comp.central_coeffs())
    classes: list[RootClass] = []
    incomplete = not fac.complete
    for root, _mult in fac.linear:
        cand = Quat.scalar(root)
        if not p.eval_left(cand):
            classes.append(Isolated(cand))
    for t, n, _mult in fac.quadratics:
        disc = t * t - 4 * n
        if disc > 0:
            # Real irrational roots: representable only over a larger field.
            incomplete = True
            continue
        quad = UPoly.from_central([n, -t, Fraction(1)])
        _, rem = p.divmod_right(quad)
        alpha, beta = rem.coeff(1), rem.coeff(0)
        if not alpha and not beta:
            classes.append(Sphere(t, n))
        elif alpha:
            cand = -(alpha.inverse() * beta)
            on_sphere = not (cand * cand - cand * t + Quat.scalar(n))
            if on_sphere and not p.eval_left(cand):
                classes.append(Isolated(cand))
    status = RootSearchStatus.POSSIBLY_INCOMPLETE if incomplete else RootSearchStatus.COMPLETE
    return classes, status


def left_roots(p: UPoly) -> tuple[list[RootClass], RootSearchStatus]:
    """Conjugacy classes of left roots (zeros of the right evaluation).

    a is a left root of p exactly when conj(a) is a right root of the
    coefficient-conjugated polynomial, so the search is delegated there.
    """
    classes, status = right_roots(p.conj_poly())
    out: list[RootClass] = []
    for cls in classes:
        if isinstance(cls, Isolated):
            out.append(Isolated(cls.a.conjugate()))
        else:
            out.append(cls)  # conjugation fixes every sphere class
    return out, status


def sphere_member_in(c: Centralizer, t: Fraction, n: Fraction) -> Quat | None:
    """A point of the class {a : a^2 - t*a + n = 0} inside the subring c,
    or None; the None answer is exact.

    Members have the shape t/2 + v with v pure of norm n - t^2/4, so the
    question reduces to rational squares (quadratic subfield) or to a sum
    of three rational squares (full ring).
    """
    m = n - t * t / 4
    if m <= 0:
        raise InvalidInput("not a sphere class: nonnegative discriminant")
    if c.kind == "center":
        return None
    if c.kind == "quadratic":
        d = c.u.norm()
        s = rational_sqrt(m / d)
        if s is None:
            return None
        return Quat.scalar(t / 2) + c.u * s
    big = m.numerator * m.denominator
    triple = three_squares(big)
    if triple is None:
        return None
    a1, a2, a3 = (Fraction(v, m.denominator) for v in triple)
    return Quat(t / 2, a1, a2, a3)


def roots_in_centralizer(p: UPoly, c: Centralizer, side: str = "left") -> tuple[list[Quat], RootSearchStatus]:
    """Representatives of the roots of p lying inside the subring c.

    `side="left"` looks for left roots (zeros of the right evaluation),
    which is what splitting p = (x - a) * q requires.
    """
    classes, status = left_roots(p) if side == "left" else right_roots(p)
    found: list[Quat] = []
    for cls in classes:
        if isinstance(cls, Isolated):
            if c.contains(cls.a):
                found.append(cls.a)
        else:
            member = sphere_member_in(c, cls.t, cls.n)
            if member is not None:
                found.append(member)
    return found, status


def sqrt_in_centralizer(c: Centralizer, delta: Quat) -> Quat | None:
    """A square root of delta inside a commutative centralizer, or None.

    Only the center and quadratic kinds are supported; used for solving
    quadratics inside a commutative subfield.
    """
    if c.kind == "center":
        if not delta.is_central():
            return None
        s = rational_sqrt(delta.w)
        return None if s is None else Quat.scalar(s)
    if c.kind != "quadratic":
        raise InvalidInput("square roots need a commutative centralizer")
    coords = c.coords(delta)
    if coords is None:
        return None
    p0, q0 = coords
    d = c.u.norm()  # u*u = -d
    if q0 == 0:
        s = rational_sqrt(p0)
        if s is not None:
            return Quat.scalar(s)
        if p0 < 0:
            tt = rational_sqrt(-p0 / d)
            if tt is not None:
                return c.u * tt
        return None
    # (s + t*u)^2 = s^2 - t^2 d + 2 s t u: solve s^2 = (p0 +- sqrt(p0^2 + q0^2 d)) / 2.
    inner = rational_sqrt(p0 * p0 + q0 * q0 * d)
    if inner is None:
        return None
    for branch in (inner, -inner):
        s2 = (p0 + branch) / 2
        s = rational_sqrt(s2)
        if s is not None and s != 0:
            tt = q0 / (2 * s)
            return Quat.scalar(s) + c.u * tt
    return None


def quadratic_roots_in(c: Centralizer, b1: Quat, b0: Quat) -> list[Quat]:
    """Roots of x^2 + b1*x + b0 inside a commutative centralizer c."""
    disc = b1 * b1 - Quat.scalar(4) * b0
    s = sqrt_in_centralizer(c, disc)
    if s is None:
        return []
    half = Fraction(1, 2)
    roots = [(-b1 + s) * half, (-b1 - s) * half]
    return list(dict.fromkeys(roots))


# ---------------------------------------------------------------------------
# Root spaces E = {r : p(r a r^-1) = 0} + {0}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSpaceBasis:
    """Basis of the conjugation root space of (p, a), a right vector space
    over the centralizer of a."""

    basis: tuple[Quat, ...]
    over: Centralizer

    @property
    def dim(self) -> int:
        return len(self.basis)


def _root_space_rational_basis(p: UPoly, a: Quat) -> list[Quat]:
    """Rational basis of {r : sum_k c_k r a^k = 0}; equals the conjugation
    root space of (p, a) plus zero, for any a whatever."""
    powers = [a**k for k in range(len(p.coeffs))]
    columns = []
    for e in BASIS:
        img = ZERO
        for c, apow in zip(p.coeffs, powers):
            img = img + c * e * apow
        columns.append(img)
    rows = [[col.coords()[r] for col in columns] for r in range(4)]
    return [Quat.from_coords(v) for v in linalg.nullspace(rows, 4)]


def root_space(p: UPoly, a: Quat) -> RootSpaceBasis:
    """Basis over the centralizer of a of the conjugators r sending a to a
    root of p; requires a itself to be a right root."""
    if p.is_zero():
        raise InvalidInput("root space of the zero polynomial")
    if p.eval_left(a):
        raise InvalidInput("the base point must be a right root")
    c = centralizer_of_set([a])
    rational_basis = _root_space_rational_basis(p, a)
    picked: list[Quat] = []
    for r in rational_basis:
        if right_linear_solve(picked, r, c) is None:
            picked.append(r)
    if len(picked) * c.dim != len(rational_basis):
        raise InternalError("root space is not a right module over the centralizer")
    return RootSpaceBasis(tuple(picked), c)


def root_space_dim(p: UPoly, a: Quat) -> int:
    """Dimension of the conjugation root space of (p, a) over the
    centralizer of a; zero when no conjugate of a is a root."""
    c = centralizer_of_set([a])
    rational_dim = len(_root_space_rational_basis(p, a))
    if rational_dim % c.dim:
        raise InternalError("root space dimension incompatible with the centralizer")
    return rational_dim // c.dim


# ---------------------------------------------------------------------------
# Minimal one-sided polynomials and Wedderburn polynomials
# ---------------------------------------------------------------------------

def minimal_left_poly(b: Quat, c: Centralizer) -> UPoly:
    """The monic p with coefficients in c of least degree with p(b) = 0
    under left evaluation; every annihilator in c[x] is a left multiple.

    The degree never exceeds two here: b always satisfies its central
    characteristic polynomial x^2 - 2*Re(b)*x + Norm(b).
    """
    powers = [ONE]
    for n in range(1, 4):
        powers.append(powers[-1] * b)
        sol = left_linear_solve(powers[:n], powers[n], c)
        if sol is not None:
            coeffs = [-s for s in sol] + [ONE]
            return UPoly(coeffs)
    raise InternalError("minimal left polynomial not found below the degree cap")


def minimal_right_poly(b: Quat, c: Centralizer) -> UPoly:
    """Monic p in c[x] of least degree with zero right evaluation at b."""
    powers = [ONE]
    for n in range(1, 4):
        powers.append(powers[-1] * b)
        sol = right_linear_solve(powers[:n], powers[n], c)
        if sol is not None:
            coeffs = [-s for s in sol] + [ONE]
            return UPoly(coeffs)
    raise InternalError("minimal right polynomial not found below the degree cap")


_WEDDERBURN_DEGREE_CAP = 4


def wedderburn_lclm(b: Quat, generators: Sequence[Quat]) -> UPoly:
    """Monic generator of the intersection of the left ideals (x - r*b*r^-1)
    for r running over the group generated by the given conjugators.

    Computed as a fixpoint: take least common left multiples until the
    result is stable under conjugation by every generator, at which point
    its coefficients all commute with the generators.  The result is a
    Wedderburn polynomial and equals the minimal left polynomial of b over
    the centralizer of the generator set.
    """
    gens = list(generators)
    for g in gens:
        if not g:
            raise InvalidInput("conjugator generators must be nonzero")
    p = UPoly.linear(b)
    changed = True
    while changed:
        changed = False
        for g in gens:
            ginv = g.inverse()
            conjugated = UPoly([g * c * ginv for c in p.coeffs])
            if conjugated != p:
                p = lclm(p, conjugated)
                changed = True
                if p.degree > _WEDDERBURN_DEGREE_CAP:
                    raise InternalError("Wedderburn fixpoint exceeded the degree cap")
    csub = centralizer_of_set(gens)
    for coeff in p.coeffs:
        if not csub.contains(coeff):
            raise InternalError("Wedderburn polynomial has a coefficient outside the centralizer")
    return p
