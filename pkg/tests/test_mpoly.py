"""Multivariate ring, commuting points, point-ideal reduction, and
membership certificates."""

from random import Random

import pytest

from quatca.errors import InvalidInput
from quatca.mpoly import (
    CommutingPoint,
    LeftIdeal,
    MPoly,
    NotFoundWithinBounds,
    RabinowitschCertificate,
    eval_at_point,
    find_certificate,
    in_point_ideal,
    monomials_upto,
    point_ideal,
    rabinowitsch_check,
    reduce_mod_point,
)
from quatca.randgen import rand_commuting_point, rand_mpoly, rand_nonzero_quat
from quatca.scalars import I, J, K, ONE, Quat, ZERO
from quatca.upoly import UPoly


def x(i, n):
    return MPoly.variable(i, n)


def const(q, n):
    return MPoly.constant(q, n)


class TestArithmetic:
    def test_central_variable(self):
        p = (x(0, 1) - const(I, 1)) * (x(0, 1) + const(I, 1))
        assert p == MPoly(1, {(2,): ONE, (0,): ONE})

    def test_identity(self):
        p = rand_mpoly(Random(0), 2, 3)
        assert p * const(ONE, 2) == p

    def test_left_coefficients_collect(self):
        assert MPoly.monomial(I, (1, 0)) * MPoly.monomial(J, (0, 1)) == MPoly.monomial(
            K, (1, 1)
        )

    def test_nvars_mismatch(self):
        with pytest.raises(InvalidInput):
            x(0, 1) + x(0, 2)


class TestCommutingPoint:
    def test_accepts_commuting_components(self):
        CommutingPoint([I, Quat(1, 1)])
        CommutingPoint([Quat(3), J])

    def test_rejects_noncommuting(self):
        with pytest.raises(InvalidInput):
            CommutingPoint([I, J])

    def test_rejects_empty(self):
        with pytest.raises(InvalidInput):
            CommutingPoint([])


class TestEvaluation:
    def test_vanishing_example(self):
        pt = CommutingPoint([I, Quat(1, 1)])
        p = x(0, 2) * x(1, 2) - const(I - ONE, 2)
        assert eval_at_point(p, pt) == ZERO

    def test_constant(self):
        assert eval_at_point(const(K, 2), CommutingPoint([I, I])) == K

    def test_diagonal(self):
        assert eval_at_point(x(0, 2) - x(1, 2), CommutingPoint([I, I])) == ZERO

    def test_order_independence(self):
        rng = Random(3)
        for _ in range(150):
            nvars = rng.randint(1, 3)
            pt = rand_commuting_point(rng, nvars)
            p = rand_mpoly(rng, nvars, 4)
            forward = eval_at_point(p, pt)
            # reversed substitution order
            rev_terms = {tuple(reversed(e)): c for e, c in p.terms.items()}
            rev_pt = CommutingPoint(list(reversed(list(pt))))
            backward = eval_at_point(MPoly(nvars, rev_terms), rev_pt)
            assert forward == backward

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInput):
            eval_at_point(x(0, 2), CommutingPoint([I]))


class TestReduction:
    def test_generator_reduces_to_zero(self):
        pt = CommutingPoint([I, Quat(1, 1)])
        g = x(0, 2) - const(I, 2)
        remainder, quotients = reduce_mod_point(g, pt)
        assert remainder == ZERO
        assert quotients[0] == const(ONE, 2)

    def test_worked_example(self):
        pt = CommutingPoint([I, Quat(1, 1)])
        remainder, quotients = reduce_mod_point(x(0, 2) * x(1, 2), pt)
        assert remainder == I * Quat(1, 1) == Quat(-1, 1)
        rebuilt = const(remainder, 2)
        for q, g in zip(quotients, point_ideal(pt).gens):
            rebuilt = rebuilt + q * g
        assert rebuilt == x(0, 2) * x(1, 2)

    def test_univariate_case(self):
        remainder, quotients = reduce_mod_point(
            MPoly(1, {(2,): ONE, (0,): ONE}), CommutingPoint([I])
        )
        assert remainder == ZERO
        assert quotients[0] == MPoly(1, {(1,): ONE, (0,): I})

    def test_reconstruction_randomized(self):
        rng = Random(5)
        for _ in range(200):
            nvars = rng.randint(1, 3)
            pt = rand_commuting_point(rng, nvars)
            p = rand_mpoly(rng, nvars, 4)
            remainder, quotients = reduce_mod_point(p, pt)
            rebuilt = const(remainder, nvars)
            for q, g in zip(quotients, point_ideal(pt).gens):
                rebuilt = rebuilt + q * g
            assert rebuilt == p
            assert remainder == eval_at_point(p, pt)
            assert in_point_ideal(p, pt) == (remainder == ZERO)


class TestPointIdeal:
    def test_univariate(self):
        gens = point_ideal(CommutingPoint([I])).gens
        assert gens == (x(0, 1) - const(I, 1),)

    def test_two_variables(self):
        ideal = point_ideal(CommutingPoint([I, Quat(1, 1)]))
        assert len(ideal.gens) == 2

    def test_ideal_needs_generators(self):
        with pytest.raises(InvalidInput):
            LeftIdeal(())


class TestMonomials:
    def test_graded_lexicographic_order(self):
        monos = monomials_upto(2, 2)
        assert monos == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


class TestCertificates:
    def test_member_of_the_ideal_itself(self):
        g = x(0, 1) - const(I, 1)
        out = rabinowitsch_check(LeftIdeal((g,)), g, ONE, 1, 0)
        assert isinstance(out, RabinowitschCertificate)
        assert out.N == 1

    def test_degbound_zero_blocks_the_flagship_instance(self):
        g = x(0, 1) - const(I, 1)
        ideal = LeftIdeal((g * g,))
        out = rabinowitsch_check(ideal, g, J, 3, 0)
        assert isinstance(out, NotFoundWithinBounds)

    def test_flagship_instance_all_powers_admit_certificates(self):
        # The k >= 1 summands cancel the high-degree parts, so certificates
        # exist for every power once linear cofactors are allowed.
        g = x(0, 1) - const(I, 1)
        ideal = LeftIdeal((g * g,))
        for N in (1, 2, 3):
            out = rabinowitsch_check(ideal, g, J, N, 1)
            assert isinstance(out, RabinowitschCertificate), N

    def test_hand_identity_for_the_cube(self):
        # (j(x-i))^3 = -j(x+i)(x-i)^2, moving j through (x-i) twice
        xi = UPoly.linear(I)
        jxi = xi.scale_left(J)
        lhs = jxi * jxi * jxi
        rhs = (UPoly([I, ONE]).scale_left(-J)) * xi * xi
        assert lhs == rhs

    def test_certificates_reconstruct_exactly(self):
        rng = Random(7)
        for _ in range(15):
            nvars = rng.randint(1, 2)
            pt = rand_commuting_point(rng, nvars, height=2)
            ideal = point_ideal(pt)
            p = ideal.gens[rng.randrange(nvars)]
            a = rand_nonzero_quat(rng, 2)
            out = rabinowitsch_check(ideal, p, a, rng.randint(1, 2), 1)
            assert isinstance(out, RabinowitschCertificate)
            ap = p.scale_left(a)
            powers = [const(ONE, nvars)]
            for _ in range(out.N):
                powers.append(powers[-1] * ap)
            rebuilt = MPoly(nvars, {})
            for k, row in enumerate(out.cofactors):
                for h, g in zip(row, ideal.gens):
                    rebuilt = rebuilt + h * g * powers[k]
            assert rebuilt == powers[out.N]

    def test_find_certificate_two_variables(self):
        gens = (
            x(0, 2) - const(I, 2),
            x(1, 2) - const(Quat(1, 1), 2),
        )
        ideal = LeftIdeal(gens)
        out = find_certificate(ideal, gens[0], K, 3, 1)
        assert isinstance(out, tuple)
        n_found, cert = out
        assert 1 <= n_found <= 3
        assert isinstance(cert, RabinowitschCertificate)

    def test_nonvanishing_polynomial_gets_no_certificate(self):
        # p = 1 does not vanish at the point, so no power lands in the sum.
        g = x(0, 1) - const(I, 1)
        ideal = LeftIdeal((g,))
        out = find_certificate(ideal, const(ONE, 1), ONE, 3, 2)
        assert isinstance(out, NotFoundWithinBounds)

    def test_invalid_bounds(self):
        g = x(0, 1) - const(I, 1)
        with pytest.raises(InvalidInput):
            rabinowitsch_check(LeftIdeal((g,)), g, ONE, 0, 1)
        with pytest.raises(InvalidInput):
            rabinowitsch_check(LeftIdeal((g,)), g, ONE, 1, -1)
