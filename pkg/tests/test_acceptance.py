"""Acceptance criteria, one test per criterion (criterion 8 split so its
independent sub-claims report separately).

Each test prints a single pass/fail line; run with `pytest -s` to see them.
Every comparison is exact; the only tolerances are wall-clock budgets.

Criteria 8b and 8c assert the stated expected values for the certificate
instance.  Those values are inconsistent with the membership
    (a p)^N  in  I + I(ap) + ... + I(ap)^N
that the certificate type itself pins down, and the tests FAIL by design
rather than being weakened: the summands with k >= 1 cancel high-degree
terms, so certificates exist already at N = 1.  Hand-verified identities
are printed in the failure messages; see the build notes ledger.
"""

import time
from random import Random

from quatca import linalg
from quatca.modules import EigenTuple, ModulePresentation, RootNotFound, find_eigen_tuple
from quatca.mpoly import (
    LeftIdeal,
    MPoly,
    NotFoundWithinBounds,
    RabinowitschCertificate,
    find_certificate,
    rabinowitsch_check,
)
from quatca.randgen import (
    rand_module,
    rand_nonzero_quat,
    rand_quat,
    rand_upoly,
)
from quatca.ratexpr import (
    algebraicity_witness,
    independent_via_criterion,
    independent_via_rank,
    left_degree_via_criterion,
    left_degree_via_rank,
    right_degree,
)
from quatca.scalars import (
    BASIS,
    Centralizer,
    I,
    J,
    ONE,
    Quat,
    ZERO,
    centralizer_of_set,
)
from quatca.upoly import (
    RootSearchStatus,
    UPoly,
    minimal_left_poly,
    right_roots,
    root_space,
    wedderburn_lclm,
)


def report(criterion: str, ok: bool, detail: str = ""):
    tag = "PASS" if ok else "FAIL"
    suffix = f" — {detail}" if detail else ""
    print(f"[{tag}] {criterion}{suffix}")
    assert ok, f"{criterion}{suffix}"


def test_criterion_1_minimal_polynomial_value_and_speed():
    expected = UPoly([ONE, ZERO, ONE])
    poly = minimal_left_poly(J, Centralizer.quadratic(I))
    assert poly == expected
    timings = []
    for _ in range(5):
        start = time.perf_counter()
        minimal_left_poly(J, Centralizer.quadratic(I))
        timings.append(time.perf_counter() - start)
    best = min(timings)
    report(
        "criterion 1: minimal polynomial of j over the centralizer of i",
        poly == expected and best < 1e-3,
        f"x^2 + 1 exactly, fastest run {best * 1e6:.0f} us",
    )


def test_criterion_2_product_formula_500_instances():
    rng = Random(202)
    start = time.monotonic()
    zero_branch = 0
    for trial in range(500):
        p = rand_upoly(rng, 5, 10)
        a = rand_quat(rng, 10)
        if trial % 2:
            q = rand_upoly(rng, 4, 10) * UPoly.linear(a)
        else:
            q = rand_upoly(rng, 5, 10)
        value = q.eval_left(a)
        product = (p * q).eval_left(a)
        if not value:
            zero_branch += 1
            assert product == ZERO
        else:
            assert product == p.eval_left(value * a * value.inverse()) * value
    elapsed = time.monotonic() - start
    report(
        "criterion 2: product formula on 500 randomized instances",
        zero_branch >= 100 and elapsed < 10,
        f"{zero_branch} zero-branch cases, {elapsed:.2f}s",
    )


def test_criterion_3_remainder_law_500_instances():
    rng = Random(303)
    for _ in range(500):
        p = rand_upoly(rng, 5, 10)
        a = rand_quat(rng, 10)
        quot, rem = p.divmod_right(UPoly.linear(a))
        assert quot * UPoly.linear(a) + rem == p
        assert rem.degree <= 0
        assert rem.coeff(0) == p.eval_left(a)
        # membership route: eval zero iff exact right divisibility
        if p.eval_left(a) == ZERO:
            assert rem.is_zero()
    report("criterion 3: remainder law on 500 randomized instances", True)


def _class_dimension_by_raw_system(p: UPoly, a: Quat) -> int:
    """Independent oracle: nullspace of the conjugation root system, built
    directly from the coefficients and divided by the centralizer size."""
    powers = [a**k for k in range(len(p.coeffs))]
    columns = []
    for e in BASIS:
        image = ZERO
        for c, apow in zip(p.coeffs, powers):
            image = image + c * e * apow
        columns.append(image)
    rows = [[col.coords()[axis] for col in columns] for axis in range(4)]
    rational_dim = len(linalg.nullspace(rows, 4))
    csize = centralizer_of_set([a]).dim
    assert rational_dim % csize == 0
    return rational_dim // csize


def test_criterion_4_root_class_inequality_and_wedderburn_equality():
    rng = Random(404)
    for _ in range(200):
        factors = [rand_quat(rng, 10, integer=True) for _ in range(rng.randint(1, 4))]
        p = UPoly.constant(ONE)
        for a in factors:
            p = p * UPoly.linear(a)
        reps = []
        for a in factors:
            if not any(
                a.scalar_part() == b.scalar_part() and a.norm() == b.norm()
                for b in reps
            ):
                reps.append(a)
        total = sum(_class_dimension_by_raw_system(p, a) for a in reps)
        assert total <= p.degree
    for _ in range(200):
        b = rand_quat(rng, 10)
        gens = [rand_nonzero_quat(rng, 10) for _ in range(rng.randint(1, 2))]
        poly = wedderburn_lclm(b, gens)
        assert root_space(poly, b).dim == poly.degree
    report(
        "criterion 4: root-class inequality (200 products) and Wedderburn "
        "root-space equality (200 instances)",
        True,
    )


def test_criterion_5_rational_criteria_vs_oracles():
    rng = Random(505)
    start = time.monotonic()
    for trial in range(500):
        a = rand_quat(rng, 10)
        size = rng.randint(1, 4)
        bs = [rand_quat(rng, 10) for _ in range(size)]
        if trial % 3 == 0 and size >= 2:
            c = centralizer_of_set([a])
            mixer = sum((e * Quat.scalar(rng.randint(-3, 3)) for e in c.basis()), ZERO)
            bs[-1] = mixer * bs[rng.randrange(size - 1)]
        assert independent_via_criterion(a, bs) == independent_via_rank(a, bs)
    for _ in range(500):
        a = rand_quat(rng, 10)
        b = rand_quat(rng, 10)
        assert left_degree_via_criterion(a, b) == left_degree_via_rank(a, b)
    elapsed = time.monotonic() - start
    report(
        "criterion 5: rational criteria agree with linear-algebra oracles "
        "(500 + 500 instances)",
        elapsed < 30,
        f"{elapsed:.2f}s",
    )


def test_criterion_6_degree_symmetry_and_witness():
    rng = Random(606)
    for _ in range(500):
        a = rand_quat(rng, 10)
        b = rand_quat(rng, 10)
        d = left_degree_via_rank(a, b)
        assert d in (1, 2)
        assert right_degree(b, a) == d
        witness = algebraicity_witness(a, b)
        total = a ** len(witness)
        for k, coeff in enumerate(witness):
            total = total + (a**k) * coeff
        assert total == ZERO
        assert all(coeff.commutes_with(b) for coeff in witness)
    report("criterion 6: degree symmetry and witness postconditions (500 instances)", True)


def test_criterion_7_eigen_tuple_extraction_100_modules():
    rng = Random(707)
    start = time.monotonic()
    for _ in range(100):
        nvars = rng.randint(1, 3)
        m = rng.randint(1, 4)
        module, _ = rand_module(rng, nvars, m)
        out = find_eigen_tuple(module)
        assert isinstance(out, EigenTuple), out
        assert any(out.v)
        for i in range(nvars):
            assert module.act(i, out.v) == tuple(out.point[i] * c for c in out.v)
        comps = list(out.point)
        for s in range(len(comps)):
            for t in range(s + 1, len(comps)):
                assert comps[s] * comps[t] == comps[t] * comps[s]
    elapsed = time.monotonic() - start
    report(
        "criterion 7: eigen-tuple extraction on 100 conjugated direct sums",
        elapsed < 60,
        f"{elapsed:.2f}s",
    )


def _flagship_instance():
    xi = MPoly.variable(0, 1) - MPoly.constant(I, 1)
    return LeftIdeal((xi * xi,)), xi


def test_criterion_8a_certificate_exactness_and_hand_identity():
    start = time.monotonic()
    ideal, p = _flagship_instance()
    outcome = rabinowitsch_check(ideal, p, J, 3, 1)
    assert isinstance(outcome, RabinowitschCertificate)
    # reconstruct the identity here, independently of the kernel's own check
    ap = p.scale_left(J)
    powers = [MPoly.constant(ONE, 1)]
    for _ in range(3):
        powers.append(powers[-1] * ap)
    rebuilt = MPoly(1, {})
    for k, row in enumerate(outcome.cofactors):
        for h, g in zip(row, ideal.gens):
            rebuilt = rebuilt + h * g * powers[k]
    assert rebuilt == powers[3]
    # hand identity: (j(x-i))^3 = -j(x+i)(x-i)^2
    xi = UPoly.linear(I)
    jxi = xi.scale_left(J)
    assert jxi * jxi * jxi == UPoly([I, ONE]).scale_left(-J) * xi * xi
    elapsed = time.monotonic() - start
    report(
        "criterion 8a: certificate at the third power reconstructs exactly; "
        "hand identity confirmed",
        elapsed < 5,
        f"{elapsed:.2f}s",
    )


def test_criterion_8b_minimal_power_as_stated():
    ideal, p = _flagship_instance()
    outcome = find_certificate(ideal, p, J, 5, 2)
    assert isinstance(outcome, tuple)
    n_found, _ = outcome
    report(
        "criterion 8b: minimal power equals 3 as stated",
        n_found == 3,
        f"search returned N = {n_found}: the k >= 1 summands cancel "
        "higher-degree terms, e.g. (jx/4 - 3k/4)(x-i)^2 - (1/4)(x-i)^2(j(x-i)) "
        "= j(x-i) exactly, so membership already holds at the first power; "
        "the stated value matches the narrower membership (ap)^N in I alone",
    )


def test_criterion_8c_second_power_not_found_as_stated():
    ideal, p = _flagship_instance()
    outcome = rabinowitsch_check(ideal, p, J, 2, 3)
    report(
        "criterion 8c: second power reported NotFoundWithinBounds at degree bound 3",
        isinstance(outcome, NotFoundWithinBounds),
        "a certificate exists: (-ix/2 + 1/2)(x-i)^2 - (k/2)(x-i)^2(j(x-i)) "
        "= -(x^2+1) = (j(x-i))^2 exactly; the stated degree-accounting "
        "argument overlooks cancellation between the k = 0 and k = 1 parts",
    )


def test_criterion_9_honest_failure_paths():
    for _ in range(2):  # deterministic: identical answers on repeat runs
        classes, status = right_roots(UPoly.from_central([-2, 0, 1]))
        assert classes == []
        assert status == RootSearchStatus.POSSIBLY_INCOMPLETE
        module = ModulePresentation(2, [[[ZERO, Quat(2)], [ONE, ZERO]]])
        out = find_eigen_tuple(module)
        assert isinstance(out, RootNotFound)
        assert out.poly == UPoly.from_central([-2, 0, 1])
    report("criterion 9: honest failure paths are reported and deterministic", True)
