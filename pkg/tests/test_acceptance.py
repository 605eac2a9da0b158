"""Acceptance criteria, one test each, all at tolerance 0.

Each test wraps its asserts in ``criterion(n, text)``; the terminal summary prints a PASS/FAIL line per criterion.
"""

import math
import random
import time
from fractions import Fraction

from sympy.utilities.iterables import partitions

from chernmather.combinatorics import binomial, eulerian_defining_check, eulerian_polynomial
from chernmather.combinatorics import middle_binomial as B
from chernmather.genus5 import genus5_hyperelliptic_report
from chernmather.jacobian import CurveCase, Verdict, criterion_check, dim_omega, jacobian_reference_classes
from chernmather.pontryagin import ThetaClass, adams, pontryagin_mul, theta_basis
from chernmather.prym import EPrime, SCycle, ChiTag, euler_characteristic, matches_jacobian_dimension, prym_chern_mather_t0
from chernmather.series import (
    LagrangianChernData,
    alt_class,
    alt_via_newton,
    c2_gap,
    e_coefficient,
    e_lambda,
    unit_index,
)

NONHYP, HYP = CurveCase.NON_HYPERELLIPTIC, CurveCase.HYPERELLIPTIC


def closed_table(g, case):
    """Sum over r of the closed-form multiplier times w_r, written out independently of the library."""
    coeffs = [0] * (g + 1)
    for r in range(g):
        m = math.comb(2 * (g - 1 - r), g - 1 - r)
        if case is HYP and g - r - 3 >= 0:
            m -= math.comb(2 * g - 2 * r - 2, g - r - 3)
        coeffs[r] = m
    return ThetaClass(g, tuple(coeffs))


def test_01_eulerian(criterion):
    with criterion(1, "Eulerian identity suite, 0 <= n <= 15 mod x^40, P_n(1) = n!, under 1 s"):
        start = time.perf_counter()
        for n in range(16):
            assert eulerian_defining_check(n, 40)
            assert eulerian_polynomial(n)(1) == math.factorial(n)
        assert time.perf_counter() - start < 1.0


def test_02_jacobian_tables(criterion):
    with criterion(2, "Jacobian tables from e_lambda match closed forms, 4 <= g <= 12, both cases"):
        for g in range(4, 13):
            s = e_lambda(LagrangianChernData.of(g, 2 * g - 2, l1=1), g)
            nonhyp, hyp = s[g - 1], s[g - 1] - s[g - 3]
            assert nonhyp == closed_table(g, NONHYP)
            assert hyp == closed_table(g, HYP)
            total = ThetaClass.zero(g)
            for c in jacobian_reference_classes(g, NONHYP):
                total = total + c
            assert total == nonhyp
            total = ThetaClass.zero(g)
            for c in jacobian_reference_classes(g, HYP):
                total = total + c
            assert total == hyp


def test_03_corollary_coefficients(criterion):
    with criterion(3, "e_coefficient reproduces the four Alt^k closed forms, 2 <= n <= 20, 0 <= k <= n"):
        g = 4
        zero, e1, e2, two_e1 = (0, 0, 0), unit_index(g, 1), unit_index(g, 2), unit_index(g, 1, times=2)
        for n in range(2, 21):
            for k in range(n + 1):
                assert e_coefficient(n, g, k, zero) == binomial(n, k)
                assert e_coefficient(n, g, k, e1) == binomial(n - 2, k - 1)
                assert e_coefficient(n, g, k, e2) == binomial(n - 4, k - 3) - 4 * binomial(n - 4, k - 2) + binomial(n - 4, k - 1)
                assert e_coefficient(n, g, k, two_e1) == Fraction(binomial(n - 4, k - 2), 2)


def test_04_c2_gap(criterion):
    with criterion(4, "c2_gap direct extraction equals -4(2g-5)(g+3)(2g-6)!/(g!(g-3)!), 4 <= g <= 12; g=5 gives -16"):
        for g in range(4, 13):
            i = unit_index(g, 2)
            direct = e_coefficient(2 * g - 2, g, g - 1, i) - e_coefficient(2 * g - 2, g, g - 3, i)
            closed = Fraction(-4 * (2 * g - 5) * (g + 3) * math.factorial(2 * g - 6), math.factorial(g) * math.factorial(g - 3))
            assert direct == closed == c2_gap(g)
        assert c2_gap(5) == -16


def test_05_newton_oracle(criterion):
    with criterion(5, "alt_class equals alt_via_newton on 200 random instances with g <= 10"):
        rng = random.Random(20261017)
        for _ in range(200):
            g = rng.randint(1, 10)
            higher = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(g - 1))
            data = LagrangianChernData(g, rng.randint(-4, 3 * g), higher)
            k = rng.randint(0, g + 2)
            assert alt_class(data, k) == alt_via_newton(data, k)


def test_06_criterion_round_trip(criterion):
    with criterion(6, "criterion round-trip on Jacobian tables, perturbation and codim 2 behaviour"):
        for g in range(4, 13):
            for case in (NONHYP, HYP):
                table = jacobian_reference_classes(g, case)
                c0, c1, c2 = table[0][0], table[1][1], table[2][2]
                v = criterion_check(g, case, c0, c1, c2, 3)
                assert v.tag is Verdict.JACOBIAN
                assert v.reconstruction == (2 * g - 2, 1, 0)
                assert criterion_check(g, case, c0, c1, c2 + 1, 3).tag is Verdict.NOT_CONCLUSIVE
                assert criterion_check(g, case, c0, c1, c2, 2).tag is Verdict.INAPPLICABLE


def test_07_prym_census(criterion):
    with criterion(7, "Prym census: Jacobian dimension exactly at k=0 on t=0, (g), (1,g-1); t>=2 values below B_{g-1}"):
        for g in range(4, 13):
            for k in range(4):
                for t in range(g // 2 + 1):
                    locus = EPrime(g, t, k)
                    assert matches_jacobian_dimension(locus) == (t == 0 and k == 0)
                    chi = euler_characteristic(locus)
                    if t >= 2:
                        assert chi.tag is ChiTag.EXACT and chi.value < B(g - 1)
                for p in partitions(g):
                    parts = tuple(sorted(d for d, m in p.items() for _ in range(m)))
                    expected = k == 0 and parts in ((g,), (1, g - 1))
                    assert matches_jacobian_dimension(SCycle(parts, k)) == expected


def test_08_prym_reduction(criterion):
    with criterion(8, "t=0 Prym classes equal the non-hyperelliptic Jacobian table and pass the criterion"):
        for g in range(4, 13):
            table = jacobian_reference_classes(g, NONHYP)
            for r in range(1, g):
                assert prym_chern_mather_t0(g, r) == table[r]
            c0 = euler_characteristic(EPrime(g, 0, 0)).value
            v = criterion_check(g, NONHYP, c0, prym_chern_mather_t0(g, 1)[1], prym_chern_mather_t0(g, 2)[2], 3)
            assert v.tag is Verdict.JACOBIAN


def test_09_genus5(criterion):
    with criterion(9, "genus-5 report: dim 42, rhs 14 from e_coefficient, residues 2 and 1, both not divisible"):
        r = genus5_hyperelliptic_report()
        assert r.dim_omega == dim_omega(5, HYP) == 42
        i = unit_index(5, 1)
        assert r.rhs_multiplier == e_coefficient(8, 5, 4, i) - e_coefficient(8, 5, 2, i) == 14
        assert [(v % 7) for _, v in r.pairing_values] == [2, 1]
        assert [(res, ok) for _, ok, res in r.verdicts] == [(2, False), (1, False)]


def random_class(rng, g):
    return ThetaClass(g, tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(g + 1)))


def test_10_ring_axioms(criterion):
    with criterion(10, "Pontryagin ring axioms, divided powers and Adams laws on random inputs with g <= 12"):
        rng = random.Random(10)
        for _ in range(150):
            g = rng.randint(1, 12)
            a, b, c = (random_class(rng, g) for _ in range(3))
            one = ThetaClass.one(g)
            assert pontryagin_mul(a, b) == pontryagin_mul(b, a)
            assert pontryagin_mul(pontryagin_mul(a, b), c) == pontryagin_mul(a, pontryagin_mul(b, c))
            assert pontryagin_mul(a, one) == a
            assert pontryagin_mul(a, b + c) == pontryagin_mul(a, b) + pontryagin_mul(a, c)
            n, m = rng.randint(1, 6), rng.randint(1, 6)
            assert adams(adams(a, n), m) == adams(a, n * m)
            assert adams(pontryagin_mul(a, b), n) == pontryagin_mul(adams(a, n), adams(b, n))
            assert adams(a + b, n) == adams(a, n) + adams(b, n)
            assert adams(one, n) == one
        for g in range(1, 13):
            w1, power = theta_basis(g, 1), ThetaClass.one(g)
            for k in range(g + 2):
                expected = theta_basis(g, k).scale(math.factorial(k)) if k <= g else ThetaClass.zero(g)
                assert power == expected
                power = pontryagin_mul(power, w1)
