import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realcomp.reals import (
    BUILTIN_SEQUENCES,
    add_realizer,
    e1_partial,
    geom2_partial,
    least_exp,
    lim_eff_realizer,
    mul_realizer,
    names,
    neg_realizer,
    rat_name,
)

EPSILONS = [Fraction(1, 1 << i) for i in range(21)]
E_ORACLE_TERMS = 50
# sum_{k<50} 1/k! is below e by at most 2/50!
E_ORACLE = sum((Fraction(1, factorial(k)) for k in range(E_ORACLE_TERMS)), Fraction(0))
E_ORACLE_SLACK = Fraction(2, factorial(E_ORACLE_TERMS))


def jittered_name(x, seed):
    """Name of ``x`` off by a seeded amount of at most ``eps/2``, fixed per accuracy."""

    def approx(eps):
        rng = random.Random(f"{seed}:{eps}")
        return x + Fraction(rng.randint(-1000, 1000), 2000) * eps

    return approx


def dyadic_name(x):
    """Name of ``x`` that rounds to the nearest multiple of ``2**-(n+1)`` with ``2**-n <= eps``."""

    def approx(eps):
        scale = 1 << (least_exp(eps) + 1)
        return Fraction(round(x * scale), scale)

    return approx


def recording(phi, seen):
    def approx(eps):
        seen.append(eps)
        return phi(eps)

    return approx


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


def test_least_exp():
    assert least_exp(Fraction(1)) == 0
    assert least_exp(Fraction(5)) == 0
    assert least_exp(Fraction(1, 2)) == 1
    assert least_exp(Fraction(1, 3)) == 2
    assert least_exp(Fraction(1, 1024)) == 10
    with pytest.raises(ValueError):
        least_exp(Fraction(0))


@given(st.fractions(min_value=Fraction(1, 10**12), max_value=10))
def test_least_exp_is_least(eps):
    n = least_exp(eps)
    assert Fraction(1, 1 << n) <= eps
    assert n == 0 or Fraction(1, 1 << (n - 1)) > eps


def test_rat_name():
    assert all(rat_name(0)(eps) == 0 for eps in EPSILONS)
    assert rat_name(Fraction(1, 3))(Fraction(1, 100)) == Fraction(1, 3)
    assert names(rat_name(Fraction(22, 7)), Fraction(22, 7))
    assert not names(rat_name(Fraction(22, 7)), Fraction(22, 7) + Fraction(1, 1 << 19))


def test_test_names_are_names():
    for x in (Fraction(0), Fraction(-7, 3), Fraction(12345, 678)):
        assert names(jittered_name(x, 1), x)
        assert names(dyadic_name(x), x)


def test_add_examples():
    out = add_realizer(rat_name(Fraction(1, 3)), rat_name(Fraction(1, 6)))
    assert abs(out(Fraction(1, 1000)) - Fraction(1, 2)) <= Fraction(1, 1000)
    assert names(out, Fraction(1, 2))
    x = Fraction(-5, 11)
    assert names(add_realizer(dyadic_name(x), rat_name(0)), x)


def test_mul_examples():
    assert names(mul_realizer(rat_name(Fraction(1, 3)), rat_name(3)), Fraction(1))
    out = mul_realizer(jittered_name(Fraction(1, 3), 0), jittered_name(Fraction(3), 1))
    assert abs(out(Fraction(1, 1024)) - 1) <= Fraction(1, 1024)
    assert names(mul_realizer(jittered_name(Fraction(99, 7), 2), rat_name(0)), Fraction(0))


def test_neg_examples():
    assert names(neg_realizer(rat_name(Fraction(1, 2))), Fraction(-1, 2))
    phi = jittered_name(Fraction(3, 5), 4)
    assert all(neg_realizer(neg_realizer(phi))(eps) == phi(eps) for eps in EPSILONS)
    assert names(add_realizer(phi, neg_realizer(phi)), Fraction(0))


def test_random_arithmetic_on_jittered_names():
    rng = random.Random(8)
    for k in range(200):
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        y = Fraction(rng.randint(-10**3, 10**3), rng.randint(1, 10**3))
        phi, psi = jittered_name(x, 2 * k), dyadic_name(y)
        assert names(add_realizer(phi, psi), x + y)
        assert names(mul_realizer(phi, psi), x * y)
        assert names(neg_realizer(phi), -x)


def test_associativity_at_value_level():
    rng = random.Random(12)
    for k in range(50):
        xs = [Fraction(rng.randint(-500, 500), rng.randint(1, 50)) for _ in range(3)]
        a, b, c = (jittered_name(x, 3 * k + i) for i, x in enumerate(xs))
        total = sum(xs)
        assert names(add_realizer(add_realizer(a, b), c), total)
        assert names(add_realizer(a, add_realizer(b, c)), total)
        assert names(add_realizer(b, a), xs[0] + xs[1])
        prod = xs[0] * xs[1] * xs[2]
        assert names(mul_realizer(mul_realizer(a, b), c), prod)
        assert names(mul_realizer(a, mul_realizer(b, c)), prod)


def test_accuracy_use_is_bounded_below():
    x, y = Fraction(17, 3), Fraction(-40, 7)
    seen_x, seen_y = [], []
    phi, psi = recording(rat_name(x), seen_x), recording(rat_name(y), seen_y)
    add = add_realizer(phi, psi)
    for eps in EPSILONS:
        seen_x.clear()
        add(eps)
        assert min(seen_x) >= eps / 2
    mul = mul_realizer(phi, psi)
    factor = abs(x) + abs(y) + 3
    for eps in EPSILONS:
        seen_x.clear()
        seen_y.clear()
        mul(eps)
        assert min(seen_x + seen_y) >= eps / factor


def test_geom2_limit():
    assert geom2_partial(0) == 1
    assert geom2_partial(3) == Fraction(15, 8)
    lim = lim_eff_realizer(BUILTIN_SEQUENCES["geom2"])
    assert abs(lim(Fraction(1, 1 << 20)) - 2) <= Fraction(1, 1 << 20)
    assert names(lim, Fraction(2))


def test_constant_sequence_limit():
    q = Fraction(-7, 9)
    assert names(lim_eff_realizer(lambda n, eps: q), q)


def test_efficient_cauchy_bound_of_builtins():
    for partial in (geom2_partial, e1_partial):
        for n in range(15):
            for m in range(15):
                assert abs(partial(n) - partial(m)) <= Fraction(1, 1 << n) + Fraction(1, 1 << m)


def test_e1_limit_against_series_oracle():
    assert e1_partial(0) == Fraction(5, 2)
    eps = Fraction(1, 1 << 20)
    out = lim_eff_realizer(BUILTIN_SEQUENCES["e1"])(eps)
    # |out - e| <= |out - oracle| + |oracle - e|
    assert abs(out - E_ORACLE) <= eps - E_ORACLE_SLACK
    assert str(float(out))[:9] == "2.7182818"


def test_e1_partial_sums_close_to_e():
    for n in range(30):
        assert abs(e1_partial(n) - E_ORACLE) <= Fraction(1, 1 << n) - E_ORACLE_SLACK


@given(rationals, rationals)
def test_sum_and_product_name_exact_results(x, y):
    assert names(add_realizer(dyadic_name(x), dyadic_name(y)), x + y)
    assert names(mul_realizer(dyadic_name(x), dyadic_name(y)), x * y)
