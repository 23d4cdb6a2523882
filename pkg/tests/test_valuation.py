import random
from fractions import Fraction

import pytest

from newtonbench.valuation import (
    ExtVal,
    INFINITY,
    Prime,
    TWO,
    ValuationError,
    format_rational,
    parse_rational,
    ultrametric_sum_bound,
    val_p,
)


def test_val_p_examples():
    assert val_p(48, 2) == 4
    assert val_p(Fraction(5, 8), 2) == -3
    assert val_p(0, 2) == INFINITY
    assert val_p(7, 3) == 0


def test_val_p_unit_values():
    for p in (2, 3, 5, 11):
        prime = Prime(p)
        assert val_p(1, prime) == 0
        assert val_p(p, prime) == 1
        assert val_p(Fraction(1, p), prime) == -1


def test_val_p_huge_power_of_two():
    assert val_p(1 << 100000, TWO) == 100000


def test_val_p_multiplicative_random():
    rng = random.Random(1729)
    primes = [Prime(2), Prime(3), Prime(5)]
    for _ in range(300):
        p = rng.choice(primes)
        x = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        y = Fraction(rng.randint(-500, 500), rng.randint(1, 500))
        if x == 0 or y == 0:
            continue
        assert val_p(x * y, p) == val_p(x, p) + val_p(y, p)


def test_val_p_ultrametric_random():
    rng = random.Random(23)
    for _ in range(300):
        x = Fraction(rng.randint(-200, 200), rng.randint(1, 64))
        y = Fraction(rng.randint(-200, 200), rng.randint(1, 64))
        vx, vy = val_p(x), val_p(y)
        assert val_p(x + y) >= min(vx, vy)
        if vx != vy:
            assert val_p(x + y) == min(vx, vy)


def test_ultrametric_sum_bound():
    assert ultrametric_sum_bound([ExtVal(2), ExtVal(2)]) == 2
    assert val_p(4 + 4) == 3  # equal minimum may strictly exceed the bound
    assert ultrametric_sum_bound([ExtVal(2), ExtVal(3)]) == 2
    assert val_p(4 + 8) == 2  # distinct minimum forces equality
    assert ultrametric_sum_bound([INFINITY, ExtVal(5)]) == 5
    with pytest.raises(ValuationError):
        ultrametric_sum_bound([])


def test_extval_ordering():
    assert INFINITY > ExtVal(10**100)
    assert not INFINITY < INFINITY
    assert INFINITY >= INFINITY
    assert ExtVal(Fraction(1, 2)) < ExtVal(1)
    assert sorted([INFINITY, ExtVal(3), ExtVal(-1)])[-1] == INFINITY


def test_extval_arithmetic():
    assert ExtVal(2) + ExtVal(3) == 5
    assert ExtVal(2) + INFINITY == INFINITY
    assert INFINITY + INFINITY == INFINITY
    assert -ExtVal(Fraction(3, 4)) == Fraction(-3, 4)
    assert INFINITY * 7 == INFINITY
    assert ExtVal(3) * 2 == 6
    with pytest.raises(ValuationError):
        -INFINITY
    with pytest.raises(ValuationError):
        INFINITY * 0


def test_prime_validation():
    Prime(2)
    Prime(97)
    Prime(2**31 - 1)
    for bad in (0, 1, 4, 9, 100, -7):
        with pytest.raises(ValuationError):
            Prime(bad)


def test_serialization():
    assert format_rational(Fraction(5, 8)) == "5/8"
    assert format_rational(-3) == "-3"
    assert parse_rational("-17/4") == Fraction(-17, 4)
    assert ExtVal(Fraction(-17, 4)).to_str() == "-17/4"
    assert INFINITY.to_str() == "inf"
    assert ExtVal.from_str("inf") == INFINITY
    assert ExtVal.from_str("5/8") == Fraction(5, 8)
