import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recurseq.errors import BoundExceeded, CapExceeded, DomainError
from recurseq.exact_algebra import IntPoly
from recurseq.modular import (
    is_null_divisor,
    period_mod,
    prime_index,
    residues,
    unbounded_on_classes,
)
from recurseq.recurrences import IntPolynomialSequence, LinearRecurrence, NonlinearRecurrence, evaluate

from oracles import iterate, naive_period

FIB = LinearRecurrence((1, 1), (0, 1))


@st.composite
def linear(draw, k_max=3, bound=9):
    k = draw(st.integers(1, k_max))
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=k, max_size=k))
    if coeffs[-1] == 0:
        coeffs[-1] = 1
    initial = draw(st.lists(st.integers(-bound, bound), min_size=k, max_size=k))
    return LinearRecurrence(tuple(coeffs), tuple(initial))


@pytest.mark.parametrize("m, pi", [(2, 3), (3, 8), (4, 6), (5, 20), (7, 16), (10, 60)])
def test_pisano(m, pi):
    cert = period_mod(FIB, m)
    assert (cert.preperiod, cert.period) == (0, pi)
    fib = iterate((1, 1), (0, 1), 6 * pi)
    assert naive_period([a % m for a in fib]) == (0, pi)


def test_period_edge_cases():
    assert period_mod(FIB, 1).period == 1
    cert = period_mod(LinearRecurrence((2,), (1,)), 4)
    assert (cert.preperiod, cert.period) == (2, 1)
    with pytest.raises(DomainError):
        period_mod(FIB, 0)


def test_state_cap():
    with pytest.raises(BoundExceeded):
        period_mod(FIB, 10007, cap=100)
    with pytest.raises(BoundExceeded):
        period_mod(LinearRecurrence((2, 3), (1, 1)), 2**20 * 3, cap=50)


def test_env_state_cap(monkeypatch):
    monkeypatch.setenv("RECURSEQ_STATE_CAP", "10")
    with pytest.raises(BoundExceeded):
        period_mod(FIB, 1009)


@given(linear(), st.integers(2, 50))
@settings(max_examples=200, deadline=None)
def test_periodicity_and_minimality(rec, m):
    cert = period_mod(rec, m)
    sigma, pi = cert.preperiod, cert.period
    vals = residues(rec, m, sigma + 4 * pi + rec.order)
    for n in range(sigma, sigma + 3 * pi + 1):
        assert vals[n] == vals[n + pi]
    # state vectors: sigma and pi are minimal
    states = [tuple(vals[n : n + rec.order]) for n in range(sigma + 2 * pi + 1)]
    first = {}
    for n, s in enumerate(states):
        if s in first:
            assert (first[s], n - first[s]) == (sigma, pi)
            break
        first[s] = n
    if math.gcd(rec.coeffs[-1], m) == 1:
        assert sigma == 0


@given(linear(), st.integers(1, 12), st.integers(1, 6))
@settings(max_examples=100, deadline=None)
def test_residues_reduce_compatibly(rec, m2, factor):
    m1 = m2 * factor
    big = residues(rec, m1, 40)
    assert [r % m2 for r in big] == residues(rec, m2, 40)
    assert big == [a % m1 for a in evaluate(rec, 39)]
    c1, c2 = period_mod(rec, m1), period_mod(rec, m2)
    assert c1.period % c2.period == 0 and c2.preperiod <= c1.preperiod


def test_nonlinear_and_polynomial_periods_are_pure():
    rec = NonlinearRecurrence(1, 1, (((2,), 1),), (1, 1))
    for m in (2, 3, 10, 27, 64):
        cert = period_mod(rec, m)
        assert cert.preperiod == 0
        vals = [1, 1]
        while len(vals) < 2 * cert.period:
            vals.append((vals[-1] ** 2 + vals[-2]) % m)
        assert vals[: cert.period] == vals[cert.period : 2 * cert.period]
    sq = IntPolynomialSequence(IntPoly([1, 0, 1]))
    assert (period_mod(sq, 5).preperiod, period_mod(sq, 5).period) == (0, 5)


def test_null_divisor_examples():
    dbl = LinearRecurrence((2,), (1,))
    assert is_null_divisor(dbl, 4)
    assert not is_null_divisor(FIB, 2)
    assert is_null_divisor(FIB, 1)
    assert is_null_divisor(LinearRecurrence((2, 3), (0, 0)), 7)


def test_prime_index_examples():
    one = LinearRecurrence((1,), (1,))
    for p in (2, 3, 5, 7):
        assert prime_index(one, p) == 0
    assert prime_index(FIB, 2) == 0
    # a_n = 2 * 3^n: every term is exactly divisible by 2
    assert prime_index(LinearRecurrence((3,), (2,)), 2) == 1
    with pytest.raises(CapExceeded) as exc:
        prime_index(LinearRecurrence((2,), (4,)), 2)
    assert "GCD(r)=2" in exc.value.note


def test_prime_index_monotone():
    rng = random.Random(9)
    for _ in range(30):
        coeffs = (rng.choice([2, 4, 6, 1, 3]), rng.choice([2, 4, 8, 1]))
        rec = LinearRecurrence(coeffs, (rng.randint(0, 8), rng.randint(0, 8)))
        flags = [is_null_divisor(rec, 2**j) for j in range(1, 9)]
        for j in range(1, len(flags)):
            if flags[j]:
                assert flags[j - 1]


def test_unbounded_on_classes():
    fib = unbounded_on_classes(FIB, 2, 20)
    assert all(v >= 4181 for v in fib.maxima) and fib.all_exceed
    const = unbounded_on_classes(LinearRecurrence((1,), (3,)), 3, 30)
    assert const.maxima == (3, 3, 3)
    dgn = unbounded_on_classes(LinearRecurrence((0, 1), (0, 1)), 2, 40)
    assert dgn.maxima[0] == 0 and not dgn.all_exceed
