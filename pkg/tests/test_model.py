from functools import reduce
from math import gcd

import pytest
from hypothesis import given, strategies as st

from gcns.errors import GcdViolation, NonpositiveGenerator, ParameterDomain
from gcns.model import (b_sequence, build_cns_spec, build_spec, check_conditions,
                        cns_hypothesis, proper_divisors, quotient, s_from_b)


def test_example_50():
    spec = build_spec(50, 1, 4, (2, 2, 3))
    assert spec.B == (1, 3, 7, 22)
    assert spec.H == (5, 13, 29, 89)
    assert spec.A == (50, 251, 653, 1457, 4472)
    assert spec.k == 4


def test_example_243():
    spec = build_spec(243, 2, 3, (3, 4, 4))
    assert spec.B == (1, 4, 17, 69)
    assert spec.H == (4, 13, 52, 208)


def test_gcd_violation():
    with pytest.raises(GcdViolation):
        build_spec(4, 2, 1, (1,))


@pytest.mark.parametrize("args", [
    (1, 1, 1, (1,)),        # a < 2
    (4, 0, 1, (1,)),        # d = 0
    (4, 1, 0, (1,)),        # u < 1
    (4, 1, 1, ()),          # k < 2
    (4, 1, 1, (0,)),        # s_i < 1
    (4, 1, 1, (3, 2)),      # decreasing
])
def test_parameter_domain(args):
    with pytest.raises(ParameterDomain):
        build_spec(*args)


def test_validation_order():
    # structural problems win over gcd, gcd wins over positivity
    with pytest.raises(ParameterDomain):
        build_spec(4, 2, 0, (1,))
    with pytest.raises(GcdViolation):
        build_spec(4, -2, 1, (1,))


def test_nonpositive_generator():
    # h_1*a + d*b_1 = 2*2 - 3 = 1
    with pytest.raises(NonpositiveGenerator):
        build_spec(2, -3, 1, (1,))


def test_cns_examples():
    spec = build_cns_spec(5, 1, 2, 2)
    assert (spec.u, spec.B, spec.H, spec.A) == (1, (1, 3), (2, 4), (5, 11, 23))
    spec = build_cns_spec(7, -1, 3, 2)
    assert (spec.u, spec.B, spec.H, spec.A) == (2, (1, 4), (3, 9), (7, 20, 59))
    assert build_cns_spec(2, 1, 2, 2).a == 2
    with pytest.raises(ParameterDomain):
        build_cns_spec(5, 1, 1, 2)
    with pytest.raises(ParameterDomain):
        build_cns_spec(5, 1, 2, 1)


def test_check_conditions_examples():
    rep = check_conditions(build_spec(50, 1, 4, (2, 2, 3)), 5)
    assert rep.monotonicity_ok and rep.frobenius_ok and not rep.cns
    assert len(rep.reasons) == 1

    rep = check_conditions(build_spec(2, -1, 1, (1,)), 1)
    assert rep.monotonicity_ok and rep.frobenius_ok

    rep = check_conditions(build_cns_spec(9, 2, 3, 3), 3)
    assert rep.cns and rep.frobenius_ok and rep.reasons == ()


def test_check_conditions_failures():
    spec = build_spec(6, 1, 1, (3,))
    rep = check_conditions(spec, 2)
    assert rep.monotonicity_ok and not rep.frobenius_ok
    # d < 0 needs a + p*d >= 0: 10 - 5*3 < 0
    rep = check_conditions(build_spec(10, -3, 2, (2,)), 5)
    assert rep.monotonicity_ok and not rep.frobenius_ok
    assert any("a + p*d" in r for r in rep.reasons)
    # u*a + d + k - 2 = 4 - 1 + 1 = 4 < 2 + 3
    rep = check_conditions(build_spec(4, -1, 1, (2, 3)), 2)
    assert not rep.monotonicity_ok and not rep.frobenius_ok


@pytest.mark.parametrize("p", [50, 3, 0, -5])
def test_check_conditions_bad_p(p):
    with pytest.raises(ParameterDomain):
        check_conditions(build_spec(50, 1, 4, (2, 2, 3)), p)


def test_quotient():
    qs = quotient(build_spec(50, 1, 4, (2, 2, 3)), 5)
    assert qs.q == 10
    with pytest.raises(ParameterDomain):
        quotient(qs.base, 50)


def test_s_from_b():
    assert s_from_b((1, 3, 10)) == (2, 3)
    for bad in [(2, 3), (1, 4, 10), (1, 5, 11), (1,)]:
        with pytest.raises(ParameterDomain):
            s_from_b(bad)


def test_proper_divisors():
    assert proper_divisors(12) == [1, 2, 3, 4, 6]
    assert proper_divisors(7) == [1]


def test_cns_hypothesis_exact():
    assert cns_hypothesis(3, 1, 2, 4)           # boundary: 3 >= 3
    assert not cns_hypothesis(2, 1, 2, 4)
    assert cns_hypothesis(3, 2, 3, 4)           # 3 >= 2.5
    assert not cns_hypothesis(2, 2, 3, 4)


steps = st.lists(st.integers(1, 6), min_size=1, max_size=4).map(sorted)


@given(st.integers(2, 300), st.integers(-20, 20), st.integers(1, 8), steps)
def test_spec_invariants(a, d, u, s):
    try:
        spec = build_spec(a, d, u, s)
    except (GcdViolation, NonpositiveGenerator, ParameterDomain):
        return
    assert all(x < y for x, y in zip(spec.B, spec.B[1:]))
    assert reduce(gcd, spec.A) == 1
    assert all(g > 0 for g in spec.A)
    assert b_sequence(spec.s) == spec.B
    assert s_from_b(spec.B) == spec.s
    assert spec.H == tuple(u * b + 1 for b in spec.B)


@given(st.integers(2, 200), st.integers(1, 30), st.integers(2, 6), st.integers(2, 5))
def test_cns_closed_form(a, d, b, k):
    if gcd(a, d) != 1:
        return
    spec = build_cns_spec(a, d, b, k)
    expected = (a,) + tuple(b**i * a + (b**i - 1) // (b - 1) * d for i in range(1, k + 1))
    assert spec.A == expected
    assert check_conditions(spec, 1).cns
