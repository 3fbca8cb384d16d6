import math
import random

import pytest

from kflag.polyring import Polynomial, PolynomialParseError, VarCountMismatchError


def P(text, num_vars):
    return Polynomial.parse(text, num_vars)


def random_poly(rng, num_vars, max_terms=6, max_exp=3, max_coeff=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(num_vars))
        terms[exps] = terms.get(exps, 0) + rng.randint(-max_coeff, max_coeff)
    return Polynomial(num_vars, terms)


def test_construction_drops_zeros():
    p = Polynomial(2, {(1, 0): 0, (0, 1): 3})
    assert p.terms == {(0, 1): 3}
    assert Polynomial(2).is_zero()
    assert not Polynomial(2)


def test_construction_checks_arity():
    with pytest.raises(VarCountMismatchError):
        Polynomial(2, {(1,): 1})


def test_add_examples():
    f = P("y1^2 + 3*y1 - 2", 1)
    assert f + Polynomial.zero(1) == f
    assert P("y1", 1) + P("-y1", 1) == 0
    assert P("y1 + 1", 1) + P("1 - y1", 1) == 2


def test_mul_examples():
    f = P("y1*y2 - 7", 2)
    assert f * Polynomial.one(2) == f
    assert P("y1 + 1", 1) * P("1 - y1", 1) == P("1 - y1^2", 1)
    assert P("y1 + 1", 1) ** 2 == P("y1^2 + 2*y1 + 1", 1)


def test_int_mixing():
    f = P("y1 + 1", 1)
    assert 2 * f - 1 == P("2*y1 + 1", 1)
    assert (1 - f) == P("-y1", 1)
    assert f + 0 == f


def test_arity_mismatch_raises():
    with pytest.raises(VarCountMismatchError):
        P("y1", 1) + P("y1", 2)
    with pytest.raises(VarCountMismatchError):
        P("y1", 1) * P("y1", 2)


def test_truncate_examples():
    f = P("y1^2 + y1 + 1", 1)
    assert f.truncate(1) == P("y1 + 1", 1)
    assert f.truncate(f.degree()) == f
    assert P("y1*y2", 2).truncate(1) == 0


def test_truncate_properties():
    rng = random.Random(1)
    for _ in range(50):
        f = random_poly(rng, 3)
        g = random_poly(rng, 3)
        n = rng.randint(0, 6)
        n2 = rng.randint(0, 6)
        assert f.truncate(n).truncate(n2) == f.truncate(min(n, n2))
        assert (f + g).truncate(n) == f.truncate(n) + g.truncate(n)


def test_coefficients_in_examples():
    assert Polynomial.constant(3, 1).coefficients_in(1) == [Polynomial.constant(3, 1)]
    f = P("y1 + y1*y2", 2)
    assert f.coefficients_in(2) == [P("y1", 2), P("y1", 2)]
    assert P("y2^2", 2).coefficients_in(2) == [
        Polynomial.zero(2),
        Polynomial.zero(2),
        Polynomial.one(2),
    ]


def test_coefficients_in_reassembles():
    rng = random.Random(2)
    for _ in range(40):
        f = random_poly(rng, 3)
        k = rng.randint(1, 3)
        yk = Polynomial.variable(k, 3)
        total = Polynomial.zero(3)
        for i, h in enumerate(f.coefficients_in(k)):
            assert h.coefficients_in(k)[1:] == []  # free of yk
            total = total + h * yk**i
        assert total == f


def test_ring_axioms():
    rng = random.Random(3)
    for _ in range(40):
        f = random_poly(rng, 2)
        g = random_poly(rng, 2)
        h = random_poly(rng, 2)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_exact_big_integers():
    f = (P("y1 + 2", 1)) ** 40
    assert f.coefficient((13,)) == math.comb(40, 13) * 2**27
    assert f.evaluate((1,)) == 3**40


def test_degree_and_homogeneity():
    assert Polynomial.zero(2).degree() == -1
    assert Polynomial.zero(2).is_homogeneous()
    assert P("y1*y2 + y2^2", 2).is_homogeneous()
    assert not P("y1 + 1", 1).is_homogeneous()
    assert P("y1^2*y2", 2).degree() == 3


def test_canonical_string():
    f = P("1 - 3*y3 + y1*y2^2", 3)
    assert str(f) == "y1*y2^2 - 3*y3 + 1"
    assert str(Polynomial.zero(2)) == "0"
    assert str(P("-y1 - 1", 1)) == "-y1 - 1"


def test_parse_round_trip():
    rng = random.Random(4)
    for _ in range(40):
        f = random_poly(rng, 3)
        assert Polynomial.parse(str(f), 3) == f


def test_parse_parentheses_and_powers():
    assert P("(y1 + 1)^2 * (1 - y1)", 1) == P("1 + y1 - y1^2 - y1^3", 1)
    assert P("-(y1 - 2)", 1) == P("2 - y1", 1)


def test_parse_errors():
    for bad in ("y", "y1 +", "1 ** 2", "y9", "(y1", "2 ^ y1"):
        with pytest.raises(PolynomialParseError):
            Polynomial.parse(bad, 2)


def test_restrict_extend():
    f = P("y1*y2 + 1", 3)
    assert f.restrict(2).num_vars == 2
    assert f.restrict(2).extend(3) == f
    with pytest.raises(VarCountMismatchError):
        P("y3", 3).restrict(2)


def test_evaluate():
    f = P("y1^2*y2 - y2 + 4", 2)
    assert f.evaluate((3, 2)) == 18 - 2 + 4
    assert Polynomial.one(0).evaluate(()) == 1


def test_pow_zero():
    f = P("y1 + 5", 1)
    assert f**0 == 1
    assert Polynomial.zero(1) ** 0 == 1
