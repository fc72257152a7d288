import random

import pytest
from hypothesis import given, settings, strategies as st

from ringlab.domains import Fp, QQ, ZZ
from ringlab.errors import (
    InseparableCase,
    NotEnoughVariables,
    UnsupportedDomain,
    ZeroIdeal,
    ZeroPolynomial,
)
from ringlab.parsing import parse_polynomial
from ringlab.polyideals import (
    EQUAL_WITHIN_BOUND,
    IdealPresentation,
    MEMBER,
    NON_MEMBER,
    RIGHT_NOT_IN_LEFT,
    UNKNOWN,
    divmod_univariate,
    gcd_univariate,
    hbt_extract_univariate,
    ideal_equal_bounded,
    membership_bounded,
    radical_univariate,
    strict_chain_demo,
)
from ringlab.polynomials import Polynomial, PolyRing

RQ1 = PolyRing(QQ, ("x",))
RF5 = PolyRing(Fp(5), ("x",))
RF3_2 = PolyRing(Fp(3), ("x", "y"))
RF2_2 = PolyRing(Fp(2), ("x", "y"))


def q1(t):
    return parse_polynomial(t, RQ1)


def f5(t):
    return parse_polynomial(t, RF5)


def test_member_with_factor_cofactor():
    ideal = IdealPresentation(RQ1, (q1("x-1"),))
    cert = membership_bounded(q1("x^2-1"), ideal, 1)
    assert cert.verdict == MEMBER
    assert cert.cofactors == (q1("x+1"),)
    assert cert.verify(q1("x^2-1"), ideal)


def test_one_not_in_proper_ideal_over_f5():
    ideal = IdealPresentation(RF5, (f5("x"),))
    for bound in (0, 1, 4):
        cert = membership_bounded(f5("1"), ideal, bound)
        assert cert.verdict == NON_MEMBER
        assert [w.value for w in cert.witness] == [0]
        assert cert.verify(f5("1"), ideal)


def test_y_not_in_ideal_of_x():
    ring = PolyRing(Fp(3), ("x", "y"))
    ideal = IdealPresentation(ring, (parse_polynomial("x", ring),))
    cert = membership_bounded(parse_polynomial("y", ring), ideal, 3)
    assert cert.verdict == NON_MEMBER
    assert all(g.evaluate(cert.witness).is_zero for g in ideal.generators)
    assert not parse_polynomial("y", ring).evaluate(cert.witness).is_zero


def test_zero_ideal_membership():
    empty = IdealPresentation(RQ1, ())
    assert membership_bounded(Polynomial.zero(RQ1), empty, 0).verdict == MEMBER
    cert = membership_bounded(q1("x"), empty, 2)
    assert cert.verdict == NON_MEMBER  # witness on the integer grid


def test_unknown_verdict_over_q_without_grid_witness():
    # x is not in (x^2+1), but x^2+1 never vanishes on the rational grid
    ideal = IdealPresentation(RQ1, (q1("x^2+1"),))
    cert = membership_bounded(q1("x"), ideal, 2)
    assert cert.verdict == UNKNOWN
    assert cert.bound == 2


def test_integer_coefficients_rejected():
    rz = PolyRing(ZZ, ("x",))
    ideal = IdealPresentation(rz, (parse_polynomial("x", rz),))
    with pytest.raises(UnsupportedDomain):
        membership_bounded(parse_polynomial("x^2", rz), ideal, 1)


def test_membership_monotone_in_bound():
    ideal = IdealPresentation(RQ1, (q1("x-1"),))
    f = q1("x^3-1")
    for bound in (2, 3, 5):
        assert membership_bounded(f, ideal, bound).verdict == MEMBER
    assert membership_bounded(f, ideal, 0).verdict == UNKNOWN


def test_unit_ideal_spreads_membership():
    # 1 is a bounded member, so everything of small degree follows it in
    ideal = IdealPresentation(RQ1, (q1("x"), q1("x+1")))
    assert membership_bounded(q1("1"), ideal, 0).verdict == MEMBER
    for text in ("x^2", "x^3 - x + 2", "7"):
        f = q1(text)
        bound = 0 + max(0, int(f.total_degree()))
        assert membership_bounded(f, ideal, bound).verdict == MEMBER


def test_ideal_equality_via_gcd():
    left = IdealPresentation(RQ1, (q1("x^2-1"), q1("x^3-1")))
    right = IdealPresentation(RQ1, (q1("x-1"),))
    # gcd oracle: euclid on coefficient lists gives x - 1, so the ideals match
    assert ideal_equal_bounded(left, right, 3).kind == EQUAL_WITHIN_BOUND


def test_ideal_inequality_with_witness():
    left = IdealPresentation(RF2_2, (parse_polynomial("x", RF2_2),))
    right = IdealPresentation(RF2_2, (parse_polynomial("x", RF2_2),
                                      parse_polynomial("y", RF2_2)))
    cmp = ideal_equal_bounded(left, right, 2)
    assert cmp.kind == RIGHT_NOT_IN_LEFT
    assert cmp.offending == parse_polynomial("y", RF2_2)
    assert cmp.certificate.verdict == NON_MEMBER


def test_ideal_equal_to_itself_at_bound_zero():
    f = q1("x^2+3")
    ideal = IdealPresentation(RQ1, (f,))
    assert ideal_equal_bounded(ideal, ideal, 0).kind == EQUAL_WITHIN_BOUND


# -- univariate division, gcd, radical ---------------------------------------


def test_divmod_univariate():
    quo, rem = divmod_univariate(q1("x^3-1"), q1("x-1"))
    assert quo == q1("x^2+x+1") and rem.is_zero
    quo, rem = divmod_univariate(q1("x^2"), q1("x+1"))
    assert quo == q1("x-1") and rem == q1("1")
    with pytest.raises(ZeroPolynomial):
        divmod_univariate(q1("x"), Polynomial.zero(RQ1))


def test_gcd_univariate_matches_coefficient_list_euclid():
    def list_gcd(a, b, p=None):
        # independent oracle on dense coefficient lists (low degree first)
        from fractions import Fraction

        def norm(v):
            while v and v[-1] == 0:
                v.pop()
            return v

        def rem(f, g):
            f = f[:]
            inv = (pow(g[-1], -1, p) if p else Fraction(1) / g[-1])
            while len(f) >= len(g) and f:
                c = f[-1] * inv
                s = len(f) - len(g)
                for i, gc in enumerate(g):
                    f[s + i] = f[s + i] - c * gc
                    if p:
                        f[s + i] %= p
                norm(f)
            return f

        a, b = norm(a[:]), norm(b[:])
        while b:
            a, b = b, rem(a, b)
        if a:
            inv = (pow(a[-1], -1, p) if p else Fraction(1) / a[-1])
            a = [c * inv % p if p else c * inv for c in a]
        return a

    pairs = [("x^2-1", "x^3-1"), ("x^2", "x^3+x"), ("x^4-1", "x^2+1"), ("3", "x")]
    for ta, tb in pairs:
        got = gcd_univariate(q1(ta), q1(tb))
        la = [q1(ta).terms.get((i,), 0) for i in range(6)]
        lb = [q1(tb).terms.get((i,), 0) for i in range(6)]
        expected = list_gcd(la, lb)
        assert [got.terms.get((i,), 0) for i in range(6)] == (expected + [0] * 6)[:6]


def test_radical_examples():
    assert radical_univariate(q1("x^2")) == q1("x")
    assert radical_univariate(q1("x")) == q1("x")
    assert radical_univariate(q1("(x^2+1)^2")) == q1("x^2+1")
    assert radical_univariate(q1("5")) == q1("1")


def test_radical_errors():
    with pytest.raises(ZeroPolynomial):
        radical_univariate(Polynomial.zero(RQ1))
    with pytest.raises(InseparableCase):
        radical_univariate(f5("x^5"))  # derivative vanishes identically


@settings(max_examples=80)
@given(st.dictionaries(st.integers(0, 5),
                       st.fractions(min_value=-5, max_value=5, max_denominator=3),
                       min_size=1, max_size=4))
def test_radical_idempotent_and_absorbing(coeffs):
    f = Polynomial(RQ1, {(e,): c for e, c in coeffs.items()})
    if f.is_zero:
        return
    r = radical_univariate(f)
    assert radical_univariate(r) == r
    # f always sits inside (radical(f)) at bound deg f
    ideal = IdealPresentation(RQ1, (r,))
    bound = max(0, int(f.total_degree()))
    assert membership_bounded(f, ideal, bound).verdict == MEMBER


# -- the chain demo and the extraction demonstrator ---------------------------


def test_chain_demo_single_step():
    ring = PolyRing(QQ, ("x1", "x2"))
    steps = strict_chain_demo(1, ring)
    assert len(steps) == 1
    assert steps[0].new_variable == "x2"
    assert [w.value for w in steps[0].certificate.witness] == [0, 1]


def test_chain_demo_three_steps_f2():
    ring = PolyRing(Fp(2), ("x1", "x2", "x3", "x4"))
    steps = strict_chain_demo(3, ring)
    assert len(steps) == 3
    for s in steps:
        ideal = IdealPresentation(
            ring, tuple(Polynomial.variable(ring, v) for v in s.ideal_vars))
        assert s.certificate.verify(Polynomial.variable(ring, s.new_variable), ideal)


def test_chain_demo_zero_is_vacuous():
    assert strict_chain_demo(0, PolyRing(QQ, ("x1",))) == []


def test_chain_demo_needs_variables():
    with pytest.raises(NotEnoughVariables):
        strict_chain_demo(3, PolyRing(QQ, ("x1", "x2")))


def test_hbt_extraction_examples():
    res = hbt_extract_univariate(IdealPresentation(RF5, (f5("x^2-1"), f5("x^3-1"))))
    assert res.extracted == f5("x-1")
    assert res.leading_profile == (False, True, True, True)
    assert res.verified_equal

    res = hbt_extract_univariate(IdealPresentation(RF5, (f5("x"),)))
    assert res.extracted == f5("x")
    assert res.leading_profile == (False, True)
    assert res.verified_equal

    res = hbt_extract_univariate(IdealPresentation(RF5, (f5("2"), f5("x"))))
    assert res.extracted == f5("1")
    assert res.leading_profile == (True, True)
    assert res.verified_equal


def test_hbt_rejects_zero_ideal_and_wrong_domains():
    with pytest.raises(ZeroIdeal):
        hbt_extract_univariate(IdealPresentation(RF5, ()))
    with pytest.raises(UnsupportedDomain):
        hbt_extract_univariate(IdealPresentation(RQ1, (q1("x"),)))


def test_hbt_extracted_divides_every_generator():
    rng = random.Random(9)
    for _ in range(50):
        gens = []
        for _ in range(rng.randint(1, 3)):
            coeffs = {(e,): rng.randrange(5) for e in range(rng.randint(1, 4))}
            g = Polynomial(RF5, coeffs)
            if not g.is_zero:
                gens.append(g)
        if not gens:
            continue
        res = hbt_extract_univariate(IdealPresentation(RF5, tuple(gens)))
        for g in gens:
            _, rem = divmod_univariate(g, res.extracted)
            assert rem.is_zero
