import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bressoud.errors import DegenerateExponent, InvalidParams
from bressoud.families import is_in_A0bar, is_in_Bj_classical
from bressoud.params import Family, FamilyParams
from bressoud.qseries import (
    TruncatedSeries,
    gf_A0bar,
    gf_B0bar_product,
    gf_Bj,
    product_factor,
    series_inv,
    series_mul,
)
from bressoud.verify import count_family, enumerate_overpartitions, enumerate_partitions


def partitions_brute(n):
    """p(n) by listing nonincreasing tuples."""

    def rec(rest, cap):
        if rest == 0:
            return 1
        return sum(rec(rest - x, x) for x in range(1, min(rest, cap) + 1))

    return rec(n, n)


def distinct_multiples(n, eta):
    sizes = range(eta, n + 1, eta)
    return sum(
        1
        for r in range(len(sizes) + 1)
        for combo in itertools.combinations(sizes, r)
        if sum(combo) == n
    )


class TestProductFactor:
    def test_distinct_multiples_of_ten(self):
        s = product_factor(1, 10, 10, 30)
        assert {d: c for d, c in enumerate(s.coeffs) if c} == {0: 1, 10: 1, 20: 1, 30: 2}
        assert list(s.coeffs) == [distinct_multiples(n, 10) for n in range(31)]

    def test_euler_reciprocal(self):
        inv = product_factor(-1, 1, 1, 5).inv()
        assert list(inv.coeffs) == [1, 1, 2, 3, 5, 7]
        big = product_factor(-1, 1, 1, 25).inv()
        assert list(big.coeffs) == [partitions_brute(n) for n in range(26)]

    def test_bound_zero(self):
        assert product_factor(1, 4, 3, 0).coeffs == (1,)

    def test_degenerate(self):
        with pytest.raises(DegenerateExponent):
            product_factor(-1, 0, 10, 10)
        with pytest.raises(DegenerateExponent):
            product_factor(1, 3, 0, 10)
        with pytest.raises(ValueError):
            product_factor(2, 3, 3, 10)


class TestArithmetic:
    def test_unit_law(self):
        a = TruncatedSeries.from_list([1, -1], 12)
        assert a * a.inv() == TruncatedSeries.one(12)

    def test_identity(self):
        s = TruncatedSeries.from_list([3, 0, -2, 7])
        assert series_mul(TruncatedSeries.one(3), s) == s

    def test_errors(self):
        with pytest.raises(ValueError):
            series_mul(TruncatedSeries.one(2), TruncatedSeries.one(3))
        with pytest.raises(ValueError):
            series_inv(TruncatedSeries.from_list([2, 1]))

    def test_truncation_and_indexing(self):
        s = TruncatedSeries(2, (1, 2, 3, 4, 5))
        assert s.coeffs == (1, 2, 3)
        assert s[5] == 0 and s[-1] == 0 and s[2] == 3

    def test_big_coefficients_are_exact(self):
        s = product_factor(-1, 1, 1, 300).inv()
        assert s[300] == 9253082936723602

    def test_renderings(self):
        s = TruncatedSeries.from_list([1, 0, -2])
        assert json.loads(s.to_json()) == [1, 0, -2]
        assert s.to_csv() == "degree,coefficient\n0,1\n1,0\n2,-2\n"

    @given(st.integers(0, 20).flatmap(
        lambda n: st.tuples(st.sampled_from([1, -1]), st.lists(st.integers(-50, 50), min_size=n, max_size=n))
    ))
    def test_inverse_property(self, data):
        c0, rest = data
        a = TruncatedSeries.from_list([c0] + rest)
        assert a * a.inv() == TruncatedSeries.one(a.bound)
        assert a.inv().inv() == a


P_B1 = FamilyParams.of((3, 7), 10, 4, 3)


class TestGfBj:
    def test_low_coefficients(self):
        s = gf_Bj(P_B1, 1, 40)
        assert s[0] == 1 and s[3] == 1
        brute = [p for p in enumerate_partitions(3, P_B1.residues, 10) if is_in_Bj_classical(p, P_B1, 1)]
        assert brute == [(3,)]

    @pytest.mark.parametrize("j", [0, 1])
    def test_matches_enumeration(self, j):
        s = gf_Bj(P_B1, j, 40)
        assert list(s.coeffs) == [count_family(Family.Bj, P_B1.with_j(j), n) for n in range(41)]

    def test_degenerate_exponent(self):
        with pytest.raises(DegenerateExponent):
            gf_Bj(FamilyParams.of((), 10, 3, 0), 1, 20)

    def test_half_integer_exponent(self):
        # lambda odd with odd eta is already rejected by parameter validation
        with pytest.raises(InvalidParams):
            gf_Bj(FamilyParams.of((1, 2, 3), 5, 4, 3), 0, 20)


class TestGfA0bar:
    def test_coefficients(self, p37):
        s = gf_A0bar(p37, 40)
        assert s[0] == 1 and s[10] == 3
        at10 = [pi.render() for pi in enumerate_overpartitions(10, p37.residues, 10) if is_in_A0bar(pi, p37)]
        assert sorted(at10) == sorted(["10", "10~", "7~,3~"])

    @pytest.mark.parametrize("which", ["p37", "p357"])
    def test_matches_enumeration(self, which, request):
        p = request.getfixturevalue(which)
        s = gf_A0bar(p, 40)
        assert list(s.coeffs) == [count_family(Family.A0bar, p, n) for n in range(41)]


def test_factorisation_matches_enumeration(p37):
    s = gf_B0bar_product(p37, 40)
    assert list(s.coeffs) == [count_family(Family.B0bar, p37, n) for n in range(41)]
