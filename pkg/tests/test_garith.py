"""Ground arithmetic: exact log isomorphism plus the order/absolute-value
axioms that everything upstream leans on."""

import math

import pytest
from hypothesis import given, strategies as st

from geomseq import (
    GNum,
    GUNIT,
    GZERO,
    GeometricZeroDivisor,
    NonPositiveValue,
    DomainError,
    gabs,
    gadd,
    gdiv,
    ginv,
    gmul,
    gpow,
    gsub,
    is_gzero,
    natural,
)

finite_logs = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)
nonzero_logs = finite_logs.filter(lambda v: abs(v) > 1e-6)


def g(log):
    return GNum(log)


class TestConstruction:
    def test_from_value_round_trip(self):
        x = GNum.from_value(6.0)
        assert x.log_value == math.log(6.0)
        assert x.value == pytest.approx(6.0, rel=1e-15)

    @pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, float("nan"), float("inf")])
    def test_from_value_rejects_nonpositive(self, bad):
        with pytest.raises(NonPositiveValue):
            GNum.from_value(bad)

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), float("-inf")])
    def test_from_log_rejects_nonfinite(self, bad):
        with pytest.raises(DomainError):
            GNum.from_log(bad)

    def test_value_overflows_to_inf(self):
        assert GNum(1000.0).value == float("inf")

    def test_render(self):
        assert GNum(2.0).render() == "e^2"
        assert GZERO.render() == "e^0"

    def test_constants(self):
        assert GZERO.log_value == 0.0
        assert GZERO.value == 1.0
        assert GUNIT.log_value == 1.0
        assert is_gzero(GZERO)
        assert not is_gzero(GUNIT)

    def test_natural(self):
        assert natural(3).log_value == 3.0
        assert gmul(natural(2), GNum(5.0)).log_value == 10.0


class TestFrozenExamples:
    # ground-truth values checked by hand against the generator exp
    def test_add_is_product(self):
        assert gadd(GNum.from_value(2.0), GNum.from_value(3.0)).value == pytest.approx(6.0)

    def test_sub_is_quotient(self):
        assert gsub(GNum.from_value(6.0), GNum.from_value(3.0)).value == pytest.approx(2.0)

    def test_mul_is_log_product(self):
        got = gmul(GNum.from_value(2.0), GNum.from_value(2.0))
        assert got.log_value == pytest.approx(math.log(2.0) ** 2, rel=1e-15)

    def test_inverse_of_e_squared(self):
        assert ginv(GNum(2.0)).log_value == 0.5

    def test_third_power_of_e_squared(self):
        assert gpow(GNum(2.0), 3).log_value == 8.0

    def test_power_zero_is_unit(self):
        assert gpow(GNum(7.0), 0) == GUNIT

    def test_abs_of_reciprocal(self):
        assert gabs(GNum(-3.0)).log_value == 3.0


class TestGuards:
    def test_gdiv_by_geometric_zero(self):
        with pytest.raises(GeometricZeroDivisor):
            gdiv(GNum(4.0), GZERO)

    def test_gdiv_by_near_zero(self):
        with pytest.raises(GeometricZeroDivisor):
            gdiv(GNum(4.0), GNum(1e-13))

    def test_ginv_of_geometric_zero(self):
        with pytest.raises(GeometricZeroDivisor):
            ginv(GZERO)

    def test_gpow_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            gpow(GNum(2.0), -1)


class TestLogIsomorphism:
    """The four operations ARE the float operations on logs, bitwise."""

    @given(finite_logs, finite_logs)
    def test_add(self, a, b):
        assert gadd(g(a), g(b)).log_value == a + b

    @given(finite_logs, finite_logs)
    def test_sub(self, a, b):
        assert gsub(g(a), g(b)).log_value == a - b

    @given(finite_logs, finite_logs)
    def test_mul(self, a, b):
        assert gmul(g(a), g(b)).log_value == a * b

    @given(finite_logs, nonzero_logs)
    def test_div(self, a, b):
        assert gdiv(g(a), g(b)).log_value == a / b


class TestAxioms:
    @given(finite_logs, finite_logs)
    def test_add_commutes(self, a, b):
        assert gadd(g(a), g(b)) == gadd(g(b), g(a))

    @given(finite_logs, finite_logs, finite_logs)
    def test_add_associates(self, a, b, c):
        lhs = gadd(gadd(g(a), g(b)), g(c)).log_value
        rhs = gadd(g(a), gadd(g(b), g(c))).log_value
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(rhs))

    @given(finite_logs)
    def test_zero_is_identity(self, a):
        assert gadd(g(a), GZERO) == g(a)

    @given(finite_logs)
    def test_abs_at_least_geometric_zero(self, a):
        assert gabs(g(a)).log_value >= 0.0

    @given(finite_logs, finite_logs)
    def test_triangle(self, a, b):
        assert gabs(gadd(g(a), g(b))) <= gadd(gabs(g(a)), gabs(g(b)))

    @given(finite_logs, finite_logs)
    def test_sub_antisymmetry(self, a, b):
        assert gsub(GZERO, gsub(g(a), g(b))) == gsub(g(b), g(a))

    @given(finite_logs, finite_logs)
    def test_abs_multiplicative(self, a, b):
        assert gabs(gmul(g(a), g(b))) == gmul(gabs(g(a)), gabs(g(b)))

    @given(nonzero_logs)
    def test_mul_by_inverse_is_unit(self, a):
        got = gmul(g(a), ginv(g(a))).log_value
        assert abs(got - 1.0) <= 1e-12

    @given(finite_logs)
    def test_unit_is_mul_identity(self, a):
        assert gmul(g(a), GUNIT) == g(a)

    @given(st.integers(min_value=1, max_value=20), st.floats(min_value=-2.0, max_value=2.0))
    def test_n_fold_add_is_natural_scale(self, n, a):
        acc = GZERO
        for _ in range(n):
            acc = gadd(acc, g(a))
        want = gmul(natural(n), g(a)).log_value
        assert abs(acc.log_value - want) <= 1e-12 * max(1.0, abs(want))

    @given(finite_logs)
    def test_abs_via_square_root_of_square(self, a):
        # sqrt((ln x)^2) recovers |ln x| up to a rounding step
        via_square = math.sqrt(gpow(g(a), 2).log_value)
        assert abs(via_square - gabs(g(a)).log_value) <= 1e-12 * max(1.0, abs(a))


class TestOrdering:
    def test_comparisons_follow_logs(self):
        assert GNum(1.0) < GNum(2.0)
        assert GNum(2.0) <= GNum(2.0)
        assert GNum(3.0) > GZERO
        assert GNum(-1.0) < GZERO

    def test_sorting(self):
        xs = [GNum(2.0), GNum(-1.0), GZERO]
        assert sorted(xs) == [GNum(-1.0), GZERO, GNum(2.0)]
