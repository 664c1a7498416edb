from fractions import Fraction
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclic_moduli import (
    CoeffForm,
    ChartDegenerate,
    Divisor,
    IrrationalRoots,
    ProjPoint,
    Section,
    from_coeffs,
    mul,
    reduce_top,
    to_coeffs,
)

from conftest import random_nonzero_scale

P = ProjPoint.finite
INF = ProjPoint.infinity()


def sec(scale, *values):
    return Section.of(scale, Divisor.from_points([P(v) if v != "inf" else INF for v in values]))


# --- products -------------------------------------------------------------


def test_mul_definition():
    out = mul(sec(2, 0), sec(3, 1))
    assert out == sec(6, 0, 1)
    assert out.ambient_degree == 2


def test_mul_zero_absorbs():
    z = mul(Section.zero(3), sec(5, 1, 2))
    assert z.is_zero and z.ambient_degree == 5


sections = st.builds(
    lambda scale, values: sec(scale, *values) if scale != 0 else Section.zero(len(values)),
    st.sampled_from([1, 2, -1, Fraction(1, 2), 0]),
    st.lists(st.integers(-3, 3) | st.just("inf"), max_size=4),
)


@given(sections, sections, sections)
def test_mul_commutative_associative(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    if not (a.is_zero or b.is_zero):
        assert mul(a, b).zeros.degree == a.zeros.degree + b.zeros.degree


# --- coefficient conversion ------------------------------------------------


def test_to_coeffs_fixed_ordering():
    # z(z - w) = -zw + z^2 with c_j on z^j w^(d-j)
    assert to_coeffs(sec(1, 0, 1)).coeffs == (Fraction(0), Fraction(-1), Fraction(1))


def test_to_coeffs_infinity_gives_top_zeros():
    # w^2 * (z - 0*w) in O(3)
    s = Section.of(2, Divisor.of([(P(0), 1), (INF, 2)]))
    assert to_coeffs(s).coeffs == (0, Fraction(2), 0, 0)


def test_from_coeffs_irrational():
    with pytest.raises(IrrationalRoots):
        from_coeffs(CoeffForm.of(2, [1, 0, 1]))


def test_round_trip_200_random_forms():
    rng = Random(7)
    pool = [-3, -2, -1, 0, 1, 2, 3, Fraction(1, 2), Fraction(-2, 3), "inf"]
    for _ in range(200):
        degree = rng.randint(0, 10)
        values = [rng.choice(pool) for _ in range(degree)]
        s = sec(random_nonzero_scale(rng), *values) if degree else Section.constant(
            random_nonzero_scale(rng)
        )
        assert from_coeffs(to_coeffs(s)) == s


def test_zero_round_trip():
    assert from_coeffs(to_coeffs(Section.zero(4))) == Section.zero(4)


@given(sections, sections)
def test_coeffs_of_product_is_polynomial_product(a, b):
    lhs = to_coeffs(mul(a, b))
    rhs = to_coeffs(a).multiply(to_coeffs(b))
    assert lhs == rhs


# --- top-coefficient elimination -------------------------------------------


def test_reduce_top_monomial():
    f = CoeffForm.of(3, [0, 0, 0, 1])  # z^3
    g = CoeffForm.of(1, [0, 1])  # z
    out, psi = reduce_top(f, g, 2)
    assert out.is_zero
    assert psi.coeffs == (0, 0, Fraction(-1))  # -z^2


def test_reduce_top_eliminates_exactly():
    rng = Random(3)
    for _ in range(50):
        dg = rng.randint(0, 4)
        df = dg + rng.randint(0, 4)
        g_coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(dg + 1)]
        g_coeffs[-1] = Fraction(rng.choice([1, 2, -1]))
        f = CoeffForm.of(df, [Fraction(rng.randint(-3, 3)) for _ in range(df + 1)])
        g = CoeffForm.of(dg, g_coeffs)
        m = rng.randint(0, df - dg + 1)
        out, psi = reduce_top(f, g, m)
        for j in range(m):
            assert out.coeffs[df - j] == 0
        # residue class: out - f == g * psi, exactly
        assert out == f.add(g.multiply(psi))


def test_reduce_top_chart_degenerate():
    f = CoeffForm.of(2, [1, 1, 1])
    g = CoeffForm.of(1, [1, 0])  # vanishes at infinity
    with pytest.raises(ChartDegenerate):
        reduce_top(f, g, 1)


def test_reduce_top_residue_membership_by_independent_solve():
    # out - f must lie in {g * psi : deg psi <= deg f - deg g}; solve for psi
    # coefficients by plain convolution equations, independent of reduce_top.
    f = CoeffForm.of(4, [1, 2, 0, -1, 3])
    g = CoeffForm.of(2, [1, 1, 2])
    out, psi = reduce_top(f, g, 3)
    diff = [a - b for a, b in zip(out.coeffs, f.coeffs)]
    span = f.degree - g.degree
    # solve diff = conv(g, x) by forward substitution from the constant term
    x = [Fraction(0)] * (span + 1)
    for i in range(span + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            if j <= g.degree:
                acc += g.coeffs[j] * x[i - j]
        x[i] = (diff[i] - acc) / g.coeffs[0]
    conv = [Fraction(0)] * (f.degree + 1)
    for i, gc in enumerate(g.coeffs):
        for j, xc in enumerate(x):
            conv[i + j] += gc * xc
    assert conv == diff
    assert x == list(psi.coeffs)


def test_shift_round_trip():
    f = CoeffForm.of(3, [1, -2, 0, 5])
    assert f.shift(Fraction(3, 2)).shift(Fraction(-3, 2)) == f
    # shifting fixes infinity: effective degree is preserved
    g = CoeffForm.of(5, [1, 1, 0, 2, 0, 0])
    assert g.shift(2).effective_degree() == g.effective_degree()
