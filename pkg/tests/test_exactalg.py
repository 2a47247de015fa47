from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import X, det_oracle, poly_coeffs, to_sympy
from regionsig.exactalg import (
    TWO_X_PLUS_ONE,
    FiniteMap,
    LocElem,
    Matrix,
    PolyZ,
    adjunction_check,
    bareiss_det,
    charpoly,
    is_compatible,
    loc_normalize,
    poly_arith,
    poly_eval,
    pull_back,
    push_forward,
    push_forward_vector,
)

coeff_lists = st.lists(st.integers(-20, 20), max_size=6)
polys = coeff_lists.map(PolyZ)


def sym(p: PolyZ):
    return sum((c * X**k for k, c in enumerate(p.coeffs)), sp.Integer(0))


# -- PolyZ --------------------------------------------------------------------


def test_poly_trims_and_degree():
    assert PolyZ([1, 2, 0, 0]).coeffs == (1, 2)
    assert PolyZ([0, 0]).degree == -1
    assert PolyZ([0, 0, 3]).degree == 2
    assert PolyZ([5]).lead == 5


@given(polys, polys)
def test_poly_ring_ops_match_sympy(a, b):
    assert (a + b).coeffs == poly_coeffs(sym(a) + sym(b))
    assert (a - b).coeffs == poly_coeffs(sym(a) - sym(b))
    assert (a * b).coeffs == poly_coeffs(sym(a) * sym(b))


@given(polys, st.fractions(max_denominator=50))
def test_poly_eval_is_exact(a, x0):
    assert a.eval(x0) == Fraction(str(sym(a).subs(X, sp.Rational(x0.numerator, x0.denominator))))


unit_lead = st.tuples(coeff_lists, st.sampled_from([1, -1])).map(lambda t: PolyZ(list(t[0]) + [t[1]]))


@given(polys, unit_lead)
def test_divmod_by_unit_leading_coefficient(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_divmod_rejects_non_integral_quotient():
    with pytest.raises(ArithmeticError):
        PolyZ([1, 0, 1]).divmod(PolyZ([0, 2]))
    with pytest.raises(ZeroDivisionError):
        PolyZ([1]).divmod(PolyZ())


def test_exact_div_and_divides():
    p = PolyZ([-1, 0, 4])  # (2x-1)(2x+1)
    assert p.exact_div(TWO_X_PLUS_ONE) == PolyZ([-1, 2])
    assert TWO_X_PLUS_ONE.divides(p)
    assert not PolyZ([0, 2]).divides(p)
    with pytest.raises(ArithmeticError):
        PolyZ([1, 1]).exact_div(TWO_X_PLUS_ONE)


@given(polys)
def test_format_parse_roundtrip(a):
    assert PolyZ.parse(str(a)) == a
    assert PolyZ.parse(a.format(mul="", power="^")) == a


def test_format_examples():
    assert str(PolyZ([-1, 0, 2])) == "2*x^2-1"
    assert PolyZ([-1, 0, 2]).latex() == "2x^2-1"
    assert str(PolyZ()) == "0"
    assert PolyZ.parse("1-2x^2") == PolyZ([1, 0, -2])
    assert PolyZ.parse(" -x + 3 ") == PolyZ([3, -1])


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        PolyZ.parse("2y+1")


@given(polys)
def test_negate_x_and_z2x(a):
    assert a.negate_x().coeffs == poly_coeffs(sym(a).subs(X, -X))
    # p(2x) always lies in Z[2x]
    assert a.compose(PolyZ([0, 2])).in_z2x()


def test_z2x_membership():
    assert PolyZ([3, 2, 4]).in_z2x()
    assert not PolyZ([0, 1]).in_z2x()
    assert not PolyZ([-1, 0, 2]).in_z2x()


def test_poly_equality_with_ints():
    assert PolyZ([3]) == 3
    assert PolyZ() == 0
    assert hash(PolyZ([3])) == hash(3)
    assert PolyZ([0, 1]) ** 3 == PolyZ([0, 0, 0, 1])


def test_poly_arith_helpers():
    a, b = PolyZ([1, 1]), PolyZ([0, 2])
    assert poly_arith(a, b, "mul") == PolyZ([0, 2, 2])
    assert poly_arith(a, b, "sub") == PolyZ([1, -1])
    assert poly_eval(a, Fraction(1, 2)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        poly_arith(a, b, "div")


# -- LocElem ------------------------------------------------------------------


def test_localization_normalizes():
    e = loc_normalize(PolyZ([1, 2]) * PolyZ([3, 1]), 1)
    assert e == LocElem(PolyZ([3, 1]))
    assert e.to_poly() == PolyZ([3, 1])


def test_units_and_inverse():
    u = LocElem.unit_power(2)
    assert u.is_unit() and (-u).is_unit()
    assert (u * u.inverse()) == 1
    assert LocElem(-1).is_unit()
    assert not LocElem(PolyZ([0, 1])).is_unit()
    assert not LocElem(2).is_unit()
    with pytest.raises(ZeroDivisionError):
        LocElem(PolyZ([1, 1])).inverse()


@given(polys, st.integers(-3, 3), polys, st.integers(-3, 3), st.fractions(max_denominator=20))
def test_local_arithmetic_evaluates_consistently(a, j, b, k, x0):
    if x0 == Fraction(-1, 2):
        return
    p, q = LocElem(a) * LocElem.unit_power(j), LocElem(b) * LocElem.unit_power(k)
    assert (p + q).eval(x0) == p.eval(x0) + q.eval(x0)
    assert (p * q).eval(x0) == p.eval(x0) * q.eval(x0)
    assert (p - q).eval(x0) == p.eval(x0) - q.eval(x0)


def test_local_division():
    a = LocElem(PolyZ([2, 4]))
    assert a / LocElem.unit_power(1) == 2
    assert str(LocElem.unit_power(-1)) == "(1)/(2*x+1)"


# -- Matrix -------------------------------------------------------------------


small_int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n))


@given(small_int_matrices)
def test_bareiss_integer_det(rows):
    m = Matrix(rows)
    assert bareiss_det(m) == sp.Matrix(rows).det()


@settings(max_examples=30)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_poly_det_matches_oracle(rows):
    m = Matrix(rows)
    assert PolyZ._coerce(bareiss_det(m)).coeffs == det_oracle(m)


@settings(max_examples=30)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_charpoly_matches_sympy(rows):
    m = Matrix(rows)
    t = sp.Symbol("t")
    want = sp.Poly(to_sympy(m).charpoly(t).as_expr(), t)
    got = charpoly(m)
    for k, c in enumerate(got):
        assert poly_coeffs(want.coeff_monomial(t**k)) == PolyZ._coerce(c).coeffs


def test_matrix_basics():
    a = Matrix([[1, 2], [3, 4]])
    assert a.shape == (2, 2)
    assert a.T == Matrix([[1, 3], [2, 4]])
    assert a @ Matrix.identity(2) == a
    assert a.apply([1, 1]) == (3, 7)
    assert a.direct_sum(Matrix([[5]])) == Matrix([[1, 2, 0], [3, 4, 0], [0, 0, 5]])
    assert (a | Matrix([[5]])).shape == (3, 3)
    assert a.permuted((1, 0)) == Matrix([[4, 3], [2, 1]])
    assert a.with_entry(0, 1, 9)[0, 1] == 9
    assert Matrix.unit(2, 1, 0) == Matrix([[0, 0], [1, 0]])
    assert Matrix.outer([1, 2], [3, 4]) == Matrix([[3, 4], [6, 8]])
    assert not a.is_symmetric()
    assert a.submatrix([1], [0, 1]) == Matrix([[3, 4]])


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([[1, 2]]) @ Matrix([[1, 2]])
    with pytest.raises(ValueError):
        bareiss_det(Matrix([[1, 2]]))


def test_matrix_evaluate_and_congruence():
    m = Matrix([[PolyZ([0, 1]), 1], [1, PolyZ([-1, 0, 2])]])
    assert m.evaluate(Fraction(1, 2)) == Matrix([[Fraction(1, 2), 1], [1, Fraction(-1, 2)]])
    p = Matrix([[1, 1], [0, 1]])
    assert m.congruence(p) == p.T @ m @ p


# -- FiniteMap ----------------------------------------------------------------


maps = st.integers(1, 6).flatmap(
    lambda n: st.integers(1, n).flatmap(
        lambda k: st.lists(st.integers(0, k - 1), min_size=n, max_size=n).map(lambda v: FiniteMap(n, k, tuple(v)))))


@given(maps, st.data())
def test_adjunction(f, data):
    v = data.draw(st.lists(st.integers(-9, 9), min_size=f.domain_size, max_size=f.domain_size))
    u = data.draw(st.lists(st.integers(-9, 9), min_size=f.image_size, max_size=f.image_size))
    assert adjunction_check(f, v, u)


@given(maps, st.data())
def test_push_forward_matrix_is_symmetric(f, data):
    n = f.domain_size
    vals = data.draw(st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n))
    a = Matrix([[vals[i * n + j] for j in range(n)] for i in range(n)])
    a = a + a.T
    assert push_forward(f, a).is_symmetric()


def test_finite_map_validation_and_composition():
    with pytest.raises(ValueError):
        FiniteMap(2, 1, (0, 1))
    f = FiniteMap.from_values([0, 0, 1])
    assert list(f.fiber(0)) == [0, 1]
    assert list(f.fiber_sizes()) == [2, 1]
    assert f.is_surjective() and not f.is_injective()
    g = FiniteMap(2, 1, (0, 0))
    assert f.then(g).values == (0, 0, 0)
    assert push_forward_vector(f, [1, 2, 3]) == (3, 3)
    assert pull_back(f, [5, 7]) == (5, 5, 7)


def test_compatibility():
    f = FiniteMap(3, 2, (0, 0, 1))
    assert is_compatible(f, [0, 0, 4])
    assert not is_compatible(f, [1, 0, 0])
    assert is_compatible(FiniteMap.identity(3), [1, 2, 3])


@given(maps, st.data())
def test_push_forward_is_functorial(f, data):
    k = f.image_size
    g = FiniteMap(k, 2, tuple(data.draw(st.lists(st.integers(0, 1), min_size=k, max_size=k))))
    v = data.draw(st.lists(st.integers(-9, 9), min_size=f.domain_size, max_size=f.domain_size))
    assert push_forward_vector(f.then(g), v) == push_forward_vector(g, push_forward_vector(f, v))


@given(maps, st.data())
def test_rank_one_congruence_pushes_forward(f, data):
    n = f.domain_size
    vals = data.draw(st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n))
    a = Matrix([[vals[min(i, j) * n + max(i, j)] for j in range(n)] for i in range(n)])
    v = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    # pulled-back vectors vanishing on big fibers are f-compatible
    u = data.draw(st.lists(st.integers(-4, 4), min_size=f.image_size, max_size=f.image_size))
    u = [0 if s > 1 else c for s, c in zip(f.fiber_sizes(), u)]
    w = pull_back(f, u)
    assert is_compatible(f, w)
    left = Matrix.identity(n) + Matrix.outer(v, w)
    fv, fw = push_forward_vector(f, v), push_forward_vector(f, w)
    small = Matrix.identity(f.image_size) + Matrix.outer(fv, fw)
    assert push_forward(f, left @ a @ left.T) == small @ push_forward(f, a) @ small.T
