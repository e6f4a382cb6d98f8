from fractions import Fraction

from semiquant.backend.engine.algebra import (
    HBAR,
    HBARC,
    I,
    BracketKind,
    Dims,
    Observable,
    Scalar,
    bracket,
    cn_coefficient,
    commutator,
    graded_jacobi_residual,
    jacobiator,
    multiply,
    star_associator_coefficient,
    star_multiply,
    star_term,
    variables,
)

V = variables(Dims(1, 1))
q, p, x, k = V["q"], V["p"], V["x"], V["k"]


def test_star_examples():
    assert star_multiply(x, k, 3) == x * k + I * HBARC * Fraction(1, 2)
    assert star_multiply(q, p, 4) == q * p
    expected = x * x * k * k + (x * k).scale(I * HBARC * 2) - HBARC * HBARC * Fraction(1, 2)
    assert star_multiply(x * x, k * k, 2) == expected


def test_star_order_zero_is_product(rng, make_observable):
    for _ in range(20):
        a, b = make_observable(rng), make_observable(rng)
        assert star_multiply(a, b, 0) == multiply(a, b)


def test_star_without_classical_sector_is_product(rng, make_observable):
    dims = Dims(1, 0)
    for _ in range(10):
        a = make_observable(rng, dims=dims)
        b = make_observable(rng, dims=dims)
        for order in range(3):
            assert star_multiply(a, b, order) == multiply(a, b)


def test_star_is_associative_order_by_order(rng, make_observable):
    for _ in range(15):
        a, b, c = (make_observable(rng, max_degree=4, n_terms=2) for _ in range(3))
        for n in range(5):
            assert star_associator_coefficient(a, b, c, n).is_zero()


def test_cn_coefficients():
    assert cn_coefficient(0, q, p) == I * HBAR
    assert cn_coefficient(1, x, k) == I
    assert cn_coefficient(1, q * q, p).is_zero()


def test_c0_is_commutator(rng, make_observable):
    for _ in range(10):
        a, b = make_observable(rng), make_observable(rng)
        assert cn_coefficient(0, a, b) == commutator(a, b)


def test_quantum_observables_have_no_higher_coefficients(rng, make_observable):
    for _ in range(10):
        a = make_observable(rng, classical=False)
        b = make_observable(rng, classical=False)
        for n in (1, 2, 3):
            assert cn_coefficient(n, a, b).is_zero()


def test_first_two_coefficients_give_standard_hybrid(rng, make_observable):
    for _ in range(200):
        a, b = make_observable(rng), make_observable(rng)
        combined = cn_coefficient(0, a, b) + cn_coefficient(1, a, b).scale(HBAR)
        assert combined.divide_by_i_hbar() == bracket(BracketKind.STANDARD_HYBRID, a, b)


def test_graded_jacobi_identities(rng, make_observable):
    for _ in range(40):
        a, b, c = (make_observable(rng, max_degree=4, n_terms=2) for _ in range(3))
        for m in (0, 1, 2):
            assert graded_jacobi_residual(m, a, b, c).is_zero()


def test_truncated_order_two_residual_is_the_standard_hybrid_defect():
    a, b, c = q * x, q * p * x, p * k * k
    truncated = graded_jacobi_residual(2, a, b, c, truncate=1)
    assert not truncated.is_zero()
    assert truncated == -jacobiator(BracketKind.STANDARD_HYBRID, a, b, c)
    assert truncated == Scalar.monomial(Fraction(-1, 2), hbar=2)


def test_star_term_on_pure_classical():
    assert star_term(x, k, 1) == Observable.constant(I * Fraction(1, 2))


def test_standard_hybrid_defect_is_minus_truncated_residual(rng, make_observable):
    for _ in range(20):
        a, b, c = (make_observable(rng, max_degree=3, n_terms=2) for _ in range(3))
        assert graded_jacobi_residual(2, a, b, c, truncate=1) == -jacobiator(BracketKind.STANDARD_HYBRID, a, b, c)
