import cmath
import random
from fractions import Fraction

import numpy as np
import pytest

from groupwalk.groups import (
    ConstructionError,
    CyclicGroup,
    DihedralGroup,
    FreeBall,
    LatticeBall,
    QuaternionGroup,
    SymmetricGroup,
)
from groupwalk.measures import delta, make_measure, uniform
from groupwalk.operators import (
    GroupFunction,
    apply,
    apply_truncated,
    conditional_expectation,
    eigen_operator_to_function,
    eigenspace,
    fourier_coefficient,
    left_operator,
    right_operator,
    spectrum,
    super_apply,
    superoperator,
)

F = Fraction


def circulant_eigenvalues(n, mu):
    """Character sums: lambda_k = sum_j mu(j) exp(2 pi i k j / n)."""
    out = []
    for k in range(n):
        out.append(sum(float(w) * cmath.exp(2j * cmath.pi * k * j / n) for j, w in mu.weights.items()))
    return out


def random_rational_measure(group, rng, support_size):
    support = rng.sample(range(group.order), support_size)
    weights = [rng.randint(1, 6) for _ in support]
    total = sum(weights)
    return make_measure(group, [(g, F(w, total)) for g, w in zip(support, weights)])


# ---------------------------------------------------------------- matrices

def test_right_matrix_entries_are_mu_of_g_inverse_x():
    g = DihedralGroup(4)
    mu = uniform(g, [1, 4])
    mat = right_operator(g, mu).exact_matrix()
    for a in range(g.order):
        for x in range(g.order):
            expected = mu.weight(g.mul(g.inv(a), x))
            assert mat[a][x] == expected


def test_left_matrix_entries_are_mu_of_x_g_inverse():
    g = DihedralGroup(4)
    mu = uniform(g, [1, 4])
    mat = left_operator(g, mu).exact_matrix()
    for a in range(g.order):
        for x in range(g.order):
            assert mat[a][x] == mu.weight(g.mul(x, g.inv(a)))


def test_rows_are_stochastic():
    g = SymmetricGroup(3)
    mu = uniform(g, [1, 2, 3])
    for op in (right_operator(g, mu), left_operator(g, mu)):
        for row in op.exact_matrix():
            assert sum(row) == 1


def test_left_and_right_operators_commute_exactly():
    from groupwalk.linalg import rational_matmul

    rng = random.Random(19)
    for group in (CyclicGroup(6), DihedralGroup(3), QuaternionGroup()):
        mu = random_rational_measure(group, rng, 3)
        nu = random_rational_measure(group, rng, 2)
        left = left_operator(group, mu).exact_matrix()
        right = right_operator(group, nu).exact_matrix()
        assert rational_matmul(left, right) == rational_matmul(right, left)


def test_apply_exact_matches_convolution_definition():
    g = CyclicGroup(5)
    mu = make_measure(g, [(1, F(2, 3)), (3, F(1, 3))])
    f = GroupFunction(g, [F(k * k, 7) for k in range(5)])
    out = apply(right_operator(g, mu), f)
    for a in range(5):
        expected = sum(w * f.values[g.mul(a, h)] for h, w in mu.weights.items())
        assert out.values[a] == expected
    out_left = apply(left_operator(g, mu), f)
    for a in range(5):
        expected = sum(w * f.values[g.mul(h, a)] for h, w in mu.weights.items())
        assert out_left.values[a] == expected


def test_apply_float_path():
    g = CyclicGroup(4)
    mu = make_measure(g, [(1, 0.5), (3, 0.5)])
    f = GroupFunction(g, [1.0, -1.0, 1.0, -1.0])
    out = apply(right_operator(g, mu), f)
    assert out.values == pytest.approx([-1.0, 1.0, -1.0, 1.0])
    # [1, 0, -1, 0] averages to zero: each point sees one +1 and one -1
    zero = apply(right_operator(g, mu), GroupFunction(g, [1.0, 0.0, -1.0, 0.0]))
    assert zero.values == pytest.approx([0.0, 0.0, 0.0, 0.0])


# ---------------------------------------------------------------- spectra

def test_spectrum_z4_bipartite():
    g = CyclicGroup(4)
    mu = uniform(g, [1, 3])
    report = spectrum(right_operator(g, mu))
    flat = [(round(r.value.real, 9), round(r.value.imag, 9), r.multiplicity) for r in report.eigenvalues]
    assert flat == [(1.0, 0.0, 1), (-1.0, 0.0, 1), (0.0, 0.0, 2)]
    assert sorted(z.real for z in report.peripheral) == pytest.approx([-1.0, 1.0])


def test_spectrum_matches_circulant_characters():
    rng = random.Random(4)
    for n in (3, 5, 6, 8):
        g = CyclicGroup(n)
        mu = random_rational_measure(g, rng, min(3, n))
        report = spectrum(right_operator(g, mu))
        # round the sort key so conjugate pairs with 1e-16 real-part jitter
        # line up the same way in both lists
        key = lambda z: (round(z.real, 8), round(z.imag, 8))
        got = sorted(
            (z for rec in report.eigenvalues for z in [rec.value] * rec.multiplicity),
            key=key,
        )
        expected = sorted(circulant_eigenvalues(n, mu), key=key)
        for a, b in zip(got, expected):
            assert abs(a - b) < 1e-8


def test_spectrum_z3_delta_is_cube_roots():
    g = CyclicGroup(3)
    report = spectrum(right_operator(g, delta(g, 1)))
    assert len(report.peripheral) == 3
    for z in report.peripheral:
        assert abs(z**3 - 1) < 1e-9


def test_spectral_radius_at_most_one():
    rng = random.Random(23)
    for group in (CyclicGroup(7), DihedralGroup(5), SymmetricGroup(3), QuaternionGroup()):
        for _ in range(5):
            mu = random_rational_measure(group, rng, rng.randint(1, 4))
            report = spectrum(right_operator(group, mu))
            assert max(abs(r.value) for r in report.eigenvalues) <= 1 + 1e-9


def test_eigenspace_exact_pm1():
    g = CyclicGroup(4)
    mu = uniform(g, [1, 3])
    op = right_operator(g, mu)
    plus = eigenspace(op, 1)
    assert len(plus) == 1
    assert plus[0].values == [F(1)] * 4
    minus = eigenspace(op, -1)
    assert len(minus) == 1
    assert minus[0].values == [F(1), F(-1), F(1), F(-1)]
    assert minus[0].is_exact


def test_eigenspace_float_and_absent():
    g = CyclicGroup(4)
    mu = uniform(g, [1, 3])
    op = right_operator(g, mu)
    zero_space = eigenspace(op, 0)
    assert len(zero_space) == 2
    assert eigenspace(op, 0.5) == []


def test_spectrum_requires_finite():
    ball = LatticeBall(1, 3)
    mu = uniform(ball, [ball.index_of_form((1,)), ball.index_of_form((-1,))])
    with pytest.raises(ConstructionError):
        right_operator(ball, mu)


# ---------------------------------------------------------------- truncated steps

def test_apply_truncated_line_parity():
    ball = LatticeBall(1, 50)
    mu = uniform(ball, [ball.index_of_form((1,)), ball.index_of_form((-1,))])
    parity = GroupFunction(
        ball, [F(-1) if ball.length(g) % 2 else F(1) for g in ball.elements()]
    )
    stepped, interior = apply_truncated(ball, mu, parity, "right")
    assert len(interior) == 99
    for g in interior:
        assert stepped.values[g] == -parity.values[g]
    for g in ball.elements():
        if g not in set(interior):
            assert stepped.values[g] is None
    # the two-sided step needs one more layer: 97 points
    both, both_interior = apply_truncated(ball, mu, stepped, "left")
    assert len(both_interior) == 97
    for g in both_interior:
        assert both.values[g] == parity.values[g]


def test_apply_truncated_free_ball():
    ball = FreeBall(2, 3)
    gens = [ball.index_of_form(w) for w in ((1,), (-1,), (2,), (-2,))]
    mu = uniform(ball, gens)
    parity = GroupFunction(
        ball, [F(-1) if ball.length(g) % 2 else F(1) for g in ball.elements()]
    )
    stepped, interior = apply_truncated(ball, mu, parity, "left")
    assert len(interior) == 17  # radius-2 sub-ball of F2
    for g in interior:
        assert stepped.values[g] == -parity.values[g]


def test_apply_truncated_measure_from_smaller_ball():
    small = LatticeBall(1, 1)
    big = LatticeBall(1, 4)
    mu = uniform(small, [small.index_of_form((1,)), small.index_of_form((-1,))])
    f = GroupFunction(big, [F(big.canonical_form(g)[0]) for g in big.elements()])
    stepped, interior = apply_truncated(big, mu, f, "right")
    assert len(interior) == 7  # radius-3 sub-ball
    for g in interior:
        assert stepped.values[g] == f.values[g]  # averaging x-1 and x+1 returns x


def test_apply_truncated_radius_zero_has_empty_interior():
    point = FreeBall(2, 0)
    src = FreeBall(2, 1)
    mu = uniform(src, [src.index_of_form(w) for w in ((1,), (-1,), (2,), (-2,))])
    f = GroupFunction(point, [F(1)])
    stepped, interior = apply_truncated(point, mu, f, "right")
    assert interior == []
    assert stepped.values == [None]


def test_apply_truncated_rejects_cross_family():
    line = LatticeBall(1, 2)
    free = FreeBall(1, 2)
    mu = uniform(free, [free.index_of_form((1,)), free.index_of_form((-1,))])
    f = GroupFunction(line, [F(0)] * line.order)
    with pytest.raises(ValueError):
        apply_truncated(line, mu, f, "right")


def test_apply_truncated_rejects_deep_support():
    # make_measure already refuses deep supports, so forge the measure to
    # check the operator's own guard
    from groupwalk.measures import GroupMeasure

    ball = LatticeBall(1, 4)
    mu = GroupMeasure(ball, {ball.index_of_form((2,)): F(1)}, True)
    f = GroupFunction(ball, [F(0)] * ball.order)
    with pytest.raises(ValueError):
        apply_truncated(ball, mu, f, "right")


# ---------------------------------------------------------------- matrix level

def test_superoperator_unital_and_trace_preserving():
    g = CyclicGroup(6)
    mu = uniform(g, [1, 5])
    for side in ("right", "left"):
        s = superoperator(g, mu, side)
        eye = np.eye(6)
        assert np.allclose(s.apply(eye), eye)
        rng = np.random.default_rng(0)
        t = rng.standard_normal((6, 6))
        assert np.trace(s.apply(t)) == pytest.approx(np.trace(t))


def test_superoperator_positive_on_psd():
    g = DihedralGroup(3)
    mu = uniform(g, [1, 3])
    s = superoperator(g, mu, "right")
    rng = np.random.default_rng(8)
    for _ in range(5):
        b = rng.standard_normal((6, 6))
        psd = b @ b.T
        out = s.apply(psd)
        eigs = np.linalg.eigvalsh((out + out.T) / 2)
        assert eigs.min() >= -1e-10


def test_superoperator_diagonal_action_matches_convolution():
    g = DihedralGroup(3)
    mu = uniform(g, [1, 3, 4])
    f = GroupFunction(g, [F(k, 3) for k in range(6)])
    right_diag = super_apply(superoperator(g, mu, "right"), np.diag(f.as_array()))
    expected = apply(right_operator(g, mu), f).as_array()
    assert np.allclose(np.diagonal(right_diag), expected)
    left_diag = super_apply(superoperator(g, mu, "left"), np.diag(f.as_array()))
    expected_left = apply(left_operator(g, mu), f).as_array()
    assert np.allclose(np.diagonal(left_diag), expected_left)


def test_superoperator_exact_rows():
    g = CyclicGroup(3)
    mu = uniform(g, [1])
    s = superoperator(g, mu, "right")
    t = [[F(i * 3 + j) for j in range(3)] for i in range(3)]
    out = s.apply(t)
    for i in range(3):
        for j in range(3):
            assert out[i][j] == t[g.mul(i, 1)][g.mul(j, 1)]


def test_superoperator_order_cap():
    with pytest.raises(ConstructionError):
        superoperator(SymmetricGroup(4), uniform(SymmetricGroup(4), [1]), "right")


def test_conditional_expectation_intertwines():
    # E(S T) = P(E T) for the right side, exactly the statement used to pull
    # eigen-arrays down to eigenfunctions
    g = DihedralGroup(3)
    mu = uniform(g, [1, 3])
    s = superoperator(g, mu, "right")
    op = right_operator(g, mu)
    rng = np.random.default_rng(14)
    for _ in range(5):
        t = rng.standard_normal((6, 6))
        lhs = conditional_expectation(g, s.apply(t)).as_array()
        rhs = apply(op, conditional_expectation(g, t)).as_array()
        assert np.allclose(lhs, rhs, atol=1e-12)


def test_fourier_coefficient_of_translation_is_indicator():
    g = CyclicGroup(5)
    for h in range(5):
        lam_h = np.zeros((5, 5))
        for y in range(5):
            lam_h[g.mul(h, y), y] = 1.0  # left translation matrix
        for x in range(5):
            coeff = fourier_coefficient(g, lam_h, x)
            expected = 1.0 if x == h else 0.0
            assert coeff.values == pytest.approx([expected] * 5)


def test_eigen_operator_to_function_z2():
    g = CyclicGroup(2)
    mu = delta(g, 1)
    t = np.diag([1.0, -1.0])
    picked_g, f = eigen_operator_to_function(t, -1.0, mu)
    assert picked_g == 0
    assert f.values == pytest.approx([1.0, -1.0])
    out = apply(right_operator(g, mu), f)
    assert out.values == pytest.approx([-1.0, 1.0])


def test_eigen_operator_to_function_rejects_non_eigenvector():
    g = CyclicGroup(2)
    mu = delta(g, 1)
    with pytest.raises(ValueError):
        eigen_operator_to_function(np.ones((2, 2)), -1.0, mu)
    with pytest.raises(ValueError):
        eigen_operator_to_function(np.zeros((2, 2)), -1.0, mu)
