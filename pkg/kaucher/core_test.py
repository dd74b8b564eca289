import numpy as np
import pytest

from . import logging  # noqa: F401
from .core import (
    X1,
    X2,
    ZERO,
    GClass,
    Parallelogram,
    ProperInterval,
    add,
    ball_contains,
    basis_coordinates,
    canonical_pair,
    center,
    class_of_pair,
    distance,
    from_basis_coordinates,
    geq,
    interval,
    is_nonnegative,
    length,
    limit_of,
    neg,
    neighborhood_vertices,
    norm,
    scalar_mul,
    sign_of,
    sub,
    sum_classes,
    to_class,
)
from .embedding import bullet
from .errors import DomainError, ImproperEndpoints


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def random_class(rng, scale=10.0) -> GClass:
    inf, sup = rng.uniform(-scale, scale, 2)
    return GClass(inf, sup)


def random_interval(rng, scale=10.0) -> ProperInterval:
    lo, hi = np.sort(rng.uniform(-scale, scale, 2))
    return ProperInterval(lo, hi)


def test_interval_validation():
    assert interval(1, 2) == ProperInterval(1.0, 2.0)
    assert interval(3, 3).is_point()
    with pytest.raises(ImproperEndpoints, match="larger than"):
        interval(2, 1)
    with pytest.raises(ImproperEndpoints, match="finite"):
        interval(0, float("inf"))
    with pytest.raises(DomainError):
        GClass(float("nan"), 0)


def test_interval_helpers():
    x = interval(1, 3)
    assert x.width == 2
    assert x.midpoint == 2
    assert x.contains_point(1) and x.contains_point(3) and not x.contains_point(3.5)
    assert x.contains(interval(1.5, 2))
    assert x + interval(-1, 1) == interval(0, 4)


def test_sum_with_dual():
    # ([2,4],0) + (0,[1,6]) = ([2,4],[1,6]) ~ (0,[-1,2])
    a = to_class(interval(2, 4))
    b = class_of_pair(interval(0, 0), interval(1, 6))
    total = add(a, b)
    assert total == class_of_pair(interval(0, 0), interval(-1, 2))
    assert total == GClass(1, -2)
    assert sign_of(total).is_negative
    assert canonical_pair(total) == (interval(0, 0), interval(-1, 2))


def test_pairs_identify():
    # (x, y) ~ (z, t) iff x + t == y + z
    x, y = interval(1, 5), interval(0, 2)
    z, t = interval(3, 8), interval(2, 5)
    assert x + t == y + z
    assert class_of_pair(x, y) == class_of_pair(z, t)


def test_group_laws(rng):
    for _ in range(100):
        a, b = random_class(rng), random_class(rng)
        assert add(a, neg(a)) == ZERO
        assert sub(a, b) == add(a, neg(b))
        assert add(a, b) == add(b, a)
        assert add(a, ZERO) == a


def test_scalar_mul_is_componentwise():
    a = to_class(interval(1, 2))
    # -1 * ([1,2], 0) is (0, [1,2]), not the classical [-2,-1]
    assert scalar_mul(-1, a) == class_of_pair(interval(0, 0), interval(1, 2))
    assert scalar_mul(-1, a) == neg(a)
    assert -1 * a == neg(a)
    assert scalar_mul(0, a) == ZERO


def test_vector_space_laws(rng):
    n = 10_000
    alphas = rng.uniform(-5, 5, n)
    betas = rng.uniform(-5, 5, n)
    for alpha, beta in zip(alphas, betas):
        a, b = random_class(rng), random_class(rng)
        lhs = [scalar_mul(alpha + beta, a), scalar_mul(alpha, add(a, b)), scalar_mul(alpha, scalar_mul(beta, a))]
        rhs = [add(scalar_mul(alpha, a), scalar_mul(beta, a)), add(scalar_mul(alpha, a), scalar_mul(alpha, b)), scalar_mul(alpha * beta, a)]
        for left, right in zip(lhs, rhs):
            np.testing.assert_allclose([left.inf, left.sup], [right.inf, right.sup], rtol=1e-12, atol=1e-12)


def test_sign_of():
    assert sign_of(GClass(1, 2)).kind == "positive"
    assert sign_of(GClass(2, 1)).kind == "negative"
    assert sign_of(GClass(3, 3)).kind == "scalar"
    assert sign_of(GClass(3, 3)).alpha == 3
    assert sign_of(GClass(-3, -3)).kind == "scalar"
    assert sign_of(ZERO).kind == "zero"
    assert sign_of(GClass(1, 1 + 1e-14)).kind == "scalar"
    assert sign_of(GClass(1, 1 + 1e-3), tol=1e-2).kind == "scalar"
    assert str(sign_of(GClass(2, 2))) == "scalar(2.0)"


def test_canonical_pair_round_trip(rng):
    for _ in range(1000):
        a = random_class(rng)
        assert class_of_pair(*canonical_pair(a)) == a
    assert canonical_pair(GClass(2, 2)) == (interval(2, 2), interval(0, 0))


def test_basis():
    a = GClass(1, 2)
    assert basis_coordinates(a) == (1, 1)
    assert from_basis_coordinates(*basis_coordinates(a)) == a
    assert from_basis_coordinates(1, 0) == X1
    assert from_basis_coordinates(0, 1) == X2
    assert add(scalar_mul(3, X1), scalar_mul(-2, X2)) == GClass(-2, 1)


def test_length_center_norm():
    a = GClass(1, 2)
    assert length(a) == 1
    assert center(a) == 1.5
    assert norm(a) == 2.5
    b = GClass(2, 1)
    assert length(b) == 1
    assert center(b) == 1.5
    assert norm(b) == 2.5
    assert norm(ZERO) == 0
    assert norm(GClass(-3, -3)) == 3
    assert distance(GClass(1, 2), GClass(1, 2)) == 0


def test_norm_axioms(rng):
    n = 100_000
    a = rng.uniform(-10, 10, (n, 2))
    b = rng.uniform(-10, 10, (n, 2))
    alpha = rng.uniform(-5, 5, n)
    tol = 1e-9
    for i in range(n):
        x, y = GClass(*a[i]), GClass(*b[i])
        nx, ny = norm(x), norm(y)
        assert nx >= 0
        assert norm(add(x, y)) <= nx + ny + tol
        assert norm(scalar_mul(alpha[i], x)) == pytest.approx(abs(alpha[i]) * nx, rel=1e-12, abs=1e-12)
    assert norm(ZERO) == 0
    # norm(x) == 0 only for zero
    assert all(norm(GClass(*p)) > 0 for p in a[:100])


def test_norm_submultiplicative(rng):
    n = 100_000
    tol = 1e-9
    for _ in range(n):
        x, y = to_class(random_interval(rng)), to_class(random_interval(rng))
        assert norm(bullet(x, y)) <= norm(x) * norm(y) + tol * max(1.0, norm(x) * norm(y))


def test_norm_multiplicative_with_point(rng):
    for _ in range(1000):
        alpha = rng.uniform(-10, 10)
        x = to_class(random_interval(rng))
        point = GClass(alpha, alpha)
        assert norm(bullet(point, x)) == pytest.approx(norm(point) * norm(x), rel=1e-9, abs=1e-9)
        assert norm(bullet(x, point)) == pytest.approx(norm(point) * norm(x), rel=1e-9, abs=1e-9)


def test_order():
    assert geq(GClass(0, 3), GClass(1, 2))
    assert not geq(GClass(1, 2), GClass(0, 3))
    assert geq(GClass(2, 3), GClass(1, 2))
    assert is_nonnegative(GClass(1, 2))
    assert is_nonnegative(ZERO)
    assert is_nonnegative(GClass(2, 2))
    assert not is_nonnegative(GClass(-2, -2))
    assert not is_nonnegative(GClass(2, 1))


def test_ball_contains():
    x0 = GClass(1, 2)
    assert ball_contains(x0, 0.5, GClass(1.1, 2))
    assert not ball_contains(x0, 0.5, GClass(1.5, 2.5))  # distance 0.5, open ball
    with pytest.raises(DomainError):
        ball_contains(x0, 0, x0)


def test_neighborhood_vertices():
    shape = neighborhood_vertices(GClass(1, 2), 0.5)
    assert shape.vertices == ((0.5, 1.5), (1.25, 1.75), (1.5, 2.5), (0.75, 2.25))
    assert shape.is_parallelogram()
    assert shape.contains((1, 2))
    assert not shape.contains((1.5, 2.5))
    with pytest.raises(DomainError, match="positive"):
        neighborhood_vertices(GClass(2, 1), 0.5)
    with pytest.raises(DomainError, match="inf >= 0"):
        neighborhood_vertices(GClass(-1, 2), 0.5)
    with pytest.raises(DomainError, match="radius"):
        neighborhood_vertices(GClass(1, 2), -1)


def test_neighborhood_is_the_ball(rng):
    x0, eps = GClass(1, 2), 0.5
    shape = neighborhood_vertices(x0, eps)
    points = np.column_stack([rng.uniform(0.25, 1.75, 10_000), rng.uniform(1.25, 2.75, 10_000)])
    inside = shape.contains_points(points)
    for (inf, sup), member in zip(points, inside):
        d = distance(GClass(inf, sup), x0)
        if abs(d - eps) > 1e-9:
            assert member == (d < eps)
    # the sample is not degenerate
    assert 0 < inside.sum() < len(inside)


def test_parallelogram_orientation():
    square = Parallelogram(((0, 0), (1, 0), (1, 1), (0, 1)))
    clockwise = Parallelogram(((0, 0), (0, 1), (1, 1), (1, 0)))
    for shape in [square, clockwise]:
        assert shape.contains((0.5, 0.5))
        assert not shape.contains((1.5, 0.5))
        assert not shape.contains((1, 0.5))
    assert not Parallelogram(((0, 0), (2, 0), (1, 1), (0, 1))).is_parallelogram()


def test_limit_of():
    sequence = [GClass(1 - 0.5**n, 2 + 0.5**n) for n in range(60)]
    limit = limit_of(sequence)
    assert distance(limit, GClass(1, 2)) < 1e-15
    with pytest.raises(DomainError, match="Cauchy"):
        limit_of([GClass(n, n + 1) for n in range(10)])
    with pytest.raises(DomainError):
        limit_of([GClass(1, 2)])


def test_sum_classes():
    assert sum_classes([]) == ZERO
    assert sum_classes([GClass(1, 2), GClass(2, 1), X2]) == GClass(4, 4)


def test_dunder_operators():
    a, b = GClass(1, 3), GClass(0, 1)
    assert a + b == add(a, b)
    assert a - b == sub(a, b)
    assert -a == neg(a)
    assert str(a) == "[1,3]"


def test_norm_is_inclusion_monotone(rng):
    for _ in range(2_000):
        outer = random_interval(rng)
        lo, hi = np.sort(rng.uniform(outer.lo, outer.hi, 2))
        inner = ProperInterval(lo, hi)
        assert norm(to_class(inner)) <= norm(to_class(outer)) + 1e-12


def test_positive_order_follows_length(rng):
    for _ in range(2_000):
        a, b = to_class(random_interval(rng)), to_class(random_interval(rng))
        if abs(length(a) - length(b)) < 1e-6:
            continue
        assert sign_of(sub(a, b), 0).is_positive == (length(a) > length(b))


@pytest.mark.parametrize("x0,eps", [(GClass(1, 2), 0.5), (GClass(0.5, 4), 0.1), (GClass(2, 3), 1.0)])
def test_neighborhood_vertices_lie_on_the_sphere(x0, eps):
    shape = neighborhood_vertices(x0, eps)
    for inf, sup in shape.vertices:
        assert distance(GClass(inf, sup), x0) == pytest.approx(eps, rel=1e-12)
    inner = GClass(x0.inf, x0.sup + eps / 2)
    assert distance(inner, x0) == pytest.approx(0.75 * eps)
    assert shape.contains((inner.inf, inner.sup))
