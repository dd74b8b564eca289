import math
import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from . import logging  # noqa: F401
from .analysis import (
    ProbeReport,
    SamplingGrid,
    circle_directions,
    components,
    continuity_probe,
    diff_probe,
    differential_candidate,
    geometric_radii,
    identity,
    poly_eval,
    polynomial,
    power,
    q2,
    sector_directions,
    unit_direction,
)
from .core import X1, X2, ZERO, GClass, add, from_basis_coordinates, neg, norm, scalar_mul
from .embedding import bullet, contains, straddles_zero
from .errors import DomainError
from .utils import get_tolerance, tolerance


def step(x: GClass) -> GClass:
    """Jumps when the left endpoint passes 1"""
    return X2 if x.inf > 1 else ZERO


@pytest.mark.parametrize(
    "x,square",
    [
        (GClass(1, 2), GClass(1, 4)),
        (GClass(-2, 3), GClass(0, 9)),
        (GClass(-3, 2), GClass(0, 9)),
        (GClass(-3, -1), GClass(1, 9)),
        (GClass(0, 0), GClass(0, 0)),
        # a negative class squares like its proper counterpart
        (GClass(2, 1), GClass(1, 4)),
    ],
)
def test_q2(x, square):
    assert q2(x) == square


@pytest.mark.parametrize("x", [GClass(1, 2), GClass(0, 3), GClass(-3, -1), GClass(-4, -0.5), GClass(2, 2)])
def test_q2_is_the_square_off_zero(x):
    assert q2(x) == bullet(x, x)


@pytest.mark.parametrize("x", [GClass(-2, 3), GClass(-3, 2), GClass(-0.5, 0.25)])
def test_q2_is_inside_the_square_across_zero(x):
    assert straddles_zero(x)
    assert contains(bullet(x, x), q2(x))


def test_square_across_zero():
    assert bullet(GClass(-2, 3), GClass(-2, 3)) == GClass(-12, 13)
    assert q2(GClass(-2, 3)) == GClass(0, 9)


def test_q2_of_dual_classes():
    rng = np.random.default_rng(5)
    for _ in range(1000):
        a = GClass(*np.sort(rng.uniform(-10, 10, 2)))
        assert q2(neg(a)) == q2(a)


def test_power_and_polynomials():
    x = GClass(1, 2)
    assert power(x, 0) == X2
    assert power(x, 1) == x
    assert power(x, 2) == bullet(x, x)
    assert power(x, 3) == GClass(1, 8)
    assert poly_eval([1, 0, 1], x) == GClass(2, 5)
    assert poly_eval([], x) == ZERO
    coeffs = [0.5, -2, 3, 1]
    expected = ZERO
    for i, c in enumerate(coeffs):
        expected = add(expected, scalar_mul(c, power(x, i)))
    assert polynomial(coeffs)(x) == expected
    with pytest.raises(DomainError):
        power(x, -1)


def test_components():
    f1, f2 = components(q2)
    for x in [GClass(1, 2), GClass(-2, 3), GClass(-3, -1)]:
        assert from_basis_coordinates(f1(x), f2(x)) == q2(x)


def test_directions():
    for d in circle_directions(64):
        assert norm(d) == pytest.approx(1)
    assert len(circle_directions(64)) == 64
    d = unit_direction(math.pi / 4)
    assert d.inf == pytest.approx(d.sup)
    assert norm(d) == pytest.approx(1)
    sector = sector_directions(math.pi / 4, math.pi / 2, 8)
    assert len(sector) == 8
    assert all(0 < d.inf < d.sup for d in sector)


def test_sampling_grid():
    grid = SamplingGrid()
    ladder = grid.ladder(0.5)
    assert len(ladder) == 41
    assert ladder[0] == 0.5
    assert ladder[3] == 1 / 16
    points = grid.points(GClass(1, 2), 0.1)
    assert len(points) == 64 * 4
    assert all(norm(add(p, GClass(-1, -2))) < 0.1 for p in points)


def test_continuity_q2_example():
    result = continuity_probe(q2, GClass(1, 2), 0.5)
    assert result.found
    assert result.eta >= 1 / 16
    assert result.eta == 1 / 16
    assert result.samples == 4 * 64 * 4


@pytest.mark.parametrize("x0", [GClass(1, 2), GClass(-2, 3), GClass(-3, -1)])
@pytest.mark.parametrize("eps", [0.5, 0.1, 0.01])
def test_continuity_q2(x0, eps):
    result = continuity_probe(q2, x0, eps)
    assert result.found
    assert 0 < result.eta <= eps


@pytest.mark.parametrize("eps", [0.5, 0.1])
def test_continuity_q2_at_left_endpoint_zero(eps):
    result = continuity_probe(q2, GClass(0, 1), eps)
    assert result.found
    assert result.eta >= eps / 4


def test_continuity_identity():
    result = continuity_probe(identity, GClass(1, 2), 0.3)
    assert result.eta == 0.3


def test_continuity_of_components():
    f1, f2 = components(q2)
    for component, basis in [(f1, X1), (f2, X2)]:
        result = continuity_probe(lambda x: scalar_mul(component(x), basis), GClass(1, 2), 0.5)
        assert result.found


def test_continuity_of_polynomials():
    rng = np.random.default_rng(9)
    for _ in range(5):
        coeffs = [float(c) for c in rng.uniform(-2, 2, 4)]
        lo = float(rng.uniform(0.5, 2))
        x0 = GClass(lo, lo + float(rng.uniform(0.1, 2)))
        result = continuity_probe(polynomial(coeffs), x0, 0.1)
        assert result.found
        assert 0 < result.eta <= 0.1


def test_continuity_fails_for_a_jump():
    result = continuity_probe(step, GClass(1, 2), 0.5)
    assert not result.found
    assert result.eta is None
    assert result.samples == 41 * 64 * 4


def test_continuity_errors():
    with pytest.raises(DomainError):
        continuity_probe(q2, GClass(1, 2), 0)


def test_continuity_parallel():
    with ThreadPoolExecutor(max_workers=4) as executor:
        parallel = continuity_probe(q2, GClass(1, 2), 0.5, executor=executor)
    assert parallel == continuity_probe(q2, GClass(1, 2), 0.5)


def test_differential_candidate():
    x0 = GClass(1, 2)
    L = differential_candidate(x0)
    assert L(GClass(1, 1)) == GClass(2, 4)
    assert L.is_linear_on(GClass(1, 2), GClass(0.5, 3))
    assert not L.is_linear_on(GClass(1, 2), GClass(-3, -1))
    assert repr(L) == "DifferentialCandidate([1,2])"


def test_q2_is_not_differentiable():
    x0 = GClass(1, 2)
    L = differential_candidate(x0)
    radii = geometric_radii(1e-2, 1e-6, 5)
    report = diff_probe(q2, x0, L, radii)
    assert report.radii == radii
    assert all(ratio > 1.0 for ratio in report.worst_ratio)
    for t, witness in zip(radii, report.witness):
        assert norm(add(witness, scalar_mul(-1, x0))) == pytest.approx(t)
    # along a direction with 0 < Δsup < -Δinf the ratio stays at 1.5 or more
    theta = 25 * 2 * math.pi / 64
    report = diff_probe(q2, x0, L, radii, directions=[unit_direction(theta)])
    assert all(ratio >= 1.5 - 1e-6 for ratio in report.worst_ratio)


def test_q2_differentiable_directions():
    x0 = GClass(1, 2)
    L = differential_candidate(x0)
    radii = geometric_radii(1e-2, 1e-6, 5)
    report = diff_probe(q2, x0, L, radii, directions=sector_directions(math.pi / 4, math.pi / 2, 16))
    ratios = report.worst_ratio
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert ratios[0] < 0.05
    assert ratios[-1] < 1e-5


def test_identity_is_differentiable():
    report = diff_probe(identity, GClass(1, 2), identity)
    assert max(report.worst_ratio) == pytest.approx(0, abs=1e-6)


def test_diff_probe_parallel():
    x0 = GClass(-2, 3)
    L = differential_candidate(x0)
    with ThreadPoolExecutor(max_workers=4) as executor:
        parallel = diff_probe(q2, x0, L, executor=executor)
    assert parallel == diff_probe(q2, x0, L)


def test_diff_probe_errors():
    x0 = GClass(1, 2)
    with pytest.raises(DomainError, match="decreasing"):
        diff_probe(q2, x0, identity, radii=[1e-3, 1e-2])
    with pytest.raises(DomainError, match="decreasing"):
        diff_probe(q2, x0, identity, radii=[1e-2, 0])
    with pytest.raises(DomainError, match="direction"):
        diff_probe(q2, x0, identity, directions=[])


def test_probe_report_csv():
    report = ProbeReport([0.01, 0.001], [1.5, 1.25], [GClass(1, 2), GClass(0.5, 2.25)])
    assert report.to_csv() == "radius,worst_ratio,witness_inf,witness_sup\n0.01,1.5,1,2\n0.001,1.25,0.5,2.25\n"
    with pytest.raises(ValueError):
        ProbeReport([0.01], [], [])


def test_workers_use_the_callers_tolerance():
    seen = []

    def f(x: GClass) -> GClass:
        seen.append((threading.get_ident(), get_tolerance()))
        return q2(x)

    x0 = GClass(1, 2)
    with tolerance(0.125):
        with ThreadPoolExecutor(max_workers=4) as executor:
            continuity_probe(f, x0, 0.5, executor=executor)
            diff_probe(f, x0, differential_candidate(x0), executor=executor)
    assert {tol for _, tol in seen} == {0.125}
    assert any(ident != threading.get_ident() for ident, _ in seen)
    # the worker threads are left as they were
    with ThreadPoolExecutor(max_workers=1) as executor:
        assert executor.submit(get_tolerance).result() != 0.125
