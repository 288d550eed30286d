#!/usr/bin/env python3
"""
Tests for the action catalog: group law, pullbacks, quasi-orbit tables,
equivariance and ergodic averages
"""

import numpy as np
import pytest

from dynamics import (
    Boundary,
    Interior,
    OrbitKind,
    PulledBackFamily,
    RadialVOAction,
    RealQuantumPlaneAction,
    TorusAPAction,
    TranslationAction,
    VOtensorVOAction,
    VOtimesAPAction,
    act,
    approach_distance,
    classify_kind,
    contains,
    create_action,
    equivariance_residual,
    ergodic_average,
    expression_symbol,
    group_law_residual,
    list_actions,
    named_symbol,
    non_generic_suborbits,
    pullback_symbol,
    quasi_orbit_of,
    random_state,
    state_distance,
    task_rng,
)
from dynamics.torus import frequency_matrix
from phasespace import ActionError, PhasePoint

IDENTITY = [[1.0, 0.0], [0.0, 1.0]]

# (action, symbol) pairs covering every catalog action
CATALOG_PAIRS = [
    (lambda: TranslationAction(), lambda: expression_symbol("tanh(x)*cos(xi)")),
    (lambda: RadialVOAction(), lambda: named_symbol("radial-tanh")),
    (lambda: RadialVOAction(), lambda: named_symbol("radial-angular")),
    (lambda: TorusAPAction(frequency=IDENTITY), lambda: named_symbol("harper")),
    (lambda: VOtimesAPAction(frequency=IDENTITY), lambda: named_symbol("vo-times-harper")),
    (lambda: VOtimesAPAction(frequency=IDENTITY), lambda: named_symbol("vo-plus-harper")),
    (lambda: VOtensorVOAction(), lambda: named_symbol("tensor-tanh")),
    (lambda: RealQuantumPlaneAction(), lambda: expression_symbol("tanh(x) + tanh(xi)")),
]


def test_registry_lists_all_actions():
    assert list_actions() == sorted([
        "translation", "radial-vo", "torus-ap", "vo-ap", "vo-tensor-vo", "real-quantum-plane",
    ])
    with pytest.raises(ActionError):
        create_action("no-such-action")


def test_registry_passes_parameters():
    a = create_action("torus-ap", frequency=IDENTITY)
    assert a.dimension == 2
    with pytest.raises(ActionError):
        create_action("translation", frequency=IDENTITY)


# ---------------------------------------------------------------------------
# The action
# ---------------------------------------------------------------------------

def test_translation_moves_points():
    moved = act(TranslationAction(), Interior.at(0, 0), PhasePoint.of(1, 2))
    assert moved == Interior.at(1, 2)


def test_quantum_plane_dilates():
    moved = act(RealQuantumPlaneAction(), Interior.at(1, 1), PhasePoint.of(np.log(2.0), 0))
    assert moved.point.x[0] == pytest.approx(2.0)
    assert moved.point.xi[0] == pytest.approx(1.0)


def test_quantum_plane_origin_is_fixed():
    a = RealQuantumPlaneAction()
    for X in (PhasePoint.of(3, -1), PhasePoint.of(-7, 2.5)):
        assert act(a, Interior.at(0, 0), X) == Interior.at(0, 0)


def test_radial_boundary_points_are_fixed():
    a = RadialVOAction()
    sigma = Boundary("infinity", (0.5,))
    assert act(a, sigma, PhasePoint.of(10, -3)) == sigma


@pytest.mark.parametrize("make_action,make_symbol", CATALOG_PAIRS)
def test_group_law(make_action, make_symbol):
    assert group_law_residual(make_action(), samples=50, seed=3) <= 1e-10


def test_foreign_points_are_rejected():
    with pytest.raises(ActionError):
        act(TorusAPAction(frequency=IDENTITY), Interior.at(0, 0), PhasePoint.of(1, 1))
    with pytest.raises(ActionError):
        act(RealQuantumPlaneAction(), Boundary("torus", (0.0, 0.0)), PhasePoint.of(1, 1))
    with pytest.raises(ActionError):
        act(TorusAPAction(frequency=IDENTITY), Boundary("torus", (0.0,)), PhasePoint.of(1, 1))
    with pytest.raises(ActionError):
        VOtensorVOAction().validate_point(Boundary("omega", (0.5, 0.0)))


def test_frequency_matrix_must_be_minimal():
    with pytest.raises(ActionError):
        frequency_matrix([[1.0, 1.0], [2.0, 2.0]])
    with pytest.raises(ActionError):
        frequency_matrix([[1.0, 0.0, 0.0]])


# ---------------------------------------------------------------------------
# Pullbacks and equivariance
# ---------------------------------------------------------------------------

def test_pullback_on_quantum_plane_semi_axis():
    F = pullback_symbol(expression_symbol("tanh(x) + tanh(xi)"), RealQuantumPlaneAction(), Interior.at(1, 0))
    rng = np.random.default_rng(11)
    x, xi = rng.uniform(-3, 3, size=(2, 100))
    np.testing.assert_allclose(F(x, xi), np.tanh(np.exp(x)), atol=1e-14)


def test_pullback_at_translation_origin_is_the_symbol():
    F = pullback_symbol(expression_symbol("gaussian(x)*cos(xi)"), TranslationAction(), Interior.at(0, 0))
    x = np.linspace(-2, 2, 9)
    np.testing.assert_allclose(F(x, -x), np.exp(-x * x) * np.cos(x), atol=1e-15)


def test_pullback_of_constant_is_constant():
    F = pullback_symbol(expression_symbol("0.7"), TranslationAction(), Interior.at(3, -1))
    np.testing.assert_allclose(F(np.linspace(-5, 5, 11), np.zeros(11)), 0.7)


def test_pullback_rejects_symbols_without_the_chart():
    with pytest.raises(ActionError):
        pullback_symbol(named_symbol("harper"), TranslationAction(), Interior.at(0, 0))
    with pytest.raises(ActionError):
        named_symbol("no-such-symbol")


def test_pullback_reads_limits_at_infinity():
    F = pullback_symbol(named_symbol("radial-angular"), RadialVOAction(), Boundary("infinity", (np.pi,)))
    np.testing.assert_allclose(F(np.zeros(3), np.ones(3)), -1.0)


@pytest.mark.parametrize("make_action,make_symbol", CATALOG_PAIRS)
def test_pulled_back_families_are_equivariant(make_action, make_symbol):
    a = make_action()
    family = PulledBackFamily(make_symbol(), a)
    assert equivariance_residual(family, a, samples=40, seed=5) <= 1e-10


def test_family_ignoring_the_base_point_is_not_equivariant():
    def frozen(sigma, x, xi):
        return np.tanh(x) * np.cos(xi)

    assert equivariance_residual(frozen, TranslationAction(), samples=20, seed=5) > 1e-3


def test_constant_family_is_equivariant():
    def constant(sigma, x, xi):
        return np.full(np.shape(x), 2.0)

    assert equivariance_residual(constant, RadialVOAction(), samples=20, seed=5) == 0.0


# ---------------------------------------------------------------------------
# Quasi-orbits
# ---------------------------------------------------------------------------

def test_quantum_plane_quasi_orbits():
    a = RealQuantumPlaneAction()
    quarter = quasi_orbit_of(a, Interior.at(1, 1))
    assert quarter.id == "Q++"
    assert classify_kind(quarter) == OrbitKind.FIRST
    semi_axis = quasi_orbit_of(a, Interior.at(1, 0))
    assert semi_axis.id == "X+"
    assert classify_kind(semi_axis) == OrbitKind.SECOND
    assert quasi_orbit_of(a, Interior.at(0, 0)).id == "O"
    assert quasi_orbit_of(a, Interior.at(-2, 3)).id == "Q-+"


def test_quantum_plane_membership():
    a = RealQuantumPlaneAction()
    quarter = a.quasi_orbit_table()["Q++"]
    assert contains(a, quarter, Interior.at(1, 0))
    assert contains(a, quarter, Interior.at(0, 0))
    assert not contains(a, quarter, Interior.at(-1, 0))


def test_torus_is_one_minimal_second_kind_orbit():
    a = TorusAPAction()
    E = quasi_orbit_of(a, Boundary("torus", (1.0, 2.0)))
    assert E.minimal
    assert classify_kind(E) == OrbitKind.SECOND
    assert contains(a, E, Boundary("torus", (0.3, 0.4)))


@pytest.mark.parametrize("frequency", [IDENTITY, [[1.0, 0.0], [0.0, np.sqrt(2.0)]], [[2.0, 1.0], [1.0, 3.0]]])
def test_invertible_frequency_reaches_every_torus_point(frequency):
    a = TorusAPAction(frequency=frequency)
    start = np.array([0.3, 5.9])
    rng = np.random.default_rng(11)
    for target in rng.uniform(0.0, 2.0 * np.pi, size=(5, 2)):
        X = np.linalg.solve(np.asarray(frequency), target - start)
        reached = act(a, Boundary("torus", tuple(start)), PhasePoint.of(X[0], X[1]))
        np.testing.assert_allclose(reached.coordinates, target, atol=1e-9)
        assert quasi_orbit_of(a, reached) == quasi_orbit_of(a, Boundary("torus", tuple(start)))


def test_translation_has_one_first_kind_orbit():
    E = quasi_orbit_of(TranslationAction(), Interior.at(5, 5))
    assert E.id == "Xi"
    assert classify_kind(E) == OrbitKind.FIRST
    assert non_generic_suborbits(TranslationAction(), E) == []


def test_non_generic_cover_of_quarter_plane():
    a = RealQuantumPlaneAction()
    cover = non_generic_suborbits(a, quasi_orbit_of(a, Interior.at(1, 1)))
    assert [E.id for E in cover] == ["X+", "P+"]


def test_non_generic_cover_of_radial_compactification():
    a = RadialVOAction()
    cover = non_generic_suborbits(a, quasi_orbit_of(a, Interior.at(0, 0)), samples=16)
    assert len(cover) == 16
    assert all(E.minimal and E.kind == OrbitKind.SECOND for E in cover)
    assert all(E.generating_point.tag == "infinity" for E in cover)


def test_non_generic_cover_of_tensor_square():
    a = VOtensorVOAction()
    cover = non_generic_suborbits(a, quasi_orbit_of(a, Interior.at(0, 0)))
    assert sorted(E.id for E in cover) == ["omega*+", "omega*-", "omega+", "omega-"]


def test_second_kind_has_no_non_generic_cover():
    a = TorusAPAction()
    with pytest.raises(ActionError):
        non_generic_suborbits(a, quasi_orbit_of(a, Boundary("torus", (0.0, 0.0))))


def test_orbit_of_origin_approaches_infinity():
    a = RadialVOAction()
    d = approach_distance(a, Interior.at(0, 0), Boundary("infinity", (0.0,)), radii=[1000.0], angles=[0.0])
    assert d < 2e-3


def test_torus_distance_is_periodic():
    a = TorusAPAction()
    d = state_distance(a, Boundary("torus", (0.0, 1.0)), Boundary("torus", (2 * np.pi, 1.0)))
    assert d == pytest.approx(0.0, abs=1e-12)


def test_random_states_follow_the_seed():
    a = TorusAPAction()
    first = [random_state(a, task_rng(7, i)) for i in range(5)]
    again = [random_state(a, task_rng(7, i)) for i in range(5)]
    other = [random_state(a, task_rng(8, i)) for i in range(5)]
    assert first == again
    assert first != other


# ---------------------------------------------------------------------------
# Ergodic averages
# ---------------------------------------------------------------------------

def test_ergodic_average_of_constant():
    value = ergodic_average(expression_symbol("3"), TranslationAction(), Interior.at(0, 0), R=10)
    assert value.real == pytest.approx(3.0)
    assert value.imag == 0.0


def test_ergodic_average_of_torus_monomial_vanishes():
    a = TorusAPAction(frequency=IDENTITY)
    value = ergodic_average(named_symbol("torus-monomial"), a, Boundary("torus", (0.0, 0.0)), R=200)
    assert abs(value) <= 0.02


def test_ergodic_average_of_decaying_symbol_vanishes():
    value = ergodic_average(
        expression_symbol("gaussian(x)*gaussian(xi)"), TranslationAction(), Interior.at(0, 0), R=100
    )
    assert abs(value) <= 1e-3


def test_ergodic_average_needs_positive_radius():
    with pytest.raises(ValueError):
        ergodic_average(expression_symbol("1"), TranslationAction(), Interior.at(0, 0), R=0)
