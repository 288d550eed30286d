#!/usr/bin/env python3
"""
Tests for phase-space primitives: points, symbols, grids and spectral sets
"""

import numpy as np
import pytest

from phasespace import (
    ArityError,
    Binary,
    Call,
    DimensionError,
    GridError,
    PhasePoint,
    SpectralSet,
    SymbolDomainError,
    SymbolSyntaxError,
    Unary,
    UnknownIdentifierError,
    Var,
    eval_symbol,
    evaluate_array,
    make_grid,
    parse_constant,
    parse_symbol,
    pretty_print,
    symplectic_form,
)


# ---------------------------------------------------------------------------
# Points
# ---------------------------------------------------------------------------

def test_symplectic_form_values():
    assert symplectic_form(PhasePoint.of(1, 0), PhasePoint.of(0, 1)) == 1.0
    assert symplectic_form(PhasePoint.of(2, 3), PhasePoint.of(5, 7)) == -1.0
    X = PhasePoint.of(0.3, -1.7)
    assert symplectic_form(X, X) == 0.0


def test_symplectic_form_dimension_mismatch():
    with pytest.raises(DimensionError):
        symplectic_form(PhasePoint.of(1, 0), PhasePoint.of((1, 2), (0, 0)))


def test_phase_point_rejects_unequal_lengths():
    with pytest.raises(DimensionError):
        PhasePoint((1.0, 2.0), (0.0,))


# ---------------------------------------------------------------------------
# Symbols
# ---------------------------------------------------------------------------

def test_parse_sum_of_cosines():
    f = parse_symbol("cos(x)+cos(xi)")
    assert f.ast == Binary("+", Call("cos", Var("x")), Call("cos", Var("xi")))
    assert f.bounded and f.bound == 2.0


def test_parse_product_of_tanh():
    f = parse_symbol("tanh(x)*tanh(xi)")
    assert f.ast == Binary("*", Call("tanh", Var("x")), Call("tanh", Var("xi")))


def test_prefix_minus_binds_tighter_than_product():
    f = parse_symbol("-x*xi")
    assert f.ast == Binary("*", Unary("-", Var("x")), Var("xi"))
    assert not f.bounded


@pytest.mark.parametrize(
    "text,offset",
    [
        ("cos(x", 5),
        ("x +", 3),
        ("x $ xi", 2),
        ("(x))", 3),
    ],
)
def test_syntax_error_offsets(text, offset):
    with pytest.raises(SymbolSyntaxError) as info:
        parse_symbol(text)
    assert info.value.offset == offset


def test_syntax_error_on_non_ascii_character():
    with pytest.raises(SymbolSyntaxError) as info:
        parse_symbol("x + é")
    assert info.value.offset == 4
    with pytest.raises(SymbolSyntaxError) as info:
        parse_symbol("é")
    assert info.value.offset == 0


def test_unknown_identifier_and_arity():
    with pytest.raises(UnknownIdentifierError) as info:
        parse_symbol("foo(x)")
    assert info.value.offset == 0
    with pytest.raises(UnknownIdentifierError):
        parse_symbol("x + y")
    with pytest.raises(ArityError):
        parse_symbol("cos(x, xi)")


def test_higher_dimension_variables():
    f = parse_symbol("cos(x1)*sin(xi2)", n=2)
    assert f.variables == ("x1", "x2", "xi1", "xi2")
    with pytest.raises(UnknownIdentifierError):
        parse_symbol("cos(x)", n=2)


@pytest.mark.parametrize(
    "text",
    [
        "cos(x) + cos(xi)",
        "-x*xi",
        "x - (xi - 1)",
        "x/(xi*2)",
        "-(x + xi)",
        "gaussian(x - 0.5)*gaussian(xi + 0.25)",
        "tanh(x)*(1 + 2*cos(pi*xi))",
        "1.5e-07*x",
    ],
)
def test_pretty_print_is_a_fixed_point(text):
    tree = parse_symbol(text).ast
    printed = pretty_print(tree)
    assert parse_symbol(printed).ast == tree
    assert pretty_print(parse_symbol(printed)) == printed


def test_pretty_print_minimal_parentheses():
    assert pretty_print(parse_symbol("((x)+(xi))*2")) == "(x + xi)*2"
    assert pretty_print(parse_symbol("x-(xi-1)")) == "x - (xi - 1)"
    assert pretty_print(parse_symbol("(x*xi)+1")) == "x*xi + 1"


def test_eval_symbol_examples():
    origin = PhasePoint.of(0, 0)
    assert eval_symbol(parse_symbol("0"), PhasePoint.of(3, -2)) == 0
    assert eval_symbol(parse_symbol("cos(x)+cos(xi)"), origin) == pytest.approx(2.0)
    assert abs(eval_symbol(parse_symbol("tanh(x)"), PhasePoint.of(50, 0)) - 1.0) <= 1e-12


def test_eval_symbol_dimension_mismatch():
    with pytest.raises(DimensionError):
        eval_symbol(parse_symbol("x"), PhasePoint.of((1, 2), (0, 0)))


def test_domain_errors_name_the_subexpression():
    with pytest.raises(SymbolDomainError) as info:
        eval_symbol(parse_symbol("1/(x - x)"), PhasePoint.of(1, 0))
    assert info.value.subexpression == "1/(x - x)"
    with pytest.raises(SymbolDomainError) as info:
        eval_symbol(parse_symbol("sqrt(x)"), PhasePoint.of(-1, 0))
    assert "sqrt" in info.value.subexpression


def test_evaluate_array_broadcasts():
    f = parse_symbol("cos(x)+cos(xi)")
    x = np.linspace(-1, 1, 5)
    xi = np.linspace(-2, 2, 7)
    values = evaluate_array(f, x=x[:, None], xi=xi[None, :])
    assert values.shape == (5, 7)
    np.testing.assert_allclose(values, np.cos(x)[:, None] + np.cos(xi)[None, :], atol=1e-14)


def test_constant_symbol_broadcasts_to_grid_shape():
    values = evaluate_array(parse_symbol("3"), x=np.zeros(4), xi=np.zeros(4))
    np.testing.assert_array_equal(values, [3.0, 3.0, 3.0, 3.0])


def test_parse_constant():
    assert parse_constant("1/32") == pytest.approx(1 / 32)
    assert parse_constant("2*pi") == pytest.approx(2 * np.pi)
    with pytest.raises(UnknownIdentifierError):
        parse_constant("x")


def test_declared_bound_wins():
    assert parse_symbol("x*xi", bound=3.0).bound == 3.0
    assert parse_symbol("exp(cos(x))").bound == pytest.approx(np.e)


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------

def test_grid_spacing():
    grid = make_grid(8, 256)
    assert grid.spacing == 1 / 16
    assert grid.nodes[0] == -8.0
    assert grid.nodes[-1] == pytest.approx(8 - 1 / 16)
    assert grid.resolution == pytest.approx(4 / 16)
    assert len(grid.midpoints()) == 2 * 256 - 1


@pytest.mark.parametrize("L,N", [(8, 255), (-1, 64), (0, 64), (8, 4), (float("nan"), 64)])
def test_grid_errors(L, N):
    with pytest.raises(GridError):
        make_grid(L, N)


def test_dual_grid_orthogonality():
    grid = make_grid(4, 32)
    hbar = 0.5
    diff = grid.nodes[:, None] - grid.nodes[None, :]
    kernel = np.exp(1j * diff[:, :, None] * grid.dual_nodes(hbar)[None, None, :] / hbar).sum(axis=2)
    np.testing.assert_allclose(kernel, 32 * np.eye(32), atol=1e-9)


def test_quadrature_nodes_resolve_every_offset():
    grid = make_grid(4, 32)
    hbar = 0.5
    xi = grid.quadrature_nodes(hbar)
    assert len(xi) == 64
    assert xi[0] == grid.dual_nodes(hbar)[0]
    assert xi[2] == pytest.approx(grid.dual_nodes(hbar)[1])
    diff = grid.nodes[:, None] - grid.nodes[None, :]
    kernel = np.exp(1j * diff[:, :, None] * xi[None, None, :] / hbar).sum(axis=2)
    np.testing.assert_allclose(kernel, 64 * np.eye(32), atol=1e-9)


@pytest.mark.parametrize("hbar", [0.0, -0.5, 1.5])
def test_dual_nodes_reject_bad_hbar(hbar):
    with pytest.raises(GridError):
        make_grid(8, 64).dual_nodes(hbar)


# ---------------------------------------------------------------------------
# Spectral sets
# ---------------------------------------------------------------------------

def test_spectral_set_sorts_and_freezes():
    S = SpectralSet.of([3.0, -1.0, 2.0])
    assert list(S) == [-1.0, 2.0, 3.0]
    assert S.hull == (-1.0, 3.0)
    with pytest.raises(ValueError):
        S.values[0] = 5.0


def test_spectral_set_rejects_non_finite():
    with pytest.raises(ValueError):
        SpectralSet.of([0.0, np.inf])
    with pytest.raises(ValueError):
        SpectralSet.of([0.0], resolution=-1.0)


def test_merged_thins_greedily_and_is_idempotent():
    S = SpectralSet.of([0.0, 0.05, 0.1, 0.3, 0.31], resolution=0.1)
    merged = S.merged()
    assert list(merged) == [0.0, 0.1, 0.3]
    assert merged.merged() == merged


def test_merged_without_resolution_drops_duplicates():
    assert list(SpectralSet.of([1.0, 1.0, 2.0]).merged()) == [1.0, 2.0]


def test_restrict_and_minkowski_sum():
    S = SpectralSet.of([-2.0, -1.0, 0.0, 1.0, 2.0])
    assert list(S.restrict(-1.0, 1.0)) == [-1.0, 0.0, 1.0]
    total = SpectralSet.of([0.0, 1.0]).minkowski_sum(SpectralSet.of([10.0, 20.0]))
    assert list(total) == [10.0, 11.0, 20.0, 21.0]
    assert list(S.scaled(-0.5)) == [-1.0, -0.5, 0.0, 0.5, 1.0]
