from fractions import Fraction

import pytest

from nlcurves.exactq import QSeries, TruncationError
from nlcurves.lattice import theta_root
from nlcurves.modforms import (
    AmbiguousConstraintsError,
    ModForm,
    dimension_formula,
    eisenstein,
    eta_inverse_power,
    mod_basis,
    solve_in_weight,
)

from oracles import colored_partitions, divisor_sum


def test_e4_start():
    e4 = eisenstein(4, 3)
    assert [e4[n] for n in range(3)] == [1, 240 * divisor_sum(1, 3), 240 * divisor_sum(2, 3)] == [1, 240, 2160]


def test_e6_start():
    e6 = eisenstein(6, 3)
    assert [e6[n] for n in range(3)] == [1, -504, -504 * divisor_sum(2, 5)] == [1, -504, -16632]


def test_e4_normalized():
    assert eisenstein(4)[0] == 1


@pytest.mark.parametrize("w", [2, 8, 12])
def test_only_e4_e6(w):
    with pytest.raises(ValueError):
        eisenstein(w)


@pytest.mark.parametrize(
    "w, monos",
    [(10, ((1, 1),)), (16, ((4, 0), (1, 2))), (22, ((4, 1), (1, 3))), (12, ((3, 0), (0, 2)))],
)
def test_basis(w, monos):
    b = mod_basis(w)
    assert b.monomials == monos
    assert all(4 * a + 6 * c == w for a, c in monos)


@pytest.mark.parametrize("w", [3, 2, 0, 11])
def test_basis_rejects(w):
    with pytest.raises(ValueError):
        mod_basis(w)


@pytest.mark.parametrize("w", range(4, 61, 2))
def test_dimension_formula(w):
    assert mod_basis(w).dim == dimension_formula(w)


@pytest.mark.parametrize("w", range(4, 41, 2))
def test_first_coefficients_determine_form(w):
    basis = mod_basis(w)
    ones = [(n, 1 if n == 0 else 0) for n in range(basis.dim)]
    # raises if the matrix of first dim coefficients is singular
    solve_in_weight(w, ones)


def test_solve_stu():
    f = solve_in_weight(10, [(0, -2)])
    assert f.coeffs_in_basis == (Fraction(-2),)


def test_solve_x18():
    f = solve_in_weight(16, [(0, 3), (2, 184032)])
    assert f.coeffs_in_basis == (Fraction(31, 48), Fraction(113, 48))


def test_solve_cubic_threefold():
    f = solve_in_weight(16, [(0, 117), (2, 7877088)])
    assert f.coeffs_in_basis == (Fraction(433, 16), Fraction(1439, 16))


def test_solution_matches_constraints():
    f = solve_in_weight(22, [(0, 5), (3, Fraction(-7, 3))])
    e = f.expansion(6)
    assert e[0] == 5 and e[3] == Fraction(-7, 3)


def test_solve_errors():
    with pytest.raises(ValueError):
        solve_in_weight(16, [(0, 1)])
    with pytest.raises(AmbiguousConstraintsError):
        solve_in_weight(16, [(1, 1), (1, 2)])


def test_singular_constraints():
    from nlcurves.modforms import solve_exact

    with pytest.raises(AmbiguousConstraintsError):
        solve_exact([[1, 2], [2, 4]], [1, 2])


def test_e8_theta_equals_e4():
    assert theta_root("E8", 12) == eisenstein(4, 12)


def test_eta_inverse_power_k2():
    eta = eta_inverse_power(2, 6)
    assert eta.low == -1
    unit = colored_partitions(24, 7)
    assert [eta[n] for n in range(-1, 6)] == unit
    assert eta[-1] == 1 and eta[0] == 24


def test_eta_odd_k_rejected():
    with pytest.raises(ValueError, match="half-integral"):
        eta_inverse_power(1)
    with pytest.raises(ValueError, match="half-integral"):
        eta_inverse_power(3)


def test_modform_expansion_window():
    f = ModForm(10, (Fraction(-2),))
    assert f.expansion(3) == QSeries([-2, 528, 270864])
    with pytest.raises(TruncationError):
        f.expansion(3)[3]
