"""Finite spherical coefficients, the infinite slot model, and the limit table."""

import itertools
from fractions import Fraction

import pytest

from rookchar.elements import compose, idempotent, parse_element, symmetric_group
from rookchar.errors import ResourceGuardError
from rookchar.spherical import (
    SphericalModel,
    infinite_spherical_value,
    slot_coefficient_table,
    spherical_coeff,
    spherical_coeff_closed_form,
    spherical_limit_check,
)


class TestFiniteCoefficients:
    def test_quoted_values(self):
        m = SphericalModel(4, 2)
        assert spherical_coeff(m, idempotent([1])) == Fraction(1, 2)
        assert spherical_coeff(m, idempotent([1, 2])) == Fraction(1, 6)
        assert spherical_coeff(m, idempotent([1, 2, 3])) == 0

    def test_matches_closed_form_everywhere(self):
        for n in range(1, 7):
            for l in range(n + 1):
                model = SphericalModel(n, l)
                for b in range(1, n + 1):
                    for points in itertools.combinations(range(1, n + 1), b):
                        assert spherical_coeff(model, idempotent(points)) == (
                            spherical_coeff_closed_form(n, l, b)
                        )

    def test_permutation_part_is_irrelevant(self):
        model = SphericalModel(5, 3)
        eps = idempotent([2, 4])
        for s in symmetric_group(5):
            assert spherical_coeff(model, compose(s, eps)) == spherical_coeff(model, eps)

    def test_support_bound(self):
        with pytest.raises(ValueError):
            spherical_coeff(SphericalModel(3, 1), idempotent([4]))

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            SphericalModel(3, 4)
        with pytest.raises(ValueError):
            SphericalModel(3, 1, Fraction(3, 2))

    def test_basis_guard(self):
        with pytest.raises(ResourceGuardError):
            spherical_coeff(SphericalModel(40, 20), idempotent([1]))


class TestInfiniteModel:
    def test_single_slot(self):
        assert infinite_spherical_value(Fraction(1, 2), idempotent([1])) == Fraction(1, 4)

    def test_two_slot_quasi_cycle(self):
        assert infinite_spherical_value(
            Fraction(1, 2), parse_element("(1 2)e{1}")
        ) == Fraction(1, 4)

    def test_permutations_fix_the_vector(self):
        assert infinite_spherical_value(Fraction(2, 3), parse_element("(1 3 2)")) == 1

    def test_kill_count_powers(self):
        k = Fraction(3, 5)
        assert infinite_spherical_value(k, idempotent([1, 2, 5])) == (k**2) ** 3

    def test_phase_invariance_at_slot_level(self):
        rs = [idempotent([1]), parse_element("(1 2)e{1}"), parse_element("(1 2 3)e{2}e{3}")]
        plus = slot_coefficient_table(0.6, rs)
        minus = slot_coefficient_table(-0.6, rs)
        assert plus == pytest.approx(minus, abs=1e-14)
        assert plus[0] == pytest.approx(0.36)


class TestLimit:
    def test_two_scaling_table(self):
        report = spherical_limit_check(
            Fraction(1, 2), idempotent([1, 2]), [50, 100, 200]
        )
        assert report.killed == 2
        assert report.converging_scaling == "kappa_squared"
        last = report.rows[-1]
        assert last["n"] == 200
        assert last["error_kappa_squared"] < 0.02
        assert last["error_kappa"] > 0.1

    def test_b_one_is_exact_under_squared_scaling(self):
        report = spherical_limit_check(Fraction(1, 2), idempotent([3]), [100])
        row = report.rows[0]
        # kappa^2 * 100 is an integer here, so the coefficient is exact.
        assert row["error_kappa_squared"] == 0

    def test_report_serializes(self):
        report = spherical_limit_check(Fraction(1, 3), idempotent([1]), [30, 60])
        data = report.to_json()
        assert data["converging_scaling"] in ("kappa", "kappa_squared")
        assert len(data["rows"]) == 2
