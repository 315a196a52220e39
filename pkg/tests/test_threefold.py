"""Threefold lower-bound combinators and their exact volume identities."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from logfano.delta import interior_samples
from logfano.threefold import (
    COROLLARY_CONFIGS,
    corollary_suite,
    delta_bound_blowup,
    delta_bound_quadric,
    delta_bound_smooth,
    s_blowup_flag,
    s_plane_flag,
    verify_threefold_volumes,
)


class TestFlagInvariants:
    def test_plane_flag(self):
        assert s_plane_flag(4, F(1, 2)) == F(1, 2)
        assert s_plane_flag(3, F(2, 3)) == F(1, 2)
        assert s_plane_flag(4, F(0)) == 1

    def test_blowup_flag(self):
        assert s_blowup_flag(4, F(1, 2)) == F(3, 2)
        assert s_blowup_flag(6, F(1, 2)) == F(3, 4)
        assert s_blowup_flag(5, F(0)) == 3

    def test_domain(self):
        with pytest.raises(ValueError):
            s_plane_flag(6, F(2, 3))
        with pytest.raises(ValueError):
            delta_bound_blowup(6, 2, F(2, 3), F(1))
        with pytest.raises(ValueError):
            delta_bound_quadric(0, F(1, 2), F(1))
        with pytest.raises(ValueError):
            delta_bound_quadric(2, F(1), F(1))


class TestBounds:
    def test_smooth_cubic_surface(self):
        assert delta_bound_smooth(3, F(2, 3), F(5, 3)) == F(10, 9)

    def test_smooth_lambda_zero(self):
        assert delta_bound_smooth(5, F(0), F(1)) == 1

    def test_smooth_not_always_at_least_one(self):
        assert delta_bound_smooth(4, F(1, 2), F(1)) == F(2, 3)

    def test_blowup_node(self):
        assert delta_bound_blowup(4, 2, F(1, 2), F(1)) == F(4, 3)

    def test_blowup_sextic_quadruple(self):
        factor = F(4) * (3 - 2) / (3 * (4 - 3))
        assert delta_bound_blowup(6, 4, F(1, 2), F(15, 8)) == factor * min(1, F(15, 8))

    def test_blowup_lambda_zero(self):
        assert delta_bound_blowup(4, 2, F(0), F(1)) == 1

    def test_quadric_node(self):
        assert delta_bound_quadric(2, F(2, 3), F(1)) == F(20, 19)
        # term-by-term agreement with the specialized display at lambda = 2/3
        m = 2
        assert (3 - F(2, 3) * m) / (3 * (1 - F(2, 3))) == 3 - F(2 * m, 3)
        assert F(4) * (3 - F(2, 3) * m) / (15 - 6 - F(4, 3) * m) == 1 + F(9 - 4 * m, 27 - 4 * m)

    def test_quadric_lambda_zero_not_normalized(self):
        assert delta_bound_quadric(2, F(0), F(1)) == F(4, 5)

    def test_factor_consistency(self):
        # both blowup-bound arguments share the factor 4(3-lm)/(3(4-ls))
        for lam in interior_samples(F(0), F(3, 4), 5, 6):
            factor = F(4) * (3 - lam * 2) / (3 * (4 - lam * 4))
            for delta2d in (F(1, 2), F(1), F(7, 5)):
                assert delta_bound_blowup(4, 2, lam, delta2d) == min(factor, delta2d * factor)


class TestVolumes:
    @pytest.mark.parametrize("kind,params", [("plane", {"s": 4}), ("blowup", {"s": 4}), ("quadric", {})])
    def test_all_kinds(self, kind, params):
        for lam in interior_samples(F(0), F(3, 4), 5, 6):
            assert verify_threefold_volumes(kind, params, lam)

    def test_quadric_value(self):
        assert verify_threefold_volumes("quadric", {}, F(1, 3))
        assert verify_threefold_volumes("quadric", {}, F(0))

    def test_plane_params(self):
        assert verify_threefold_volumes("plane", {"s": 3}, F(2, 3))


class TestCorollaries:
    def test_all_certify(self):
        results = corollary_suite()
        assert len(results) == len(COROLLARY_CONFIGS)
        for r in results:
            assert r.certifies, r.config.name

    def test_reference_values(self):
        by_name = {r.config.name: r for r in corollary_suite()}
        assert by_name["quartic double solid, node"].bound == F(4, 3)
        assert by_name["quadric threefold section, node"].bound == F(20, 19)
        assert by_name["cubic surface, smooth point"].bound == F(10, 9)
        triple = by_name["quartic double solid, ordinary triple point"]
        assert triple.bound == 1 and not triple.strict
