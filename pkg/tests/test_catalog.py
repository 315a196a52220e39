"""Catalog integrity: transcription invariants and fault detection."""

from __future__ import annotations

import dataclasses
from fractions import Fraction as F

import pytest

from logfano.catalog import (
    CASES,
    DegreeNotAdmissible,
    UnknownCase,
    build_case,
    case_ids,
    list_cases,
    validate_catalog,
)


class TestShippedCatalog:
    def test_clean(self):
        assert validate_catalog() == []

    def test_size_and_coverage(self):
        assert len(CASES) >= 30
        ids = set(CASES)
        for required in [
            "line_component_smooth_point", "smooth_conic", "smooth_cubic_tangent2",
            "smooth_cubic_flex", "smooth_quartic_flex", "smooth_quartic_hyperflex",
            "A1", "A2", "A3", "A4", "A5", "A5_line_in_C", "A6", "A7",
            "D4", "D5", "D6", "E6", "E7", "four_concurrent_lines",
            "double_line", "triple_line", "quadruple_line", "double_conic",
        ]:
            assert required in ids

    def test_listing(self):
        listing = {cid: (label, degrees, validity) for cid, label, degrees, validity in list_cases()}
        assert listing["A7"][2] == ((4, F(3, 8), F(5, 8)),)
        assert listing["quadruple_line"][2] == ((4, F(0), F(1, 4)),)
        assert listing["line_component_smooth_point"][1] == (1, 2, 3, 4)

    def test_stable_order(self):
        assert list(case_ids()) == sorted(case_ids(), key=lambda cid: CASES[cid].order)

    def test_pullback_identities_all_cases(self):
        for spec in CASES.values():
            if "L" not in spec.model.curves:
                continue
            e2 = spec.model.pairing("E", "E")
            el = spec.model.pairing("E", "L")
            l2 = spec.model.pairing("L", "L")
            assert el + spec.m_L * e2 == 0, spec.id
            assert l2 + spec.m_L * el == 1, spec.id

    def test_log_discrepancy_identity_all_cases(self):
        for spec in CASES.values():
            assert (1 + spec.k_E, -spec.m_C) == spec.printed_A, spec.id

    def test_validity_inside_log_fano_range(self):
        for spec in CASES.values():
            for row in spec.rows:
                assert 0 <= row.lo < row.hi
                assert row.hi * row.d <= 3

    def test_aliases_resolve(self):
        for spec in CASES.values():
            if spec.alias_of is not None:
                assert spec.alias_of in CASES


class TestBuildCase:
    def test_cusp_data(self):
        model, factory, spec = build_case("A2", 4)
        assert model.gram == ((F(-1, 6), F(1, 2)), (F(1, 2), F(-1, 2)))
        assert spec.k_E == 4 and spec.m_C == 6 and spec.m_L == 3
        assert spec.printed_A == (5, -6)

    def test_e6_data(self):
        model, factory, spec = build_case("E6", 4)
        assert model.gram == ((F(-1, 12), F(1, 3)), (F(1, 3), F(-1, 3)))
        assert spec.k_E == 6 and spec.m_C == 12
        assert spec.printed_A == (7, -12)

    def test_node_data(self):
        model, factory, spec = build_case("A1", 4)
        assert model.curves == ("E",)
        assert model.gram == ((F(-1),),)
        assert spec.k_E == 1 and spec.m_C == 2
        assert spec.printed_A == (2, -2)

    def test_factory_range(self):
        _, factory, _ = build_case("A2", 4)
        with pytest.raises(ValueError):
            factory(F(3, 4))
        with pytest.raises(ValueError):
            factory(F(-1, 8))

    def test_unknown_case(self):
        with pytest.raises(UnknownCase):
            build_case("A99", 4)

    def test_degree_not_admissible(self):
        with pytest.raises(DegreeNotAdmissible):
            build_case("A2", 2)


def _mutated(spec, **changes):
    return {spec.id: dataclasses.replace(spec, **changes)}


class TestFaultDetection:
    def test_wrong_curve_multiplicity(self):
        spec = CASES["A2"]
        bad = _mutated(spec, m_C=F(5))
        msgs = validate_catalog(bad)
        assert any("A(l) mismatch" in m and "5-5l" in m and "5-6l" in m for m in msgs)

    def test_different_out_of_range(self):
        spec = CASES["A2"]
        var = spec.variants[0]
        pts = tuple(
            dataclasses.replace(pt, coeff=(F(3, 2), F(0)), orbifold_order=None) if pt.label == "P1" else pt
            for pt in var.points
        )
        bad = _mutated(spec, variants=(dataclasses.replace(var, points=pts),))
        msgs = validate_catalog(bad)
        assert any("out of [0,1)" in m for m in msgs)

    def test_asymmetric_gram_rejected_by_model(self):
        with pytest.raises(ValueError):
            dataclasses.replace(
                CASES["A2"].model,
                gram=((F(-1, 6), F(1, 2)), (F(1, 3), F(-1, 2))),
            )

    def test_broken_pullback_identity(self):
        spec = CASES["A2"]
        model = dataclasses.replace(spec.model, gram=((F(-1, 5), F(1, 2)), (F(1, 2), F(-1, 2))))
        msgs = validate_catalog(_mutated(spec, model=model))
        assert any("pullback identity" in m for m in msgs)

    def test_orbifold_coefficient_mismatch(self):
        spec = CASES["E6"]
        var = spec.variants[0]
        pts = tuple(
            dataclasses.replace(pt, coeff=(F(3, 5), F(0))) if pt.label == "P1" else pt
            for pt in var.points
        )
        msgs = validate_catalog(_mutated(spec, variants=(dataclasses.replace(var, points=pts),)))
        assert any("1 - 1/4" in m for m in msgs)
