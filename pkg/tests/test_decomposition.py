"""Measure tables, inversion into partial contributions, and serialization."""

import math
import random

import pytest

from causaldecomp.decomposition import (
    MACE_CAP,
    Decomposition,
    MeasureTable,
    check_monotone,
    invert,
    measure_from_text,
    measure_to_text,
    decomposition_to_text,
    mobius_transform,
    redundant_measure,
    signed_redundant_measure,
    total_synergy,
    zeta_transform,
)
from causaldecomp.errors import (
    IncompleteMeasureError,
    MeasureDomainError,
    MonotonicityError,
    NegativePartialError,
)
from causaldecomp.lattice import build_lattice, canonicalize

import oracles


def diamond_measure(e0, e1, pair, signed=False):
    lat = build_lattice(2)
    table = {0b01: e0, 0b10: e1, 0b11: pair}
    if signed:
        return signed_redundant_measure(lat, table)
    return redundant_measure(lat, table)


def by_label(decomp):
    return {a.label(): v for a, v in decomp.partials.items()}


def random_monotone_table(n, rnd):
    """Random nonnegative subset measure made monotone by max-closure."""
    raw = {mask: rnd.random() for mask in range(1, 1 << n)}
    return oracles.monotone_subset_closure(raw)


# == redundant measures =======================================================


class TestRedundantMeasure:
    def test_min_over_members(self):
        m = diamond_measure(0.5, 0.25, 1.0)
        assert m.value(canonicalize([(0,), (1,)])) == 0.25
        assert m.value(canonicalize([(0,)])) == 0.5
        assert m.value(canonicalize([(0, 1)])) == 1.0

    def test_rejects_negative_effects(self):
        with pytest.raises(MeasureDomainError, match="signed"):
            diamond_measure(-0.5, 0.25, 1.0)

    def test_incomplete_subset_table(self):
        lat = build_lattice(2)
        with pytest.raises(IncompleteMeasureError, match=r"\{01\}"):
            redundant_measure(lat, {0b01: 0.5, 0b10: 0.25})

    def test_signed_all_positive_is_min(self):
        m = diamond_measure(0.5, 0.25, 1.0, signed=True)
        assert m.value(canonicalize([(0,), (1,)])) == 0.25

    def test_signed_all_negative_is_max(self):
        m = diamond_measure(-0.5, -3.0, 1.5, signed=True)
        assert m.value(canonicalize([(0,), (1,)])) == -0.5

    def test_signed_mixed_is_zero(self):
        m = diamond_measure(-0.5, 0.25, 1.0, signed=True)
        assert m.value(canonicalize([(0,), (1,)])) == 0.0

    def test_measure_table_completeness(self):
        lat = build_lattice(2)
        with pytest.raises(IncompleteMeasureError):
            MeasureTable(lat, {lat.bottom: 0.0}, MACE_CAP)

    def test_measure_table_kind_check(self):
        lat = build_lattice(2)
        vals = {a: 1.0 for a in lat.nodes}
        with pytest.raises(MeasureDomainError):
            MeasureTable(lat, vals, "bogus_kind")


# == transforms ===============================================================


class TestTransforms:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_zeta_then_mobius_is_identity(self, n):
        lat = build_lattice(n)
        rnd = random.Random(n * 31)
        raw = {a: rnd.randint(-50, 50) for a in lat.nodes}
        summed = zeta_transform(lat, raw)
        back = mobius_transform(lat, summed)
        assert back == raw  # exact integers end to end

    def test_mobius_matches_oracle(self):
        lat = build_lattice(3)
        fams = [oracles.family_from_antichain(a) for a in lat.nodes]
        rnd = random.Random(5)
        vals = {a: rnd.randint(-9, 9) for a in lat.nodes}
        expected = oracles.invert_by_forward_substitution(
            fams, {f: vals[a] for f, a in zip(fams, lat.nodes)}
        )
        got = mobius_transform(lat, vals)
        assert got == {
            a: expected[f] for a, f in zip(lat.nodes, fams)
        }


# == inversion ================================================================


class TestInvert:
    def test_diamond_closed_form(self):
        d = invert(diamond_measure(0.5, 0.5, 1.0))
        assert by_label(d) == {
            "{0}{1}": 0.5, "{0}": 0.0, "{1}": 0.0, "{01}": 0.5,
        }
        assert d.reconstruction_residual == 0.0

    def test_copy_style_unique(self):
        d = invert(diamond_measure(1.0, 0.0, 1.0))
        assert by_label(d)["{0}"] == 1.0
        assert sum(abs(v) for a, v in by_label(d).items() if a != "{0}") == 0.0

    def test_signed_diamond(self):
        d = invert(diamond_measure(-0.5, -3.0, 1.5, signed=True))
        assert by_label(d) == {
            "{0}{1}": -0.5, "{0}": 0.0, "{1}": -2.5, "{01}": 4.5,
        }

    @pytest.mark.parametrize("n", [2, 3])
    def test_random_monotone_measures_reconstruct(self, n):
        lat = build_lattice(n)
        rnd = random.Random(n * 1009)
        for _ in range(200):
            table = random_monotone_table(n, rnd)
            m = redundant_measure(lat, table)
            d = invert(m)
            assert not check_monotone(m)
            assert d.reconstruction_residual <= 1e-9
            assert all(v >= -1e-9 for v in d.partials.values())
            # partials sum back to the top measure value
            assert math.isclose(
                sum(d.partials.values()), table[(1 << n) - 1], abs_tol=1e-9
            )

    def test_sum_telescopes_to_every_downset(self):
        # zeta of the partials returns the measure at every node, not just top
        lat = build_lattice(3)
        rnd = random.Random(77)
        table = random_monotone_table(3, rnd)
        m = redundant_measure(lat, table)
        d = invert(m)
        summed = zeta_transform(lat, d.partials)
        for a in lat.nodes:
            assert math.isclose(summed[a], m.value(a), abs_tol=1e-9)

    def test_monotonicity_gate(self):
        # bottom above its parents: min(e0,e1) > e0 impossible, so build raw table
        lat = build_lattice(2)
        vals = {
            lat.bottom: 0.9,
            canonicalize([(0,)]): 0.1,
            canonicalize([(1,)]): 0.9,
            lat.top: 1.0,
        }
        broken = MeasureTable(lat, vals, MACE_CAP)
        assert check_monotone(broken)
        with pytest.raises(MonotonicityError):
            invert(broken)

    def test_signed_measures_skip_gate(self):
        d = invert(diamond_measure(-0.5, 0.25, 1.0, signed=True))
        assert isinstance(d, Decomposition)

    def test_negative_partial_clamp_and_raise(self):
        lat = build_lattice(2)
        vals = {
            lat.bottom: 0.0,
            canonicalize([(0,)]): 0.0,
            canonicalize([(1,)]): 0.0,
            lat.top: -0.5,
        }
        # kind check would reject a negative mace_cap table up front
        with pytest.raises(MeasureDomainError):
            MeasureTable(lat, vals, MACE_CAP)
        tiny = dict(vals)
        tiny[lat.top] = 0.0
        tiny[canonicalize([(0,)])] = -5e-10  # inside clamp tolerance
        with pytest.raises(MeasureDomainError):
            MeasureTable(lat, tiny, MACE_CAP)

    def test_negative_partial_raises_for_non_min_form_table(self):
        # monotone on the lattice, but not a min over any subset measure:
        # v(bottom)=0, v({0})=v({1})=v(top)=1 puts -1 on the top partial
        lat = build_lattice(2)
        vals = {
            lat.bottom: 0.0,
            canonicalize([(0,)]): 1.0,
            canonicalize([(1,)]): 1.0,
            lat.top: 1.0,
        }
        table = MeasureTable(lat, vals, MACE_CAP)
        assert not check_monotone(table)
        with pytest.raises(NegativePartialError, match=r"\{01\}"):
            invert(table)

    def test_signed_path_keeps_negative_partials(self):
        d = invert(diamond_measure(-1.0, -1.0, -3.0, signed=True))
        assert by_label(d)["{01}"] == -2.0


class TestDerived:
    def test_total_synergy_xor_like(self):
        d = invert(diamond_measure(0.0, 0.0, 1.0))
        assert total_synergy(d) == 1.0

    def test_total_synergy_excludes_singleton_antichains(self):
        d = invert(diamond_measure(0.5, 0.5, 1.0))
        assert total_synergy(d) == 0.5  # only {01} counts

    def test_nonzero_listing(self):
        d = invert(diamond_measure(0.5, 0.5, 1.0))
        labels = [a.label() for a in d.nonzero()]
        assert labels == ["{0}{1}", "{01}"]
        assert d.nonzero(threshold=0.6) == {}


# == serialization ============================================================


class TestSerialization:
    def test_measure_round_trip(self):
        m = diamond_measure(0.5, 0.25, 1.0)
        text = measure_to_text(m)
        again = measure_from_text(build_lattice(2), text)
        assert again.kind == m.kind
        for a in m.lattice.nodes:
            assert again.value(a) == m.value(a)

    def test_decomposition_text_contains_residual(self):
        d = invert(diamond_measure(0.5, 0.5, 1.0))
        text = decomposition_to_text(d)
        assert "# reconstruction_residual=" in text
        assert "{0}{1},0.5,mace_cap" in text

    def test_measure_text_format(self):
        m = diamond_measure(0.5, 0.25, 1.0)
        lines = measure_to_text(m).splitlines()
        assert lines[0] == "antichain,value,kind"
        assert lines[1] == "{0}{1},0.25,mace_cap"

    def test_from_text_rejects_unknown_label(self):
        text = "antichain,value,kind\n{09},1.0,mace_cap\n"
        with pytest.raises(Exception):
            measure_from_text(build_lattice(2), text)
