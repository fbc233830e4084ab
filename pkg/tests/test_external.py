"""Effects-document loading, validation, round trips, and decomposition."""

import io
import json
from pathlib import Path

import pytest

from causaldecomp.errors import EffectsFormatError
from causaldecomp.models import dump_external_effects, load_external_effects
from causaldecomp.pipelines import aggregate_partials, context_decompositions

DATA = Path(__file__).parent / "data"

GOOD = {
    "variables": ["not", "bad"],
    "contexts": [
        {"label": "this movie is", "effects": {"0": -0.4, "1": -3.1, "0,1": 1.2}},
    ],
}


def load_doc(doc):
    return load_external_effects(io.StringIO(json.dumps(doc)))


def variant(**changes):
    doc = json.loads(json.dumps(GOOD))
    doc.update(changes)
    return doc


class TestLoad:
    def test_minimal_document(self):
        eff = load_doc(GOOD)
        assert eff.variables == ("not", "bad")
        assert eff.n == 2
        assert eff.contexts[0].label == "this movie is"
        assert eff.contexts[0].effects == {0b01: -0.4, 0b10: -3.1, 0b11: 1.2}
        assert eff.metadata == {}

    def test_from_path(self, tmp_path):
        p = tmp_path / "effects.json"
        p.write_text(json.dumps(GOOD))
        assert load_external_effects(p).n == 2
        assert load_external_effects(str(p)).n == 2

    def test_metadata_passthrough(self):
        eff = load_doc(variant(metadata={"model": "demo", "nested": {"a": 1}}))
        assert eff.metadata["nested"] == {"a": 1}

    def test_fixture_file(self):
        eff = load_external_effects(DATA / "sentiment_effects.json")
        assert eff.variables == ("not", "bad")
        assert len(eff.contexts) == 25
        labels = [c.label for c in eff.contexts]
        assert labels[0] == "this movie is"
        assert len(set(labels)) == 25
        assert "synthetic" in eff.metadata["description"]


class TestValidation:
    def test_top_level_not_object(self):
        with pytest.raises(EffectsFormatError, match="top level"):
            load_external_effects(io.StringIO("[1, 2]"))

    def test_variables_missing(self):
        with pytest.raises(EffectsFormatError, match="variables"):
            load_doc({"contexts": GOOD["contexts"]})

    def test_variables_empty(self):
        with pytest.raises(EffectsFormatError, match="variables"):
            load_doc(variant(variables=[]))

    def test_variables_not_strings(self):
        with pytest.raises(EffectsFormatError, match="variables"):
            load_doc(variant(variables=["not", 3]))

    def test_too_many_variables(self):
        doc = {
            "variables": [f"w{i}" for i in range(6)],
            "contexts": [],
        }
        with pytest.raises(EffectsFormatError, match="at most 5"):
            load_doc(doc)

    def test_contexts_empty(self):
        with pytest.raises(EffectsFormatError, match="contexts"):
            load_doc(variant(contexts=[]))

    def test_context_label_missing(self):
        doc = variant(contexts=[{"effects": {"0": 0.1, "1": 0.2, "0,1": 0.3}}])
        with pytest.raises(EffectsFormatError, match="context 0"):
            load_doc(doc)

    def test_effect_key_garbage(self):
        doc = variant(
            contexts=[{"label": "x", "effects": {"zero": 0.1, "1": 0.2, "0,1": 0.3}}]
        )
        with pytest.raises(EffectsFormatError, match="'zero'"):
            load_doc(doc)

    def test_effect_key_out_of_range(self):
        doc = variant(
            contexts=[{"label": "x", "effects": {"0": 0.1, "2": 0.2, "0,1": 0.3}}]
        )
        with pytest.raises(EffectsFormatError, match="variable 2"):
            load_doc(doc)

    def test_effect_key_repeats_variable(self):
        doc = variant(
            contexts=[{"label": "x", "effects": {"0,0": 0.1, "1": 0.2, "0,1": 0.3}}]
        )
        with pytest.raises(EffectsFormatError, match="repeats"):
            load_doc(doc)

    def test_effect_missing_subset(self):
        doc = variant(contexts=[{"label": "x", "effects": {"0": 0.1, "1": 0.2}}])
        with pytest.raises(EffectsFormatError, match=r"missing effect for subset \{01\}"):
            load_doc(doc)

    def test_effect_value_boolean_rejected(self):
        doc = variant(
            contexts=[{"label": "x", "effects": {"0": True, "1": 0.2, "0,1": 0.3}}]
        )
        with pytest.raises(EffectsFormatError, match="not a number"):
            load_doc(doc)

    def test_error_names_offending_context(self):
        doc = variant(
            contexts=[
                {"label": "fine", "effects": {"0": 0.1, "1": 0.2, "0,1": 0.3}},
                {"label": "broken", "effects": {"0": 0.1}},
            ]
        )
        with pytest.raises(EffectsFormatError, match="context 1 \\('broken'\\)"):
            load_doc(doc)


class TestRoundTrip:
    def test_dump_then_load(self):
        eff = load_external_effects(DATA / "sentiment_effects.json")
        text = dump_external_effects(eff)
        again = load_external_effects(io.StringIO(text))
        assert again.variables == eff.variables
        assert again.metadata == dict(eff.metadata)
        for a, b in zip(again.contexts, eff.contexts):
            assert a.label == b.label
            assert a.effects == b.effects

    def test_dump_emits_sorted_keys(self):
        eff = load_doc(GOOD)
        doc = json.loads(dump_external_effects(eff))
        assert list(doc["contexts"][0]["effects"]) == ["0", "1", "0,1"]


class TestDecomposition:
    def test_context_decompositions_labels(self):
        eff = load_external_effects(DATA / "sentiment_effects.json")
        pairs = context_decompositions(eff)
        assert len(pairs) == 25
        assert pairs[0][0] == "this movie is"
        d = pairs[0][1]
        assert d.source_kind == "signed_ce_cap"

    def test_negation_pattern(self):
        # archetype: each word negative alone, the pair positive, and the
        # second word much more negative than the first. The shared part is
        # then the weaker negative effect, the first word keeps no unique
        # effect, the second keeps the gap, and the pair picks up a large
        # positive interaction. One context has a slightly positive first
        # word, where the mixed signs share nothing.
        eff = load_external_effects(DATA / "sentiment_effects.json")
        for label, d in context_decompositions(eff):
            got = {a.label(names=eff.variables): v for a, v in d.partials.items()}
            ctx = next(c for c in eff.contexts if c.label == label)
            e_not, e_bad = ctx.effects[0b01], ctx.effects[0b10]
            if e_not < 0:
                assert got["{not}{bad}"] == max(e_not, e_bad) < 0, label
                assert got["{not}"] == 0.0, label
            else:
                assert got["{not}{bad}"] == 0.0, label
                assert got["{not}"] == e_not > 0, label
            assert got["{bad}"] < 0, label
            assert got["{not,bad}"] > 0, label

    def test_partials_sum_to_pair_effect(self):
        eff = load_external_effects(DATA / "sentiment_effects.json")
        for label, d in context_decompositions(eff):
            ctx = next(c for c in eff.contexts if c.label == label)
            assert abs(sum(d.partials.values()) - ctx.effects[0b11]) <= 1e-9

    def test_aggregate_partials(self):
        eff = load_external_effects(DATA / "sentiment_effects.json")
        pairs = context_decompositions(eff)
        mean, std, worst = aggregate_partials([d for _, d in pairs])
        top = [a for a in mean if a.label() == "{01}"][0]
        assert mean[top] > 0
        assert std[top] > 0
        assert worst <= 1e-9
