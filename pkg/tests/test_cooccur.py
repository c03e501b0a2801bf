from __future__ import annotations

import random

import pytest

from oracles import recount_global_confidence, recount_local_confidence
from themekit.cooccur import (
    SCOPE_GLOBAL,
    SCOPE_LOCAL,
    build_network,
    detect_compounds,
    enrich_vector,
    CooccurrenceNetwork,
)
from themekit.keyterms import (
    SOURCE_COMPOUND,
    SOURCE_INFERRED,
    KeyTermEntry,
    KeyTermVector,
)
from themekit.preprocess import ProcessedDocument


def _doc(doc_id: str, stems: list[str]) -> ProcessedDocument:
    return ProcessedDocument(doc_id, [(s, i) for i, s in enumerate(stems)])


def _vector(doc_id: str, weights: dict[str, float]) -> KeyTermVector:
    v = KeyTermVector(doc_id, [KeyTermEntry(t, w) for t, w in weights.items()])
    v.sort()
    return v


def test_global_confidence_worked_example():
    # t1 in two documents, co-windowed with t2 in only one of them
    docs = [
        _doc("d1", ["t1", "t2", "x"]),
        _doc("d2", ["t1", "x", "x", "x", "x", "t2"]),
        _doc("d3", ["x", "t2"]),
    ]
    net = build_network(docs, window=3, scope=SCOPE_GLOBAL)
    assert net.confidence("t1", "t2") == 0.5
    assert recount_global_confidence(
        {"d1": ["t1", "t2", "x"], "d2": ["t1", "x", "x", "x", "x", "t2"], "d3": ["x", "t2"]},
        3, "t1", "t2") == 0.5


def test_identity_confidence_is_one():
    docs = [_doc("d1", ["a", "b"]), _doc("d2", ["b", "c"])]
    net = build_network(docs, window=2, scope=SCOPE_GLOBAL)
    for t in ("a", "b", "c"):
        assert net.confidence(t, t) == 1.0


def test_unknown_term_confidence_none():
    net = build_network([_doc("d1", ["a"])], window=2)
    assert net.confidence("zzz", "a") is None


def test_confidence_asymmetry():
    docs = [
        _doc("d1", ["a", "b"]),
        _doc("d2", ["a", "b"]),
        _doc("d3", ["a", "x"]),
        _doc("d4", ["b", "x"]),
    ]
    net = build_network(docs, window=2)
    # a occurs in 3 docs, near b in 2; b occurs in 3 docs, near a in 2
    assert net.confidence("a", "b") == pytest.approx(2 / 3)
    assert net.confidence("b", "a") == pytest.approx(2 / 3)
    docs.append(_doc("d5", ["a", "q"]))
    net = build_network(docs, window=2)
    assert net.confidence("a", "b") == pytest.approx(2 / 4)
    assert net.confidence("b", "a") == pytest.approx(2 / 3)


def test_window_bounds_are_inclusive_span():
    # distance window-1 is in; distance window is out
    docs = [_doc("d1", ["a", "x", "b"])]
    near = build_network(docs, window=3)
    far = build_network(docs, window=2)
    assert near.confidence("a", "b") == 1.0
    assert far.confidence("a", "b") == 0.0


def test_window_below_two_rejected():
    with pytest.raises(ValueError, match="window"):
        build_network([_doc("d1", ["a"])], window=1)


def test_local_scope_requires_single_document():
    docs = [_doc("d1", ["a"]), _doc("d2", ["b"])]
    with pytest.raises(ValueError, match="local"):
        build_network(docs, window=2, scope=SCOPE_LOCAL)


def test_local_counts_are_occurrences_and_forward():
    doc = _doc("d", ["program", "languag", "program", "languag", "program"])
    net = build_network([doc], window=2, scope=SCOPE_LOCAL)
    assert net.counts["program"] == 3
    # two of three "program" occurrences are followed by "languag"
    assert net.confidence("program", "languag") == pytest.approx(2 / 3)
    # every "languag" is followed by "program"
    assert net.confidence("languag", "program") == 1.0


def test_global_confidence_matches_recount_oracle():
    rng = random.Random(99)
    vocab = ["a", "b", "c", "d", "e"]
    for trial in range(30):
        corpus = {
            f"d{i}": [rng.choice(vocab) for _ in range(rng.randrange(1, 25))]
            for i in range(rng.randrange(1, 8))
        }
        window = rng.randrange(2, 6)
        docs = [_doc(k, stems) for k, stems in corpus.items()]
        net = build_network(docs, window=window, scope=SCOPE_GLOBAL)
        for t1 in vocab:
            for t2 in vocab:
                expected = recount_global_confidence(corpus, window, t1, t2)
                got = net.confidence(t1, t2)
                assert got == expected, (trial, t1, t2, got, expected)


def test_local_confidence_matches_recount_oracle():
    rng = random.Random(41)
    vocab = ["a", "b", "c", "d"]
    for trial in range(30):
        stems = [rng.choice(vocab) for _ in range(rng.randrange(1, 40))]
        window = rng.randrange(2, 5)
        net = build_network([_doc("d", stems)], window=window, scope=SCOPE_LOCAL)
        for t1 in vocab:
            for t2 in vocab:
                expected = recount_local_confidence(stems, window, t1, t2)
                got = net.confidence(t1, t2)
                if expected is None or t1 == t2:
                    assert got == expected or (expected == 1.0 and got == 1.0)
                else:
                    assert got == expected, (trial, t1, t2)


def test_compound_detected_for_systematic_pair():
    doc = _doc("d", ["mobil", "agent", "x", "mobil", "agent", "y", "agent"])
    vector = _vector("d", {"mobil": 0.8, "agent": 1.0, "x": 0.1})
    out = detect_compounds(vector, doc, local_window=2, min_support=2)
    compound = [e for e in out.entries if e.source == SOURCE_COMPOUND]
    assert len(compound) == 1
    assert compound[0].term == "mobil agent"
    assert compound[0].weight == 1.0  # max of the part weights
    # originals retained untouched
    assert out.weight_of("mobil") == 0.8
    assert out.weight_of("agent") == 1.0


def test_no_compound_below_perfect_confidence():
    # 9 of 10 occurrences adjacent: conf 0.9, no compound
    stems = ["a", "b", "z"] * 9 + ["a", "x"]
    doc = _doc("d", stems)
    vector = _vector("d", {"a": 1.0, "b": 0.5})
    out = detect_compounds(vector, doc)
    assert all(e.source != SOURCE_COMPOUND for e in out.entries)


def test_no_compound_at_support_one_and_floor_removal():
    doc = _doc("d", ["secret", "kei", "x", "y"])
    vector = _vector("d", {"secret": 0.9, "kei": 0.7})
    floored = detect_compounds(vector, doc, min_support=2)
    assert all(e.source != SOURCE_COMPOUND for e in floored.entries)
    # dropping the floor admits exactly the support-1 pairs and nothing else
    unfloored = detect_compounds(vector, doc, min_support=1)
    added = {e.term for e in unfloored.entries} - {e.term for e in floored.entries}
    assert added == {"secret kei"}


def test_compound_not_duplicated_when_present():
    doc = _doc("d", ["mobil", "agent", "mobil", "agent"])
    vector = _vector("d", {"mobil": 0.8, "agent": 1.0, "mobil agent": 0.9})
    out = detect_compounds(vector, doc)
    assert out.terms().count("mobil agent") == 1
    assert out.weight_of("mobil agent") == 0.9


def test_enrichment_worked_example_max_merge():
    # two sources infer u with conf * weight = 0.4 and 0.6; 0.6 wins
    net = CooccurrenceNetwork(
        scope=SCOPE_GLOBAL,
        window=20,
        counts={"a": 10, "b": 10, "u": 4},
        joints={"a": {"u": 8}, "b": {"u": 10}},
    )
    vector = _vector("d", {"a": 0.5, "b": 0.6})
    out = enrich_vector(vector, net, threshold=0.8)
    # candidate votes: a -> 0.8 * 0.5 = 0.4, b -> 1.0 * 0.6 = 0.6
    assert out.weight_of("u") == pytest.approx(0.6)
    (entry,) = [e for e in out.entries if e.term == "u"]
    assert entry.source == SOURCE_INFERRED
    # oracle: enumerate every inference path and take the best
    best = max(
        (net.confidence(t, "u") * vector.weight_of(t))
        for t in ("a", "b")
        if net.confidence(t, "u") >= 0.8
    )
    assert out.weight_of("u") == pytest.approx(best)


def test_enrichment_threshold_filters_weak_edges():
    net = CooccurrenceNetwork(
        scope=SCOPE_GLOBAL, window=20,
        counts={"a": 10, "u": 3}, joints={"a": {"u": 7}},
    )
    vector = _vector("d", {"a": 1.0})
    assert enrich_vector(vector, net, threshold=0.8).weight_of("u") is None
    assert enrich_vector(vector, net, threshold=0.7).weight_of("u") == pytest.approx(0.7)


def test_enrichment_noop_when_no_perfect_edges_at_threshold_one():
    net = CooccurrenceNetwork(
        scope=SCOPE_GLOBAL, window=20,
        counts={"a": 10, "u": 3}, joints={"a": {"u": 9}},
    )
    vector = _vector("d", {"a": 1.0})
    out = enrich_vector(vector, net, threshold=1.0)
    assert out.terms() == vector.terms()


def test_enrichment_never_overwrites_existing_terms():
    net = CooccurrenceNetwork(
        scope=SCOPE_GLOBAL, window=20,
        counts={"a": 10, "b": 5}, joints={"a": {"b": 10}},
    )
    vector = _vector("d", {"a": 1.0, "b": 0.2})
    out = enrich_vector(vector, net, threshold=0.5)
    assert out.weight_of("b") == 0.2


def test_enrichment_single_pass_no_cascade():
    # a infers u perfectly; u infers v perfectly; v must not appear
    net = CooccurrenceNetwork(
        scope=SCOPE_GLOBAL, window=20,
        counts={"a": 4, "u": 4, "v": 4},
        joints={"a": {"u": 4}, "u": {"v": 4}},
    )
    vector = _vector("d", {"a": 1.0})
    out = enrich_vector(vector, net, threshold=1.0)
    assert out.weight_of("u") == 1.0
    assert out.weight_of("v") is None


def test_enrichment_invalid_threshold_rejected():
    net = CooccurrenceNetwork(scope=SCOPE_GLOBAL, window=20)
    with pytest.raises(ValueError, match="threshold"):
        enrich_vector(_vector("d", {}), net, threshold=1.5)


def test_lowering_threshold_only_adds_terms():
    rng = random.Random(7)
    vocab = ["a", "b", "c", "d", "e", "f"]
    for _ in range(20):
        docs = [
            _doc(f"d{i}", [rng.choice(vocab) for _ in range(rng.randrange(2, 15))])
            for i in range(5)
        ]
        net = build_network(docs, window=4)
        vector = _vector("q", {t: rng.random() for t in rng.sample(vocab, 3)})
        strict = set(enrich_vector(vector, net, threshold=0.9).terms())
        loose = set(enrich_vector(vector, net, threshold=0.5).terms())
        assert strict <= loose


def test_edges_report_matches_confidence():
    docs = [_doc("d1", ["a", "b", "c"]), _doc("d2", ["a", "b"])]
    net = build_network(docs, window=2)
    for t1, t2, conf, support in net.edges():
        assert conf == net.confidence(t1, t2)
        assert support == net.support(t1, t2)
        assert support >= 1
