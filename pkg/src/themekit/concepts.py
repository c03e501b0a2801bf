"""Domain ontology handling and key-concept identification.

The ontology is a single-rooted tree whose first level holds themes and
second level holds subthemes; a lexicon maps term surfaces to the concepts
they may denote. Ambiguous terms are resolved against already-validated
concepts with a taxonomic similarity measure (Wu-Palmer or Resnik).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .config import CorpusConfig
from .keyterms import KeyTermVector
from .preprocess import ProcessedDocument


class OntologyError(ValueError):
    pass


@dataclass(frozen=True)
class Concept:
    concept_id: str
    label: str
    parent: str | None


@dataclass
class Ontology:
    root: str
    concepts: dict[str, Concept]
    children: dict[str, list[str]]
    depth: dict[str, int]
    lexicon: dict[str, list[str]]

    def label_of(self, concept_id: str) -> str:
        return self.concepts[concept_id].label

    def ancestors(self, concept_id: str) -> list[str]:
        """Path from the concept up to the root, inclusive."""
        if concept_id not in self.concepts:
            raise OntologyError("unknown concept: %s" % concept_id)
        path = [concept_id]
        while self.concepts[path[-1]].parent is not None:
            path.append(self.concepts[path[-1]].parent)
        return path

    def lowest_common_ancestor(self, c1: str, c2: str) -> str:
        up = set(self.ancestors(c1))
        for c in self.ancestors(c2):
            if c in up:
                return c
        return self.root

    def candidates(self, term: str) -> list[str]:
        return self.lexicon.get(term, [])


def load_ontology(path: str | Path) -> Ontology:
    """Parse and validate an ontology file (see the JSON schema in README)."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    concepts: dict[str, Concept] = {}
    roots = []
    for row in data.get("concepts", []):
        c = Concept(row["id"], row.get("label", row["id"]), row.get("parent"))
        if c.concept_id in concepts:
            raise OntologyError("duplicate concept id: %s" % c.concept_id)
        concepts[c.concept_id] = c
        if c.parent is None:
            roots.append(c.concept_id)
    if len(roots) != 1:
        raise OntologyError(
            "ontology must have exactly one root, found %d" % len(roots)
        )
    root = roots[0]

    children: dict[str, list[str]] = {cid: [] for cid in concepts}
    for c in concepts.values():
        if c.parent is None:
            continue
        if c.parent not in concepts:
            raise OntologyError(
                "unknown parent for concept %s: %s" % (c.concept_id, c.parent)
            )
        children[c.parent].append(c.concept_id)
    for kids in children.values():
        kids.sort()

    depth = {root: 1}
    queue = [root]
    while queue:
        current = queue.pop()
        for child in children[current]:
            depth[child] = depth[current] + 1
            queue.append(child)
    missing = sorted(set(concepts) - set(depth))
    if missing:
        raise OntologyError(
            "concepts unreachable from root (cycle or orphan): %s"
            % ", ".join(missing)
        )

    lexicon: dict[str, list[str]] = {}
    for term, targets in data.get("lexicon", {}).items():
        if not targets:
            raise OntologyError("lexicon entry '%s' has no concepts" % term)
        for target in targets:
            if target not in concepts:
                raise OntologyError(
                    "unknown concept in lexicon entry '%s': %s" % (term, target)
                )
        lexicon[term] = sorted(targets)

    return Ontology(root, concepts, children, depth, lexicon)


def wu_palmer(ont: Ontology, c1: str, c2: str) -> float:
    """2 * depth(lca) / (depth(c1) + depth(c2)), root depth 1."""
    lca = ont.lowest_common_ancestor(c1, c2)
    return 2.0 * ont.depth[lca] / (ont.depth[c1] + ont.depth[c2])


def compute_ic(ont: Ontology, documents: list[ProcessedDocument]) -> dict[str, float]:
    """Information content per concept from corpus term occurrences.

    Each occurrence of a lexicon term spreads one count evenly over the
    term's candidate concepts. Every concept also receives one smoothing
    count, then counts are summed over subtrees; IC(c) = -ln(count(c) /
    count(root)), zero at the root by construction.
    """
    raw = {cid: 1.0 for cid in ont.concepts}
    for doc in documents:
        for stem, _ in doc.tokens:
            cands = ont.candidates(stem)
            if not cands:
                continue
            share = 1.0 / len(cands)
            for c in cands:
                raw[c] += share

    totals: dict[str, float] = {}

    def subtree(cid: str) -> float:
        total = raw[cid] + sum(subtree(k) for k in ont.children[cid])
        totals[cid] = total
        return total

    subtree(ont.root)
    root_total = totals[ont.root]
    return {cid: -math.log(totals[cid] / root_total) + 0.0 for cid in ont.concepts}


def resnik(ont: Ontology, c1: str, c2: str, ic: dict[str, float]) -> float:
    """Information content of the lowest common ancestor."""
    return ic[ont.lowest_common_ancestor(c1, c2)]


@dataclass
class KeyConceptEntry:
    concept_id: str
    weight: float
    terms: list[str] = field(default_factory=list)


@dataclass
class KeyConceptVector:
    doc_id: str
    entries: list[KeyConceptEntry] = field(default_factory=list)

    def weight_of(self, concept_id: str) -> float | None:
        for e in self.entries:
            if e.concept_id == concept_id:
                return e.weight
        return None


def similarity_for(
    ont: Ontology,
    cfg: CorpusConfig,
    ic_table: dict[str, float] | None = None,
) -> Callable[[str, str], float]:
    if cfg.similarity_measure == "wu_palmer":
        return lambda a, b: wu_palmer(ont, a, b)
    if ic_table is None:
        raise ValueError("resnik requires an information-content table")
    return lambda a, b: resnik(ont, a, b, ic_table)


def identify_concepts(
    vector: KeyTermVector,
    ont: Ontology,
    cfg: CorpusConfig,
    ic_table: dict[str, float] | None = None,
    similarity: Callable[[str, str], float] | None = None,
) -> KeyConceptVector:
    """Map a document's key terms to ontology concepts.

    Terms outside the lexicon are skipped. Terms with a single candidate
    validate it immediately; ambiguous terms are then resolved in descending
    weight order, each picking the candidate whose summed similarity to the
    already-validated concepts is highest. When nothing is validated yet,
    the two heaviest ambiguous terms seed the list with the candidate pair
    of maximal pairwise similarity. Concept weights follow from the bound
    term weights divided by the total number of key terms.
    """
    if similarity is None:
        similarity = similarity_for(ont, cfg, ic_table)

    bound: dict[str, list] = {}
    validated: list[str] = []

    def bind(entry, concept_id: str) -> None:
        bound.setdefault(concept_id, []).append(entry)
        if concept_id not in validated:
            validated.append(concept_id)

    ambiguous = []
    for entry in vector.entries:
        cands = ont.candidates(entry.term)
        if not cands:
            continue
        if len(cands) == 1:
            bind(entry, cands[0])
        else:
            ambiguous.append(entry)
    ambiguous.sort(key=lambda e: (-e.weight, e.term))

    if not validated and len(ambiguous) >= 2:
        first, second = ambiguous[0], ambiguous[1]
        best = None
        for c1 in ont.candidates(first.term):
            for c2 in ont.candidates(second.term):
                key = (-similarity(c1, c2), c1, c2)
                if best is None or key < best:
                    best = key
        bind(first, best[1])
        bind(second, best[2])
        ambiguous = ambiguous[2:]

    for entry in ambiguous:
        best = None
        for cand in ont.candidates(entry.term):
            score = sum(similarity(cand, v) for v in validated)
            prior = max((e.weight for e in bound.get(cand, [])), default=0.0)
            key = (-score, -prior, cand)
            if best is None or key < best:
                best = key
        bind(entry, best[2])

    nb_key_terms = len(vector.entries)
    entries = []
    for concept_id in validated:
        supporters = bound[concept_id]
        weight = sum(e.weight for e in supporters) / nb_key_terms
        entries.append(
            KeyConceptEntry(concept_id, weight, [e.term for e in supporters])
        )
    entries.sort(key=lambda e: (-e.weight, e.concept_id))
    return KeyConceptVector(doc_id=vector.doc_id, entries=entries)
