"""Document annotation: pertinence per theme, major and minor themes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .concepts import KeyConceptVector, Ontology

# Tree levels carrying the two annotation granularities: the root's children
# are themes, their children subthemes (root itself has depth 1).
_GRANULARITY_DEPTH = {"theme": 2, "subtheme": 3}

# Eq-style pertinence divides by the document's concept count; the variant
# divides by the number of detected themes instead.
DIVISOR_CONCEPTS = "concepts"
DIVISOR_THEMES = "themes"


@dataclass
class ThemeScore:
    theme_id: str
    pertinence: float
    concept_ids: list[str] = field(default_factory=list)


@dataclass
class ThematicAnnotation:
    """Major theme plus minor themes of one document, pertinence descending."""

    doc_id: str
    granularity: str
    major: ThemeScore
    minors: list[ThemeScore] = field(default_factory=list)

    def scores(self) -> list[ThemeScore]:
        return [self.major] + self.minors

    def theme_ids(self) -> list[str]:
        return [s.theme_id for s in self.scores()]


def theme_of(ont: Ontology, concept_id: str, granularity: str = "theme") -> str:
    """Nearest ancestor-or-self at the requested granularity level."""
    target = _GRANULARITY_DEPTH.get(granularity)
    if target is None:
        raise ValueError("granularity must be theme or subtheme")
    for ancestor in ont.ancestors(concept_id):
        if ont.depth[ancestor] == target:
            return ancestor
    raise ValueError("no theme for concept: %s" % concept_id)


def annotate(
    vector: KeyConceptVector,
    ont: Ontology,
    granularity: str = "theme",
    divisor: str = DIVISOR_CONCEPTS,
) -> ThematicAnnotation | None:
    """Score themes for one document; None when no concept was identified.

    Each theme's pertinence is the summed weight of the document's concepts
    falling under it, divided by the concept count (or by the number of
    detected themes under the variant divisor). The major theme takes the
    highest pertinence; ties go to the theme backed by more concepts, then
    to the lexicographically smaller id.
    """
    if divisor not in (DIVISOR_CONCEPTS, DIVISOR_THEMES):
        raise ValueError("divisor must be concepts or themes")
    if not vector.entries:
        return None

    grouped: dict[str, list] = {}
    for entry in vector.entries:
        theme = theme_of(ont, entry.concept_id, granularity)
        grouped.setdefault(theme, []).append(entry)

    if divisor == DIVISOR_CONCEPTS:
        denominator = len(vector.entries)
    else:
        denominator = len(grouped)

    scores = [
        ThemeScore(
            theme_id=theme,
            pertinence=sum(e.weight for e in entries) / denominator,
            concept_ids=[e.concept_id for e in entries],
        )
        for theme, entries in grouped.items()
    ]
    scores.sort(key=lambda s: (-s.pertinence, -len(s.concept_ids), s.theme_id))
    return ThematicAnnotation(
        doc_id=vector.doc_id,
        granularity=granularity,
        major=scores[0],
        minors=scores[1:],
    )
