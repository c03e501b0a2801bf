"""Key-term extraction: latent semantic indexing over TextTiling segments.

The corpus is represented as a term-segment tf-idf matrix; a rank-r truncated
SVD gives every term a salience (norm of its term-factor row scaled by the
singular values), and each document keeps the terms of its most salient
segments, weights normalized to a per-document maximum of 1.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .config import CorpusConfig
from .texttiling import Segment

log = logging.getLogger(__name__)

SOURCE_EXTRACTED = "extracted"
SOURCE_COMPOUND = "compound"
SOURCE_INFERRED = "inferred"


@dataclass
class KeyTermEntry:
    term: str
    weight: float
    source: str = SOURCE_EXTRACTED


@dataclass
class KeyTermVector:
    """A document's key terms, sorted by descending weight (ties by term)."""

    doc_id: str
    entries: list[KeyTermEntry] = field(default_factory=list)

    def terms(self) -> list[str]:
        return [e.term for e in self.entries]

    def weight_of(self, term: str) -> float | None:
        for e in self.entries:
            if e.term == term:
                return e.weight
        return None

    def sort(self) -> None:
        self.entries.sort(key=lambda e: (-e.weight, e.term))


@dataclass
class TermSegmentMatrix:
    terms: list[str]
    segments: list[tuple[str, int]]
    weights: np.ndarray

    def term_index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.terms)}


def build_term_segment_matrix(segments: list[Segment]) -> TermSegmentMatrix:
    """tf-idf matrix over all segments; idf = ln(1 + N_segments / df)."""
    terms = sorted({stem for seg in segments for stem in seg.stems})
    index = {t: i for i, t in enumerate(terms)}
    n_segs = len(segments)
    counts = np.zeros((len(terms), n_segs))
    for j, seg in enumerate(segments):
        for stem in seg.stems:
            counts[index[stem], j] += 1.0
    df = (counts > 0).sum(axis=1)
    labels = []
    seen: dict[str, int] = {}
    for seg in segments:
        k = seen.get(seg.doc_id, 0)
        labels.append((seg.doc_id, k))
        seen[seg.doc_id] = k + 1
    if len(terms) == 0 or n_segs == 0:
        return TermSegmentMatrix(terms, labels, counts)
    idf = np.log(1.0 + n_segs / df)
    return TermSegmentMatrix(terms, labels, counts * idf[:, None])


@dataclass
class LsiModel:
    matrix: TermSegmentMatrix
    rank: int
    term_factors: np.ndarray
    singular_values: np.ndarray
    segment_factors: np.ndarray

    def term_salience(self) -> dict[str, float]:
        scaled = self.term_factors * self.singular_values
        norms = np.linalg.norm(scaled, axis=1)
        return {t: float(norms[i]) for i, t in enumerate(self.matrix.terms)}

    def reconstruction_error(self) -> float:
        approx = (self.term_factors * self.singular_values) @ self.segment_factors
        return float(np.linalg.norm(self.matrix.weights - approx))


def lsi_fit(matrix: TermSegmentMatrix, rank: int) -> LsiModel:
    """Truncated SVD of the term-segment matrix at the requested rank."""
    n_terms, n_segs = matrix.weights.shape
    if n_terms == 0 or n_segs == 0:
        raise ValueError("empty corpus")
    if rank < 1:
        raise ValueError("rank must be >= 1")
    r = min(rank, n_terms, n_segs)
    u, s, vt = np.linalg.svd(matrix.weights, full_matrices=False)
    return LsiModel(matrix, r, u[:, :r], s[:r], vt[:r, :])


def default_rank(matrix: TermSegmentMatrix, cap: int = 50) -> int:
    return max(1, min(cap, min(matrix.weights.shape) - 1))


def extract_key_terms(
    doc_segments: list[Segment],
    model: LsiModel,
    cfg: CorpusConfig,
) -> KeyTermVector:
    """Build a document's key-term vector from its most salient segments.

    Segments are ranked by the mean salience of their distinct terms; the top
    ceil(summary_ratio * n_segments) survive, and every term they contain is
    weighted by its salience, scaled so the document's best term has weight 1.
    """
    if not doc_segments:
        return KeyTermVector(doc_id="", entries=[])
    doc_id = doc_segments[0].doc_id
    salience = model.term_salience()

    ranked = []
    for seg in doc_segments:
        distinct = sorted(set(seg.stems))
        if distinct:
            mean = sum(salience[t] for t in distinct) / len(distinct)
        else:
            mean = 0.0
        ranked.append((seg, mean))
    ranked.sort(key=lambda pair: (-pair[1], pair[0].start))
    keep = math.ceil(cfg.summary_ratio * len(doc_segments))

    terms = sorted({t for seg, _ in ranked[:keep] for t in seg.stems})
    weighted = [(t, salience[t]) for t in terms if salience[t] > 0.0]
    if not weighted:
        log.warning("document %s has no key terms after filtering", doc_id)
        return KeyTermVector(doc_id=doc_id, entries=[])
    top = max(w for _, w in weighted)
    vector = KeyTermVector(
        doc_id=doc_id,
        entries=[KeyTermEntry(t, w / top, SOURCE_EXTRACTED) for t, w in weighted],
    )
    vector.sort()
    return vector
