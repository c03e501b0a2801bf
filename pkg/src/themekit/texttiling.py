"""Topic segmentation of token streams by block comparison (TextTiling)."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .preprocess import ProcessedDocument

DEFAULT_W = 20
DEFAULT_K_BLOCKS = 10
# Flat moving average of width 2 around each gap (window length 3).
SMOOTHING_WIDTH = 2


@dataclass
class Segment:
    """A contiguous run of a document's retained tokens.

    start and end index into ProcessedDocument.tokens (end exclusive), so the
    segments of a document tile it without gaps or overlaps.
    """

    doc_id: str
    start: int
    end: int
    stems: list[str] = field(default_factory=list)
    degenerate: bool = False


def _cosine(left: Counter, right: Counter) -> float:
    dot = sum(count * right.get(stem, 0) for stem, count in left.items())
    norm_l = math.sqrt(sum(c * c for c in left.values()))
    norm_r = math.sqrt(sum(c * c for c in right.values()))
    if norm_l == 0.0 or norm_r == 0.0:
        return 0.0
    return dot / (norm_l * norm_r)


def _smooth(scores: list[float]) -> list[float]:
    half = SMOOTHING_WIDTH // 2
    smoothed = []
    for i in range(len(scores)):
        lo = max(0, i - half)
        hi = min(len(scores), i + half + 1)
        smoothed.append(sum(scores[lo:hi]) / (hi - lo))
    return smoothed


def _depth_scores(scores: list[float]) -> list[float]:
    depths = []
    for i, score in enumerate(scores):
        lpeak = score
        for s in scores[i::-1]:
            if s >= lpeak:
                lpeak = s
            else:
                break
        rpeak = score
        for s in scores[i:]:
            if s >= rpeak:
                rpeak = s
            else:
                break
        depths.append(lpeak + rpeak - 2.0 * score)
    return depths


def texttile(
    doc: ProcessedDocument,
    w: int = DEFAULT_W,
    k_blocks: int = DEFAULT_K_BLOCKS,
) -> list[Segment]:
    """Split a document into topically coherent segments.

    Tokens are grouped into pseudo-sentences of w tokens; ``k_blocks``
    pseudo-sentences on either side of each gap are compared by cosine
    similarity, and boundaries are placed at depth-score peaks above the
    mean - stddev/2 cutoff. Documents too short for two full block windows
    come back as a single segment flagged degenerate.
    """
    if w < 1 or k_blocks < 1:
        raise ValueError("w and k_blocks must be >= 1")
    n = len(doc.tokens)
    stems = [s for s, _ in doc.tokens]
    if n < 2 * k_blocks * w:
        return [Segment(doc.doc_id, 0, n, stems, degenerate=True)]

    sequences = [stems[i : i + w] for i in range(0, n, w)]
    counts = [Counter(seq) for seq in sequences]
    n_gaps = len(sequences) - 1

    raw = []
    for g in range(n_gaps):
        # Blocks truncate independently at each document edge; symmetric
        # truncation would shrink both blocks to one noisy pseudo-sentence
        # at the ends and manufacture spurious edge boundaries.
        size_l = min(k_blocks, g + 1)
        size_r = min(k_blocks, n_gaps - g)
        left: Counter = Counter()
        right: Counter = Counter()
        for c in counts[g + 1 - size_l : g + 1]:
            left.update(c)
        for c in counts[g + 1 : g + 1 + size_r]:
            right.update(c)
        raw.append(_cosine(left, right))

    scores = _smooth(raw)
    depths = _depth_scores(scores)
    mean = sum(depths) / len(depths)
    var = sum((d - mean) ** 2 for d in depths) / len(depths)
    cutoff = mean - math.sqrt(var) / 2.0

    boundaries = []
    for i, depth in enumerate(depths):
        if depth <= cutoff:
            continue
        left_ok = i == 0 or depth >= depths[i - 1]
        right_ok = i == len(depths) - 1 or depth > depths[i + 1]
        if left_ok and right_ok:
            boundaries.append((i + 1) * w)

    segments = []
    prev = 0
    for b in boundaries + [n]:
        segments.append(Segment(doc.doc_id, prev, b, stems[prev:b]))
        prev = b
    return segments
