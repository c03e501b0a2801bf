"""Corpus pretreatment: tokenization, stopword removal, stemming, frequency filtering."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .config import CorpusConfig
from .porter import porter_stem

# Maximal runs of ASCII letters; digits and punctuation act as separators.
_TOKEN_RE = re.compile(r"[a-z]+")


@dataclass(frozen=True)
class RawDocument:
    doc_id: str
    text: str


@dataclass
class ProcessedDocument:
    """A document reduced to its retained stems.

    ``tokens`` holds (stem, position) pairs in reading order, where position
    is the token's index in the original token stream before any filtering,
    so gaps left by removed tokens stay visible to windowed co-occurrence.
    """

    doc_id: str
    tokens: list[tuple[str, int]] = field(default_factory=list)

    @property
    def vocabulary(self) -> set[str]:
        return {stem for stem, _ in self.tokens}

    def stem_positions(self) -> dict[str, list[int]]:
        positions: dict[str, list[int]] = {}
        for stem, pos in self.tokens:
            positions.setdefault(stem, []).append(pos)
        return positions


def tokenize(text: str) -> list[str]:
    """Lowercase a text and split it into maximal letter runs."""
    return _TOKEN_RE.findall(text.lower())


def load_stopwords(path: str | Path) -> set[str]:
    """Read a one-word-per-line stopword file; blank lines and # comments skipped."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return words


def preprocess_corpus(
    documents: list[RawDocument],
    cfg: CorpusConfig,
    stopwords: set[str],
) -> tuple[list[ProcessedDocument], dict[str, int]]:
    """Run the pretreatment chain over a corpus.

    Stopwords are dropped before stemming; document frequency is counted on
    stems and stems below cfg.min_doc_frequency are removed from every
    document. Returns the processed documents (input order preserved) and the
    full stem document-frequency table.
    """
    seen: set[str] = set()
    for doc in documents:
        if doc.doc_id in seen:
            raise ValueError("duplicate document id: %s" % doc.doc_id)
        seen.add(doc.doc_id)

    stemmed: list[tuple[str, list[tuple[str, int]]]] = []
    df: dict[str, int] = {}
    for doc in documents:
        pairs: list[tuple[str, int]] = []
        for pos, token in enumerate(tokenize(doc.text)):
            if token in stopwords:
                continue
            pairs.append((porter_stem(token), pos))
        stemmed.append((doc.doc_id, pairs))
        for stem in {s for s, _ in pairs}:
            df[stem] = df.get(stem, 0) + 1

    processed = []
    for doc_id, pairs in stemmed:
        kept = [(s, p) for s, p in pairs if df[s] >= cfg.min_doc_frequency]
        processed.append(ProcessedDocument(doc_id=doc_id, tokens=kept))
    return processed, df
