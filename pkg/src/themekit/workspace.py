"""Workspace layout: every pipeline stage reads and writes plain text files
under one directory, so intermediate results stay inspectable and runs stay
reproducible. See README for the formats.
"""

from __future__ import annotations

from pathlib import Path

from .concepts import KeyConceptEntry, KeyConceptVector
from .config import CorpusConfig
from .cooccur import CooccurrenceNetwork
from .keyterms import KeyTermEntry, KeyTermVector
from .preprocess import ProcessedDocument
from .themes import ThematicAnnotation, ThemeScore

CONFIG_FILE = "config.json"
DF_FILE = "df.tsv"
PROCESSED_DIR = "processed"
KEYTERMS_DIR = "keyterms"
ENRICHED_DIR = "enriched"
NETWORK_FILE = "network_global.tsv"
CONCEPTS_DIR = "concepts"
ONTOLOGY_FILE = "ontology.json"
XML_FILE = "corpus.xml"
GRAPH_FILE = "graph.out"


def annotations_file(granularity: str) -> str:
    return "annotations_%s.tsv" % granularity


def ensure_workspace(ws: str | Path) -> Path:
    path = Path(ws)
    path.mkdir(parents=True, exist_ok=True)
    return path


def save_config(ws: Path, cfg: CorpusConfig) -> None:
    cfg.save(ws / CONFIG_FILE)


def load_config(ws: Path) -> CorpusConfig:
    return CorpusConfig.load(ws / CONFIG_FILE)


def save_df(ws: Path, df: dict[str, int]) -> None:
    lines = ["%s\t%d" % (stem, df[stem]) for stem in sorted(df)]
    (ws / DF_FILE).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_df(ws: Path) -> dict[str, int]:
    df = {}
    for line in (ws / DF_FILE).read_text(encoding="utf-8").splitlines():
        if line:
            stem, count = line.split("\t")
            df[stem] = int(count)
    return df


def save_processed(ws: Path, documents: list[ProcessedDocument]) -> None:
    folder = ws / PROCESSED_DIR
    folder.mkdir(exist_ok=True)
    for doc in documents:
        lines = ["%d\t%s" % (pos, stem) for stem, pos in doc.tokens]
        (folder / ("%s.tsv" % doc.doc_id)).write_text(
            "\n".join(lines) + ("\n" if lines else ""), encoding="utf-8"
        )


def load_processed(ws: Path) -> list[ProcessedDocument]:
    documents = []
    for path in sorted((ws / PROCESSED_DIR).glob("*.tsv")):
        tokens = []
        for line in path.read_text(encoding="utf-8").splitlines():
            if line:
                pos, stem = line.split("\t")
                tokens.append((stem, int(pos)))
        documents.append(ProcessedDocument(doc_id=path.stem, tokens=tokens))
    return documents


def save_vectors(ws: Path, folder_name: str, vectors: list[KeyTermVector]) -> None:
    folder = ws / folder_name
    folder.mkdir(exist_ok=True)
    for vec in vectors:
        lines = [
            "%s\t%.8g\t%s" % (e.term, e.weight, e.source) for e in vec.entries
        ]
        (folder / ("%s.tsv" % vec.doc_id)).write_text(
            "\n".join(lines) + ("\n" if lines else ""), encoding="utf-8"
        )


def load_vectors(ws: Path, folder_name: str) -> list[KeyTermVector]:
    vectors = []
    for path in sorted((ws / folder_name).glob("*.tsv")):
        entries = []
        for line in path.read_text(encoding="utf-8").splitlines():
            if line:
                term, weight, source = line.split("\t")
                entries.append(KeyTermEntry(term, float(weight), source))
        vectors.append(KeyTermVector(doc_id=path.stem, entries=entries))
    return vectors


def save_network(ws: Path, net: CooccurrenceNetwork) -> None:
    lines = [
        "%s\t%s\t%r\t%d" % (t1, t2, conf, support)
        for t1, t2, conf, support in net.edges()
    ]
    (ws / NETWORK_FILE).write_text(
        "\n".join(lines) + ("\n" if lines else ""), encoding="utf-8"
    )


def save_concept_vectors(ws: Path, vectors: list[KeyConceptVector]) -> None:
    folder = ws / CONCEPTS_DIR
    folder.mkdir(exist_ok=True)
    for vec in vectors:
        lines = [
            "%s\t%.8g\t%s" % (e.concept_id, e.weight, ",".join(e.terms))
            for e in vec.entries
        ]
        (folder / ("%s.tsv" % vec.doc_id)).write_text(
            "\n".join(lines) + ("\n" if lines else ""), encoding="utf-8"
        )


def load_concept_vectors(ws: Path) -> list[KeyConceptVector]:
    vectors = []
    for path in sorted((ws / CONCEPTS_DIR).glob("*.tsv")):
        entries = []
        for line in path.read_text(encoding="utf-8").splitlines():
            if line:
                concept_id, weight, terms = line.split("\t")
                entries.append(
                    KeyConceptEntry(
                        concept_id,
                        float(weight),
                        terms.split(",") if terms else [],
                    )
                )
        vectors.append(KeyConceptVector(doc_id=path.stem, entries=entries))
    return vectors


def save_annotations(
    ws: Path, annotations: list[ThematicAnnotation], granularity: str
) -> None:
    """One line per document: doc_id then theme=pertinence, major first."""
    lines = []
    for ann in sorted(annotations, key=lambda a: a.doc_id):
        fields = ["%s=%.8g" % (s.theme_id, s.pertinence) for s in ann.scores()]
        lines.append("%s\t%s" % (ann.doc_id, "\t".join(fields)))
    (ws / annotations_file(granularity)).write_text(
        "\n".join(lines) + ("\n" if lines else ""), encoding="utf-8"
    )


def load_annotations(ws: Path, granularity: str) -> list[ThematicAnnotation]:
    annotations = []
    path = ws / annotations_file(granularity)
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line:
            continue
        doc_id, *fields = line.split("\t")
        scores = []
        for item in fields:
            theme_id, pertinence = item.rsplit("=", 1)
            scores.append(ThemeScore(theme_id, float(pertinence)))
        annotations.append(
            ThematicAnnotation(
                doc_id=doc_id,
                granularity=granularity,
                major=scores[0],
                minors=scores[1:],
            )
        )
    return annotations
