"""Command-line pipeline: ingest, keyterms, cooccur, concepts, annotate,
report, serve, plus a one-shot pipeline command chaining them."""

from __future__ import annotations

import shutil
import sys
from importlib import resources
from pathlib import Path

import click

from . import workspace as ws_files
from .concepts import compute_ic, identify_concepts, load_ontology
from .config import GRANULARITIES, SIMILARITY_MEASURES, CorpusConfig
from .cooccur import SCOPE_GLOBAL, build_network, detect_compounds, enrich_vector
from .corpus_stats import build_matrix, export_graph, export_xml, theme_weights
from .keyterms import build_term_segment_matrix, extract_key_terms, lsi_fit
from .preprocess import RawDocument, load_stopwords, preprocess_corpus
from .texttiling import DEFAULT_K_BLOCKS, DEFAULT_W, texttile
from .themes import DIVISOR_CONCEPTS, DIVISOR_THEMES, annotate as annotate_vector


def default_stopword_path() -> Path:
    return Path(str(resources.files("themekit").joinpath("data/stopwords_en.txt")))


def packaged_dtd_path() -> Path:
    return Path(
        str(resources.files("themekit").joinpath("data/thematic-annotation.dtd"))
    )


@click.group()
def main() -> None:
    """Thematic analysis of text corpora."""


@main.command()
@click.option("--corpus", "corpus_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--stopwords", "stopword_file", type=click.Path(exists=True),
              default=None, help="One stopword per line; packaged list by default.")
@click.option("--min-df", default=2, show_default=True,
              help="Drop stems seen in fewer documents.")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--window-l", default=20, show_default=True)
@click.option("--local-window", default=2, show_default=True)
@click.option("--enrich-threshold", default=0.8, show_default=True)
@click.option("--lsi-rank", default=50, show_default=True)
@click.option("--summary-ratio", default=0.5, show_default=True)
@click.option("--measure", default="wu_palmer", show_default=True,
              type=click.Choice(SIMILARITY_MEASURES))
@click.option("--granularity", default="theme", show_default=True,
              type=click.Choice(GRANULARITIES))
def ingest(corpus_dir, stopword_file, min_df, out_dir, window_l, local_window,
           enrich_threshold, lsi_rank, summary_ratio, measure, granularity):
    """Read a directory of UTF-8 .txt files into a workspace."""
    stopword_path = Path(stopword_file) if stopword_file else default_stopword_path()
    cfg = CorpusConfig(
        stopword_path=str(stopword_path),
        min_doc_frequency=min_df,
        window_l=window_l,
        local_window=local_window,
        enrich_threshold=enrich_threshold,
        lsi_rank=lsi_rank,
        summary_ratio=summary_ratio,
        similarity_measure=measure,
        theme_granularity=granularity,
    )
    stopwords = load_stopwords(stopword_path)

    documents = []
    for path in sorted(Path(corpus_dir).glob("*.txt")):
        try:
            documents.append(RawDocument(path.stem, path.read_text(encoding="utf-8")))
        except (OSError, UnicodeDecodeError) as exc:
            click.echo("skipping unreadable file %s: %s" % (path, exc), err=True)
    processed, df = preprocess_corpus(documents, cfg, stopwords)

    ws = ws_files.ensure_workspace(out_dir)
    ws_files.save_config(ws, cfg)
    ws_files.save_df(ws, df)
    ws_files.save_processed(ws, processed)
    click.echo("ingested %d documents into %s" % (len(processed), ws))


@main.command()
@click.option("--workspace", "ws_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--lsi-rank", type=int, default=None)
@click.option("--summary-ratio", type=float, default=None)
@click.option("--tile-w", default=DEFAULT_W, show_default=True,
              help="Tokens per pseudo-sentence for segmentation.")
@click.option("--tile-k", default=DEFAULT_K_BLOCKS, show_default=True,
              help="Pseudo-sentences per comparison block.")
def keyterms(ws_dir, lsi_rank, summary_ratio, tile_w, tile_k):
    """Segment documents, fit the LSI space, extract key-term vectors."""
    ws = Path(ws_dir)
    cfg = ws_files.load_config(ws)
    if lsi_rank is not None:
        cfg.lsi_rank = lsi_rank
    if summary_ratio is not None:
        cfg.summary_ratio = summary_ratio
    cfg.validate()
    ws_files.save_config(ws, cfg)

    documents = ws_files.load_processed(ws)
    per_doc = [texttile(doc, tile_w, tile_k) for doc in documents]
    all_segments = [seg for segments in per_doc for seg in segments]
    matrix = build_term_segment_matrix(all_segments)
    rank = max(1, min(cfg.lsi_rank, min(matrix.weights.shape) - 1))
    model = lsi_fit(matrix, rank)

    vectors = [extract_key_terms(segments, model, cfg) for segments in per_doc]
    ws_files.save_vectors(ws, ws_files.KEYTERMS_DIR, vectors)
    click.echo(
        "extracted key terms for %d documents (rank %d)" % (len(vectors), model.rank)
    )


@main.command()
@click.option("--workspace", "ws_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--window", type=int, default=None,
              help="Override the document-level co-occurrence window.")
@click.option("--enrich-threshold", type=float, default=None)
def cooccur(ws_dir, window, enrich_threshold):
    """Build the co-occurrence network, add compounds, enrich the vectors."""
    ws = Path(ws_dir)
    cfg = ws_files.load_config(ws)
    if window is not None:
        cfg.window_l = window
    if enrich_threshold is not None:
        cfg.enrich_threshold = enrich_threshold
    cfg.validate()
    ws_files.save_config(ws, cfg)

    documents = ws_files.load_processed(ws)
    by_id = {doc.doc_id: doc for doc in documents}
    net = build_network(documents, cfg.window_l, SCOPE_GLOBAL)
    ws_files.save_network(ws, net)

    vectors = ws_files.load_vectors(ws, ws_files.KEYTERMS_DIR)
    enriched = []
    for vec in vectors:
        with_compounds = detect_compounds(vec, by_id[vec.doc_id], cfg.local_window)
        enriched.append(enrich_vector(with_compounds, net, cfg.enrich_threshold))
    ws_files.save_vectors(ws, ws_files.ENRICHED_DIR, enriched)
    click.echo("network over %d terms; %d vectors enriched"
               % (len(net.counts), len(enriched)))


@main.command()
@click.option("--workspace", "ws_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--ontology", "ontology_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--measure", type=click.Choice(SIMILARITY_MEASURES), default=None)
def concepts(ws_dir, ontology_file, measure):
    """Map key terms to ontology concepts."""
    ws = Path(ws_dir)
    cfg = ws_files.load_config(ws)
    if measure is not None:
        cfg.similarity_measure = measure
    cfg.validate()
    ws_files.save_config(ws, cfg)

    ont = load_ontology(ontology_file)
    shutil.copyfile(ontology_file, ws / ws_files.ONTOLOGY_FILE)

    ic_table = None
    if cfg.similarity_measure == "resnik":
        ic_table = compute_ic(ont, ws_files.load_processed(ws))

    folder = ws_files.ENRICHED_DIR
    if not (ws / folder).is_dir():
        folder = ws_files.KEYTERMS_DIR
    vectors = ws_files.load_vectors(ws, folder)
    concept_vectors = [
        identify_concepts(vec, ont, cfg, ic_table=ic_table) for vec in vectors
    ]
    ws_files.save_concept_vectors(ws, concept_vectors)
    click.echo("identified concepts for %d documents" % len(concept_vectors))


@main.command()
@click.option("--workspace", "ws_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--granularity", default=None,
              type=click.Choice(list(GRANULARITIES) + ["both"]))
@click.option("--pertinence-divisor", default=DIVISOR_CONCEPTS, show_default=True,
              type=click.Choice([DIVISOR_CONCEPTS, DIVISOR_THEMES]))
def annotate(ws_dir, granularity, pertinence_divisor):
    """Assign major and minor themes to every document."""
    ws = Path(ws_dir)
    cfg = ws_files.load_config(ws)
    ont = load_ontology(ws / ws_files.ONTOLOGY_FILE)
    vectors = ws_files.load_concept_vectors(ws)

    levels = GRANULARITIES if granularity == "both" else (
        (granularity or cfg.theme_granularity,)
    )
    for level in levels:
        annotations = []
        for vec in vectors:
            ann = annotate_vector(vec, ont, level, pertinence_divisor)
            if ann is None:
                click.echo("no theme identified for %s" % vec.doc_id, err=True)
                continue
            annotations.append(ann)
        ws_files.save_annotations(ws, annotations, level)
        click.echo("annotated %d documents at %s level" % (len(annotations), level))


@main.command()
@click.option("--workspace", "ws_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--out", "xml_name", default=ws_files.XML_FILE, show_default=True)
@click.option("--graph", "graph_name", default=ws_files.GRAPH_FILE, show_default=True)
@click.option("--granularity", default=None, type=click.Choice(GRANULARITIES))
def report(ws_dir, xml_name, graph_name, granularity):
    """Export corpus statistics as XML and as a graph file."""
    ws = Path(ws_dir)
    cfg = ws_files.load_config(ws)
    level = granularity or cfg.theme_granularity
    annotations = ws_files.load_annotations(ws, level)
    ont = load_ontology(ws / ws_files.ONTOLOGY_FILE)
    labels = {cid: c.label for cid, c in ont.concepts.items()}

    table = theme_weights(annotations)
    matrix = build_matrix(annotations)
    xml_path = Path(xml_name) if Path(xml_name).is_absolute() else ws / xml_name
    graph_path = Path(graph_name) if Path(graph_name).is_absolute() else ws / graph_name
    export_xml(table, matrix, xml_path, labels)
    export_graph(table, matrix, level, graph_path, labels)
    dtd_target = xml_path.parent / "thematic-annotation.dtd"
    if not dtd_target.exists():
        shutil.copyfile(packaged_dtd_path(), dtd_target)
    click.echo("%d themes, %d association cells -> %s, %s"
               % (len(table.rows), len(matrix.cells), xml_path, graph_path))


@main.command()
@click.option("--workspace", "ws_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static-dir", default=None, type=click.Path(),
              help="Directory with the built navigator bundle.")
def serve(ws_dir, port, host, static_dir):
    """Serve the exploration API (and the navigator, when built)."""
    import uvicorn

    from .service import create_app

    app = create_app(ws_dir, static_dir)
    if app.state.snapshot is None:
        click.echo("warning: workspace not loaded, API will answer 503", err=True)
    uvicorn.run(app, host=host, port=port, log_level="warning")


@main.command()
@click.option("--corpus", "corpus_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--ontology", "ontology_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--stopwords", "stopword_file", type=click.Path(exists=True),
              default=None)
@click.option("--min-df", default=2, show_default=True)
@click.option("--granularity", default="theme", show_default=True,
              type=click.Choice(GRANULARITIES))
@click.option("--measure", default="wu_palmer", show_default=True,
              type=click.Choice(SIMILARITY_MEASURES))
@click.option("--tile-w", default=DEFAULT_W, show_default=True)
@click.option("--tile-k", default=DEFAULT_K_BLOCKS, show_default=True)
@click.pass_context
def pipeline(ctx, corpus_dir, ontology_file, out_dir, stopword_file, min_df,
             granularity, measure, tile_w, tile_k):
    """Run every stage from raw corpus to XML report in one go."""
    ctx.invoke(ingest, corpus_dir=corpus_dir, stopword_file=stopword_file,
               min_df=min_df, out_dir=out_dir, measure=measure,
               granularity=granularity)
    ctx.invoke(keyterms, ws_dir=out_dir, tile_w=tile_w, tile_k=tile_k)
    ctx.invoke(cooccur, ws_dir=out_dir)
    ctx.invoke(concepts, ws_dir=out_dir, ontology_file=ontology_file)
    ctx.invoke(annotate, ws_dir=out_dir, granularity=granularity)
    ctx.invoke(report, ws_dir=out_dir, granularity=granularity)


if __name__ == "__main__":
    sys.exit(main())
