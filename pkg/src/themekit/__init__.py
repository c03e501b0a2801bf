"""Thematic analysis of text corpora.

The pipeline turns a directory of raw text into per-document thematic
annotations and corpus-level theme statistics: pretreatment, topic
segmentation, LSI key-term extraction, co-occurrence refinement, ontology
concept mapping, theme scoring, and XML/graph export, with a read-only HTTP
API for exploration.
"""

__version__ = "0.1.0"
