"""Corpus-level theme statistics and their serialized forms.

Theme weights and association degrees are ratios of integer counts, computed
with a single final division. Serialized weights are rendered as the shortest
decimal that round-trips through a 32-bit float, which keeps files compact
and byte-stable across platforms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from xml.etree import ElementTree

import numpy as np

from .themes import ThematicAnnotation


def weight_repr(value: float) -> str:
    """Shortest decimal form of the value's nearest 32-bit float."""
    return str(np.float32(value))


@dataclass
class ThemeWeightRow:
    theme_id: str
    nb_doc: int
    weight: float


@dataclass
class ThemeWeightTable:
    rows: list[ThemeWeightRow]
    nb_doc_total: int

    def weight_of(self, theme_id: str) -> float | None:
        for row in self.rows:
            if row.theme_id == theme_id:
                return row.weight
        return None


@dataclass
class AssociationMatrix:
    """Symmetric grid of association degrees; diagonal undefined."""

    theme_ids: list[str]
    cells: dict[tuple[str, str], float] = field(default_factory=dict)

    def degree(self, a: str, b: str) -> float | None:
        if a == b:
            return None
        return self.cells.get((min(a, b), max(a, b)))

    def render(self) -> str:
        """Plain-text table; '-' on the diagonal, blank for omitted cells."""
        header = [""] + self.theme_ids
        lines = ["\t".join(header)]
        for a in self.theme_ids:
            row = [a]
            for b in self.theme_ids:
                if a == b:
                    row.append("-")
                else:
                    degree = self.degree(a, b)
                    row.append("" if degree is None else weight_repr(degree))
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"


def theme_documents(annotations: list[ThematicAnnotation]) -> dict[str, set[str]]:
    """Document sets per theme, counting major and minor mentions alike."""
    sets: dict[str, set[str]] = {}
    for ann in annotations:
        for theme_id in ann.theme_ids():
            sets.setdefault(theme_id, set()).add(ann.doc_id)
    return sets


def theme_weights(annotations: list[ThematicAnnotation]) -> ThemeWeightTable:
    """Share of documents tackling each theme, descending."""
    if not annotations:
        raise ValueError("empty corpus")
    total = len({ann.doc_id for ann in annotations})
    rows = [
        ThemeWeightRow(theme_id, len(docs), len(docs) / total)
        for theme_id, docs in theme_documents(annotations).items()
    ]
    rows.sort(key=lambda r: (-r.nb_doc, r.theme_id))
    return ThemeWeightTable(rows=rows, nb_doc_total=total)


def association_degree(docs1: set[str], docs2: set[str]) -> float:
    """Jaccard ratio of two document sets."""
    if not docs1 or not docs2:
        raise ValueError("association degree undefined for empty document sets")
    return len(docs1 & docs2) / len(docs1 | docs2)


def build_matrix(annotations: list[ThematicAnnotation]) -> AssociationMatrix:
    """Association degrees between all observed theme pairs (zeros kept)."""
    sets = theme_documents(annotations)
    theme_ids = sorted(sets)
    matrix = AssociationMatrix(theme_ids=theme_ids)
    for i, a in enumerate(theme_ids):
        for b in theme_ids[i + 1 :]:
            matrix.cells[(a, b)] = association_degree(sets[a], sets[b])
    return matrix


def _escape(value: str) -> str:
    return (
        value.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace("'", "&apos;")
    )


def render_xml(
    table: ThemeWeightTable,
    matrix: AssociationMatrix,
    labels: dict[str, str] | None = None,
) -> str:
    """Corpus record: themes by descending weight, then non-zero associations.

    Labels are uppercased for display; a zero association degree means the
    pair is never tackled together and is left out, matching the matrix
    rendering where such cells stay visible only as zeros.
    """
    labels = labels or {}

    def lab(theme_id: str) -> str:
        return labels.get(theme_id, theme_id).upper()

    lines = [
        "<?xml version='1.0' encoding='UTF-8'?>",
        "<!DOCTYPE thematicAnnotation SYSTEM 'thematic-annotation.dtd'>",
        "<thematicAnnotation>",
    ]
    for row in sorted(table.rows, key=lambda r: (-r.nb_doc, lab(r.theme_id))):
        lines.append(
            "<Stheme LAB='%s' WEIGHT = '%s' />"
            % (_escape(lab(row.theme_id)), weight_repr(row.weight))
        )
    pairs = []
    for (a, b), degree in matrix.cells.items():
        if degree <= 0.0:
            continue
        lab1, lab2 = sorted((lab(a), lab(b)))
        pairs.append((-degree, lab1, lab2))
    for neg_degree, lab1, lab2 in sorted(pairs):
        lines.append(
            "<AssocTheme theme1='%s' theme2='%s' WEIGHT = '%s' />"
            % (_escape(lab1), _escape(lab2), weight_repr(-neg_degree))
        )
    lines.append("</thematicAnnotation>")
    return "\n".join(lines) + "\n"


def export_xml(
    table: ThemeWeightTable,
    matrix: AssociationMatrix,
    path: str | Path,
    labels: dict[str, str] | None = None,
) -> None:
    Path(path).write_bytes(render_xml(table, matrix, labels).encode("utf-8"))


GRAPH_HEADER = "# themekit graph v1"


def render_graph(
    table: ThemeWeightTable,
    matrix: AssociationMatrix,
    granularity: str,
    labels: dict[str, str] | None = None,
) -> str:
    """Node-link form of the statistics for the exploration service."""
    labels = labels or {}
    lines = [GRAPH_HEADER, "granularity\t%s" % granularity]
    for row in table.rows:
        lines.append(
            "node\t%s\t%s\t%s"
            % (row.theme_id, labels.get(row.theme_id, row.theme_id),
               weight_repr(row.weight))
        )
    edges = [
        (-degree, a, b)
        for (a, b), degree in matrix.cells.items()
        if degree > 0.0
    ]
    for neg_degree, a, b in sorted(edges):
        lines.append("edge\t%s\t%s\t%s" % (a, b, weight_repr(-neg_degree)))
    return "\n".join(lines) + "\n"


def export_graph(
    table: ThemeWeightTable,
    matrix: AssociationMatrix,
    granularity: str,
    path: str | Path,
    labels: dict[str, str] | None = None,
) -> None:
    Path(path).write_bytes(
        render_graph(table, matrix, granularity, labels).encode("utf-8")
    )


def parse_graph(text: str) -> tuple[str, list[tuple[str, str, float]], list[tuple[str, str, float]]]:
    """Inverse of render_graph: (granularity, nodes, edges)."""
    granularity = "theme"
    nodes = []
    edges = []
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if parts[0] == "granularity":
            granularity = parts[1]
        elif parts[0] == "node":
            nodes.append((parts[1], parts[2], float(parts[3])))
        elif parts[0] == "edge":
            edges.append((parts[1], parts[2], float(parts[3])))
        else:
            raise ValueError("unknown graph record: %s" % parts[0])
    return granularity, nodes, edges


# --- DTD conformance -------------------------------------------------------

_ELEMENT_RE = re.compile(r"<!ELEMENT\s+(\S+)\s+(EMPTY|\([^)]*\))\s*>")
_ATTLIST_RE = re.compile(r"<!ATTLIST\s+(\S+)\s+([^>]*)>", re.S)
_ATTDEF_RE = re.compile(r"(\S+)\s+CDATA\s+(#REQUIRED|#IMPLIED)")


def validate_xml(xml_text: str, dtd_text: str) -> None:
    """Check a document against the element and attribute rules of a DTD.

    Supports the subset the corpus record needs: EMPTY elements and one
    sequence content model with ?/+/* quantifiers. Raises ValueError on the
    first violation.
    """
    models: dict[str, str] = {}
    for name, model in _ELEMENT_RE.findall(dtd_text):
        models[name] = model
    attrs: dict[str, dict[str, str]] = {}
    for name, body in _ATTLIST_RE.findall(dtd_text):
        attrs[name] = {a: req for a, req in _ATTDEF_RE.findall(body)}

    root = ElementTree.fromstring(xml_text)

    def check(element: ElementTree.Element) -> None:
        model = models.get(element.tag)
        if model is None:
            raise ValueError("undeclared element: %s" % element.tag)
        declared = attrs.get(element.tag, {})
        for attr in element.attrib:
            if attr not in declared:
                raise ValueError(
                    "undeclared attribute %s on %s" % (attr, element.tag)
                )
        for attr, req in declared.items():
            if req == "#REQUIRED" and attr not in element.attrib:
                raise ValueError(
                    "missing required attribute %s on %s" % (attr, element.tag)
                )
        children = [child.tag for child in element]
        if model == "EMPTY":
            if children or (element.text or "").strip():
                raise ValueError("element %s must be empty" % element.tag)
            return
        pattern = "".join(
            "(%s)%s" % (re.escape(part.rstrip("?+*")) + ",",
                        part[-1] if part[-1] in "?+*" else "")
            for part in model.strip("()").replace(" ", "").split(",")
        )
        sequence = "".join(c + "," for c in children)
        if not re.fullmatch(pattern, sequence):
            raise ValueError(
                "children of %s do not match %s" % (element.tag, model)
            )
        for child in element:
            check(child)

    if root.tag not in models:
        raise ValueError("undeclared root element: %s" % root.tag)
    check(root)
