"""Term co-occurrence networks and the vector refinements built on them.

A network stores integer counts and derives confidences by exact division:
conf(t1 -> t2) = joint(t1, t2) / count(t1). At global scope counting is over
documents (a document joins the joint count when the two terms occur within
the window at least once); at local scope counting is over occurrences of t1
inside one document, an occurrence joining when t2 follows it within the
window. The forward window at local scope keeps pair order meaningful, which
compound detection relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .keyterms import (
    SOURCE_COMPOUND,
    SOURCE_INFERRED,
    KeyTermEntry,
    KeyTermVector,
)
from .preprocess import ProcessedDocument

SCOPE_GLOBAL = "global"
SCOPE_LOCAL = "local"


@dataclass
class CooccurrenceNetwork:
    scope: str
    window: int
    counts: dict[str, int] = field(default_factory=dict)
    joints: dict[str, dict[str, int]] = field(default_factory=dict)

    def terms(self) -> list[str]:
        return sorted(self.counts)

    def support(self, t1: str, t2: str) -> int:
        if t1 == t2:
            return self.counts.get(t1, 0)
        return self.joints.get(t1, {}).get(t2, 0)

    def confidence(self, t1: str, t2: str) -> float | None:
        """joint / count as exact integer division; None when t1 is unknown."""
        count = self.counts.get(t1, 0)
        if count == 0:
            return None
        return self.support(t1, t2) / count

    def successors(self, t1: str) -> dict[str, int]:
        return self.joints.get(t1, {})

    def edges(self) -> list[tuple[str, str, float, int]]:
        """All directed pairs with non-zero joint count, lexicographic order."""
        rows = []
        for t1 in sorted(self.joints):
            for t2 in sorted(self.joints[t1]):
                rows.append((t1, t2, self.joints[t1][t2] / self.counts[t1],
                             self.joints[t1][t2]))
        return rows


def _within_forward(p: int, positions: list[int], window: int) -> bool:
    return any(p < q <= p + window - 1 for q in positions)


def _min_distance_within(pos1: list[int], pos2: list[int], window: int) -> bool:
    i = j = 0
    while i < len(pos1) and j < len(pos2):
        if abs(pos1[i] - pos2[j]) <= window - 1:
            return True
        if pos1[i] < pos2[j]:
            i += 1
        else:
            j += 1
    return False


def build_network(
    documents: list[ProcessedDocument],
    window: int,
    scope: str = SCOPE_GLOBAL,
) -> CooccurrenceNetwork:
    if window < 2:
        raise ValueError("window must be >= 2")
    if scope == SCOPE_GLOBAL:
        return _build_global(documents, window)
    if scope == SCOPE_LOCAL:
        if len(documents) != 1:
            raise ValueError("local scope expects exactly one document")
        return _build_local(documents[0], window)
    raise ValueError("scope must be global or local")


def _build_global(documents: list[ProcessedDocument], window: int) -> CooccurrenceNetwork:
    net = CooccurrenceNetwork(scope=SCOPE_GLOBAL, window=window)
    for doc in documents:
        positions = doc.stem_positions()
        vocab = sorted(positions)
        for t in vocab:
            net.counts[t] = net.counts.get(t, 0) + 1
        for t1 in vocab:
            for t2 in vocab:
                if t1 == t2:
                    continue
                if _min_distance_within(positions[t1], positions[t2], window):
                    net.joints.setdefault(t1, {})
                    net.joints[t1][t2] = net.joints[t1].get(t2, 0) + 1
    return net


def _build_local(doc: ProcessedDocument, window: int) -> CooccurrenceNetwork:
    net = CooccurrenceNetwork(scope=SCOPE_LOCAL, window=window)
    positions = doc.stem_positions()
    for t, pos in positions.items():
        net.counts[t] = len(pos)
    vocab = sorted(positions)
    for t1 in vocab:
        for t2 in vocab:
            if t1 == t2:
                continue
            joint = sum(
                1 for p in positions[t1]
                if _within_forward(p, positions[t2], window)
            )
            if joint:
                net.joints.setdefault(t1, {})[t2] = joint
    return net


def detect_compounds(
    vector: KeyTermVector,
    doc: ProcessedDocument,
    local_window: int = 2,
    min_support: int = 2,
) -> KeyTermVector:
    """Append compound terms for fully systematic adjacent pairs.

    An ordered pair of distinct key terms becomes a compound when every
    occurrence of the first is followed by the second inside the local window
    (confidence exactly 1) and that happens at least min_support times. The
    compound's surface joins the parts with a single space; its weight is the
    larger of the part weights. Original entries are kept untouched.
    """
    local = build_network([doc], local_window, SCOPE_LOCAL)
    present = [e for e in vector.entries if e.term in local.counts]
    existing = set(vector.terms())
    out = KeyTermVector(vector.doc_id, list(vector.entries))
    for e1 in present:
        for e2 in present:
            if e1.term == e2.term:
                continue
            support = local.support(e1.term, e2.term)
            if support < min_support or support != local.counts[e1.term]:
                continue
            surface = "%s %s" % (e1.term, e2.term)
            if surface in existing:
                continue
            out.entries.append(
                KeyTermEntry(surface, max(e1.weight, e2.weight), SOURCE_COMPOUND)
            )
            existing.add(surface)
    out.sort()
    return out


def enrich_vector(
    vector: KeyTermVector,
    net: CooccurrenceNetwork,
    threshold: float,
) -> KeyTermVector:
    """Single inference pass over the global network.

    Every key term t votes conf(t -> u) * weight(t) for each strong neighbour
    u (conf >= threshold) not already in the vector; the highest vote wins.
    Added entries never cascade into further inference.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be within [0, 1]")
    existing = set(vector.terms())
    inferred: dict[str, float] = {}
    for entry in vector.entries:
        count = net.counts.get(entry.term, 0)
        if count == 0:
            continue
        for u, joint in net.successors(entry.term).items():
            if u in existing:
                continue
            conf = joint / count
            if conf < threshold:
                continue
            weight = conf * entry.weight
            if weight > inferred.get(u, 0.0):
                inferred[u] = weight
    out = KeyTermVector(vector.doc_id, list(vector.entries))
    for u in sorted(inferred):
        out.entries.append(KeyTermEntry(u, inferred[u], SOURCE_INFERRED))
    out.sort()
    return out
