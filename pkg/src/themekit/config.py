"""Run configuration shared by the pipeline stages."""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from pathlib import Path

SIMILARITY_MEASURES = ("wu_palmer", "resnik")
GRANULARITIES = ("theme", "subtheme")

FORMAT_VERSION = 1


@dataclass
class CorpusConfig:
    """Knobs for a corpus run. Invalid values are rejected on construction."""

    stopword_path: str = ""
    min_doc_frequency: int = 2
    window_l: int = 20
    local_window: int = 2
    enrich_threshold: float = 0.8
    lsi_rank: int = 50
    summary_ratio: float = 0.5
    similarity_measure: str = "wu_palmer"
    theme_granularity: str = "theme"

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if self.min_doc_frequency < 1:
            raise ValueError("min_doc_frequency must be >= 1")
        if self.window_l < 2:
            raise ValueError("window_l must be >= 2")
        if self.local_window < 2:
            raise ValueError("local_window must be >= 2")
        if not 0.0 <= self.enrich_threshold <= 1.0:
            raise ValueError("enrich_threshold must be within [0, 1]")
        if self.lsi_rank < 1:
            raise ValueError("lsi_rank must be >= 1")
        if not 0.0 < self.summary_ratio <= 1.0:
            raise ValueError("summary_ratio must be within (0, 1]")
        if self.similarity_measure not in SIMILARITY_MEASURES:
            raise ValueError(
                "similarity_measure must be one of %s" % (SIMILARITY_MEASURES,)
            )
        if self.theme_granularity not in GRANULARITIES:
            raise ValueError("theme_granularity must be one of %s" % (GRANULARITIES,))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["format_version"] = FORMAT_VERSION
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusConfig":
        fields = {k: v for k, v in d.items() if k != "format_version"}
        return cls(**fields)

    def save(self, path: Path) -> None:
        path.write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "CorpusConfig":
        return cls.from_dict(json.loads(path.read_text(encoding="utf-8")))
