"""Run-length compressed full-text index (r-index) for genome collections."""

__version__ = "0.1.0"

from ._backend import DEFAULT as BACKEND  # noqa: E402
from .construct import build_index  # noqa: E402
from .core import BwtRange, CountResult, Hit, Index  # noqa: E402
from .index_io import deserialize_index, serialize_index  # noqa: E402
from .seq_io import SequenceCatalog, SequenceRecord, TextCorpus, build_corpus  # noqa: E402

__all__ = [
    "BACKEND", "BwtRange", "CountResult", "Hit", "Index", "SequenceCatalog",
    "SequenceRecord", "TextCorpus", "build_corpus", "build_index",
    "deserialize_index", "serialize_index",
]
