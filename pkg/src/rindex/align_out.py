"""Count lines and SAM records for query results."""

from dataclasses import dataclass, field
from typing import List, Tuple

from . import __version__
from .errors import CorruptIndexError

SAM_VERSION = "1.6"
FLAG_UNMAPPED = 4
FLAG_SECONDARY = 256
MAPQ_UNKNOWN = 255


@dataclass(frozen=True)
class ResolvedHit:
    reference_name: str
    position: int  # 1-based


@dataclass
class SamRecord:
    qname: str
    flag: int
    rname: str
    pos: int
    mapq: int
    cigar: str
    rnext: str
    pnext: int
    tlen: int
    seq: str
    qual: str
    tags: List[Tuple[str, str, object]] = field(default_factory=list)

    def fields(self):
        out = [self.qname, str(self.flag), self.rname, str(self.pos), str(self.mapq),
               self.cigar, self.rnext, str(self.pnext), str(self.tlen), self.seq, self.qual]
        out.extend(f"{tag}:{kind}:{value}" for tag, kind, value in self.tags)
        return out

    def __str__(self):
        return "\t".join(self.fields())


def resolve(catalog, global_offset, pattern_len):
    k = catalog.find(global_offset)
    if k < 0:
        raise CorruptIndexError(f"hit at offset {global_offset} is not inside any sequence")
    start, length = catalog.starts[k], catalog.lengths[k]
    if global_offset + pattern_len > start + length:
        raise CorruptIndexError(f"hit at offset {global_offset} crosses the end of "
                                f"{catalog.names[k]!r}")
    return ResolvedHit(catalog.names[k], global_offset - start + 1)


def format_count_record(read_name, result):
    return f"{read_name}\t{result.matched_len}/{result.pattern_len}\t{result.occurrences}\n"


def sam_header(catalog):
    lines = [f"@HD\tVN:{SAM_VERSION}\tSO:unknown"]
    lines.extend(f"@SQ\tSN:{name}\tLN:{length}"
                 for name, length in zip(catalog.names, catalog.lengths))
    lines.append(f"@PG\tID:rindex\tPN:rindex\tVN:{__version__}")
    return lines


def sam_records(read, result, hits):
    """SAM records for one read.

    Mapped reads get one record per hit (the first primary, the rest flagged
    secondary).  Reads without hits get a single unmapped record; its NH tag
    is the occurrence count when the read did match in full but was
    suppressed by ``--max-range``, otherwise 0.
    """
    seq = read.bases.decode("ascii")
    qual = read.quality.decode("ascii", "replace") if read.quality else "*"
    if not hits:
        nh = result.occurrences if result.full_match else 0
        return [SamRecord(read.name, FLAG_UNMAPPED, "*", 0, 0, "*", "*", 0, 0,
                          seq, qual, [("NH", "i", nh)])]
    cigar = f"{len(read.bases)}M"
    return [SamRecord(read.name, 0 if k == 0 else FLAG_SECONDARY, hit.reference_name,
                      hit.position, MAPQ_UNKNOWN, cigar, "*", 0, 0, seq, qual,
                      [("NH", "i", result.occurrences)])
            for k, hit in enumerate(hits)]
