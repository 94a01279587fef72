import gzip
import io
import random

import pytest
from hypothesis import given, strategies as st

from oracles import owner, random_records
from rindex.errors import FormatError
from rindex.seq_io import SequenceRecord, build_corpus, normalize, read_fasta, read_fastq


def fasta(text, gz=False):
    data = text.encode() if isinstance(text, str) else text
    return io.BytesIO(gzip.compress(data) if gz else data)


def pairs(records):
    return [(r.name, r.bases) for r in records]


def test_fasta_multiline_lowercase():
    assert pairs(read_fasta(fasta(">s1\nacg\nt\n"))) == [("s1", b"ACGT")]


def test_fasta_two_records():
    assert pairs(read_fasta(fasta(">a\nACGT\n>b\nGG\n"))) == [("a", b"ACGT"), ("b", b"GG")]


def test_fasta_non_acgt_becomes_n():
    raw = b"AXRT"
    expected = bytes(b if b in b"ACGT" else ord("N") for b in raw)
    assert expected == b"ANNT"
    assert pairs(read_fasta(fasta(b">x\n" + raw + b"\n"))) == [("x", expected)]


def test_fasta_full_header_is_name():
    recs = read_fasta(fasta(">gb:KY474305|Organism:Dengue virus 1  \nAC\n"))
    assert recs[0].name == "gb:KY474305|Organism:Dengue virus 1"


def test_fasta_crlf_and_blank_lines():
    recs = read_fasta(fasta("\n>a\r\nAC\r\n\r\nGT\r\n"))
    assert pairs(recs) == [("a", b"ACGT")]


@pytest.mark.parametrize("text", ["ACGT\n>a\nAC\n", "junk\n"])
def test_fasta_missing_header(text):
    with pytest.raises(FormatError, match="'>'"):
        read_fasta(fasta(text))


def test_fasta_empty_body():
    with pytest.raises(FormatError, match="empty"):
        read_fasta(fasta(">a\n>b\nAC\n"))


def test_gzip_detected_by_magic():
    text = ">a\nACGT\n>b\nGG\n"
    assert read_fasta(fasta(text, gz=True)) == read_fasta(fasta(text))
    assert read_fasta(fasta(text, gz=True), True) == read_fasta(fasta(text), False)


def test_truncated_gzip():
    data = gzip.compress(b">a\n" + b"ACGT" * 1000 + b"\n")
    with pytest.raises(FormatError, match="gzip"):
        read_fasta(io.BytesIO(data[: len(data) // 2]))


fasta_text = st.lists(
    st.tuples(st.text("abc|: ", min_size=1, max_size=8).map(str.strip).filter(bool),
              st.text("ACGTNacgtnRYX", min_size=1, max_size=40)),
    min_size=1, max_size=5,
).map(lambda recs: "".join(f">{n}\n{s}\n" for n, s in recs))


@given(fasta_text)
def test_gzip_transparency(text):
    assert read_fasta(fasta(text, gz=True), True) == read_fasta(fasta(text), False)


@given(st.binary(max_size=60))
def test_normalize_idempotent(raw):
    once = normalize(raw)
    assert normalize(once) == once
    assert set(once) <= set(b"ACGTN")


def test_fastq_minimal():
    recs = read_fastq(io.BytesIO(b"@r1\nACGT\n+\n~~~~\n"))
    assert [(r.name, r.bases, r.quality) for r in recs] == [("r1", b"ACGT", b"~~~~")]


def test_fastq_quality_mismatch():
    with pytest.raises(FormatError, match="quality length mismatch"):
        read_fastq(io.BytesIO(b"@r1\nACGT\n+\n~~~\n"))


def test_fastq_normalizes_bases_keeps_quality():
    raw = b"acgn"
    expected = bytes(ord(chr(b).upper()) if chr(b).upper() in "ACGT" else ord("N") for b in raw)
    recs = read_fastq(io.BytesIO(b"@r\n" + raw + b"\n+\nIIII\n"))
    assert [(r.name, r.bases, r.quality) for r in recs] == [("r", expected, b"IIII")]
    assert expected == b"ACGN"


@pytest.mark.parametrize("data, match", [
    (b"@r1\nACGT\n+\n~~~~\n@r2\nAC\n", "multiple of 4"),
    (b"@r1\nACGT\nxx\n~~~~\n", "'\\+'"),
    (b"r1\nACGT\n+\n~~~~\n", "header"),
])
def test_fastq_malformed(data, match):
    with pytest.raises(FormatError, match=match):
        read_fastq(io.BytesIO(data))


def test_record_invariants():
    with pytest.raises(FormatError):
        SequenceRecord("x", b"")
    with pytest.raises(FormatError):
        SequenceRecord("x", b"AC", b"I")


def test_build_corpus_layout(two_seq):
    corpus, catalog = two_seq
    assert corpus.text == b"ACGT#GG#$"
    assert corpus.n == 9
    assert catalog.entries == [("a", 0, 4), ("b", 5, 2)]


def test_build_corpus_single():
    corpus, catalog = build_corpus([SequenceRecord("a", b"A")])
    assert corpus.text == b"A#$"
    assert catalog.entries == [("a", 0, 1)]


def test_build_corpus_empty():
    with pytest.raises(ValueError):
        build_corpus([])


def test_catalog_covers_every_base():
    rng = random.Random(11)
    for _ in range(10):
        records = random_records(rng, max_seqs=8, max_total=300)
        corpus, catalog = build_corpus(records)
        entries = catalog.entries
        for pos, sym in enumerate(corpus.text):
            found = owner(entries, pos)
            if sym in b"#$":
                assert found is None and catalog.find(pos) == -1
            else:
                k = catalog.find(pos)
                assert found == (entries[k][0], pos - entries[k][1] + 1)
        for name, start, length in entries:
            assert corpus.text[start + length] == ord("#")
        assert corpus.text.count(b"$") == 1 and corpus.text.endswith(b"$")


@given(st.lists(st.text("ACGTN", min_size=1, max_size=20), min_size=1, max_size=6))
def test_corpus_round_trip(seqs):
    records = [SequenceRecord(f"s{i}", s.encode()) for i, s in enumerate(seqs)]
    corpus, catalog = build_corpus(records)
    pieces = [corpus.text[s:s + n] for _, s, n in catalog.entries]
    assert pieces == [r.bases for r in records]
    assert corpus.text.replace(b"#", b"").replace(b"$", b"") == b"".join(pieces)
