import random

import pytest

from oracles import owner
from rindex.align_out import format_count_record, resolve, sam_header, sam_records
from rindex.core import CountResult
from rindex.errors import CorruptIndexError
from rindex.seq_io import SequenceCatalog, SequenceRecord

CAT = SequenceCatalog.from_entries([("a", 0, 4), ("b", 5, 2)])


def test_resolve_examples():
    hit = resolve(CAT, 5, 2)
    assert (hit.reference_name, hit.position) == ("b", 1)
    hit = resolve(CAT, 6, 1)
    assert (hit.reference_name, hit.position) == ("b", 2)
    hit = resolve(CAT, 0, 4)
    assert (hit.reference_name, hit.position) == ("a", 1)


@pytest.mark.parametrize("offset, length", [(4, 1), (7, 1), (8, 1), (3, 2), (6, 2)])
def test_resolve_rejects_boundaries(offset, length):
    with pytest.raises(CorruptIndexError):
        resolve(CAT, offset, length)


def test_resolve_random_vs_scan():
    rng = random.Random(9)
    for _ in range(100):
        k = rng.randint(1, 6)
        entries, start = [], 0
        for i in range(k):
            length = rng.randint(1, 20)
            entries.append((f"s{i}", start, length))
            start += length + 1
        cat = SequenceCatalog.from_entries(entries)
        name, s, length = rng.choice(entries)
        offset = s + rng.randrange(length)
        hit = resolve(cat, offset, 1)
        assert (hit.reference_name, hit.position) == owner(entries, offset)
        assert s + hit.position - 1 == offset


def test_count_record_paper_values():
    assert format_count_record("simulated.0", CountResult(100, 100, 22)) == "simulated.0\t100/100\t22\n"
    assert (format_count_record("simulated.0.3edits", CountResult(44, 100, 492))
            == "simulated.0.3edits\t44/100\t492\n")
    assert format_count_record("r", CountResult(0, 10, 0)) == "r\t0/10\t0\n"


def test_sam_header():
    cat = SequenceCatalog.from_entries([("gb:KY474305|Organism:Dengue", 0, 10676)])
    lines = sam_header(cat)
    assert lines[0] == "@HD\tVN:1.6\tSO:unknown"
    assert lines[1] == "@SQ\tSN:gb:KY474305|Organism:Dengue\tLN:10676"
    assert lines[2].startswith("@PG\tID:rindex")
    empty = sam_header(SequenceCatalog())
    assert len(empty) == 2 and empty[1].startswith("@PG")


def _read(n=100):
    return SequenceRecord("simulated.0", b"TGGA" * (n // 4), b"~" * n)


def test_sam_mapped_paper_fields():
    from rindex.align_out import ResolvedHit

    recs = sam_records(_read(), CountResult(100, 100, 22),
                       [ResolvedHit("gb:GQ868562|Organism:Dengue", 2525)])
    assert len(recs) == 1
    fields = str(recs[0]).split("\t")
    assert fields[:9] == ["simulated.0", "0", "gb:GQ868562|Organism:Dengue", "2525", "255",
                          "100M", "*", "0", "0"]
    assert fields[9] == "TGGA" * 25 and fields[10] == "~" * 100
    assert fields[11:] == ["NH:i:22"]


def test_sam_secondary_flags():
    from rindex.align_out import ResolvedHit

    recs = sam_records(_read(), CountResult(100, 100, 5),
                       [ResolvedHit("x", 1), ResolvedHit("y", 7)])
    assert [r.flag for r in recs] == [0, 256]
    assert {str(r).split("\t")[-1] for r in recs} == {"NH:i:5"}


def test_sam_unmapped():
    rec, = sam_records(_read(), CountResult(44, 100, 492), [])
    f = str(rec).split("\t")
    assert f[1:9] == ["4", "*", "0", "0", "*", "*", "0", "0"]
    assert f[11] == "NH:i:0"
    # suppressed by max-range: full match but no hits listed
    rec, = sam_records(_read(), CountResult(100, 100, 3), [])
    assert rec.flag == 4 and str(rec).endswith("NH:i:3")


def test_sam_no_quality():
    rec, = sam_records(SequenceRecord("r", b"AC"), CountResult(0, 2, 0), [])
    assert rec.qual == "*"
    assert len(rec.fields()) == 12
