"""Command-line front end.

``rindex build`` / ``ri-buildfasta`` builds an index from FASTA;
``rindex align`` / ``ri-align`` counts or locates FASTQ reads against it.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .align_out import format_count_record, resolve, sam_header, sam_records
from .construct import build_index
from .errors import FormatError, RIndexError, UnsupportedAlgorithmError
from .index_io import deserialize_index, index_paths, serialize_index
from .seq_io import build_corpus, iter_fastq, read_fasta

ALGORITHMS = ("sais",)
_FASTA_EXTENSIONS = (".gz", ".fa", ".fasta", ".fna", ".fas", ".txt")


@dataclass(frozen=True)
class BuildConfig:
    input_path: str
    output_prefix: str
    algorithm: str = "sais"

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise UnsupportedAlgorithmError(
                f"unsupported construction algorithm: {self.algorithm!r} "
                f"(supported: {', '.join(ALGORITHMS)})")


@dataclass(frozen=True)
class AlignConfig:
    mode: str
    index_prefix: str
    reads_path: str
    max_hits: Optional[int] = None
    max_range: Optional[int] = None

    def __post_init__(self):
        if self.mode not in ("count", "locate"):
            raise ValueError(f"unknown mode {self.mode!r}")
        for flag, value in (("--max-hits", self.max_hits), ("--max-range", self.max_range)):
            if value is not None and value < 1:
                raise ValueError(f"{flag} must be at least 1")


def default_prefix(input_path):
    """``data/genome.fa.gz`` -> ``data/genome``."""
    base = os.fspath(input_path)
    while True:
        stem, ext = os.path.splitext(base)
        if ext.lower() not in _FASTA_EXTENSIONS or not os.path.basename(stem):
            return base
        base = stem


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_build_args(parser):
    parser.add_argument("-b", dest="algorithm", default="sais", metavar="ALG",
                        help="construction algorithm (only 'sais' is supported)")
    parser.add_argument("-o", dest="output", metavar="PREFIX",
                        help="output prefix; writes PREFIX.ri and PREFIX.1.ri")
    parser.add_argument("fasta", help="FASTA input, optionally gzipped")


def _add_align_args(parser):
    def limits(p, default):
        p.add_argument("--max-hits", type=_positive, metavar="K", default=default,
                       help="report at most K occurrences per read")
        p.add_argument("--max-range", type=_positive, metavar="K", default=default,
                       help="only locate reads occurring at most K times")

    # flags may come before the subcommand (as in `ri-align --max-hits 1 locate ...`)
    # or after it; SUPPRESS keeps the later parser from clobbering earlier values
    limits(parser, None)
    sub = parser.add_subparsers(dest="mode", metavar="{count,locate}")
    sub.required = True
    for mode, text in (("count", "longest matching suffix and its occurrence count"),
                       ("locate", "SAM output for reads that match in full")):
        p = sub.add_parser(mode, help=text)
        limits(p, argparse.SUPPRESS)
        p.add_argument("index", help="index prefix, without the .ri extension")
        p.add_argument("reads", help="FASTQ reads ('-' for standard input)")


def cmd_build(args):
    config = BuildConfig(args.fasta, args.output or default_prefix(args.fasta), args.algorithm)
    t0 = time.perf_counter()
    with open(config.input_path, "rb") as fh:
        records = read_fasta(fh)
    if not records:
        raise FormatError(f"{config.input_path}: no FASTA records")
    corpus, catalog = build_corpus(records)
    index = build_index(corpus, catalog)
    parent = os.path.dirname(config.output_prefix)
    if parent:
        os.makedirs(parent, exist_ok=True)
    ri, cat = serialize_index(index, config.output_prefix)
    elapsed = time.perf_counter() - t0
    print(f"built {ri} and {cat}: n={index.n} r={index.r} "
          f"sequences={len(catalog)} time={elapsed:.2f}s", file=sys.stderr)
    return 0


def _open_reads(path):
    if path == "-":
        return sys.stdin.buffer
    return open(path, "rb")


def cmd_align(args, out=None):
    config = AlignConfig(args.mode, args.index, args.reads, args.max_hits, args.max_range)
    out = out or sys.stdout
    index = deserialize_index(config.index_prefix)
    fh = _open_reads(config.reads_path)
    try:
        if config.mode == "count":
            for read in iter_fastq(fh):
                out.write(format_count_record(read.name, index.count_longest_suffix(read.bases)))
        else:
            out.write("\n".join(sam_header(index.catalog)) + "\n")
            for read in iter_fastq(fh):
                result, hits = index.locate(read.bases, max_hits=config.max_hits,
                                            max_range=config.max_range)
                resolved = [resolve(index.catalog, h.global_offset, len(read.bases)) for h in hits]
                lines = [str(rec) for rec in sam_records(read, result, resolved)]
                out.write("\n".join(lines) + "\n")
    finally:
        if fh is not sys.stdin.buffer:
            fh.close()
    out.flush()
    return 0


def _run(func, args, prog):
    try:
        return func(args)
    except FileNotFoundError as exc:
        print(f"{prog}: error: {exc.strerror}: {exc.filename}", file=sys.stderr)
    except (RIndexError, ValueError, OSError) as exc:
        print(f"{prog}: error: {exc}", file=sys.stderr)
    except BrokenPipeError:
        pass
    return 1


def build_parser():
    parser = argparse.ArgumentParser(prog="rindex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="{build,align}")
    sub.required = True
    _add_build_args(sub.add_parser("build", help="build an index from FASTA"))
    _add_align_args(sub.add_parser("align", help="count or locate FASTQ reads"))
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    func = cmd_build if args.command == "build" else cmd_align
    return _run(func, args, f"rindex {args.command}")


def buildfasta_main(argv=None):
    parser = argparse.ArgumentParser(prog="ri-buildfasta", description="Build an r-index from FASTA.")
    _add_build_args(parser)
    return _run(cmd_build, parser.parse_args(argv), "ri-buildfasta")


def align_main(argv=None):
    parser = argparse.ArgumentParser(prog="ri-align", description="Count or locate FASTQ reads.")
    _add_align_args(parser)
    return _run(cmd_align, parser.parse_args(argv), "ri-align")


if __name__ == "__main__":
    sys.exit(main())
