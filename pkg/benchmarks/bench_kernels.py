"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--copies 100] [--length 10000] [--reads 1000]

Builds a collection of mutated copies of one random sequence, then times
suffix-array construction, counting and locating (one hit per read) on
every available backend.
"""

import argparse
import random
import time

from rindex import _backend
from rindex.construct import build_index, suffix_array
from rindex.seq_io import SequenceRecord, build_corpus


def make_collection(copies, length, rate, seed):
    rng = random.Random(seed)
    base = [rng.choice("ACGT") for _ in range(length)]
    records = []
    for k in range(copies):
        seq = base[:]
        for i in range(length):
            if rng.random() < rate:
                seq[i] = rng.choice("ACGT")
        records.append(SequenceRecord(f"copy{k}", "".join(seq).encode()))
    return records


def timed(func, *args, **kwargs):
    t0 = time.perf_counter()
    out = func(*args, **kwargs)
    return out, time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--copies", type=int, default=100)
    parser.add_argument("--length", type=int, default=10_000)
    parser.add_argument("--rate", type=float, default=0.001)
    parser.add_argument("--reads", type=int, default=1000)
    parser.add_argument("--read-length", type=int, default=100)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    records = make_collection(args.copies, args.length, args.rate, args.seed)
    corpus, catalog = build_corpus(records)
    rng = random.Random(args.seed + 1)
    reads = []
    for _ in range(args.reads):
        bases = rng.choice(records).bases
        start = rng.randrange(len(bases) - args.read_length)
        reads.append(bases[start:start + args.read_length])

    print(f"corpus n={corpus.n}, {args.reads} reads of {args.read_length} bp")
    print(f"{'backend':<8} {'sa (s)':>9} {'build (s)':>10} {'count (s)':>10} {'locate (s)':>11}")
    rows = {}
    for name in sorted(_backend.AVAILABLE):
        _, t_sa = timed(suffix_array, corpus, backend=name)
        index, t_build = timed(build_index, corpus, catalog, backend=name)
        _, t_count = timed(lambda: [index.count_longest_suffix(r) for r in reads])
        _, t_locate = timed(lambda: [index.locate(r, max_hits=1) for r in reads])
        rows[name] = (t_sa, t_build, t_count, t_locate)
        print(f"{name:<8} {t_sa:>9.3f} {t_build:>10.3f} {t_count:>10.3f} {t_locate:>11.3f}")
    if len(rows) == 2:
        speedup = [p / c for p, c in zip(rows["python"], rows["cython"])]
        print(f"{'speedup':<8} " + " ".join(f"{s:>{w}.1f}x" for s, w in zip(speedup, (8, 9, 9, 10))))
    print(f"r={index.r} r/n={index.r / index.n:.4f}")


if __name__ == "__main__":
    main()
