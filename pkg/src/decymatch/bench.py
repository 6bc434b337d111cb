"""Block-tree instance generators and the timing harness.

Generated instances hang every block off the existing graph through a fresh
bridge, so each bridge-free component is a single block. That keeps every
instance decyclable by construction and, for the chordal family, makes the
expected witness size exactly 2 * diamonds + triangles.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .core import Graph
from .decycle import decide_chordal, decide_dh

# block builders: anchor vertex b is already allocated; fresh vertices follow
_BLOCK_SHAPES = {
    "triangle": (2, lambda b: [(b, b + 1), (b, b + 2), (b + 1, b + 2)]),
    "diamond": (3, lambda b: [(b, b + 1), (b, b + 2), (b + 1, b + 2),
                              (b + 1, b + 3), (b + 2, b + 3)]),
    "square": (3, lambda b: [(b, b + 1), (b + 1, b + 3), (b + 2, b + 3), (b, b + 2)]),
    "K23": (4, lambda b: [(b, b + 2), (b, b + 3), (b, b + 4),
                          (b + 1, b + 2), (b + 1, b + 3), (b + 1, b + 4)]),
    "K33minus": (5, lambda b: [(b, b + 3), (b, b + 4), (b, b + 5),
                               (b + 1, b + 3), (b + 1, b + 4), (b + 1, b + 5),
                               (b + 2, b + 3), (b + 2, b + 4)]),
    "bridge": (0, None),
}

CHORDAL_MIX = (("triangle", 5), ("diamond", 3), ("bridge", 2))
DH_MIX = (("triangle", 3), ("diamond", 2), ("square", 2), ("K23", 1),
          ("K33minus", 1), ("bridge", 2))


@dataclass(frozen=True)
class BenchInstance:
    graph: Graph
    kind_counts: dict
    family: str

    @property
    def expected_chordal_witness(self) -> int:
        return 2 * self.kind_counts.get("diamond", 0) + self.kind_counts.get("triangle", 0)


def generate_block_tree(target_n: int, mix, seed: int = 0, family: str = "",
                        window: int = 4096) -> BenchInstance:
    """Random block tree: each block hangs off an anchor through a fresh
    bridge. Anchors are drawn from a sliding window of fixed size, so
    instances of different sizes are locally identical in shape; timing
    comparisons across sizes then measure the algorithm rather than how much
    of the working set happens to fit in cache."""
    rng = random.Random(seed)
    kinds = [k for k, w in mix for _ in range(w)]
    edges = []
    counts: dict[str, int] = {}
    n = 1
    while n < target_n:
        anchor = rng.randrange(max(0, n - window), n)
        b = n
        edges.append((anchor, b))
        kind = rng.choice(kinds)
        counts[kind] = counts.get(kind, 0) + 1
        extra, builder = _BLOCK_SHAPES[kind]
        if builder is not None:
            edges.extend(builder(b))
        n = b + 1 + extra
    return BenchInstance(Graph(n, edges), counts, family)


def generate_chordal_instance(target_n: int, seed: int = 0) -> BenchInstance:
    return generate_block_tree(target_n, CHORDAL_MIX, seed, "chordal")


def generate_dh_instance(target_n: int, seed: int = 0) -> BenchInstance:
    return generate_block_tree(target_n, DH_MIX, seed, "dh")


def run_bench(sizes=(10**4, 10**5, 10**6), families=("chordal", "dh"), seed: int = 0,
              repeats: int = 3):
    """Time the linear deciders on generated instances; returns result rows.
    Each measurement is the median of `repeats` runs.

    Pre-existing heap objects are frozen for the duration so that collector
    sweeps triggered inside the timed region scale with the instance, not
    with whatever else the process has loaded.
    """
    import gc

    gc.collect()
    gc.freeze()
    try:
        return _run_bench(sizes, families, seed, repeats)
    finally:
        gc.unfreeze()


def _scrub_caches():
    # Evict the processor caches between timed runs: without this, repeats on
    # a small instance rerun against warm objects, an advantage instances
    # beyond cache size can never have, and the cross-size ratio measures the
    # memory hierarchy instead of the algorithm.
    bytearray(b"\xaa" * (64 * 1024 * 1024))


def _run_bench(sizes, families, seed, repeats):
    rows = []
    for family in families:
        gen = generate_chordal_instance if family == "chordal" else generate_dh_instance
        decide = decide_chordal if family == "chordal" else decide_dh
        for size in sizes:
            inst = gen(size, seed)
            g = inst.graph
            samples = []
            for _ in range(max(repeats, 1)):
                _scrub_caches()
                t0 = time.perf_counter()
                verdict = decide(g)
                samples.append(time.perf_counter() - t0)
            samples.sort()
            seconds = samples[len(samples) // 2]
            row = {
                "family": family,
                "n": g.n,
                "m": g.m,
                "seconds": seconds,
                "seconds_min": samples[0],
                "ns_per_vertex": 1e9 * seconds / max(g.n, 1),
                "decyclable": verdict.decyclable,
                "witness_size": len(verdict.witness) if verdict.witness else 0,
                "blocks": dict(sorted(inst.kind_counts.items())),
            }
            if family == "chordal":
                row["expected_witness"] = inst.expected_chordal_witness
            rows.append(row)
    return rows


def format_bench_rows(rows) -> str:
    lines = [
        f"{'family':8} {'n':>9} {'m':>9} {'seconds':>9} {'ns/vertex':>10} "
        f"{'witness':>8} {'expected':>9}"
    ]
    for r in rows:
        lines.append(
            f"{r['family']:8} {r['n']:>9} {r['m']:>9} {r['seconds']:>9.3f} "
            f"{r['ns_per_vertex']:>10.1f} {r['witness_size']:>8} "
            f"{r.get('expected_witness', '-'):>9}"
        )
    return "\n".join(lines)
