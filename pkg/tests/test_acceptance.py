"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the test names map one to one onto the criteria.
"""

import random
import time

from decymatch import (
    Graph,
    decide_chordal,
    decide_cograph,
    decide_dh,
    decide_split,
    degree_profile,
    find_bad_subgraph,
    is_acyclic,
    is_biconnected,
    is_chordal,
    is_cograph,
    is_distance_hereditary,
    is_split,
    build_gadget_main,
    build_reduction,
    enumerate_terminal_ham_paths,
    lift_solution,
    project_solution,
    remove_edges,
    validate_matching,
    verify_gadget_properties,
    witness_hamiltonian_cycle,
    check_spanning_tree_characterization,
)
from decymatch.bench import generate_chordal_instance, run_bench
from decymatch.blocks import block_decomposition

import brute
from test_reduction import REFERENCE_LISTING, brute_same_cycle, hcs_through


def report(num, name, ok):
    print(f"[acceptance {num}] {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


def test_criterion_1_oracle_equivalence(atlas_connected, oracle):
    """Class deciders agree with the oracle on every connected graph n<=7."""
    disagreements = 0
    for g in atlas_connected:
        want = oracle(g).decyclable
        if is_chordal(g).ok:
            if decide_chordal(g).decyclable != want:
                disagreements += 1
        if is_split(g):
            if decide_split(g).decyclable != want:
                disagreements += 1
        if is_distance_hereditary(g).ok:
            if decide_dh(g).decyclable != want:
                disagreements += 1
        if g.n >= 2 and is_cograph(g).ok:
            if decide_cograph(g).decyclable != want:
                disagreements += 1
    report(1, f"oracle equivalence on n<=7 ({disagreements} disagreements)",
           disagreements == 0)


def test_criterion_2_named_verdicts(oracle):
    ok = True
    ok &= oracle(brute.k24()).decyclable is False
    ok &= decide_dh(brute.k24()).decyclable is False
    for builder in (brute.triangle, brute.square, brute.diamond, brute.k23,
                    brute.k33minus):
        g = builder()
        ok &= oracle(g).decyclable is True
        ok &= decide_dh(g).decyclable is True
    for k in range(4):
        g = brute.chain(k)
        ok &= g.n == 2 * k + 7
        ok &= g.m == 3 * k + 10
        verdict = decide_chordal(g)
        ok &= verdict.decyclable is False
        ok &= verdict.refutation["kind"] == "chain_witness"
        ok &= find_bad_subgraph(g) == tuple(range(g.n))
    report(2, "named verdicts (K24, small sparse DH graphs, chains)", ok)


def test_criterion_3_witness_size_law():
    ok = True
    checked = 0
    seed = 0
    while checked < 500:
        inst = generate_chordal_instance(random.Random(seed).randint(10, 120), seed)
        seed += 1
        g = inst.graph
        verdict = decide_chordal(g)
        if not verdict.decyclable:
            ok = False
            break
        checked += 1
        bd = block_decomposition(g)
        d = sum(1 for k in bd.block_kinds if k == "diamond")
        t = sum(1 for k in bd.block_kinds if k == "triangle")
        ok &= len(verdict.witness) == 2 * d + t
        ok &= validate_matching(g, verdict.witness)
        rest = remove_edges(g, verdict.witness.edges)
        ok &= is_acyclic(rest)
        for comp in rest.connected_components():
            ok &= len(brute.induced_edges(rest, comp)) == len(comp) - 1
        if not ok:
            break
    report(3, f"witness size 2d+t on {checked} chordal instances", ok and checked == 500)


def test_criterion_4_reference_enumeration():
    lay = build_gadget_main()
    ok = lay.graph.n == 14 and lay.graph.m == 17
    canonical = enumerate_terminal_ham_paths(lay)
    ok &= len(canonical.paths) == 4
    both = enumerate_terminal_ham_paths(lay, both_directions=True)
    ok &= list(both.paths) == REFERENCE_LISTING
    rep = verify_gadget_properties(lay)
    ok &= rep.all_pass
    report(4, "reference path listing and gadget properties 1-6", ok)


def test_criterion_5_reduction_integrity():
    h = brute.k4()
    ok = True
    for e in sorted(h.edges):
        r = build_reduction(h, e)
        prof = degree_profile(r.g)
        ok &= prof.is_fairly_cubic
        ok &= set(prof.degree2_vertices) == {r.s, r.t}
        cyc = witness_hamiltonian_cycle(r)
        ok &= len(cyc) == r.g.n
        for hcyc in hcs_through(h, e):
            path = lift_solution(r, hcyc)
            ok &= path[0] == r.s and path[-1] == r.t and len(path) == r.g.n
            ok &= all(r.g.has_edge(a, b) for a, b in zip(path, path[1:]))
            ok &= brute_same_cycle(project_solution(r, path), hcyc)
    report(5, "reduction integrity for K4 over all edge choices", ok)


def test_criterion_6_sparse_2conn_dh_enumeration(atlas_connected):
    allowed = [brute.triangle(), brute.square(), brute.diamond(), brute.k23(),
               brute.k24(), brute.k33minus()]
    ok = True
    checked = 0
    for g in atlas_connected:
        if not (3 <= g.n <= 7) or not is_biconnected(g):
            continue
        if not is_distance_hereditary(g).ok:
            continue
        checked += 1
        sparse = find_bad_subgraph(g) is None
        in_list = any(brute.isomorphic(g, pat) for pat in allowed)
        if sparse != in_list:
            ok = False
    report(6, f"2-connected DH sparseness list over {checked} graphs", ok)


def test_criterion_7_linear_time_scaling():
    # the 5s bound uses the median of 5 runs (robust to one-off stalls); the
    # scaling ratio compares the minima, the floor-to-floor estimate that a
    # noisy machine cannot inflate
    rows = run_bench(sizes=(10**5, 10**6), families=("chordal", "dh"), seed=0,
                     repeats=5)
    ok = True
    for row in rows:
        ok &= row["decyclable"] is True
        ok &= row["seconds"] < 5.0
        if row["family"] == "chordal":
            ok &= row["witness_size"] == row["expected_witness"]
    for family in ("chordal", "dh"):
        fam = [r for r in rows if r["family"] == family]
        small = next(r for r in fam if r["n"] <= 2 * 10**5)
        big = next(r for r in fam if r["n"] > 2 * 10**5)
        ratio = big["seconds_min"] / max(small["seconds_min"], 1e-9)
        ok &= ratio <= 15.0
        print(f"  [bench] {family}: {small['seconds']:.2f}s @1e5, "
              f"{big['seconds']:.2f}s @1e6 (medians), floor ratio {ratio:.1f}")
    report(7, "linear deciders under 5s at 1e6 with ratio <= 15", ok)


def _corpus_n10(atlas_connected):
    rng = random.Random(99)
    corpus = list(atlas_connected)
    for _ in range(60):
        corpus.append(brute.random_connected_graph(rng.randint(8, 10),
                                                   rng.uniform(0.15, 0.45), rng))
    return corpus


def test_criterion_8_property_suite(atlas_connected, oracle):
    corpus = _corpus_n10(atlas_connected)
    rng = random.Random(5)
    violations = []

    # (a) subgraph closure of decyclability
    for g in corpus[:400]:
        v = oracle(g)
        if not v.decyclable:
            continue
        keep = [x for x in range(g.n) if rng.random() < 0.7]
        relabel = {x: i for i, x in enumerate(sorted(keep))}
        h = Graph(len(keep), [
            (relabel[a], relabel[b]) for a, b in brute.induced_edges(g, keep)
        ])
        sub_m = [
            (relabel[a], relabel[b]) for a, b in v.witness
            if a in relabel and b in relabel
        ]
        if not validate_matching(h, sub_m):
            violations.append(("a", g))

    # (b) and (g): decyclable implies the density bound and sparseness
    for g in corpus:
        if oracle(g).decyclable:
            if g.m > (3 * g.n) // 2 - 1:
                violations.append(("b", g))
            if find_bad_subgraph(g) is not None:
                violations.append(("g", g))

    # (d) sparse graphs on >= 2 vertices have two vertices of degree <= 2
    for g in corpus:
        if g.n >= 2 and find_bad_subgraph(g) is None:
            if sum(1 for v in range(g.n) if g.degree(v) <= 2) < 2:
                violations.append(("d", g))

    # (e) sparse graphs contain no K4, K33, or gem (as subgraphs)
    for g in corpus:
        if find_bad_subgraph(g) is None:
            if (brute.contains_subgraph(g, brute.k4())
                    or brute.contains_subgraph(g, brute.k33())
                    or brute.contains_subgraph(g, brute.gem())):
                violations.append(("e", g))

    # (f) every 2-connected fairly cubic graph is sparse
    fc = [brute.diamond()]
    for base in (brute.k4(), brute.k33(), brute.prism(), brute.petersen()):
        u, v = min(base.edges)
        n = base.n
        edges = [x for x in base.sorted_edges() if x != (u, v)]
        edges += [(u, n), (n, n + 1), (n + 1, v)]
        fc.append(Graph(n + 2, edges))
    for g in fc:
        assert degree_profile(g).is_fairly_cubic and brute.two_connected_brute(g)
        if find_bad_subgraph(g) is not None:
            violations.append(("f", g))

    # (j) spanning-tree characterization iff oracle, on subcubic graphs
    checked_j = 0
    for g in corpus:
        if g.n > 10 or not degree_profile(g).is_subcubic or g.n < 2:
            continue
        checked_j += 1
        exists = any(
            check_spanning_tree_characterization(g, t)
            for t in brute.spanning_trees(g)
        )
        if exists != oracle(g).decyclable:
            violations.append(("j", g))

    report(8, f"decyclability property suite ({len(violations)} violations, "
              f"{checked_j} spanning-tree cases)", not violations)
