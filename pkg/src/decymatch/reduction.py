"""Build the hardness-reduction instances and move witnesses across them.

build_reduction replaces every vertex of a cubic graph h by a gadget, wires
gadgets through port edges wherever h has an edge, and threads a chain of
q-p edges through all gadgets. The output is fairly cubic: exactly the two
special vertices s and t have degree 2, and h has a Hamiltonian cycle through
the distinguished edge e iff the output has a Hamiltonian s-t path.
lift_solution and project_solution convert witnesses in both directions, and
witness_hamiltonian_cycle produces the Hamiltonian cycle the construction
always possesses.

expand_vertex_forced_edge is the companion preprocessing step: it rebuilds a
cubic graph so that Hamiltonicity becomes Hamiltonicity through one forced
edge. Its gadget is the main gadget with the p-q edge added and the type-x
terminals exposed as ports; every covering port-to-port traversal must cross
both attachment edges of each internal diamond, which forces the returned
edge e.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Edge, Graph, GraphError, norm_edge, degree_profile
from . import gadgets as gd


@dataclass
class ReductionResult:
    """The assembled fairly cubic graph plus the wiring metadata.

    gadget_of covers every vertex (diamond members map to their gadget);
    port_edges is keyed by the original h edge; relabel[i] is the h vertex
    realized by gadget i+1. The contracted twin (diamonds as single vertices)
    shares all non-diamond vertex ids with g.
    """

    g: Graph
    s: int
    t: int
    gadget_of: dict[int, int]
    port_edges: dict[Edge, Edge]
    chain_edges: tuple[Edge, ...]
    roles: dict[int, str]
    relabel: tuple[int, ...]
    contracted: Graph
    expansions: dict[int, gd.DiamondExpansion] = field(repr=False)
    slots: dict[int, dict[int, int]] = field(repr=False)  # gadget -> nbr gadget -> port vertex
    offsets: dict[int, int] = field(repr=False)


def _gadget_offsets(n: int) -> dict[int, int]:
    offs = {1: 0}
    for i in range(2, n + 1):
        offs[i] = gd.G1_N + gd.MAIN_N * (i - 2)
    return offs


def build_reduction(h: Graph, e) -> ReductionResult:
    """Assemble the reduction instance for cubic connected h and edge e."""
    prof = degree_profile(h)
    if not prof.is_cubic:
        raise GraphError("reduction requires a cubic graph")
    if not h.is_connected():
        raise GraphError("reduction requires a connected graph")
    if h.n < 3:
        raise GraphError("reduction requires at least 3 vertices")
    e = norm_edge(*e)
    if e not in h.edges:
        raise GraphError(f"edge {e} not present in graph")

    v1, v2 = e
    order = [v1, v2] + sorted(x for x in range(h.n) if x not in e)
    gidx = {orig: i + 1 for i, orig in enumerate(order)}
    n = h.n
    offs = _gadget_offsets(n)

    edges: list[Edge] = []
    roles: dict[int, str] = {}
    gadget_of: dict[int, int] = {}
    slots: dict[int, dict[int, int]] = {}
    diamonds: list[int] = []

    for i in range(1, n + 1):
        off = offs[i]
        template, rmap, dmnds = (
            (gd.G1_EDGES, gd.G1_ROLES, gd.G1_DIAMONDS)
            if i == 1
            else (gd.MAIN_EDGES, gd.MAIN_ROLES, gd.MAIN_DIAMONDS)
        )
        edges.extend((u + off, v + off) for u, v in template)
        for tvert, role in rmap.items():
            roles[tvert + off] = role
            gadget_of[tvert + off] = i
        diamonds.extend(d + off for d in dmnds)
        nbrs = sorted(gidx[w] for w in h.adj[order[i - 1]])
        if i == 1:
            rest = [j for j in nbrs if j != 2]
            slots[1] = {2: off + 0, rest[0]: off + 1, rest[1]: off + 2}
        else:
            slots[i] = {nbrs[0]: off + 0, nbrs[1]: off + 1, nbrs[2]: off + 2}

    port_edges: dict[Edge, Edge] = {}
    for a, b in sorted(h.edges):
        i, j = gidx[a], gidx[b]
        pe = norm_edge(slots[i][j], slots[j][i])
        port_edges[norm_edge(a, b)] = pe
        edges.append(pe)

    def q_of(i: int) -> int:
        return offs[i] + 4

    def p_of(i: int) -> int:
        return offs[i] + (5 if i == 1 else 3)

    t_vertex = offs[1] + 3
    s_vertex = offs[1] + 10
    chain = [norm_edge(q_of(i), p_of(i + 1)) for i in range(1, n)]
    chain.append(norm_edge(q_of(n), t_vertex))
    edges.extend(chain)

    contracted_n = gd.G1_N + gd.MAIN_N * (n - 1)
    contracted = Graph(contracted_n, edges)
    n2, edges2, expansions = gd.expand_diamonds(contracted_n, edges, diamonds)
    g = Graph(n2, edges2)
    for exp in expansions.values():
        for w in exp.members():
            roles[w] = "diamond-member"
            gadget_of[w] = gadget_of[exp.w1]

    prof_out = degree_profile(g)
    if not prof_out.is_fairly_cubic or set(prof_out.degree2_vertices) != {s_vertex, t_vertex}:
        raise AssertionError("assembled reduction is not fairly cubic at s, t")
    return ReductionResult(
        g=g,
        s=s_vertex,
        t=t_vertex,
        gadget_of=gadget_of,
        port_edges=port_edges,
        chain_edges=tuple(chain),
        roles=roles,
        relabel=tuple(order),
        contracted=contracted,
        expansions=expansions,
        slots=slots,
        offsets=offs,
    )


def _validate_cycle(g: Graph, seq) -> None:
    if len(seq) != g.n or len(set(seq)) != g.n:
        raise GraphError("sequence does not visit every vertex exactly once")
    for u, v in zip(seq, seq[1:]):
        if not g.has_edge(u, v):
            raise GraphError(f"missing edge ({u}, {v}) in cycle")
    if not g.has_edge(seq[-1], seq[0]):
        raise GraphError("cycle does not close")


def _validate_path(g: Graph, seq, s, t) -> None:
    if len(seq) != g.n or len(set(seq)) != g.n:
        raise GraphError("sequence does not visit every vertex exactly once")
    if seq[0] != s or seq[-1] != t:
        raise GraphError(f"path endpoints {seq[0]}, {seq[-1]} differ from ({s}, {t})")
    for u, v in zip(seq, seq[1:]):
        if not g.has_edge(u, v):
            raise GraphError(f"missing edge ({u}, {v}) in path")


def witness_hamiltonian_cycle(r: ReductionResult) -> list[int]:
    """The Hamiltonian cycle the construction always has: the start gadget's
    p-s-..-q sweep, then each main gadget's p-to-q path, closed through t."""
    n = len(r.relabel)
    seq = [v + r.offsets[1] for v in gd.G1_WITNESS_SEGMENT]
    for i in range(2, n + 1):
        seq.extend(v + r.offsets[i] for v in gd.MAIN_Z)
    seq.append(r.t)
    expanded = gd.expand_path(seq, r.expansions)
    _validate_cycle(r.g, expanded)
    return expanded


_SLOT_PATTERNS = {
    (0, 1): gd.MAIN_Q,
    (0, 2): gd.MAIN_R,
    (1, 2): gd.MAIN_S,
}


def _main_traversal(entry_slot: int, exit_slot: int) -> tuple[int, ...]:
    pattern = _SLOT_PATTERNS[tuple(sorted((entry_slot, exit_slot)))]
    if pattern[0] == entry_slot:
        return pattern
    return tuple(reversed(pattern))


def lift_solution(r: ReductionResult, hc) -> list[int]:
    """Turn a Hamiltonian cycle of h through e into an s-t Hamiltonian path."""
    h_order = list(hc)
    n = len(r.relabel)
    if sorted(h_order) != sorted(r.relabel):
        raise GraphError("cycle does not visit the vertices of h exactly once")
    v1, v2 = r.relabel[0], r.relabel[1]
    k = h_order.index(v1)
    h_order = h_order[k:] + h_order[:k]
    if h_order[1] != v2:
        if h_order[-1] != v2:
            raise GraphError("cycle does not contain the distinguished edge")
        h_order = [h_order[0]] + h_order[1:][::-1]
    gidx = {orig: i + 1 for i, orig in enumerate(r.relabel)}
    sigma = [gidx[x] for x in h_order]  # gadget visit order, starts 1, 2
    for a, b in zip(sigma, sigma[1:] + sigma[:1]):
        ga, gb = r.relabel[a - 1], r.relabel[b - 1]
        if not norm_edge(ga, gb) in r.port_edges:
            raise GraphError("input is not a cycle of h")

    off1 = r.offsets[1]
    seq = [v + off1 for v in gd.G1_FIRST_VISIT]  # s, Da, x_12
    for pos in range(1, n):
        cur = sigma[pos]
        prev_g = sigma[pos - 1]
        next_g = sigma[(pos + 1) % n]
        off = r.offsets[cur]
        entry = r.slots[cur][prev_g] - off
        exit_ = r.slots[cur][next_g] - off
        seq.extend(v + off for v in _main_traversal(entry, exit_))
    entry_g1 = r.slots[1][sigma[-1]] - off1
    if entry_g1 == 1:
        tail = gd.G1_SECOND_VISIT_VIA_X1K
    elif entry_g1 == 2:
        tail = gd.G1_SECOND_VISIT_VIA_X1L
    else:
        raise AssertionError("reentry to the start gadget must use a free port")
    seq.extend(v + off1 for v in tail)
    expanded = gd.expand_path(seq, r.expansions)
    _validate_path(r.g, expanded, r.s, r.t)
    return expanded


def project_solution(r: ReductionResult, p) -> list[int]:
    """Read the gadget visit order off an s-t Hamiltonian path and emit the
    corresponding Hamiltonian cycle of h (it contains e by construction)."""
    seq = list(p)
    if seq and seq[0] == r.t and seq[-1] == r.s:
        seq.reverse()
    _validate_path(r.g, seq, r.s, r.t)
    n = len(r.relabel)
    runs: list[int] = []
    for v in seq:
        gi = r.gadget_of[v]
        if not runs or runs[-1] != gi:
            runs.append(gi)
    if len(runs) != n + 1 or runs[0] != 1 or runs[-1] != 1:
        raise GraphError("path does not visit each main gadget exactly once")
    middle = runs[1:-1]
    if sorted(middle) != list(range(2, n + 1)):
        raise GraphError("path does not visit each main gadget exactly once")
    if middle[0] != 2:
        raise AssertionError("first port crossing must reach gadget 2")
    first_visit = []
    for v in seq:
        if r.gadget_of[v] != 1:
            break
        first_visit.append(v)
    expected = gd.expand_path(
        [v + r.offsets[1] for v in gd.G1_FIRST_VISIT], r.expansions
    )
    if first_visit != expected:
        raise AssertionError("first visit to the start gadget must be s..x_12")
    return [r.relabel[g - 1] for g in runs[:-1]]


# ---------------------------------------------------------------------------
# Forcing an edge into Hamiltonian cycles of a cubic graph
# ---------------------------------------------------------------------------

_FORCED_GADGET_EDGES = gd.MAIN_EDGES + ((3, 4),)
_FORCED_GADGET_PORTS = (0, 1, 2)
_FORCED_EDGE_TEMPLATE = (2, 8)  # x_il to its diamond: crossed by every covering traversal


def forced_edge_gadget_layout() -> gd.GadgetLayout:
    """The vertex-replacement gadget as a layout whose terminals are the three
    ports, for exhaustive inspection."""
    return gd.GadgetLayout(
        Graph(gd.MAIN_N, _FORCED_GADGET_EDGES),
        _FORCED_GADGET_PORTS,
        frozenset(_FORCED_GADGET_PORTS),
        dict(gd.MAIN_ROLES),
        True,
        gd.MAIN_DIAMONDS,
        {},
    )


def expand_vertex_forced_edge(g: Graph, v: int, contracted: bool = False):
    """Replace vertex v of a cubic graph by the port gadget; returns (h, e)
    with: g has a Hamiltonian cycle iff h has one containing e.

    h is cubic in the expanded form (default). The contracted form keeps the
    diamond placeholders at degree 2 and is small enough for brute-force
    verification. Vertices above v shift down by one; the gadget occupies the
    highest ids.
    """
    prof = degree_profile(g)
    if not prof.is_cubic:
        raise GraphError("requires a cubic graph")
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")

    def relab(x: int) -> int:
        return x if x < v else x - 1

    base = g.n - 1
    edges = [
        norm_edge(relab(a), relab(b)) for a, b in g.edges if v not in (a, b)
    ]
    for port, w in enumerate(sorted(g.adj[v])):
        edges.append(norm_edge(relab(w), base + port))
    edges.extend((a + base, b + base) for a, b in _FORCED_GADGET_EDGES)
    e = norm_edge(_FORCED_EDGE_TEMPLATE[0] + base, _FORCED_EDGE_TEMPLATE[1] + base)
    if contracted:
        return Graph(base + gd.MAIN_N, edges), e
    n2, edges2, _ = gd.expand_diamonds(
        base + gd.MAIN_N, edges, [d + base for d in gd.MAIN_DIAMONDS]
    )
    return Graph(n2, edges2), e
