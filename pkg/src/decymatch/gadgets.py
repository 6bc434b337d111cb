"""The hardness-reduction gadgets and their exhaustive verification.

Two gadget families exist: the main gadget replaces an ordinary vertex of the
source cubic graph, and the start gadget replaces the distinguished endpoint
of the forced edge. Both come in a contracted form, where each diamond is a
single degree-2 placeholder vertex, and an expanded form, where each
placeholder becomes a 4-vertex diamond so that every internal vertex reaches
degree 3. Searches run on the contracted form; assembled outputs expand.

Main gadget numbering (contracted, 14 vertices, 17 edges):

    0 x_ij   1 x_ik   2 x_il   3 p    4 q    5 a    6 b    7 c
    8 D2 (p..x_il)    9 D3 (q..x_ik)  10 D1 (x_ij..u)    11 r   12 u   13 w

Terminals are 0..4; the type-x terminals 0, 1, 2 carry the inter-gadget port
edges. The unique terminal-to-terminal Hamiltonian paths are frozen below as
Q (x_ij..x_ik), R (x_ij..x_il), S (x_ik..x_il), and Z (p..q); their validity,
uniqueness, and the two-path partition property are re-established at runtime
by verify_gadget_properties.

Start gadget numbering (contracted, 11 vertices, 12 edges):

    0 x_12   1 x_1k   2 x_1l   3 t   4 q   5 p   6 u
    7 r      8 Da (s..x_12)    9 Db (r..x_1k)   10 s
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, Graph, SizeCapError, norm_edge
from .hamilton import all_ham_paths_in_subset

HAMTEST_MAX_N = 20  # cap on the exhaustive enumerators

MAIN_N = 14
MAIN_EDGES: tuple[Edge, ...] = (
    (0, 10), (0, 13), (1, 9), (1, 12), (2, 8), (2, 11), (3, 8), (3, 13),
    (4, 9), (4, 11), (5, 6), (5, 7), (5, 11), (6, 7), (6, 12), (7, 13),
    (10, 12),
)
MAIN_TERMINALS = (0, 1, 2, 3, 4)
MAIN_TYPE_X = frozenset((0, 1, 2))
MAIN_ROLES = {
    0: "x_ij", 1: "x_ik", 2: "x_il", 3: "p", 4: "q", 5: "a", 6: "b", 7: "c",
    8: "diamond-member", 9: "diamond-member", 10: "diamond-member",
    11: "r", 12: "u", 13: "w",
}
MAIN_DIAMONDS = (8, 9, 10)

# the four terminal-to-terminal Hamiltonian paths of the main gadget
MAIN_Q = (0, 10, 12, 6, 5, 7, 13, 3, 8, 2, 11, 4, 9, 1)   # x_ij .. x_ik
MAIN_R = (0, 10, 12, 1, 9, 4, 11, 5, 6, 7, 13, 3, 8, 2)   # x_ij .. x_il
MAIN_S = (1, 9, 4, 11, 5, 7, 6, 12, 10, 0, 13, 3, 8, 2)   # x_ik .. x_il
MAIN_Z = (3, 8, 2, 11, 5, 6, 7, 13, 0, 10, 12, 1, 9, 4)   # p .. q

G1_N = 11
G1_EDGES: tuple[Edge, ...] = (
    (0, 7), (0, 8), (1, 6), (1, 9), (2, 4), (2, 6),
    (3, 5), (4, 7), (5, 6), (5, 10), (7, 9), (8, 10),
)
G1_TERMINALS = (0, 1, 2, 3, 4)
G1_TYPE_X = frozenset((0, 1, 2))
G1_ROLES = {
    0: "x_12", 1: "x_ik", 2: "x_il", 3: "t", 4: "q", 5: "p", 6: "u",
    7: "r", 8: "diamond-member", 9: "diamond-member", 10: "s",
}
G1_DIAMONDS = (8, 9)

G1_FIRST_VISIT = (10, 8, 0)                     # s Da x_12
G1_SECOND_VISIT_VIA_X1K = (1, 9, 7, 4, 2, 6, 5, 3)   # x_1k Db r q x_1l u p t
G1_SECOND_VISIT_VIA_X1L = (2, 4, 7, 9, 1, 6, 5, 3)   # x_1l q r Db x_1k u p t
G1_WITNESS_SEGMENT = (5, 10, 8, 0, 7, 9, 1, 6, 2, 4)  # p s Da x_12 r Db x_1k u x_1l q


@dataclass(frozen=True)
class DiamondExpansion:
    """Expanded form of one contracted diamond placeholder.

    w1 keeps the placeholder id and stays attached to the lower neighbor
    alpha; w4 attaches to beta. A covering traversal enters at one attachment
    and leaves at the other, crossing mid1/mid2 in between.
    """

    w1: int
    mid1: int
    mid2: int
    w4: int
    alpha: int
    beta: int

    def members(self) -> tuple[int, int, int, int]:
        return (self.w1, self.mid1, self.mid2, self.w4)


def expand_diamonds(n: int, edges, diamond_ids):
    """Replace each degree-2 placeholder by a 4-vertex diamond.

    Fresh ids are appended after n in ascending placeholder order, so every
    non-placeholder vertex keeps its id. Returns (n2, edges2, expansions).
    """
    placeholders = set(diamond_ids)
    adj: dict[int, list[int]] = {d: [] for d in placeholders}
    out = []
    for u, v in edges:
        if u in placeholders and v in placeholders:
            raise ValueError(f"adjacent diamond placeholders ({u}, {v})")
        if u in placeholders:
            adj[u].append(v)
        elif v in placeholders:
            adj[v].append(u)
        else:
            out.append(norm_edge(u, v))
    nxt = n
    expansions = {}
    for d in sorted(placeholders):
        if len(adj[d]) != 2:
            raise ValueError(f"diamond placeholder {d} must have degree 2")
        alpha, beta = sorted(adj[d])
        mid1, mid2, w4 = nxt, nxt + 1, nxt + 2
        nxt += 3
        expansions[d] = DiamondExpansion(d, mid1, mid2, w4, alpha, beta)
        out.extend(
            [
                norm_edge(alpha, d),
                (d, mid1),
                (d, mid2),
                (mid1, mid2),
                (mid1, w4),
                (mid2, w4),
                norm_edge(beta, w4),
            ]
        )
    return nxt, out, expansions


def expand_path(seq, expansions) -> list[int]:
    """Rewrite a contracted vertex sequence so each placeholder becomes the
    full diamond traversal, oriented by the preceding vertex."""
    out: list[int] = []
    for idx, v in enumerate(seq):
        exp = expansions.get(v)
        if exp is None:
            out.append(v)
            continue
        if idx == 0:
            raise ValueError("path may not start at a diamond placeholder")
        prev = seq[idx - 1]
        if prev == exp.alpha:
            out.extend([exp.w1, exp.mid1, exp.mid2, exp.w4])
        elif prev == exp.beta:
            out.extend([exp.w4, exp.mid2, exp.mid1, exp.w1])
        else:
            raise ValueError(f"diamond {v} entered from non-neighbor {prev}")
    return out


@dataclass(frozen=True)
class GadgetLayout:
    """A gadget graph with terminal and role annotations."""

    graph: Graph
    terminals: tuple[int, ...]
    type_x_terminals: frozenset[int]
    role: dict[int, str]
    contracted: bool
    diamonds: tuple[int, ...]
    expansions: dict[int, DiamondExpansion]


def _build_layout(n, edges, terminals, type_x, roles, diamonds, contracted: bool):
    if contracted:
        return GadgetLayout(
            Graph(n, edges), terminals, type_x, dict(roles), True, diamonds, {}
        )
    n2, edges2, expansions = expand_diamonds(n, edges, diamonds)
    roles2 = dict(roles)
    for exp in expansions.values():
        for w in exp.members():
            roles2[w] = "diamond-member"
    return GadgetLayout(
        Graph(n2, edges2), terminals, type_x, roles2, False, diamonds, expansions
    )


def build_gadget_main(contracted: bool = True) -> GadgetLayout:
    """The main gadget: 14 vertices and 17 edges contracted, 23 vertices and
    32 edges expanded (every vertex degree 3 except the five terminals)."""
    return _build_layout(
        MAIN_N, MAIN_EDGES, MAIN_TERMINALS, MAIN_TYPE_X, MAIN_ROLES,
        MAIN_DIAMONDS, contracted,
    )


def build_gadget_g1(contracted: bool = True) -> GadgetLayout:
    """The start gadget: 11 vertices and 12 edges contracted, 17 vertices and
    22 edges expanded. Inside it s has degree 2 and t degree 1; t reaches
    degree 2 in the assembled graph through the closing chain edge."""
    return _build_layout(
        G1_N, G1_EDGES, G1_TERMINALS, G1_TYPE_X, G1_ROLES, G1_DIAMONDS, contracted,
    )


@dataclass(frozen=True)
class HamPathSet:
    """Hamiltonian paths between terminals; endpoints_filter lists the
    distinct unordered endpoint pairs realized."""

    paths: tuple[tuple[int, ...], ...]
    endpoints_filter: tuple[tuple[int, int], ...]


def enumerate_terminal_ham_paths(
    layout: GadgetLayout, both_directions: bool = False
) -> HamPathSet:
    """All Hamiltonian paths of the gadget whose endpoints are terminals.

    Canonical mode reports each undirected path once, from its lower-indexed
    endpoint. both_directions mirrors the reference enumerator: for each
    terminal in ascending order, every path starting there, in lexicographic
    order of the vertex sequence.
    """
    g = layout.graph
    if g.n > HAMTEST_MAX_N:
        raise SizeCapError(f"enumerator capped at {HAMTEST_MAX_N} vertices, got {g.n}")
    terms = set(layout.terminals)
    paths = all_ham_paths_in_subset(g, range(g.n), sorted(terms), terms)
    if not both_directions:
        paths = [p for p in paths if p[0] < p[-1]]
        paths.sort()
    ends = sorted({norm_edge(p[0], p[-1]) for p in paths})
    return HamPathSet(tuple(paths), tuple(ends))


@dataclass(frozen=True)
class GadgetPropertyReport:
    """Outcome of the six structural gadget checks.

    1-4: unique Hamiltonian path between each of x_ij..x_ik, x_ij..x_il,
    x_ik..x_il, and p..q. 5: no path joins {p, q} to a type-x terminal.
    6: no partition of the vertices into two nontrivial paths that both start
    and end at terminals.
    """

    passed: tuple[bool, bool, bool, bool, bool, bool]
    details: tuple[str, ...]

    @property
    def all_pass(self) -> bool:
        return all(self.passed)


def _role_vertex(layout: GadgetLayout, role: str) -> int:
    for v, r in layout.role.items():
        if r == role:
            return v
    raise ValueError(f"layout lacks a vertex with role {role}")


def two_path_covers(layout: GadgetLayout):
    """Partitions of the gadget vertices into two nontrivial terminal-to-
    terminal paths, as (path_x, path_y) pairs with normalized orientation."""
    g = layout.graph
    if g.n > HAMTEST_MAX_N:
        raise SizeCapError(f"partition check capped at {HAMTEST_MAX_N} vertices")
    n = g.n
    terms = sorted(layout.terminals)
    term_set = set(terms)
    covers = []
    for mask in range(1 << n):
        # vertex 0 pinned to side x: halves the enumeration over partitions
        if mask & 1 == 0 and n > 0:
            continue
        side_x = [v for v in range(n) if (mask >> v) & 1]
        side_y = [v for v in range(n) if not (mask >> v) & 1]
        if len(side_x) < 2 or len(side_y) < 2:
            continue
        tx = [t for t in terms if t in set(side_x)]
        ty = [t for t in terms if t in set(side_y)]
        if len(tx) < 2 or len(ty) < 2:
            continue
        px = all_ham_paths_in_subset(g, side_x, tx, term_set)
        if not px:
            continue
        py = all_ham_paths_in_subset(g, side_y, ty, term_set)
        if not py:
            continue
        for a in px:
            if a[0] > a[-1]:
                continue
            for b in py:
                if b[0] > b[-1]:
                    continue
                covers.append((a, b))
    return covers


def verify_gadget_properties(layout: GadgetLayout) -> GadgetPropertyReport:
    """Re-establish the six properties by exhaustive enumeration."""
    pathset = enumerate_terminal_ham_paths(layout)
    by_pair: dict[tuple[int, int], list] = {}
    for p in pathset.paths:
        by_pair.setdefault(norm_edge(p[0], p[-1]), []).append(p)
    xij = _role_vertex(layout, "x_ij")
    xik = _role_vertex(layout, "x_ik")
    xil = _role_vertex(layout, "x_il")
    p_t = _role_vertex(layout, "p")
    q_t = _role_vertex(layout, "q")

    details = []
    flags = []
    for num, pair in enumerate(
        [(xij, xik), (xij, xil), (xik, xil), (p_t, q_t)], start=1
    ):
        found = by_pair.get(norm_edge(*pair), [])
        flags.append(len(found) == 1)
        details.append(
            f"property {num}: {len(found)} Hamiltonian path(s) between "
            f"{pair[0]} and {pair[1]} (want exactly 1)"
        )
    cross = [
        pair
        for pair in by_pair
        if (pair[0] in (p_t, q_t)) != (pair[1] in (p_t, q_t))
    ]
    flags.append(not cross)
    details.append(
        f"property 5: {len(cross)} path endpoint pair(s) joining {{p, q}} to a "
        "type-x terminal (want 0)"
    )
    covers = two_path_covers(layout)
    flags.append(not covers)
    details.append(
        f"property 6: {len(covers)} partition(s) into two terminal paths (want 0)"
    )
    return GadgetPropertyReport(tuple(flags), tuple(details))
