"""Block decomposition and classification of blocks against fixed small patterns.

A block is a bridge or a maximal 2-connected subgraph. The decomposition runs
in O(n + m) with an iterative lowpoint DFS, so it stays usable at 10^6
vertices. Classification decides isomorphism against the named patterns with
vertex/edge/degree prefilters followed by exact structural checks (each named
kind is pinned down by its counts plus a constant-size adjacency test, which
also yields the pattern-to-instance mapping); anything on more than 6
vertices is immediately "other" since every named kind has at most 6.
"""

from __future__ import annotations

import gc
from contextlib import contextmanager

from .core import Edge, Graph, GraphError


@contextmanager
def _gc_paused():
    """Pause cyclic garbage collection across an allocation-heavy section.

    Block decompositions of million-vertex graphs allocate hundreds of
    thousands of small lists; letting the collector rescan the graph's own
    tuples on every threshold crossing roughly doubles the runtime. Nothing
    allocated here forms reference cycles, so nothing is lost by waiting.

    On exit the survivors are spliced straight into the oldest generation
    (freeze + unfreeze, both O(1)): they are exactly the objects that would
    have aged there anyway, and this avoids one full young-generation sweep
    of everything the section allocated.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.freeze()
            gc.enable()
            gc.unfreeze()

BRIDGE = "bridge"
TRIANGLE = "triangle"
SQUARE = "square"
DIAMOND = "diamond"
K23 = "K23"
K24 = "K24"
K33MINUS = "K33minus"
OTHER = "other"

# canonical pattern edge sets on vertices 0..k-1
PATTERN_EDGES: dict[str, tuple[Edge, ...]] = {
    TRIANGLE: ((0, 1), (0, 2), (1, 2)),
    SQUARE: ((0, 1), (1, 2), (2, 3), (0, 3)),
    # diamond: 4-cycle 0-1-3-2-0 plus chord (1, 2); degree-3 vertices are 1, 2
    DIAMOND: ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)),
    K23: ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)),
    K24: ((0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)),
    # K33 on parts {0,1,2} / {3,4,5} minus the edge (2, 5)
    K33MINUS: ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)),
}

# extra fixed patterns used by recognizers and tests (not block kinds)
HOUSE = ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4))
GEM = ((0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4))
DOMINO = ((0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5), (2, 5))
P4 = ((0, 1), (1, 2), (2, 3))
K4 = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
K33 = ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5))
TWO_K2 = ((0, 1), (2, 3))

NAMED_PATTERNS: dict[str, tuple[int, tuple[Edge, ...]]] = {
    "triangle": (3, PATTERN_EDGES[TRIANGLE]),
    "square": (4, PATTERN_EDGES[SQUARE]),
    "diamond": (4, PATTERN_EDGES[DIAMOND]),
    "K23": (5, PATTERN_EDGES[K23]),
    "K24": (6, PATTERN_EDGES[K24]),
    "K33minus": (6, PATTERN_EDGES[K33MINUS]),
    "house": (5, HOUSE),
    "gem": (5, GEM),
    "domino": (6, DOMINO),
    "P4": (4, P4),
    "K4": (4, K4),
    "K33": (6, K33),
    "2K2": (4, TWO_K2),
}


def pattern_graph(name: str) -> Graph:
    n, edges = NAMED_PATTERNS[name]
    return Graph(n, edges)


def _classify_full(block_edges):
    """(kind, pattern-to-instance mapping, sorted vertex tuple) of one block
    edge set. The vertex and edge counts prefilter; each candidate kind is
    then settled by an exact structural check that doubles as the mapping
    construction. Anything else is "other".
    """
    m_b = len(block_edges)
    if m_b == 1:
        return BRIDGE, None, block_edges[0]
    if m_b == 3:
        (a, b), (c, d), (e, f) = block_edges
        vs = {a, b, c, d, e, f}
        if len(vs) == 3:
            x, y, z = sorted(vs)
            return TRIANGLE, {0: x, 1: y, 2: z}, (x, y, z)
        return OTHER, None, tuple(sorted(vs))
    deg: dict[int, int] = {}
    for u, v in block_edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    n_b = len(deg)
    verts = tuple(sorted(deg))
    if n_b > 6:
        return OTHER, None, verts

    def nbrs(x):
        out = set()
        for u, v in block_edges:
            if u == x:
                out.add(v)
            elif v == x:
                out.add(u)
        return out

    if m_b == 5 and n_b == 4:
        deg3 = sorted(v for v in deg if deg[v] == 3)
        deg2 = sorted(v for v in deg if deg[v] == 2)
        if len(deg3) == 2:
            return DIAMOND, {1: deg3[0], 2: deg3[1], 0: deg2[0], 3: deg2[1]}, verts
        return OTHER, None, verts
    if m_b == 4 and n_b == 4:
        if any(d != 2 for d in deg.values()):
            return OTHER, None, verts
        v0 = verts[0]
        a, b = sorted(nbrs(v0))
        rest = next(x for x in verts if x not in (v0, a, b))
        na = nbrs(a)
        if rest in na and b not in na:
            return SQUARE, {0: v0, 1: a, 2: rest, 3: b}, verts
        return OTHER, None, verts
    if m_b == 6 and n_b == 5:
        # complete bipartite on parts of size 2 and 3, or nothing: with these
        # degrees, every edge crossing the parts forces K23
        hi = sorted(v for v in deg if deg[v] == 3)
        if len(hi) == 2:
            h0, h1 = hi
            if all((u == h0 or u == h1) != (v == h0 or v == h1)
                   for u, v in block_edges):
                lo = sorted(v for v in deg if deg[v] == 2)
                return K23, {0: h0, 1: h1, 2: lo[0], 3: lo[1], 4: lo[2]}, verts
        return OTHER, None, verts
    if m_b == 8 and n_b == 6:
        lo = sorted(v for v in deg if deg[v] == 2)
        if len(lo) == 4:
            hi = sorted(v for v in deg if deg[v] == 4)
            if len(hi) == 2:
                h0, h1 = hi
                if all((u == h0 or u == h1) != (v == h0 or v == h1)
                       for u, v in block_edges):
                    mapping = {0: h0, 1: h1}
                    mapping.update({k + 2: w for k, w in enumerate(lo)})
                    return K24, mapping, verts
            return OTHER, None, verts
        if len(lo) == 2:
            x, y = lo
            nx, ny = nbrs(x), nbrs(y)
            if y not in nx and not (nx & ny) and len(nx) == 2 and len(ny) == 2:
                part_x = sorted(ny) + [x]   # pattern part {0, 1, 2} with 2 = x
                part_y = sorted(nx) + [y]   # pattern part {3, 4, 5} with 5 = y
                side = {}
                for w in part_x:
                    side[w] = 0
                for w in part_y:
                    side[w] = 1
                if all(side[u] != side[v] for u, v in block_edges):
                    mapping = {i: w for i, w in enumerate(part_x)}
                    mapping.update({i + 3: w for i, w in enumerate(part_y)})
                    return K33MINUS, mapping, verts
        return OTHER, None, verts
    # no named kind is left with this vertex and edge count
    return OTHER, None, verts


def classify_edge_set(block_edges) -> tuple[str, dict[int, int] | None]:
    """Kind of a block edge set plus a pattern-to-instance vertex mapping.

    The mapping is None for bridges and for kind "other".
    """
    kind, mapping, _ = _classify_full(list(block_edges))
    return kind, mapping


class BlockDecomposition:
    """Blocks, cut vertices, bridges, and per-block kinds of one graph.

    blocks[i] is a sorted list of normalized edges; block_vertices[i] the
    sorted vertex tuple of that block. Blocks partition the edge set; two
    blocks share at most one vertex and any shared vertex is a cut vertex.
    Treat all fields as read-only. The set-valued views are built on first
    access so that the million-vertex path stays cheap.
    """

    __slots__ = (
        "blocks",
        "block_kinds",
        "block_vertices",
        "_cut_flags",
        "_mappings",
        "_cut_vertices",
        "_bridges",
        "_leaf_blocks",
    )

    def __init__(self, blocks, cut_flags, block_kinds, block_vertices, mappings):
        self.blocks: list[list[Edge]] = blocks
        self._cut_flags = cut_flags
        self.block_kinds: list[str] = block_kinds
        self.block_vertices: list[tuple[int, ...]] = block_vertices
        self._mappings = mappings
        self._cut_vertices = None
        self._bridges = None
        self._leaf_blocks = None

    @property
    def cut_vertices(self) -> frozenset[int]:
        if self._cut_vertices is None:
            flags = self._cut_flags
            self._cut_vertices = frozenset(
                v for v in range(len(flags)) if flags[v]
            )
        return self._cut_vertices

    @property
    def bridges(self) -> frozenset[Edge]:
        if self._bridges is None:
            self._bridges = frozenset(b[0] for b in self.blocks if len(b) == 1)
        return self._bridges

    @property
    def leaf_blocks(self) -> tuple[int, ...]:
        if self._leaf_blocks is None:
            flags = self._cut_flags
            self._leaf_blocks = tuple(
                i
                for i, verts in enumerate(self.block_vertices)
                if sum(1 for v in verts if flags[v]) == 1
            )
        return self._leaf_blocks

    def is_cut_vertex(self, v: int) -> bool:
        return bool(self._cut_flags[v])

    def pattern_mapping(self, i: int):
        """Pattern-to-instance vertex map for block i (None for bridge/other)."""
        return self._mappings[i]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Decompose g into blocks with cut vertices, bridges, and kinds.

    Iterative lowpoint DFS; linear in n + m.
    """
    with _gc_paused():
        return _block_decomposition_impl(g)


def _block_decomposition_impl(g: Graph) -> BlockDecomposition:
    n = g.n
    adj = g.adj
    visited = bytearray(n)  # compact, so the hot membership test stays cached
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    estack: list[Edge] = []
    epush = estack.append
    epop = estack.pop
    raw_blocks: list[list[Edge]] = []
    badd = raw_blocks.append
    cut = bytearray(n)
    timer = 1
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = 1
        disc[root] = low[root] = timer
        timer += 1
        stack = [root]
        spush = stack.append
        spop = stack.pop
        root_children = 0
        v = root
        av = adj[v]
        i = 0
        L = len(av)
        dv = disc[v]
        pv = -1
        while True:
            descended = False
            while i < L:
                w = av[i]
                i += 1
                if not visited[w]:
                    visited[w] = 1
                    ptr[v] = i
                    parent[w] = v
                    epush((v, w) if v < w else (w, v))
                    timer += 1
                    disc[w] = low[w] = timer
                    spush(w)
                    pv = v
                    v = w
                    av = adj[v]
                    i = 0
                    L = len(av)
                    dv = timer
                    descended = True
                    break
                elif w != pv:
                    dw = disc[w]
                    if dw < dv:
                        epush((v, w) if v < w else (w, v))
                        if dw < low[v]:
                            low[v] = dw
            if descended:
                continue
            spop()
            if not stack:
                break
            u = stack[-1]
            lv = low[v]
            if lv < low[u]:
                low[u] = lv
            if lv >= disc[u]:
                key = (u, v) if u < v else (v, u)
                blk: list[Edge] = []
                bappend = blk.append
                while True:
                    e = epop()
                    bappend(e)
                    if e == key:
                        break
                badd(blk)
                if u == root:
                    root_children += 1
                else:
                    cut[u] = 1
            v = u
            av = adj[v]
            i = ptr[v]
            L = len(av)
            dv = disc[v]
            pv = parent[v]
        if root_children > 1:
            cut[root] = 1

    kinds = []
    verts_out = []
    mappings = []
    kadd = kinds.append
    vadd = verts_out.append
    madd = mappings.append
    for blk in raw_blocks:
        if len(blk) == 1:
            kadd(BRIDGE)
            vadd(blk[0])
            madd(None)
            continue
        blk.sort()
        if len(blk) == 3:
            (a, b), (c, d), (e, f) = blk
            vs = {a, b, c, d, e, f}
            if len(vs) == 3:
                x, y, z = sorted(vs)
                kadd(TRIANGLE)
                vadd((x, y, z))
                madd({0: x, 1: y, 2: z})
                continue
        kind, mapping, verts = _classify_full(blk)
        kadd(kind)
        vadd(verts)
        madd(mapping)
    return BlockDecomposition(raw_blocks, cut, kinds, verts_out, mappings)


def classify_block(g: Graph, block) -> str:
    """Kind tag of one block of g (see module constants for the tags)."""
    block = list(block)
    for u, v in block:
        if not g.has_edge(u, v):
            raise GraphError(f"block edge ({u}, {v}) not present in graph")
    kind, _ = classify_edge_set([(u, v) if u < v else (v, u) for u, v in block])
    return kind
