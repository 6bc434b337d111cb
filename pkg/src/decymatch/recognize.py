"""Graph-class recognizers and sparseness deciders.

Chordality runs lexicographic BFS plus the perfect-elimination test. The
distance-hereditary and cograph recognizers prune pendant vertices and twins,
recording the elimination sequence as a replayable certificate; when pruning
gets stuck a forbidden induced subgraph is extracted by exhaustive search at
desk scale. Exact sparseness (no bad subgraph) is decided exhaustively up to
max_n vertices and by class characterizations beyond that.

A graph H is bad when |E(H)| > floor(3|V(H)|/2) - 1; sparse means no bad
subgraph. Certificates always reference original vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import blocks as bl
from .core import Graph, PreconditionError, SizeCapError

_FORBIDDEN_CERT_CAP = 24  # exhaustive forbidden-subgraph search limit (remnant size)


@dataclass(frozen=True)
class ChordalResult:
    ok: bool
    elimination_order: tuple[int, ...] | None  # perfect elimination order
    chordless_cycle: tuple[int, ...] | None    # induced cycle of length >= 4

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PruneStep:
    vertex: int
    kind: str     # "pendant" | "true_twin" | "false_twin"
    partner: int  # the remaining neighbor or twin


@dataclass(frozen=True)
class EliminationResult:
    ok: bool
    elimination: tuple[PruneStep, ...] | None
    forbidden_name: str | None     # "house" | "hole" | "domino" | "gem" | "P4"
    forbidden_vertices: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.ok


def lexbfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order, lowest vertex index first on ties."""
    n = g.n
    if n == 0:
        return []

    class _Grp:
        __slots__ = ("verts", "prev", "nxt")

        def __init__(self, verts):
            self.verts = verts   # insertion-ordered, always ascending
            self.prev = None
            self.nxt = None

    first = _Grp(dict.fromkeys(range(n)))
    group_of: list = [first] * n
    visited = bytearray(n)
    order = []
    adj = g.adj
    while first is not None:
        v = next(iter(first.verts))
        del first.verts[v]
        if not first.verts:
            first = first.nxt
            if first is not None:
                first.prev = None
        visited[v] = 1
        order.append(v)
        # keyed by id of the old group; the value holds the old group itself
        # so it stays alive and its id cannot be recycled mid-split
        split: dict[int, tuple[_Grp, _Grp]] = {}
        for w in adj[v]:
            if visited[w]:
                continue
            gw = group_of[w]
            hit = split.get(id(gw))
            if hit is not None:
                new = hit[1]
            else:
                new = _Grp({})
                # insert new immediately before gw
                new.prev = gw.prev
                new.nxt = gw
                if gw.prev is not None:
                    gw.prev.nxt = new
                gw.prev = new
                if first is gw:
                    first = new
                split[id(gw)] = (gw, new)
            del gw.verts[w]
            new.verts[w] = None
            group_of[w] = new
            if not gw.verts:
                # unlink the emptied group
                if gw.prev is not None:
                    gw.prev.nxt = gw.nxt
                if gw.nxt is not None:
                    gw.nxt.prev = gw.prev
                if first is gw:
                    first = gw.nxt
    return order


def _peo_failure(g: Graph, order: list[int]):
    """If reversed(order) is not a perfect elimination order, return a witness
    triple (v, p, w) with p, w earlier neighbors of v and pw not an edge."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        pv = pos[v]
        earlier = [u for u in g.adj[v] if pos[u] < pv]
        if len(earlier) < 2:
            continue
        p = max(earlier, key=lambda u: pos[u])
        nb_p = set(g.adj[p])
        for w in earlier:
            if w != p and w not in nb_p:
                return v, p, w
    return None


def _bfs_path_avoiding(g: Graph, src: int, dst: int, banned: set) -> list[int] | None:
    if src in banned or dst in banned:
        return None
    prev = {src: -1}
    queue = [src]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x == dst:
            path = []
            while x != -1:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in g.adj[x]:
            if y not in prev and y not in banned:
                prev[y] = x
                queue.append(y)
    return None


def find_chordless_cycle(g: Graph, min_len: int = 4, node_budget: int = 10**6):
    """Some induced cycle with >= min_len vertices, or None. Deterministic:
    backtracking over induced paths anchored at their minimum vertex.

    Intended for certificate extraction, not for bulk recognition.
    """
    n = g.n
    adjsets = [set(a) for a in g.adj]
    budget = node_budget

    for a in range(n):
        path = [a]
        on_path = {a}

        def extend(v) -> tuple[int, ...] | None:
            nonlocal budget
            budget -= 1
            if budget <= 0:
                raise SizeCapError("chordless-cycle search budget exhausted")
            first_step = len(path) == 1
            for y in g.adj[v]:
                if y <= a or y in on_path:
                    continue
                # no chord from y to an interior path vertex
                if any(p in adjsets[y] for p in path[1:-1]):
                    continue
                if first_step or a not in adjsets[y]:
                    path.append(y)
                    on_path.add(y)
                    got = extend(y)
                    path.pop()
                    on_path.remove(y)
                    if got:
                        return got
                elif len(path) + 1 >= min_len:
                    # y closes back to the anchor with no chords anywhere
                    return tuple(path + [y])
            return None

        got = extend(a)
        if got:
            return got
    return None


def is_chordal(g: Graph) -> ChordalResult:
    """Chordality with a certificate either way.

    Positive: a perfect elimination order. Negative: a chordless cycle of
    length at least 4.
    """
    order = lexbfs_order(g)
    fail = _peo_failure(g, order)
    if fail is None:
        return ChordalResult(True, tuple(reversed(order)), None)
    v, p, w = fail
    banned = (set(g.adj[v]) | {v}) - {w, p}
    path = _bfs_path_avoiding(g, w, p, banned)
    if path is not None:
        return ChordalResult(False, None, tuple([v] + path))
    cyc = find_chordless_cycle(g, min_len=4)
    if cyc is None:
        raise AssertionError("PEO failed but no chordless cycle found")
    return ChordalResult(False, None, cyc)


def is_split(g: Graph) -> bool:
    """Degree-sequence splittance test: V partitions into clique + independent
    set iff the splittance is zero."""
    n = g.n
    if n == 0:
        return True
    d = sorted((len(a) for a in g.adj), reverse=True)
    k = 0
    for i in range(n):
        if d[i] >= i:
            k = i + 1
        else:
            break
    return sum(d[:k]) == k * (k - 1) + sum(min(x, k) for x in d[k:])


def _prune(g: Graph, allow_pendant: bool) -> tuple[list[PruneStep], list[int]]:
    """Eliminate pendant vertices (optionally) and twins until no edges remain
    or no rule applies. Lowest eligible vertex goes first. Returns the steps
    and the surviving vertices that still carry edges."""
    adjsets: dict[int, set[int]] = {v: set(g.adj[v]) for v in range(g.n)}
    steps: list[PruneStep] = []
    while True:
        active = sorted(v for v in adjsets if adjsets[v])
        if not active:
            return steps, []
        found = None
        for v in active:
            nv = adjsets[v]
            if allow_pendant and len(nv) == 1:
                found = PruneStep(v, "pendant", next(iter(nv)))
                break
            for u in active:
                if u == v:
                    continue
                nu = adjsets[u]
                if v in nu:
                    if nv - {u} == nu - {v}:
                        found = PruneStep(v, "true_twin", u)
                        break
                elif nv == nu:
                    found = PruneStep(v, "false_twin", u)
                    break
            if found:
                break
        if found is None:
            return steps, active
        v = found.vertex
        for u in adjsets[v]:
            adjsets[u].discard(v)
        del adjsets[v]
        steps.append(found)


def _induced_iso(g: Graph, vertices: tuple[int, ...], pattern_edges) -> bool:
    sub = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]
           if g.has_edge(u, v)]
    if len(sub) != len(pattern_edges):
        return False
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in sub:
        adj[u].append(v)
        adj[v].append(u)
    return _iso_against(adj, pattern_edges)


def _iso_against(adj: dict[int, list[int]], pattern_edges) -> bool:
    padj: dict[int, list[int]] = {}
    for u, v in pattern_edges:
        padj.setdefault(u, []).append(v)
        padj.setdefault(v, []).append(u)
    if sorted(len(a) for a in adj.values()) != sorted(len(a) for a in padj.values()):
        return False
    porder = sorted(padj, key=lambda x: (-len(padj[x]), x))
    nbrs = {v: set(a) for v, a in adj.items()}
    assign: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == len(porder):
            return True
        p = porder[idx]
        pdeg = len(padj[p])
        for cand in adj:
            if cand in used or len(adj[cand]) != pdeg:
                continue
            if all(assign[q] in nbrs[cand] for q in padj[p] if q in assign):
                assign[p] = cand
                used.add(cand)
                if extend(idx + 1):
                    return True
                del assign[p]
                used.remove(cand)
        return False

    return extend(0)


def _find_forbidden_dh(g: Graph, within: list[int]):
    """Search `within` for an induced house/hole/domino/gem, smallest first."""
    from itertools import combinations

    if len(within) > _FORBIDDEN_CERT_CAP:
        return None
    sub_g, verts = _induced(g, within)
    hole = find_chordless_cycle(sub_g, min_len=5)
    if hole is not None:
        return "hole", tuple(verts[i] for i in hole)
    for name in ("house", "gem"):
        pat = bl.NAMED_PATTERNS[name][1]
        for combo in combinations(range(sub_g.n), 5):
            if _induced_iso(sub_g, combo, pat):
                return name, tuple(verts[i] for i in combo)
    pat = bl.NAMED_PATTERNS["domino"][1]
    for combo in combinations(range(sub_g.n), 6):
        if _induced_iso(sub_g, combo, pat):
            return "domino", tuple(verts[i] for i in combo)
    return None


def _induced(g: Graph, vertices):
    from .core import induced_subgraph

    return induced_subgraph(g, vertices)


def is_distance_hereditary(g: Graph) -> EliminationResult:
    """Pendant/twin pruning with a replayable elimination certificate.

    Positive: a sequence of prune steps after which no edges remain (for a
    connected graph this reduces it to a single vertex). Negative: an induced
    house, hole, domino, or gem when the stuck remnant is small enough to
    search exhaustively.
    """
    steps, remnant = _prune(g, allow_pendant=True)
    if not remnant:
        return EliminationResult(True, tuple(steps), None, None)
    found = _find_forbidden_dh(g, remnant)
    if found is None:
        return EliminationResult(False, None, None, None)
    name, verts = found
    return EliminationResult(False, None, name, verts)


def _find_induced_p4(g: Graph):
    for b, c in sorted(g.edges):
        nb = set(g.adj[b])
        nc = set(g.adj[c])
        for a in g.adj[b]:
            if a == c or a in nc:
                continue
            for d in g.adj[c]:
                if d == b or d == a or d in nb or g.has_edge(a, d):
                    continue
                return (a, b, c, d)
    return None


def is_cograph(g: Graph) -> EliminationResult:
    """Twin-elimination certificate, or an induced P4 on failure."""
    steps, remnant = _prune(g, allow_pendant=False)
    if not remnant:
        return EliminationResult(True, tuple(steps), None, None)
    p4 = _find_induced_p4(g)
    if p4 is None:
        raise AssertionError("twin pruning stuck but no induced P4 found")
    return EliminationResult(False, None, "P4", p4)


def density_ok(g: Graph) -> bool:
    """m <= floor(3n/2) - 1, the whole-graph necessary condition."""
    return g.m <= (3 * g.n) // 2 - 1


def find_bad_subgraph(g: Graph, max_n: int = 16):
    """Lexicographically least vertex set inducing more than floor(3k/2) - 1
    edges, or None; None iff g is sparse. Exhaustive over all 2^n subsets."""
    n = g.n
    if n > max_n:
        raise SizeCapError(
            f"exhaustive bad-subgraph search capped at {max_n} vertices, got {n}"
        )
    if n == 0:
        return None
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    # counts fit in a byte whenever C(n, 2) < 256, i.e. n <= 23
    cnt = bytearray(1 << n) if n <= 23 else [0] * (1 << n)
    # cnt[mask] = induced edge count; mask processed in increasing order so the
    # lowbit-reduced submask is already filled
    best = None
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        v = low.bit_length() - 1
        c = cnt[rest] + (adj_mask[v] & rest).bit_count()
        cnt[mask] = c
        k = mask.bit_count()
        if c > (3 * k) // 2 - 1:
            verts = tuple(i for i in range(n) if (mask >> i) & 1)
            if best is None or verts < best:
                best = verts
    return best


def is_biconnected(g: Graph) -> bool:
    """2-connected in the usual sense: n >= 3, connected, no cut vertex."""
    if g.n < 3 or not g.is_connected():
        return False
    return not bl.block_decomposition(g).cut_vertices


def _block_components(bd: bl.BlockDecomposition) -> dict[int, int]:
    """Union non-bridge blocks that share a vertex; returns block -> root.
    Two blocks land in the same class iff they lie in one bridge-free
    component."""
    kinds = bd.block_kinds
    parent = list(range(len(kinds)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    holder: dict[int, int] = {}
    for i, kind in enumerate(kinds):
        if kind == bl.BRIDGE:
            continue
        for v in bd.block_vertices[i]:
            j = holder.setdefault(v, i)
            if j != i:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return {
        i: find(i) for i, kind in enumerate(kinds) if kind != bl.BRIDGE
    }


def is_sparse_chordal(g: Graph, bd: bl.BlockDecomposition | None = None) -> bool:
    """Sparseness of a chordal graph via its characterization: every block is
    a diamond, triangle, or bridge, and no bridge-free component holds two
    diamond blocks (no chain)."""
    if bd is None:
        res = is_chordal(g)
        if not res.ok:
            raise PreconditionError(f"not chordal: chordless cycle {res.chordless_cycle}")
        bd = bl.block_decomposition(g)
    allowed = {bl.BRIDGE, bl.TRIANGLE, bl.DIAMOND}
    if any(k not in allowed for k in bd.block_kinds):
        return False
    comp = _block_components(bd)
    diamonds_per: dict[int, int] = {}
    for i, k in enumerate(bd.block_kinds):
        if k == bl.DIAMOND:
            r = comp[i]
            diamonds_per[r] = diamonds_per.get(r, 0) + 1
            if diamonds_per[r] > 1:
                return False
    return True


_SPARSE_2CONN_DH = {bl.TRIANGLE, bl.SQUARE, bl.DIAMOND, bl.K23, bl.K24, bl.K33MINUS}


def is_sparse_2conn_dh(g: Graph) -> bool:
    """Sparseness of a 2-connected distance-hereditary graph: isomorphic to
    triangle, square, diamond, K23, K24, or K33 minus an edge.

    Distance-heredity itself is the caller's responsibility; the pattern
    match answers False for anything outside the list either way.
    """
    if not is_biconnected(g):
        raise PreconditionError("graph is not 2-connected")
    kind, _ = bl.classify_edge_set(sorted(g.edges))
    return kind in _SPARSE_2CONN_DH


@dataclass(frozen=True)
class ClassReport:
    chordal: ChordalResult
    split: bool
    distance_hereditary: EliminationResult
    cograph: EliminationResult

    def to_json(self) -> dict:
        def elim_json(res: EliminationResult, counter_key: str) -> dict:
            out: dict = {"value": res.ok}
            if res.ok:
                out["elimination"] = [
                    [s.vertex, s.kind, s.partner] for s in res.elimination
                ]
            else:
                if res.forbidden_vertices is not None:
                    out[counter_key] = {
                        "pattern": res.forbidden_name,
                        "vertices": list(res.forbidden_vertices),
                    }
                else:
                    out[counter_key] = None
            return out

        chordal: dict = {"value": self.chordal.ok}
        if self.chordal.ok:
            chordal["elimination_order"] = list(self.chordal.elimination_order)
        else:
            chordal["chordless_cycle"] = list(self.chordal.chordless_cycle)
        return {
            "chordal": chordal,
            "split": {"value": self.split},
            "distance_hereditary": elim_json(self.distance_hereditary, "forbidden_subgraph"),
            "cograph": elim_json(self.cograph, "induced_p4"),
        }


@dataclass(frozen=True)
class SparseReport:
    density_ok: bool
    sparse: bool | None            # None when undecided at this size
    bad_subgraph: tuple[int, ...] | None
    method: str                    # "exhaustive" | "class-characterization" | "density-only"
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "density_ok": self.density_ok,
            "sparse": self.sparse,
            "bad_subgraph": list(self.bad_subgraph) if self.bad_subgraph else None,
            "method": self.method,
            "notes": list(self.notes),
        }


def class_report(g: Graph) -> ClassReport:
    return ClassReport(
        chordal=is_chordal(g),
        split=is_split(g),
        distance_hereditary=is_distance_hereditary(g),
        cograph=is_cograph(g),
    )


def sparse_report(g: Graph, max_exhaustive_n: int = 16) -> SparseReport:
    dens = density_ok(g)
    if g.n <= max_exhaustive_n:
        bad = find_bad_subgraph(g, max_n=max_exhaustive_n)
        return SparseReport(dens, bad is None, bad, "exhaustive")
    chordal = is_chordal(g)
    if chordal.ok:
        bd = bl.block_decomposition(g)
        sparse = is_sparse_chordal(g, bd)
        bad = None
        notes: tuple[str, ...] = ()
        if not sparse:
            bad = _chordal_bad_witness(g, bd, max_exhaustive_n)
            if bad is None:
                notes = ("bad subgraph exists but was not localized",)
        return SparseReport(dens, sparse, bad, "class-characterization", notes)
    if is_biconnected(g) and is_distance_hereditary(g).ok:
        sparse = is_sparse_2conn_dh(g)
        notes = () if sparse else ("bad subgraph exists but was not localized",)
        return SparseReport(dens, sparse, None, "class-characterization", notes)
    return SparseReport(
        dens,
        False if not dens else None,
        tuple(range(g.n)) if not dens else None,
        "density-only",
        () if not dens else ("exact sparseness undecided beyond the exhaustive cap",),
    )


def _chordal_bad_witness(g: Graph, bd: bl.BlockDecomposition, cap: int):
    """Localize a bad subgraph in a non-sparse chordal graph: a forbidden
    block small enough to search, or the chain spanning two diamond blocks."""
    allowed = {bl.BRIDGE, bl.TRIANGLE, bl.DIAMOND}
    for i, k in enumerate(bd.block_kinds):
        if k not in allowed and len(bd.block_vertices[i]) <= cap:
            sub, verts = _induced(g, list(bd.block_vertices[i]))
            bad = find_bad_subgraph(sub, max_n=cap)
            if bad is not None:
                return tuple(verts[j] for j in bad)
    chain = chain_vertices(bd)
    if chain is not None:
        return chain
    return None


def chain_vertices(bd: bl.BlockDecomposition) -> tuple[int, ...] | None:
    """Vertex set of a chain witnessed by two diamond blocks in one
    bridge-free component: the two diamonds plus the triangle blocks on the
    block-tree path between them. None when no component has two diamonds."""
    comp = _block_components(bd)
    by_root: dict[int, list[int]] = {}
    for i, r in comp.items():
        by_root.setdefault(r, []).append(i)
    for r, members in sorted(by_root.items()):
        diamonds = [i for i in members if bd.block_kinds[i] == bl.DIAMOND]
        if len(diamonds) < 2:
            continue
        d1, d2 = sorted(diamonds)[:2]
        path = _block_path(bd, members, d1, d2)
        verts: set[int] = set()
        for b in path:
            verts.update(bd.block_vertices[b])
        return tuple(sorted(verts))
    return None


def _block_path(bd: bl.BlockDecomposition, members: list[int], src: int, dst: int):
    """Blocks on the unique block-tree path from src to dst within one
    bridge-free component."""
    vertex_blocks: dict[int, list[int]] = {}
    for i in members:
        for v in bd.block_vertices[i]:
            vertex_blocks.setdefault(v, []).append(i)
    adj: dict[int, set[int]] = {i: set() for i in members}
    for v, bs in vertex_blocks.items():
        if len(bs) > 1:
            for a in bs:
                for b in bs:
                    if a != b:
                        adj[a].add(b)
    prev = {src: -1}
    queue = [src]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        if x == dst:
            out = []
            while x != -1:
                out.append(x)
                x = prev[x]
            return out[::-1]
        for y in sorted(adj[x]):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    raise AssertionError("diamond blocks not connected inside a component")
