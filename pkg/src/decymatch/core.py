"""Simple undirected graphs: construction, acyclicity, matchings, and file IO.

Vertices are dense 0-based indices. Graphs are immutable after construction;
every mutation-shaped operation returns a new graph. Role labels and other
annotations live in side maps kept by the callers, never on the graph itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]  # normalized: (u, v) with u < v


class GraphError(ValueError):
    """Invalid graph data or an operation applied to unsuitable input."""


class ParseError(GraphError):
    """Malformed edge-list text; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class PreconditionError(GraphError):
    """A class-specific decider was called on a graph outside that class."""


class SizeCapError(GraphError):
    """Input exceeds the size cap of an exhaustive operation."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Self-loops, duplicate edges, and out-of-range endpoints are rejected at
    construction (reported with the offending pair, never silently merged).
    Isolated vertices are permitted. Adjacency lists are kept sorted, so all
    traversals are deterministic.
    """

    __slots__ = ("n", "m", "edges", "adj")

    def __init__(self, n: int, edge_list: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_list:
            if u == v:
                raise GraphError(f"self-loop ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range in edge ({u}, {v}) with n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.m = len(seen)
        self.edges: frozenset[Edge] = frozenset(seen)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def _raw(cls, n: int, edges: frozenset, adj: tuple) -> "Graph":
        # trusted fast path: edges normalized, adj sorted and consistent
        g = object.__new__(cls)
        g.n = n
        g.m = len(edges)
        g.edges = edges
        g.adj = adj
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def connected_components(self) -> list[list[int]]:
        """Vertex lists, each sorted, ordered by smallest member."""
        seen = bytearray(self.n)
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = 1
            comp = [s]
            frontier = [s]
            while frontier:
                v = frontier.pop()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = 1
                        comp.append(w)
                        frontier.append(w)
            comp.sort()
            out.append(comp)
        return out

    def component_count(self) -> int:
        return len(self.connected_components())

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor; see Graph for the rejection rules."""
    return Graph(n, edge_list)


def is_acyclic(g: Graph) -> bool:
    """True iff g contains no cycle, i.e. m = n - (number of components)."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """New graph on the same vertex set with the given edges removed."""
    rem = set()
    for u, v in edges:
        key = norm_edge(u, v)
        if key not in g.edges:
            raise GraphError(f"edge ({u}, {v}) not present in graph")
        rem.add(key)
    if not rem:
        return g
    keep = g.edges - rem
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in keep:
        adj[u].append(v)
        adj[v].append(u)
    return Graph._raw(g.n, keep, tuple(tuple(sorted(a)) for a in adj))


@dataclass(frozen=True)
class DegreeProfile:
    is_cubic: bool
    is_subcubic: bool
    is_fairly_cubic: bool
    degree2_vertices: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    """Cubic / subcubic / fairly-cubic flags plus the degree-2 vertex list.

    Fairly cubic means exactly n-2 vertices of degree 3 and 2 of degree 2.
    """
    deg2 = []
    deg3 = 0
    subcubic = True
    for v in range(g.n):
        d = len(g.adj[v])
        if d == 2:
            deg2.append(v)
        elif d == 3:
            deg3 += 1
        if d > 3:
            subcubic = False
    cubic = subcubic and deg3 == g.n and g.n > 0
    fairly = subcubic and len(deg2) == 2 and deg3 == g.n - 2
    return DegreeProfile(cubic, subcubic, fairly, tuple(deg2))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges (validated against a host graph
    by validate_matching, not at construction)."""

    edges: frozenset[Edge]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Matching":
        return cls(frozenset(norm_edge(u, v) for u, v in pairs))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


def validate_matching(g: Graph, m) -> bool:
    """True iff m is a decycling matching of g: its edges belong to g, are
    pairwise vertex-disjoint, and their removal leaves an acyclic graph."""
    pairs = list(m.edges) if isinstance(m, Matching) else [norm_edge(u, v) for u, v in m]
    covered = set()
    for u, v in pairs:
        if norm_edge(u, v) not in g.edges:
            return False
        if u in covered or v in covered:
            return False
        covered.add(u)
        covered.add(v)
    return is_acyclic(remove_edges(g, pairs))


def induced_subgraph(g: Graph, vertex_set) -> tuple[Graph, list[int]]:
    """Relabeled induced subgraph plus the sorted original-vertex list, where
    new index i corresponds to returned_vertices[i]."""
    vs = sorted(set(vertex_set))
    pos = {v: i for i, v in enumerate(vs)}
    edges = []
    for v in vs:
        for w in g.adj[v]:
            if w > v and w in pos:
                edges.append((pos[v], pos[w]))
    return Graph(len(vs), edges), vs


# ---------------------------------------------------------------------------
# Edge-list text format: line 1 "n m", then m lines "u v" (0-based).
# A "#" starts a comment line. Serialization sorts edges lexicographically.
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise ParseError(lineno, f"expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"non-integer header {line!r}") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, f"negative count in header {line!r}")
            continue
        if len(edges) == m:
            raise ParseError(lineno, f"unexpected extra line {line!r} after {m} edges")
        if len(parts) != 2:
            raise ParseError(lineno, f"expected edge 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer edge {line!r}") from None
        if u == v:
            raise ParseError(lineno, f"self-loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range in edge ({u}, {v}) with n={n}")
        key = norm_edge(u, v)
        if key in seen:
            raise ParseError(lineno, f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    if n is None:
        raise ParseError(1, "empty input, expected header 'n m'")
    if len(edges) != m:
        raise ParseError(0, f"header declared {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_edge_list(g))
