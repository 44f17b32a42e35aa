"""Colored multigraph model plus structural views: unique cycle, pendent
trees, and the two-junction block of a doubly augmented tree.

Vertices are dense integer indices 0..n-1.  Colors are small integers whose
numeric value is the position in the fixed total order of the element
alphabet, so sequence comparisons reduce to integer comparisons.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import (
    MultiplicityOverflow,
    NotAdjacent,
    NotMonoBlock2Aug,
    NotMonocyclic,
    SelfLoop,
)


@dataclass(frozen=True)
class Color:
    symbol: str
    order_index: int


@dataclass(frozen=True)
class ColorTable:
    """Element alphabet with a fixed total order and valences.

    ``symbols[i]`` is the i-th smallest color; color values used in graphs
    are indices into this table.
    """

    symbols: tuple[str, ...]
    valences: tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) != len(self.valences):
            raise ValueError("one valence per symbol required")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate color symbol")

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise KeyError(f"unknown color symbol {symbol!r}") from None

    def color(self, symbol: str) -> Color:
        return Color(symbol, self.index(symbol))

    def valence(self, color: int) -> int:
        return self.valences[color]

    def symbol(self, color: int) -> str:
        return self.symbols[color]


# Order O < N < C, valences per element.
DEFAULT_TABLE = ColorTable(("O", "N", "C"), (2, 3, 4))


class ChemicalGraph:
    """Loop-free colored multigraph with bounded edge multiplicity.

    Immutable after construction; edit operations return new graphs.
    """

    __slots__ = ("n", "colors", "table", "d", "_mult", "_nbr", "_deg")

    def __init__(
        self,
        colors: tuple[int, ...] | list[int],
        edges: list[tuple[int, int, int]] | tuple[tuple[int, int, int], ...],
        table: ColorTable = DEFAULT_TABLE,
        d: int | None = None,
    ):
        colors = tuple(colors)
        n = len(colors)
        mult = [0] * (n * n)
        dmax = 1
        for u, v, m in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u},{v}) out of range")
            if m < 1:
                raise ValueError(f"multiplicity {m} < 1")
            if mult[u * n + v]:
                raise ValueError(f"duplicate edge ({u},{v})")
            mult[u * n + v] = mult[v * n + u] = m
            dmax = max(dmax, m)
        if d is None:
            d = dmax
        elif dmax > d:
            raise MultiplicityOverflow(f"multiplicity {dmax} exceeds d={d}")
        for c in colors:
            if not (0 <= c < len(table.symbols)):
                raise ValueError(f"color index {c} outside table")
        self.n = n
        self.colors = colors
        self.table = table
        self.d = d
        self._mult = tuple(mult)
        nbr = []
        deg = []
        for v in range(n):
            row = [u for u in range(n) if mult[v * n + u]]
            nbr.append(tuple(row))
            deg.append(sum(mult[v * n + u] for u in row))
        self._nbr = tuple(nbr)
        self._deg = tuple(deg)

    def mult(self, u: int, v: int) -> int:
        return self._mult[u * self.n + v]

    def deg(self, v: int) -> int:
        return self._deg[v]

    def res(self, v: int) -> int:
        return self.table.valence(self.colors[v]) - self._deg[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbr[v]

    def edges(self):
        """Yield (u, v, mult) with u < v."""
        n = self.n
        for u in range(n):
            for v in self._nbr[u]:
                if u < v:
                    yield u, v, self._mult[u * n + v]

    def adjacent_pair_count(self) -> int:
        return sum(len(row) for row in self._nbr) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self._nbr[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n

    def with_capacity(self, d: int) -> "ChemicalGraph":
        """Same graph with multiplicity capacity raised to ``d``."""
        if d < self.d:
            existing = max((m for _, _, m in self.edges()), default=1)
            if existing > d:
                raise MultiplicityOverflow(f"existing multiplicity {existing} > {d}")
        return ChemicalGraph(self.colors, list(self.edges()), self.table, d)

    def __eq__(self, other):
        return (
            isinstance(other, ChemicalGraph)
            and self.colors == other.colors
            and self._mult == other._mult
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.colors, self._mult))

    def __repr__(self):
        sym = "".join(self.table.symbol(c) for c in self.colors)
        return f"ChemicalGraph({sym}, {list(self.edges())})"


def add_edges(g: ChemicalGraph, x: int, y: int, p: int) -> ChemicalGraph:
    """New graph with p extra simple edges between x and y."""
    if x == y:
        raise SelfLoop(f"cannot add edges from {x} to itself")
    if p < 1:
        raise ValueError("p must be >= 1")
    m = g.mult(x, y) + p
    if m > g.d:
        raise MultiplicityOverflow(f"multiplicity {m} exceeds d={g.d}")
    edges = [(u, v, q) for u, v, q in g.edges() if {u, v} != {x, y}]
    edges.append((min(x, y), max(x, y), m))
    return ChemicalGraph(g.colors, edges, g.table, g.d)


def remove_edge_bundle(g: ChemicalGraph, x: int, y: int) -> ChemicalGraph:
    """New graph with every edge between x and y removed."""
    if g.mult(x, y) == 0:
        raise NotAdjacent(f"vertices {x} and {y} are not adjacent")
    edges = [(u, v, q) for u, v, q in g.edges() if {u, v} != {x, y}]
    return ChemicalGraph(g.colors, edges, g.table, g.d)


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree view over a subset of graph vertices.

    ``vertices`` is a preorder listing (children visited in increasing
    index order, a deterministic but non-canonical arrangement).
    """

    root: int
    vertices: tuple[int, ...]
    parent: dict[int, int | None] = field(compare=False)
    children: dict[int, tuple[int, ...]] = field(compare=False)
    depth: dict[int, int] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.vertices)


def _grow_tree(g: ChemicalGraph, root: int, blocked: set[int]) -> RootedTree:
    """Tree hanging off ``root`` when edges into ``blocked`` are cut."""
    parent: dict[int, int | None] = {root: None}
    children: dict[int, tuple[int, ...]] = {}
    depth = {root: 0}
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        kids = tuple(
            u for u in g.neighbors(v) if u != parent[v] and u not in blocked
        )
        children[v] = kids
        for u in kids:
            parent[u] = v
            depth[u] = depth[v] + 1
        stack.extend(reversed(kids))
    return RootedTree(root, tuple(order), parent, children, depth)


def subtree(g: ChemicalGraph, tree: RootedTree, root: int) -> RootedTree:
    """Subtree of ``tree`` rooted at one of its vertices."""
    parent: dict[int, int | None] = {root: None}
    children: dict[int, tuple[int, ...]] = {}
    depth = {root: 0}
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        kids = tree.children[v]
        children[v] = kids
        for u in kids:
            parent[u] = v
            depth[u] = depth[v] + 1
        stack.extend(reversed(kids))
    return RootedTree(root, tuple(order), parent, children, depth)


def _core_vertices(g: ChemicalGraph) -> set[int]:
    """Vertices remaining after iteratively peeling leaves."""
    nbrcount = [len(g.neighbors(v)) for v in range(g.n)]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if nbrcount[v] <= 1)
    while queue:
        v = queue.popleft()
        if not alive[v] or nbrcount[v] > 1:
            continue
        alive[v] = False
        for u in g.neighbors(v):
            if alive[u]:
                nbrcount[u] -= 1
                if nbrcount[u] == 1:
                    queue.append(u)
    return {v for v in range(g.n) if alive[v]}


@dataclass(frozen=True)
class MonocyclicView:
    """Unique cycle of a singly augmented tree plus its pendent trees."""

    graph: ChemicalGraph
    cycle: tuple[int, ...]
    pendent: dict[int, RootedTree] = field(compare=False)
    rho: tuple[int, ...] = ()

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)

    def position(self, v: int) -> int:
        return self.cycle.index(v)

    def cycle_mult(self, i: int) -> int:
        """Multiplicity of the cycle edge between positions i and i+1."""
        c = self.cycle
        return self.graph.mult(c[i % len(c)], c[(i + 1) % len(c)])

    def anchored(self, v0: int) -> "MonocyclicView":
        """Same view with the cycle rotated to start at ``v0``."""
        i = self.cycle.index(v0)
        cyc = self.cycle[i:] + self.cycle[:i]
        return MonocyclicView(self.graph, cyc, self.pendent, self.rho)


def find_unique_cycle(g: ChemicalGraph) -> MonocyclicView:
    """Cycle and pendent-tree decomposition of a singly augmented tree."""
    if g.n < 3:
        raise NotMonocyclic(f"{g.n} vertices cannot carry a cycle")
    if not g.is_connected():
        raise NotMonocyclic("graph is disconnected")
    if g.adjacent_pair_count() != g.n:
        raise NotMonocyclic(
            f"{g.adjacent_pair_count()} adjacent pairs on {g.n} vertices"
        )
    core = _core_vertices(g)
    if len(core) < 3:
        raise NotMonocyclic("no cycle on three or more vertices")
    for v in core:
        if sum(1 for u in g.neighbors(v) if u in core) != 2:
            raise NotMonocyclic("cycle structure is not a single cycle")
    start = min(core)
    nxt = min(u for u in g.neighbors(start) if u in core)
    cyc = [start, nxt]
    while True:
        v = cyc[-1]
        u = next(w for w in g.neighbors(v) if w in core and w != cyc[-2])
        if u == start:
            break
        cyc.append(u)
    if len(cyc) != len(core):
        raise NotMonocyclic("cycle does not cover the core")
    pendent = {v: _grow_tree(g, v, core - {v}) for v in cyc}
    rho = [0] * g.n
    for v in cyc:
        for u in pendent[v].vertices:
            rho[u] = v
    return MonocyclicView(g, tuple(cyc), pendent, tuple(rho))


def is_exceeding(view: MonocyclicView, v: int) -> bool:
    """Whether the pendent tree at cycle vertex v holds >= n/3 vertices."""
    return 3 * view.pendent[v].size >= view.graph.n


@dataclass(frozen=True)
class MonoBlockView:
    """Two junctions, three cycles, and pendent trees of a one-block
    doubly augmented tree."""

    graph: ChemicalGraph
    junctions: tuple[int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    pendent: dict[int, RootedTree] = field(compare=False)
    rho: tuple[int, ...] = ()

    @property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """cycles[i] is the cycle avoiding paths[i]."""
        out = []
        for i in range(3):
            j, k = [t for t in range(3) if t != i]
            # walk out along path j and back along path k
            cyc = list(self.paths[j]) + list(reversed(self.paths[k]))[1:-1]
            out.append(tuple(cyc))
        return tuple(out)

    @property
    def junction_pairs(self) -> tuple[tuple[int, int], ...]:
        u, v = self.junctions
        pairs = []
        for p in self.paths:
            if len(p) == 2:
                pairs.append((u, v))
            else:
                pairs.append((u, p[1]))
                pairs.append((v, p[-2]))
        return tuple(pairs)

    def path_avoiding(self, i: int) -> tuple[int, ...]:
        """The junction-to-junction path not inside cycles[i]: paths[i]."""
        return self.paths[i]


def mono_block_view(h: ChemicalGraph) -> MonoBlockView:
    """Junction/path decomposition of a one-block doubly augmented tree."""
    if not h.is_connected():
        raise NotMonoBlock2Aug("graph is disconnected")
    if h.adjacent_pair_count() != h.n + 1:
        raise NotMonoBlock2Aug(
            f"{h.adjacent_pair_count()} adjacent pairs on {h.n} vertices"
        )
    core = _core_vertices(h)
    degs = {v: sum(1 for u in h.neighbors(v) if u in core) for v in core}
    junctions = sorted(v for v in core if degs[v] == 3)
    if len(junctions) != 2 or any(degs[v] not in (2, 3) for v in core):
        raise NotMonoBlock2Aug("block is not a pair of junctions joined by three paths")
    u, v = junctions
    paths = []
    used = set()
    for w in h.neighbors(u):
        if w not in core:
            continue
        path = [u, w]
        prev = u
        while path[-1] not in (u, v):
            cur = path[-1]
            nxt = next(t for t in h.neighbors(cur) if t in core and t != prev)
            prev = cur
            path.append(nxt)
        if path[-1] != v:
            raise NotMonoBlock2Aug("cycle not passing through both junctions")
        if w == v:
            path = [u, v]
        paths.append(tuple(path))
        used.update(path)
    if len(paths) != 3 or used != core:
        raise NotMonoBlock2Aug("three internally disjoint junction paths required")
    interior = [set(p[1:-1]) for p in paths]
    for i in range(3):
        for j in range(i + 1, 3):
            if interior[i] & interior[j]:
                raise NotMonoBlock2Aug("junction paths share interior vertices")
    paths.sort(key=lambda p: (len(p), p))
    pendent = {w: _grow_tree(h, w, core - {w}) for w in core}
    rho = [0] * h.n
    for w in core:
        for t in pendent[w].vertices:
            rho[t] = w
    return MonoBlockView(h, (u, v), tuple(paths), pendent, tuple(rho))
