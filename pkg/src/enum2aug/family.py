"""The parent function on one-block doubly augmented trees and the matching
child test on cycle graphs.

The parent of a block graph removes the whole bundle between the smaller
junction (by comparison key) and its neighbor on the junction path whose key
is lexicographically minimum; that path always has two or more edges, so the
removal leaves exactly one cycle.  The child test decides, without actually
performing the removal, whether a candidate edge addition would be undone by
exactly that rule.
"""
from __future__ import annotations

from dataclasses import dataclass

from .blockcodes import (
    BlockRanks,
    TreeUniverse,
    block_ranks,
    build_tree_universe,
    junction_code,
    junction_code_star,
    path_code,
    pendants_of_augmentation,
)
from .errors import InvalidPair
from .graphs import (
    ChemicalGraph,
    MonocyclicView,
    find_unique_cycle,
    mono_block_view,
    remove_edge_bundle,
)


@dataclass(frozen=True)
class ParentResult:
    parent: ChemicalGraph
    removed_pair: tuple[int, int]
    removed_mult: int
    cycle_index: int


def parent_of(h: ChemicalGraph) -> ParentResult:
    """Canonical single-cycle parent of a one-block doubly augmented tree."""
    view = mono_block_view(h)
    ranks = block_ranks(view)
    a, b = view.junctions
    key_a = (junction_code(view, a, ranks), junction_code_star(view, a, ranks))
    key_b = (junction_code(view, b, ranks), junction_code_star(view, b, ranks))
    # ties keep the smaller vertex index; either choice gives an isomorphic
    # parent
    u = a if key_a <= key_b else b
    codes = [path_code(view, u, i, ranks) for i in range(3)]
    best = min(codes)
    candidates = [i for i in range(3) if codes[i] == best]

    def neighbor(i: int) -> int:
        p = view.paths[i]
        return p[1] if p[0] == u else p[-2]

    i_star = min(candidates, key=neighbor)
    w = neighbor(i_star)
    return ParentResult(
        remove_edge_bundle(h, u, w), (u, w), h.mult(u, w), i_star
    )


@dataclass(frozen=True)
class ChildVerdict:
    """Outcome of the five child conditions, cheapest first."""

    pendent_exceeding: bool
    pendent_strict_max: bool
    endpoints_valid: bool
    junction_order: bool
    path_minimal: bool

    def __bool__(self) -> bool:
        return (
            self.pendent_exceeding
            and self.pendent_strict_max
            and self.endpoints_valid
            and self.junction_order
            and self.path_minimal
        )


def _augmented_codes(universe: TreeUniverse, x: int, y: int, p: int):
    """Junction codes and per-junction path codes of graph + p*xy, assembled
    from universe lookups."""
    view = universe.view
    g = view.graph
    n = g.n
    v0 = universe.anchor
    rank = universe.rank
    pend = pendants_of_augmentation(universe, view.cycle.index(x), y)

    parent = universe.anchor_tree.tree.parent
    chain = [y]
    while chain[-1] != v0:
        chain.append(parent[chain[-1]])

    ix = view.cycle.index(x)
    nc = view.cycle_length
    down = [view.cycle[j % nc] for j in range(ix, -1, -1)]
    up = [view.cycle[j % nc] for j in range(ix, nc + 1)]
    ypath = [x] + chain
    ymults = [p] + [g.mult(a, b) for a, b in zip(chain, chain[1:])]

    def code(vertices: list[int], mults: list[int]) -> tuple:
        inner = sum(pend[w][1] for w in vertices[1:-1])
        out = [n - inner, len(mults), rank(pend[vertices[0]][0])]
        for m, w in zip(mults, vertices[1:]):
            out.append(m)
            out.append(rank(pend[w][0]))
        return tuple(out)

    def arc_mults(vertices: list[int]) -> list[int]:
        return [g.mult(a, b) for a, b in zip(vertices, vertices[1:])]

    paths_from_x = (
        code(ypath, ymults),
        code(down, arc_mults(down)),
        code(up, arc_mults(up)),
    )
    paths_from_v0 = (
        code(ypath[::-1], ymults[::-1]),
        code(down[::-1], arc_mults(down)[::-1]),
        code(up[::-1], arc_mults(up)[::-1]),
    )
    sig_x, size_x = pend[x]
    sig_v0, size_v0 = pend[v0]
    code_x = (size_x, g.colors[x], g.deg(x) + p, rank(sig_x))
    code_v0 = (size_v0, g.colors[v0], g.deg(v0), rank(sig_v0))
    return code_x, code_v0, paths_from_x, paths_from_v0


def child_verdict(
    g: ChemicalGraph,
    x: int,
    y: int,
    p: int,
    view: MonocyclicView | None = None,
    universe: TreeUniverse | None = None,
) -> ChildVerdict:
    """Evaluate the five child conditions for graph + p*xy."""
    if x == y or g.mult(x, y) != 0:
        raise InvalidPair(f"{{{x},{y}}} must be a non-adjacent vertex pair")
    if not (1 <= p <= min(g.d, g.res(x), g.res(y))):
        raise InvalidPair(f"p={p} outside [1, min(d, res(x), res(y))]")
    if view is None:
        view = find_unique_cycle(g)
    rx, ry = view.rho[x], view.rho[y]
    size_ry = view.pendent[ry].size
    c1 = 3 * size_ry >= g.n
    c2 = all(
        view.pendent[r].size < size_ry for r in view.cycle if r != ry
    )
    c3 = x == rx and rx != ry and y != ry
    if not (c1 and c2 and c3):
        return ChildVerdict(c1, c2, c3, False, False)
    if universe is None or universe.anchor != ry:
        universe = build_tree_universe(view.anchored(ry))
    code_x, code_v0, from_x, from_v0 = _augmented_codes(universe, x, y, p)
    star_x = tuple(sorted(from_x, reverse=True))
    star_v0 = tuple(sorted(from_v0, reverse=True))
    c4 = (code_x, star_x) <= (code_v0, star_v0)
    ycode = from_x[0]
    c5 = all(ycode <= other for other in from_x)
    return ChildVerdict(c1, c2, c3, c4, c5)


def child_check(
    g: ChemicalGraph,
    x: int,
    y: int,
    p: int,
    view: MonocyclicView | None = None,
    universe: TreeUniverse | None = None,
) -> bool:
    """True iff graph + p*xy is a child of ``g``."""
    return bool(child_verdict(g, x, y, p, view, universe))
