"""Comparison keys for junctions and junction-to-junction paths, built on
pendent-tree ranks, plus the per-graph tree universe that makes rank lookups
for every candidate edge addition a table access."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAJunction
from .graphs import ChemicalGraph, MonoBlockView, MonocyclicView, subtree
from .signatures import (
    CanonicalTree,
    RankFunction,
    Sig,
    canonical_tree,
    rank_signatures,
)


@dataclass(frozen=True)
class TreeUniverse:
    """Signatures and ranks of every rooted tree that can appear as a
    pendent tree of the input cycle graph or of any single-edge augmentation
    of it.

    Covers the pendent trees themselves, all rooted subtrees of the anchor's
    pendent tree, and the difference trees left along any root-to-vertex
    path when a branch is absorbed into the block.
    """

    view: MonocyclicView
    anchor: int
    pend_sig: tuple[Sig, ...]
    pend_size: tuple[int, ...]
    anchor_tree: CanonicalTree
    sub_sig: dict[int, Sig] = field(compare=False)
    sub_size: dict[int, int] = field(compare=False)
    diff_sig: dict[int, Sig] = field(compare=False)
    diff_size: dict[int, int] = field(compare=False)
    rank: RankFunction = field(compare=False)

    @property
    def pendent_signatures(self) -> tuple[Sig, ...]:
        return self.pend_sig

    @property
    def subtree_universe(self) -> set[Sig]:
        return set(self.sub_sig.values())

    @property
    def difference_universe(self) -> set[Sig]:
        return set(self.diff_sig.values())


def build_tree_universe(view: MonocyclicView) -> TreeUniverse:
    """Rank table over every tree relevant to augmenting ``view``'s graph.

    The view's first cycle vertex is the anchor; difference-tree signatures
    are sliced out of the anchor tree's canonical word rather than rebuilt.
    """
    g = view.graph
    anchor = view.cycle[0]
    ct = canonical_tree(view.pendent[anchor], g)
    pend_sig = []
    pend_size = []
    for v in view.cycle:
        if v == anchor:
            pend_sig.append(ct.root_sig)
            pend_size.append(ct.size[anchor])
        else:
            c = canonical_tree(view.pendent[v], g)
            pend_sig.append(c.root_sig)
            pend_size.append(c.size[v])
    sub_sig = dict(ct.sig)
    sub_size = dict(ct.size)
    diff_sig: dict[int, Sig] = {}
    diff_size: dict[int, int] = {}
    for u in ct.order:
        if u == anchor:
            continue
        w = ct.tree.parent[u]
        diff_sig[u] = ct.difference_sig(u)
        diff_size[u] = ct.size[w] - ct.size[u]
    sigs = list(pend_sig) + list(sub_sig.values()) + list(diff_sig.values())
    return TreeUniverse(
        view,
        anchor,
        tuple(pend_sig),
        tuple(pend_size),
        ct,
        sub_sig,
        sub_size,
        diff_sig,
        diff_size,
        rank_signatures(sigs),
    )


@dataclass(frozen=True)
class BlockRanks:
    """Per-graph pendent signatures and ranks for a two-junction block."""

    sig: dict[int, Sig] = field(compare=False)
    size: dict[int, int] = field(compare=False)
    rank: RankFunction = field(compare=False)


def block_ranks(view: MonoBlockView) -> BlockRanks:
    g = view.graph
    sig: dict[int, Sig] = {}
    size: dict[int, int] = {}
    for v, tree in view.pendent.items():
        ct = canonical_tree(tree, g)
        sig[v] = ct.root_sig
        size[v] = tree.size
    return BlockRanks(sig, size, rank_signatures(sig.values()))


def junction_code(view: MonoBlockView, u: int, ranks: BlockRanks) -> tuple:
    """(pendent size, color, degree, pendent rank) of a junction."""
    if u not in view.junctions:
        raise NotAJunction(f"vertex {u} is not a junction")
    g = view.graph
    return (ranks.size[u], g.colors[u], g.deg(u), ranks.rank(ranks.sig[u]))


def _oriented(path: tuple[int, ...], u: int) -> tuple[int, ...]:
    if path[0] == u:
        return path
    if path[-1] == u:
        return tuple(reversed(path))
    raise ValueError(f"{u} is not an endpoint of {path}")


def path_code(
    view: MonoBlockView, u: int, i: int, ranks: BlockRanks
) -> tuple:
    """Comparison key of the junction path avoiding cycles[i], read from u.

    Leads with total size outside the path interior and the path length,
    then alternates pendent ranks with edge multiplicities from u onward.
    """
    g = view.graph
    p = _oriented(view.paths[i], u)
    inner = sum(ranks.size[w] for w in p[1:-1])
    out = [g.n - inner, len(p) - 1]
    out.append(ranks.rank(ranks.sig[p[0]]))
    for a, b in zip(p, p[1:]):
        out.append(g.mult(a, b))
        out.append(ranks.rank(ranks.sig[b]))
    return tuple(out)


def junction_code_star(
    view: MonoBlockView, u: int, ranks: BlockRanks
) -> tuple[tuple, ...]:
    """The three path codes from u in non-ascending order."""
    codes = sorted((path_code(view, u, i, ranks) for i in range(3)), reverse=True)
    return tuple(codes)


def pendants_of_augmentation(
    universe: TreeUniverse, x_pos: int, y: int
) -> dict[int, tuple[Sig, int]]:
    """Pendent (signature, size) of every block vertex of graph + p edges
    between cycle position ``x_pos`` and vertex ``y`` inside the anchor's
    pendent tree, looked up from the universe without materializing the
    augmented graph."""
    view = universe.view
    ct = universe.anchor_tree
    out: dict[int, tuple[Sig, int]] = {}
    for i, v in enumerate(view.cycle):
        if v != universe.anchor:
            out[v] = (universe.pend_sig[i], universe.pend_size[i])
    chain = [y]
    while chain[-1] != universe.anchor:
        chain.append(ct.tree.parent[chain[-1]])
    out[y] = (universe.sub_sig[y], universe.sub_size[y])
    for prev, w in zip(chain, chain[1:]):
        out[w] = (universe.diff_sig[prev], universe.diff_size[prev])
    return out
