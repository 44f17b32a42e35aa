"""Canonical forms of rooted multitrees.

The canonical arrangement of a rooted tree orders each sibling list so that
the alternating color-depth word of the whole tree is lexicographically
maximum, breaking ties toward the maximum parent-multiplicity word.  The pair
of those two words is the tree's signature: two rooted trees are isomorphic
exactly when their signatures are equal.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TypeMismatch
from .graphs import ChemicalGraph, Color, RootedTree

# A signature is (delta, mults): delta alternates (color, depth) over the
# canonical preorder, mults lists each non-root vertex's parent multiplicity.
Sig = tuple[tuple[int, ...], tuple[int, ...]]


def _key(x):
    if isinstance(x, Color):
        return (0, x.order_index)
    if isinstance(x, int):
        return (1, x)
    raise TypeMismatch(f"unsupported sequence element {x!r}")


def lex_compare(a, b) -> int:
    """Three-way lexicographic comparison; a proper prefix is smaller."""
    for x, y in zip(a, b):
        kx, ky = _key(x), _key(y)
        if kx[0] != ky[0]:
            raise TypeMismatch(f"cannot compare {x!r} with {y!r}")
        if kx[1] != ky[1]:
            return -1 if kx[1] < ky[1] else 1
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    return 0


def lex_sort(seqs, alphabet_size: int) -> list[int]:
    """Stable ascending lexicographic sort; returns a permutation.

    Bucket sort by position over a dense integer alphabet, recursing most
    significant position first, so the cost is linear in total sequence
    length plus the alphabet size.
    """
    for s in seqs:
        for x in s:
            if not (0 <= x < alphabet_size):
                raise ValueError(f"element {x} outside alphabet [0,{alphabet_size})")
    order = list(range(len(seqs)))
    out: list[int] = []

    def split(group: list[int], pos: int):
        done = [i for i in group if len(seqs[i]) == pos]
        out.extend(done)
        rest = [i for i in group if len(seqs[i]) > pos]
        if not rest:
            return
        buckets: dict[int, list[int]] = {}
        for i in rest:
            buckets.setdefault(seqs[i][pos], []).append(i)
        for sym in sorted(buckets):
            grp = buckets[sym]
            if len(grp) == 1:
                out.append(grp[0])
            else:
                split(grp, pos + 1)

    split(order, 0)
    return out


def k_shift(delta: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Add k to every depth entry of an alternating color-depth word."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return tuple(delta)
    return tuple(x + k if i % 2 else x for i, x in enumerate(delta))


@dataclass(frozen=True)
class CanonicalTree:
    """A rooted tree in canonical order, with per-vertex signatures.

    ``order`` lists vertices in canonical preorder; ``entries``/``mults``
    are the flattened color-depth and parent-multiplicity words indexed by
    preorder position, from which any subtree's signature is a slice.
    """

    tree: RootedTree
    sig: dict[int, Sig]
    children: dict[int, tuple[int, ...]]
    order: tuple[int, ...]
    pre: dict[int, int]
    size: dict[int, int]
    entries: tuple[tuple[int, int], ...]
    mults: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.tree.root

    @property
    def root_sig(self) -> Sig:
        return self.sig[self.root]

    def difference_sig(self, u: int) -> Sig:
        """Signature of the parent's subtree with the branch at u removed.

        Removing one child block from a canonically ordered tree keeps the
        remaining siblings sorted, so the result is read off by splicing
        the preorder slices.
        """
        w = self.tree.parent[u]
        if w is None:
            raise ValueError("root has no parent to diff against")
        i0, s0 = self.pre[w], self.size[w]
        i1, s1 = self.pre[u], self.size[u]
        base = self.entries[i0][1]
        idx = list(range(i0, i1)) + list(range(i1 + s1, i0 + s0))
        delta = []
        for j in idx:
            c, dep = self.entries[j]
            delta.append(c)
            delta.append(dep - base)
        mults = [self.mults[j] for j in idx[1:]]
        return (tuple(delta), tuple(mults))


def canonical_tree(tree: RootedTree, g: ChemicalGraph) -> CanonicalTree:
    """Canonical arrangement and all-subtree signatures of a rooted tree.

    Children are assembled bottom-up: each child contributes its depth-
    shifted color word paired with its multiplicity word prefixed by the
    connecting edge, and siblings are sorted on that pair in descending
    order.
    """
    sig: dict[int, Sig] = {}
    children: dict[int, tuple[int, ...]] = {}
    for v in reversed(tree.vertices):
        kids = tree.children[v]
        if not kids:
            sig[v] = ((g.colors[v], 0), ())
            children[v] = ()
            continue
        keyed = []
        for u in kids:
            du, mu = sig[u]
            keyed.append(((k_shift(du, 1), (g.mult(u, v),) + mu), u))
        keyed.sort(key=lambda t: t[0], reverse=True)
        delta = [g.colors[v], 0]
        mults: list[int] = []
        for (du, mu), _ in keyed:
            delta.extend(du)
            mults.extend(mu)
        sig[v] = (tuple(delta), tuple(mults))
        children[v] = tuple(u for _, u in keyed)

    order: list[int] = []
    pre: dict[int, int] = {}
    depth_abs: dict[int, int] = {tree.root: 0}
    stack = [tree.root]
    while stack:
        v = stack.pop()
        pre[v] = len(order)
        order.append(v)
        for u in reversed(children[v]):
            depth_abs[u] = depth_abs[v] + 1
            stack.append(u)
    entries = tuple((g.colors[v], depth_abs[v]) for v in order)
    mults = tuple(
        g.mult(v, tree.parent[v]) if tree.parent[v] is not None else 0
        for v in order
    )
    size = {v: len(sig[v][0]) // 2 for v in tree.vertices}
    return CanonicalTree(tree, sig, children, tuple(order), pre, size, entries, mults)


def subtree_signatures(tree: RootedTree, g: ChemicalGraph) -> dict[int, Sig]:
    """Signature of every rooted subtree, keyed by subtree root."""
    return canonical_tree(tree, g).sig


def signature_of(tree: RootedTree, g: ChemicalGraph) -> Sig:
    return canonical_tree(tree, g).sig[tree.root]


@dataclass(frozen=True)
class RankFunction:
    """Dense ranks of a signature set, consistent with signature order."""

    ranks: dict[Sig, int]

    def __call__(self, s: Sig) -> int:
        return self.ranks[s]

    def __contains__(self, s: Sig) -> bool:
        return s in self.ranks

    @property
    def count(self) -> int:
        return max(self.ranks.values(), default=0)


def rank_signatures(sigs) -> RankFunction:
    """Rank a collection of signatures 1..|distinct| in ascending order."""
    uniq = sorted(set(sigs))
    return RankFunction({s: i + 1 for i, s in enumerate(uniq)})


def tree_ranking(trees: list[tuple[RootedTree, ChemicalGraph]]) -> RankFunction:
    """Rank all rooted subtrees of the given trees by signature order."""
    sigs: list[Sig] = []
    for tree, g in trees:
        sigs.extend(subtree_signatures(tree, g).values())
    return rank_signatures(sigs)
