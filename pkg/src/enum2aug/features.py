"""Colored path sequences, path-frequency vectors, bound relaxation, and
feasibility / path-closure predicates."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundsViolation
from .graphs import ChemicalGraph, ColorTable

# A colored sequence is a flat tuple (c0, m1, c1, ..., mK, cK) of ints.
ColoredSeq = tuple[int, ...]


def seq_length(t: ColoredSeq) -> int:
    return len(t) // 2


def rev(t: ColoredSeq) -> ColoredSeq:
    return tuple(reversed(t))


def gamma(g: ChemicalGraph, path: tuple[int, ...]) -> ColoredSeq:
    """Colored sequence read along a rooted simple path of vertices."""
    if len(set(path)) != len(path):
        raise ValueError("path vertices must be distinct")
    out = [g.colors[path[0]]]
    for a, b in zip(path, path[1:]):
        m = g.mult(a, b)
        if m == 0:
            raise ValueError(f"({a},{b}) is not an edge")
        out.append(m)
        out.append(g.colors[b])
    return tuple(out)


def iter_rooted_paths(g: ChemicalGraph, max_len: int):
    """All rooted simple paths of length <= max_len, as vertex tuples.

    Every undirected path is produced once per root end.
    """
    path = []
    on_path = [False] * g.n

    def walk(v: int):
        path.append(v)
        on_path[v] = True
        yield tuple(path)
        if len(path) <= max_len:
            for u in g.neighbors(v):
                if not on_path[u]:
                    yield from walk(u)
        on_path[v] = False
        path.pop()

    for v in range(g.n):
        yield from walk(v)


def frequency_vector(g: ChemicalGraph, k: int) -> dict[ColoredSeq, int]:
    """Counts of every colored sequence realized by a rooted path of
    length <= k."""
    freq: dict[ColoredSeq, int] = {}
    seq: list[int] = []

    def walk(v: int, on_path: list[bool]):
        t = tuple(seq)
        freq[t] = freq.get(t, 0) + 1
        if len(seq) // 2 < k:
            on_path[v] = True
            for u in g.neighbors(v):
                if not on_path[u]:
                    seq.append(g.mult(v, u))
                    seq.append(g.colors[u])
                    walk(u, on_path)
                    seq.pop()
                    seq.pop()
            on_path[v] = False

    on_path = [False] * g.n
    for v in range(g.n):
        seq = [g.colors[v]]
        walk(v, on_path)
    return freq


def derive_relaxed_lower(
    lower: dict[ColoredSeq, int]
) -> dict[ColoredSeq, int]:
    """Lower bounds weakened so that removing one junction bundle from any
    conforming graph cannot drop it below them.

    Length-0 entries are kept, length-1 entries lose one unit (two when the
    end colors coincide, since both root ends realize the same sequence),
    and longer entries are released entirely.
    """
    out: dict[ColoredSeq, int] = {}
    for t, b in lower.items():
        k = seq_length(t)
        if k == 0:
            out[t] = b
        elif k == 1:
            drop = 2 if t[0] == t[2] else 1
            out[t] = max(0, b - drop)
        else:
            out[t] = 0
    return out


@dataclass(frozen=True)
class FeatureBounds:
    """Lower/upper path-frequency bounds over a declared sequence set."""

    table: ColorTable
    k: int
    d: int
    lower: dict[ColoredSeq, int] = field(compare=False)
    upper: dict[ColoredSeq, int] = field(compare=False)

    def __post_init__(self):
        if set(self.lower) != set(self.upper):
            raise BoundsViolation("lower and upper must cover the same sequences")
        for t, lo in self.lower.items():
            hi = self.upper[t]
            if lo > hi:
                raise BoundsViolation(f"lower {lo} > upper {hi} for {t}")
            if seq_length(t) == 0 and lo != hi:
                raise BoundsViolation("length-0 bounds must pin an exact count")
            if seq_length(t) > self.k:
                raise BoundsViolation(f"sequence {t} longer than k={self.k}")

    @property
    def pi(self) -> frozenset[ColoredSeq]:
        return frozenset(self.lower)

    def relaxed_lower(self) -> dict[ColoredSeq, int]:
        return derive_relaxed_lower(self.lower)


def is_feasible(
    g: ChemicalGraph, bounds: FeatureBounds, use_relaxed: bool = False
) -> bool:
    """Residual degrees non-negative and frequencies within bounds on the
    declared sequences."""
    if any(g.res(v) < 0 for v in range(g.n)):
        return False
    freq = frequency_vector(g, bounds.k)
    lower = bounds.relaxed_lower() if use_relaxed else bounds.lower
    for t, lo in lower.items():
        f = freq.get(t, 0)
        if f < lo or f > bounds.upper[t]:
            return False
    return True


def check_path_closure(
    g: ChemicalGraph,
    pi: frozenset[ColoredSeq] | set[ColoredSeq],
    el: int,
    mode: str,
    k: int,
) -> bool:
    """Side condition on paths whose sequence is undeclared.

    Mode "a": every path of length <= el realizes a declared sequence.
    Mode "p": every path of length in (el, k] realizes a declared sequence;
    paths longer than k are exempt because no declared sequence can reach
    them.
    """
    if mode not in ("a", "p"):
        raise ValueError(f"unknown mode {mode!r}")
    if el > k:
        raise ValueError("L must be <= K")
    lo, hi = (0, el) if mode == "a" else (el + 1, k)
    freq = frequency_vector(g, hi)
    for t in freq:
        if lo <= seq_length(t) <= hi and t not in pi:
            return False
    return True
