"""Explicit edge colorings and random-graph experiment objects.

A color pattern is a family of pairwise edge-disjoint graphs G_1..G_r on a
common vertex set; when the union covers every pair it is an r-edge-coloring
of the complete graph.  Two deterministic constructions live here:

* ``affine_coloring`` — vertices are the q^2 points of AG(2, q); each line
  is assigned to one of r families and color i connects exactly the pairs
  covered by a family-i line.  Since two points share exactly one line this
  always yields a complete coloring.

* ``fq3_coloring`` — vertices are the q^3 points of F_q^3; color i's core
  edges are the pairs covered by the slope family with parameter i-1.
  Pairs left over (directions with first coordinate 0, or families beyond
  r) are completed round-robin; the untouched core pattern stays available
  on the result for inspection.

Randomness is always explicit: the generator is numpy's PCG64 seeded with a
caller-supplied 64-bit seed, and pair ordering is documented per function,
so a given seed reproduces the same object within this implementation.
Cross-implementation bit-reproducibility is not promised.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Optional

import numpy as np

from .errors import BudgetError
from .geometry import build_affine_plane, fq3_line_family, parallel_classes, PrimeField
from .graphs import (
    ENUMERATION_CAP,
    SimpleGraph,
    find_clique_mask,
    iter_bits,
    mask_of,
)

GENERATOR_NAME = "numpy-pcg64"
COLOR_CAP = 64
EXACT_SUBSET_BUDGET = 10**7

PARALLEL_BALANCED = "parallel-balanced"
ROUND_ROBIN = "round-robin"


@dataclass(frozen=True)
class ColoredCompleteGraph:
    """r pairwise edge-disjoint color classes on a common vertex set.

    ``complete`` records whether every pair is colored.  Class index i
    corresponds to color label i+1 in the ``.cg`` text format and in
    witnesses.  ``clique_hints`` optionally carries, per class, vertex
    masks known to induce cliques of that class (the geometric lines of the
    constructions); checkers may use them as fast witnesses.  They are
    verified here, and excluded from equality along with ``precompletion``.
    """

    n: int
    r: int
    classes: tuple[SimpleGraph, ...]
    complete: bool
    clique_hints: Optional[tuple[tuple[int, ...], ...]] = field(
        default=None, compare=False
    )
    precompletion: Optional["ColoredCompleteGraph"] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        if not 1 <= self.r <= COLOR_CAP:
            raise ValueError(f"color count {self.r} outside [1, {COLOR_CAP}]")
        if len(self.classes) != self.r:
            raise ValueError("need exactly r color classes")
        if any(cls.n != self.n for cls in self.classes):
            raise ValueError("all classes must share the vertex count")
        full = (1 << self.n) - 1
        for v in range(self.n):
            used = 0
            for cls in self.classes:
                row = cls.rows[v]
                if used & row:
                    raise ValueError(f"classes overlap at vertex {v}")
                used |= row
            if self.complete and used != full & ~(1 << v):
                raise ValueError(f"pair missing at vertex {v} in a complete pattern")
        if self.clique_hints is not None:
            if len(self.clique_hints) != self.r:
                raise ValueError("need one hint tuple per class")
            for i, hints in enumerate(self.clique_hints):
                rows = self.classes[i].rows
                for hmask in hints:
                    for v in iter_bits(hmask):
                        if hmask & ~(rows[v] | (1 << v)):
                            raise ValueError(f"hint mask not a clique in class {i}")

    @cached_property
    def class_masks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(cls.rows for cls in self.classes)

    def color_of(self, u: int, v: int) -> Optional[int]:
        """0-based class index of pair {u, v}, or None if uncolored."""
        for i, cls in enumerate(self.classes):
            if cls.has_edge(u, v):
                return i
        return None

    def colored_pairs(self):
        """Yield (u, v, class index) with u < v, ascending."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                c = self.color_of(u, v)
                if c is not None:
                    yield u, v, c

    def permute_colors(self, perm) -> "ColoredCompleteGraph":
        """Pattern with class i moved to position perm[i]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.r)):
            raise ValueError("not a permutation of the color classes")
        classes: list[Optional[SimpleGraph]] = [None] * self.r
        for i, cls in enumerate(self.classes):
            classes[perm[i]] = cls
        return ColoredCompleteGraph(self.n, self.r, tuple(classes), self.complete)

    def relabel_vertices(self, perm) -> "ColoredCompleteGraph":
        """Pattern with vertex v renamed to perm[v]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertices")
        classes = tuple(
            SimpleGraph.from_edges(
                self.n, [(perm[u], perm[v]) for u, v in cls.edges()]
            )
            for cls in self.classes
        )
        return ColoredCompleteGraph(self.n, self.r, classes, self.complete)


@dataclass(frozen=True)
class GnpParams:
    """Parameters of a seeded Erdős–Rényi sample."""

    N: int
    p: float
    seed: int

    def __post_init__(self):
        if not 0 <= self.N <= 4096:
            raise ValueError(f"vertex count {self.N} outside [0, 4096]")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability {self.p} outside [0, 1]")


@dataclass(frozen=True)
class BadSetCount:
    """Result of ``count_bad_sets``: an exact count or an unbiased estimate."""

    mode: str  # "exact" | "sampled"
    value: float  # exact integer count, or the estimate
    checked: int  # subsets examined
    space: int  # C(N, n)
    hits: int  # bad subsets among those examined
    seed: Optional[int] = None


def _lines_to_class_graphs(
    n: int, line_points, assignment: list[int], r: int
) -> tuple[tuple[SimpleGraph, ...], tuple[tuple[int, ...], ...]]:
    """Build class graphs and per-class line-mask hints from a line coloring."""
    rows = [[0] * n for _ in range(r)]
    hints: list[list[int]] = [[] for _ in range(r)]
    for idx, color in enumerate(assignment):
        pts = line_points[idx]
        lmask = mask_of(pts)
        hints[color].append(lmask)
        for p in pts:
            rows[color][p] |= lmask & ~(1 << p)
    classes = tuple(SimpleGraph(n, tuple(rs)) for rs in rows)
    return classes, tuple(tuple(h) for h in hints)


def affine_coloring(
    q: int, r: int, strategy: str = PARALLEL_BALANCED, seed: Optional[int] = None
) -> ColoredCompleteGraph:
    """Complete r-coloring of K_{q^2} from a line partition of AG(2, q).

    ``parallel-balanced`` deals whole parallel classes to colors
    round-robin (class j -> color j mod r; exact balance when r divides
    q+1); it is deterministic and ignores ``seed``.  ``round-robin``
    shuffles the fixed line order with the seeded generator and then deals
    single lines cyclically, so family sizes differ by at most one.
    """
    plane = build_affine_plane(q)
    line_count = len(plane.lines)
    if strategy == PARALLEL_BALANCED:
        if not 1 <= r <= q + 1:
            raise ValueError(f"parallel-balanced needs r <= q+1, got r={r}")
        assignment = [0] * line_count
        for j, cls_lines in enumerate(parallel_classes(plane)):
            for idx in cls_lines:
                assignment[idx] = j % r
    elif strategy == ROUND_ROBIN:
        if not 1 <= r <= line_count:
            raise ValueError(f"round-robin needs r <= q^2+q, got r={r}")
        if seed is None:
            raise ValueError("round-robin strategy requires an explicit seed")
        rng = np.random.Generator(np.random.PCG64(seed))
        order = rng.permutation(line_count)
        assignment = [0] * line_count
        for pos, idx in enumerate(order):
            assignment[int(idx)] = pos % r
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    classes, hints = _lines_to_class_graphs(plane.point_count, plane.lines, assignment, r)
    return ColoredCompleteGraph(
        plane.point_count, r, classes, complete=True, clique_hints=hints
    )


def fq3_coloring(q: int, r: int) -> ColoredCompleteGraph:
    """Complete r-coloring of K_{q^3} grown from r slope families.

    Core class i holds the pairs covered by the family with parameter i;
    the families are pairwise edge-disjoint, so the cores form a partial
    pattern (exposed as ``.precompletion``).  Pairs covered by none of the
    first r families are handed out round-robin by ascending (u, v), which
    only ever adds edges to a class and therefore preserves every clique
    the core already had.
    """
    PrimeField(q)
    if not 1 <= r <= q:
        raise ValueError(f"need 1 <= r <= q, got r={r}")
    n = q**3
    families = [fq3_line_family(q, lam) for lam in range(r)]
    core_rows = [[0] * n for _ in range(r)]
    hints: list[list[int]] = [[] for _ in range(r)]
    for i, fam in enumerate(families):
        for lmask in fam.line_masks:
            hints[i].append(lmask)
            for p in iter_bits(lmask):
                core_rows[i][p] |= lmask & ~(1 << p)
    core_classes = tuple(SimpleGraph(n, tuple(rs)) for rs in core_rows)
    core = ColoredCompleteGraph(
        n, r, core_classes, complete=False, clique_hints=tuple(tuple(h) for h in hints)
    )
    full_rows = [list(cls.rows) for cls in core_classes]
    covered = [0] * n
    for cls in core_classes:
        for v in range(n):
            covered[v] |= cls.rows[v]
    counter = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (covered[u] >> v) & 1:
                continue
            c = counter % r
            counter += 1
            full_rows[c][u] |= 1 << v
            full_rows[c][v] |= 1 << u
    classes = tuple(SimpleGraph(n, tuple(rs)) for rs in full_rows)
    return ColoredCompleteGraph(
        n,
        r,
        classes,
        complete=True,
        clique_hints=core.clique_hints,
        precompletion=core,
    )


def lower_bound_p(s: int, t: int) -> float:
    """(s / (2et)) * log2(2et / s), clamped to [0, 1].

    The edge density at which a random graph is expected to avoid both
    small cliques and small independent sets on moderate vertex subsets.
    """
    if not 2 <= s <= t:
        raise ValueError(f"need 2 <= s <= t, got s={s}, t={t}")
    x = 2.0 * math.e * t / s
    p = math.log2(x) / x
    return min(1.0, max(0.0, p))


def sample_gnp(params: GnpParams) -> SimpleGraph:
    """Seeded G(N, p) sample.

    Pairs are enumerated (0,1), (0,2), ..., (N-2,N-1) in lexicographic
    order; one uniform variate is drawn per pair from PCG64(seed) and the
    pair becomes an edge when the variate is < p.  Same seed, same graph.
    """
    n = params.N
    rng = np.random.Generator(np.random.PCG64(params.seed))
    m = comb(n, 2)
    draws = rng.random(m)
    rows = [0] * n
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[i] < params.p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return SimpleGraph(n, tuple(rows))


def random_complete_pattern(n: int, r: int, seed: int) -> ColoredCompleteGraph:
    """Uniform random complete r-coloring of K_n (one PCG64 draw per pair)."""
    rng = np.random.Generator(np.random.PCG64(seed))
    colors = rng.integers(0, r, size=comb(n, 2))
    rows = [[0] * n for _ in range(r)]
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            c = int(colors[i])
            i += 1
            rows[c][u] |= 1 << v
            rows[c][v] |= 1 << u
    classes = tuple(SimpleGraph(n, tuple(rs)) for rs in rows)
    return ColoredCompleteGraph(n, r, classes, complete=True)


def _gosper_next(x: int) -> int:
    u = x & -x
    v = x + u
    return v + (((v ^ x) // u) >> 2)


def _is_bad_subset(rows, comp_rows, umask: int, s: int, t: int) -> bool:
    """Bad = the induced subgraph misses K_s or misses an independent t-set."""
    if find_clique_mask(rows, umask, s) is None:
        return True
    return find_clique_mask(comp_rows, umask, t) is None


def _count_bad_range(rows, comp_rows, n, s, t, start_mask, count):
    hits = 0
    x = start_mask
    for _ in range(count):
        if _is_bad_subset(rows, comp_rows, x, s, t):
            hits += 1
        x = _gosper_next(x)
    return hits


def _unrank_colex_mask(rank: int, k: int) -> int:
    mask = 0
    r = rank
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= r:
            c += 1
        mask |= 1 << c
        r -= comb(c, i)
    return mask


def count_bad_sets(
    g: SimpleGraph,
    n: int,
    s: int,
    t: int,
    mode: str = "exact",
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    threads: int = 1,
) -> BadSetCount:
    """Count n-subsets whose induced subgraph misses K_s or misses I_t.

    Exact mode enumerates all C(N, n) subsets in colex order (budget 10^7,
    N <= 64) and may shard the scan across processes; the reduction is a
    sum, so the count is order-independent.  Sampled mode draws ``trials``
    uniform n-subsets with the seeded generator and scales the hit fraction
    by C(N, n), an unbiased estimate of the exact count.
    """
    N = g.n
    if not 0 < n <= N:
        raise ValueError(f"subset size {n} outside [1, {N}]")
    if s < 2 or t < 2:
        raise ValueError("need s, t >= 2")
    space = comb(N, n)
    rows = g.rows
    comp_rows = g.complement.rows
    if mode == "exact":
        if N > ENUMERATION_CAP:
            raise ValueError(f"exact mode capped at {ENUMERATION_CAP} vertices")
        if space > EXACT_SUBSET_BUDGET:
            raise BudgetError(
                f"C({N},{n}) = {space} exceeds exact budget {EXACT_SUBSET_BUDGET}"
            )
        if threads > 1 and space >= 4 * threads:
            chunk = space // threads
            starts = [i * chunk for i in range(threads)]
            counts = [chunk] * (threads - 1) + [space - chunk * (threads - 1)]
            with ProcessPoolExecutor(max_workers=threads) as ex:
                hits = sum(
                    ex.map(
                        _count_bad_range,
                        [rows] * threads,
                        [comp_rows] * threads,
                        [n] * threads,
                        [s] * threads,
                        [t] * threads,
                        [_unrank_colex_mask(st, n) for st in starts],
                        counts,
                    )
                )
        else:
            hits = _count_bad_range(rows, comp_rows, n, s, t, (1 << n) - 1, space)
        return BadSetCount("exact", float(hits), space, space, hits)
    if mode == "sampled":
        if trials is None or trials < 1:
            raise ValueError("sampled mode requires a positive trial count")
        if seed is None:
            raise ValueError("sampled mode requires an explicit seed")
        rng = np.random.Generator(np.random.PCG64(seed))
        hits = 0
        for _ in range(trials):
            pick = rng.choice(N, size=n, replace=False)
            umask = mask_of(int(v) for v in pick)
            if _is_bad_subset(rows, comp_rows, umask, s, t):
                hits += 1
        estimate = space * hits / trials
        return BadSetCount("sampled", estimate, trials, space, hits, seed)
    raise ValueError(f"unknown mode {mode!r}")
