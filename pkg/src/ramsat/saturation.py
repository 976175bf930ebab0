"""Semisaturated and saturated pattern checkers, bounds, and exhaustive search.

A complete r-edge-colored K_n is (r, K_k)-semisaturated when every way of
extending it by new vertices with colored edges creates a new monochromatic
K_k.  One added vertex suffices to decide this: a multi-vertex extension
contains the state right after its first added vertex, and the
monochromatic K_k created there (through that vertex) persists, since later
steps never remove vertices, edges, or colors.  An extension by one vertex
is just an assignment chi of a color to each edge toward the old vertices,
and it creates a monochromatic K_k exactly when some color class i contains
a K_{k-1} inside chi^{-1}(i).  So the pattern is semisaturated iff no
"escaping" assignment exists — the finite check implemented here twice:

* ``is_semisaturated`` decides it by a backtracking search over assignments
  that prunes a branch as soon as some class receives a K_{k-1} (any
  completion of such a branch is non-escaping);

* ``is_semisaturated_direct`` literally enumerates all r^n assignments and
  exists solely as an independent oracle for the first.

``check_observation`` tests the stronger sufficient condition that every
subset of ceil(n/r) vertices spans a K_{k-1} in each of the first r
classes; a new vertex has at least ceil(n/r) same-colored edges by
pigeonhole, so this implies semisaturation.  (ceil, rather than exact n/r,
keeps the implication sound when r does not divide n.)

(r, K_k)-saturated additionally requires every class to be K_k-free right
now.  ``ssat_search`` hunts for the smallest semisaturated patterns by
backtracking over edge colorings.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .constructions import ColoredCompleteGraph
from .errors import BudgetError
from .graphs import ENUMERATION_CAP, SimpleGraph, find_clique_mask, iter_bits
from .reduction import subset_unrank

EXACT_COLORING_CAP = 10**9
OBSERVATION_SUBSET_CAP = 10**8


@dataclass(frozen=True)
class PatternParams:
    """Color count and clique size, with the caps the exhaustive checks assume."""

    r: int
    k: int

    def __post_init__(self):
        if not 2 <= self.r <= 8:
            raise ValueError(f"color count {self.r} outside [2, 8]")
        if not 3 <= self.k <= 8:
            raise ValueError(f"clique size {self.k} outside [3, 8]")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure.

    ``checked`` counts the units the procedure examined (documented per
    function).  ``exhaustive`` is False when only a sample of the space was
    covered; a failing witness is self-certifying either way, but a sampled
    "holds" is evidence, not a verified claim.
    """

    holds: bool
    witness: Optional[dict]
    checked: int
    exhaustive: bool = True

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("failing verdicts must carry a witness")


@dataclass(frozen=True)
class SsatSearchResult:
    """Three-valued search outcome: found / exhausted / budget."""

    status: str  # "found" | "exhausted" | "budget"
    pattern: Optional[ColoredCompleteGraph]
    nodes: int


def _require_complete(c: ColoredCompleteGraph):
    if not c.complete:
        raise ValueError("this check needs a complete pattern")
    if c.r < 2:
        raise ValueError("need at least two colors")


def _class_missing_clique(rows, mask: int, m: int) -> bool:
    return find_clique_mask(rows, mask, m) is None


def coloring_escapes(c: ColoredCompleteGraph, k: int, colors) -> bool:
    """True when the vertex coloring creates no monochromatic K_k.

    ``colors`` assigns each old vertex the color (1-based) of its edge to a
    hypothetical new vertex; the extension creates a new monochromatic K_k
    iff some class i has a K_{k-1} inside the vertices colored i.
    """
    colors = list(colors)
    if len(colors) != c.n:
        raise ValueError("need one color per vertex")
    masks = [0] * c.r
    for v, col in enumerate(colors):
        if not 1 <= col <= c.r:
            raise ValueError(f"color {col} outside [1, {c.r}]")
        masks[col - 1] |= 1 << v
    return all(
        _class_missing_clique(c.classes[i].rows, masks[i], k - 1) for i in range(c.r)
    )


def is_semisaturated(
    c: ColoredCompleteGraph,
    k: int,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> Verdict:
    """Decide whether the pattern is (r, K_k)-semisaturated.

    Exact mode (the default) backtracks over single-vertex extensions in
    lexicographic order — vertices by index, colors ascending — pruning any
    branch in which a class has already gained a K_{k-1}; a branch that
    reaches depth n is an escaping assignment and the lexicographically
    smallest one is returned as the witness.  ``checked`` counts search
    nodes.  Requires r^n <= 10^9; beyond that pass ``samples`` to test
    seeded uniform assignments instead (holds becomes evidence-only).
    """
    _require_complete(c)
    if k < 3:
        raise ValueError("need k >= 3")
    n, r = c.n, c.r
    if samples is not None:
        if seed is None:
            raise ValueError("sampled mode requires an explicit seed")
        rng = np.random.Generator(np.random.PCG64(seed))
        for trial in range(samples):
            colors = [int(x) + 1 for x in rng.integers(0, r, size=n)]
            if coloring_escapes(c, k, colors):
                return Verdict(
                    holds=False,
                    witness={"kind": "escaping-coloring", "colors": colors},
                    checked=trial + 1,
                    exhaustive=False,
                )
        return Verdict(holds=True, witness=None, checked=samples, exhaustive=False)
    if r**n > EXACT_COLORING_CAP:
        raise BudgetError(
            f"{r}^{n} assignments exceed cap {EXACT_COLORING_CAP}; use samples="
        )
    rows_per_class = [cls.rows for cls in c.classes]
    target = k - 2  # a K_{k-1} through v = a K_{k-2} in its class neighbourhood
    masks = [0] * r
    assignment = [0] * n
    nodes = 0

    def escape_from(v: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        bit = 1 << v
        for i in range(r):
            nodes += 1
            rows = rows_per_class[i]
            neigh = rows[v] & masks[i]
            created = (neigh != 0) if target == 1 else (
                find_clique_mask(rows, neigh, target) is not None
            )
            if not created:
                masks[i] |= bit
                assignment[v] = i + 1
                if escape_from(v + 1):
                    return True
                masks[i] ^= bit
        return False

    if escape_from(0):
        return Verdict(
            holds=False,
            witness={"kind": "escaping-coloring", "colors": list(assignment)},
            checked=nodes,
        )
    return Verdict(holds=True, witness=None, checked=nodes)


def is_semisaturated_direct(c: ColoredCompleteGraph, k: int) -> Verdict:
    """Literal single-vertex-extension enumeration; the oracle for the above.

    Walks all r^n edge-color assignments to the new vertex in lexicographic
    order and checks that each one creates a monochromatic K_k through it.
    ``checked`` counts assignments examined.
    """
    _require_complete(c)
    if k < 3:
        raise ValueError("need k >= 3")
    n, r = c.n, c.r
    if r**n > EXACT_COLORING_CAP:
        raise BudgetError(f"{r}^{n} assignments exceed cap {EXACT_COLORING_CAP}")
    rows_per_class = [cls.rows for cls in c.classes]
    assignment = [0] * n
    masks = [0] * r
    checked = 0
    while True:
        checked += 1
        for i in range(r):
            masks[i] = 0
        for v, col in enumerate(assignment):
            masks[col] |= 1 << v
        if all(
            _class_missing_clique(rows_per_class[i], masks[i], k - 1)
            for i in range(r)
        ):
            return Verdict(
                holds=False,
                witness={
                    "kind": "escaping-coloring",
                    "colors": [col + 1 for col in assignment],
                },
                checked=checked,
            )
        # next assignment in lexicographic order (last position fastest)
        pos = n - 1
        while pos >= 0 and assignment[pos] == r - 1:
            assignment[pos] = 0
            pos -= 1
        if pos < 0:
            return Verdict(holds=True, witness=None, checked=checked)
        assignment[pos] += 1


def _scan_subsets_for_clique(rows, hints, m, target, start_mask, count):
    """Scan ``count`` colex-consecutive m-subsets; return (fail_mask, scanned).

    A subset passes when some hint mask meets it in >= target vertices
    (hints are known cliques) or, failing that, when the generic search
    finds a K_target inside it.  Stops at the first subset with neither.
    """
    x = start_mask
    scanned = 0
    for _ in range(count):
        scanned += 1
        ok = False
        for h in hints:
            if (h & x).bit_count() >= target:
                ok = True
                break
        if not ok and find_clique_mask(rows, x, target) is not None:
            ok = True
        if not ok:
            return x, scanned
        u = x & -x
        v = x + u
        x = v + (((v ^ x) // u) >> 2)
    return None, scanned


def check_observation(
    c: ColoredCompleteGraph,
    k: int,
    r: int,
    threads: int = 1,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> Verdict:
    """Sufficient condition: every ceil(n/r)-subset spans a K_{k-1} in each class.

    Checks the first r classes (the pattern may carry more, or be partial —
    classes only need to be edge-disjoint).  Scans classes in order and
    subsets in colex order; on failure the witness is the first failing
    (color, subset) pair, deterministic for a fixed thread count.
    ``checked`` counts subset inspections.  Subset enumeration may be
    sharded over processes with ``threads``; sampled mode draws seeded
    random subsets instead when C(n, ceil(n/r)) is beyond the 10^8 budget.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    if k < 3:
        raise ValueError("need k >= 3")
    if len(c.classes) < r:
        raise ValueError(f"pattern has {len(c.classes)} classes, need >= {r}")
    n = c.n
    if n > ENUMERATION_CAP:
        raise ValueError(f"subset enumeration capped at {ENUMERATION_CAP} vertices")
    m = -(-n // r)  # ceil(n/r)
    target = k - 1
    space = comb(n, m)
    checked = 0
    if samples is not None:
        if seed is None:
            raise ValueError("sampled mode requires an explicit seed")
        rng = np.random.Generator(np.random.PCG64(seed))
        for i in range(r):
            rows = c.classes[i].rows
            hints = c.clique_hints[i] if c.clique_hints else ()
            for _ in range(samples):
                pick = rng.choice(n, size=m, replace=False)
                x = 0
                for v in pick:
                    x |= 1 << int(v)
                checked += 1
                fail, _ = _scan_subsets_for_clique(rows, hints, m, target, x, 1)
                if fail is not None:
                    return Verdict(
                        holds=False,
                        witness=_observation_witness(i, fail),
                        checked=checked,
                        exhaustive=False,
                    )
        return Verdict(holds=True, witness=None, checked=checked, exhaustive=False)
    if space > OBSERVATION_SUBSET_CAP:
        raise BudgetError(
            f"C({n},{m}) = {space} exceeds cap {OBSERVATION_SUBSET_CAP}; use samples="
        )
    for i in range(r):
        rows = c.classes[i].rows
        hints = c.clique_hints[i] if c.clique_hints else ()
        if threads > 1 and space >= 4 * threads:
            chunk = space // threads
            starts = [j * chunk for j in range(threads)]
            counts = [chunk] * (threads - 1) + [space - chunk * (threads - 1)]
            start_masks = []
            for st in starts:
                mask = 0
                for p in subset_unrank(st, m):
                    mask |= 1 << p
                start_masks.append(mask)
            with ProcessPoolExecutor(max_workers=threads) as ex:
                results = list(
                    ex.map(
                        _scan_subsets_for_clique,
                        [rows] * threads,
                        [hints] * threads,
                        [m] * threads,
                        [target] * threads,
                        start_masks,
                        counts,
                    )
                )
            checked += sum(scanned for _, scanned in results)
            fail = next((f for f, _ in results if f is not None), None)
        else:
            fail, scanned = _scan_subsets_for_clique(
                rows, hints, m, target, (1 << m) - 1, space
            )
            checked += scanned
        if fail is not None:
            return Verdict(
                holds=False, witness=_observation_witness(i, fail), checked=checked
            )
    return Verdict(holds=True, witness=None, checked=checked)


def _observation_witness(class_index: int, mask: int) -> dict:
    return {
        "kind": "clique-free-subset",
        "color": class_index + 1,
        "vertices": list(iter_bits(mask)),
    }


def observation_fails_at(
    c: ColoredCompleteGraph, k: int, color: int, vertices
) -> bool:
    """Confirm an observation witness: class ``color`` has no K_{k-1} on the set."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return find_clique_mask(c.classes[color - 1].rows, mask, k - 1) is None


def is_kkfree_pattern(c: ColoredCompleteGraph, k: int) -> bool:
    """True when no color class contains a K_k."""
    full = (1 << c.n) - 1
    return all(find_clique_mask(cls.rows, full, k) is None for cls in c.classes)


def is_saturated(c: ColoredCompleteGraph, k: int) -> Verdict:
    """K_k-free in every class and semisaturated."""
    _require_complete(c)
    full = (1 << c.n) - 1
    for i, cls in enumerate(c.classes):
        clique = find_clique_mask(cls.rows, full, k)
        if clique is not None:
            return Verdict(
                holds=False,
                witness={
                    "kind": "monochromatic-clique",
                    "color": i + 1,
                    "vertices": list(iter_bits(clique)),
                },
                checked=i + 1,
            )
    semi = is_semisaturated(c, k)
    return Verdict(
        holds=semi.holds,
        witness=semi.witness,
        checked=semi.checked + c.r,
        exhaustive=semi.exhaustive,
    )


def ssat_lower_bound_formula(r: int, k: int) -> int:
    """(r-1)k^2 - (3r-4)k + (2r-3); tight for r = 2, where it equals (k-1)^2."""
    if r < 2 or k < 2:
        raise ValueError("need r >= 2 and k >= 2")
    return (r - 1) * k * k - (3 * r - 4) * k + (2 * r - 3)


def ssat_recursion_floor(r: int, k: int) -> int:
    """max(ceil(sum_{i=2..r} i / 2), ceil(r^2 / 4)).

    The first term unrolls the recursion "removing a large independent set
    of the sparsest class costs at least r/2 vertices per color"; the
    second is its closed-form floor.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    if k < 3:
        raise ValueError("need k >= 3")
    total = sum(range(2, r + 1))
    return max(-(-total // 2), -(-(r * r) // 4))


def ssat_upper_bound_reference(r: int, k: int) -> int:
    """(k-1)^r, the classical upper bound on ssat_r(K_k).

    Together with ``ssat_lower_bound_formula`` this brackets the open small
    cases, e.g. 6 <= ssat_3(K_3) <= 8.
    """
    if r < 2 or k < 2:
        raise ValueError("need r >= 2 and k >= 2")
    return (k - 1) ** r


class _BudgetHit(Exception):
    pass


def ssat_search(
    r: int, k: int, n: int, node_budget: Optional[int] = None
) -> SsatSearchResult:
    """Search for an (r, K_k)-semisaturated complete pattern on n vertices.

    Edges are colored one at a time in colex pair order.  Color symmetry is
    broken by restricted growth: the first edge takes color 1 and a new
    color may appear only after all smaller ones (every pattern is a color
    permutation of an enumerated one, so the search is exhaustive up to
    that symmetry).  A partial pattern is pruned when some vertex coloring
    escapes even against the optimistic completion in which every
    still-uncolored pair counts for every class — such a coloring escapes
    any true completion.  At full depth the optimistic check is the exact
    one, so reaching it yields a semisaturated witness.

    Returns found / exhausted / budget; ``nodes`` counts search nodes.
    """
    PatternParams(r, k)
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 32:
        raise ValueError("search capped at 32 vertices")
    num_pairs = comb(n, 2)
    pairs = [subset_unrank(rank, 2) for rank in range(num_pairs)]
    class_rows = [[0] * n for _ in range(r)]
    remaining = [((1 << n) - 1) & ~(1 << v) for v in range(n)]
    target = k - 2
    nodes = 0

    def doomed() -> bool:
        opt = [
            tuple(class_rows[i][x] | remaining[x] for x in range(n)) for i in range(r)
        ]
        masks = [0] * r

        def esc(v: int) -> bool:
            if v == n:
                return True
            bit = 1 << v
            for i in range(r):
                neigh = opt[i][v] & masks[i]
                created = (neigh != 0) if target == 1 else (
                    find_clique_mask(opt[i], neigh, target) is not None
                )
                if not created:
                    masks[i] |= bit
                    if esc(v + 1):
                        return True
                    masks[i] ^= bit
            return False

        return esc(0)

    def snapshot() -> ColoredCompleteGraph:
        classes = tuple(SimpleGraph(n, tuple(rows)) for rows in class_rows)
        return ColoredCompleteGraph(n, r, classes, complete=True)

    def dfs(d: int, used: int) -> Optional[ColoredCompleteGraph]:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetHit
        if doomed():
            return None
        if d == num_pairs:
            return snapshot()
        u, v = pairs[d]
        ubit, vbit = 1 << u, 1 << v
        remaining[u] &= ~vbit
        remaining[v] &= ~ubit
        for color in range(min(used + 1, r)):
            class_rows[color][u] |= vbit
            class_rows[color][v] |= ubit
            res = dfs(d + 1, max(used, color + 1))
            if res is not None:
                return res
            class_rows[color][u] &= ~vbit
            class_rows[color][v] &= ~ubit
        remaining[u] |= vbit
        remaining[v] |= ubit
        return None

    try:
        pattern = dfs(0, 0)
    except _BudgetHit:
        return SsatSearchResult("budget", None, nodes)
    if pattern is None:
        return SsatSearchResult("exhausted", None, nodes)
    return SsatSearchResult("found", pattern, nodes)
