"""Bitset graphs and the search primitives everything else is built on.

Vertices are 0-indexed.  Adjacency is stored as one Python-int bit row per
vertex, so "is there a clique of size m inside this vertex subset?" needs no
induced-subgraph copies: the search simply intersects candidate masks.

All types are immutable after construction and every operation is a pure
function, so concurrent use from multiple threads or worker processes is
safe.  Searches are deterministic by default and return the
lexicographically smallest witness, which keeps certificates reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Optional

# Hard caps.  Exhaustive subset/graph enumeration is only offered up to 64
# vertices; general search works up to 4096.
ENUMERATION_CAP = 64
VERTEX_CAP = 4096


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    """A sorted, duplicate-free set of vertex indices."""

    members: tuple[int, ...]

    def __post_init__(self):
        ms = self.members
        if any(ms[i] >= ms[i + 1] for i in range(len(ms) - 1)):
            raise ValueError("members must be strictly increasing")
        if ms and ms[0] < 0:
            raise ValueError("vertex indices must be non-negative")

    @classmethod
    def of(cls, vertices) -> "VertexSet":
        return cls(tuple(sorted(set(vertices))))

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(tuple(iter_bits(mask)))

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v):
        return v in self.members


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on ``n`` vertices with bit-row adjacency.

    ``rows[v]`` is the neighbour mask of vertex v.  The relation is
    symmetric and irreflexive; both are checked at construction.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= VERTEX_CAP:
            raise ValueError(f"vertex count {self.n} outside [0, {VERTEX_CAP}]")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        # symmetry: check each edge once from the lower endpoint
        for v, row in enumerate(self.rows):
            m = row >> (v + 1)
            base = v + 1
            while m:
                low = m & -m
                u = base + low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                m ^= low

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    # -- basic queries ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in iter_bits(self.rows[v] >> (v + 1)):
                yield (v, v + 1 + u)

    @cached_property
    def complement(self) -> "SimpleGraph":
        full = self.full_mask
        return SimpleGraph(
            self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.rows))
        )


class HomogeneousSet(NamedTuple):
    """A clique or independent set returned by ``ramsey_extract``."""

    kind: str  # "clique" | "independent"
    vertices: VertexSet


@dataclass(frozen=True)
class HomogeneousCover:
    """Disjoint homogeneous sets peeled off by ``extract_homogeneous_cover``."""

    cliques: tuple[VertexSet, ...]
    independents: tuple[VertexSet, ...]
    stopped_early: bool


# -- clique search core ---------------------------------------------------


def _color_bound_reaches(rows: tuple[int, ...], cand: int, need: int) -> bool:
    """Greedy-coloring bound: can ``cand`` possibly host a ``need``-clique?

    Vertices sharing a greedy color class are pairwise non-adjacent, so a
    clique takes at most one vertex per class.  Returns True as soon as
    ``need`` classes exist (no prune possible).
    """
    classes: list[int] = []
    m = cand
    while m:
        low = m & -m
        m ^= low
        row = rows[low.bit_length() - 1]
        for i, cls in enumerate(classes):
            if not (cls & row):
                classes[i] = cls | low
                break
        else:
            classes.append(low)
            if len(classes) >= need:
                return True
    return len(classes) >= need


def find_clique_mask(rows: tuple[int, ...], allowed: int, m: int) -> Optional[int]:
    """Lexicographically smallest m-clique inside ``allowed``, as a bit mask.

    ``rows`` is any bit-row adjacency; vertices outside ``allowed`` are
    ignored, which makes this the induced-subgraph clique test.  Returns
    None when no m-clique exists.
    """
    if m == 0:
        return 0
    if m == 1:
        return (allowed & -allowed) or None

    def dfs(chosen: int, cand: int, need: int) -> Optional[int]:
        if cand.bit_count() < need:
            return None
        if need >= 3 and not _color_bound_reaches(rows, cand, need):
            return None
        while cand:
            low = cand & -cand
            cand ^= low
            if need == 1:
                return chosen | low
            nxt = cand & rows[low.bit_length() - 1]
            res = dfs(chosen | low, nxt, need - 1)
            if res is not None:
                return res
            if cand.bit_count() < need:
                return None
        return None

    return dfs(0, allowed, m)


def mask_has_clique(rows: tuple[int, ...], allowed: int, m: int) -> bool:
    return find_clique_mask(rows, allowed, m) is not None


def _degree_order(g: SimpleGraph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.rows[v].bit_count(), v))


def find_clique(g: SimpleGraph, m: int, deterministic: bool = True) -> Optional[VertexSet]:
    """Find an m-clique of ``g``, or None.

    In deterministic mode (the default) the witness is the lexicographically
    smallest m-clique.  With ``deterministic=False`` the search reorders
    vertices by degree for speed, and any valid witness may come back.
    """
    if not 1 <= m <= g.n:
        raise ValueError(f"clique size {m} outside [1, {g.n}]")
    if deterministic:
        mask = find_clique_mask(g.rows, g.full_mask, m)
        return None if mask is None else VertexSet.from_mask(mask)
    order = _degree_order(g)
    pos = {v: i for i, v in enumerate(order)}
    rows = tuple(
        mask_of(pos[u] for u in iter_bits(g.rows[v])) for v in order
    )
    mask = find_clique_mask(rows, g.full_mask, m)
    if mask is None:
        return None
    return VertexSet.of(order[i] for i in iter_bits(mask))


def find_independent_set(
    g: SimpleGraph, m: int, deterministic: bool = True
) -> Optional[VertexSet]:
    """Find an independent set of size m (a clique of the complement)."""
    return find_clique(g.complement, m, deterministic)


def turan_bound(n: int, edge_count: int) -> int:
    """ceil(n^2 / (n + 2e)): the independence number guaranteed by averaging."""
    d = n + 2 * edge_count
    return -(-(n * n) // d)


def turan_independent_set(g: SimpleGraph) -> VertexSet:
    """Greedy minimum-degree independent set.

    Repeatedly takes a remaining vertex of minimum residual degree (smallest
    index on ties) and discards its neighbourhood.  The result has size at
    least sum_v 1/(d(v)+1), hence at least ``turan_bound(n, e)``.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    remaining = g.full_mask
    chosen = []
    while remaining:
        best_v = -1
        best_d = g.n + 1
        m = remaining
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            d = (g.rows[v] & remaining).bit_count()
            if d < best_d:
                best_d, best_v = d, v
                if d == 0:
                    break
        chosen.append(best_v)
        remaining &= ~(g.rows[best_v] | (1 << best_v))
    return VertexSet.of(chosen)


def ramsey_extract(g: SimpleGraph, a: int, b: int) -> Optional[HomogeneousSet]:
    """Return a clique of size ``a`` or an independent set of size ``b``.

    The clique is preferred when both exist.  Guaranteed to succeed whenever
    n >= C(a+b, a); below that threshold a graph may have neither, in which
    case None is returned.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if a < 1 or b < 1:
        raise ValueError("set sizes must be positive")
    if a <= g.n:
        clique = find_clique_mask(g.rows, g.full_mask, a)
        if clique is not None:
            return HomogeneousSet("clique", VertexSet.from_mask(clique))
    if b <= g.n:
        ind = find_clique_mask(g.complement.rows, g.full_mask, b)
        if ind is not None:
            return HomogeneousSet("independent", VertexSet.from_mask(ind))
    return None


def extract_homogeneous_cover(
    g: SimpleGraph, a: int, b: int, rounds: int
) -> HomogeneousCover:
    """Iteratively peel off cliques of size ``a`` or independent sets of size ``b``.

    Each round runs ``ramsey_extract`` on the vertices not yet removed and
    removes the returned set.  Stops early (reported, not an error) when
    neither structure survives in the remainder.
    """
    if rounds < 1:
        raise ValueError("rounds must be positive")
    remaining = g.full_mask
    comp_rows = g.complement.rows
    cliques: list[VertexSet] = []
    independents: list[VertexSet] = []
    stopped = False
    for _ in range(rounds):
        found = None
        if remaining.bit_count() >= a:
            found = find_clique_mask(g.rows, remaining, a)
        if found is not None:
            cliques.append(VertexSet.from_mask(found))
            remaining &= ~found
            continue
        if remaining.bit_count() >= b:
            found = find_clique_mask(comp_rows, remaining, b)
        if found is not None:
            independents.append(VertexSet.from_mask(found))
            remaining &= ~found
            continue
        stopped = True
        break
    return HomogeneousCover(tuple(cliques), tuple(independents), stopped)
