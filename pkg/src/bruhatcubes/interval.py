"""Bruhat intervals as explicit posets carrying their labeled graph structure.

An :class:`Interval` holds every x with u <= x <= v, the order relation, the
directed edges x -> y (y = x*t for a reflection t, length increasing, labeled
by t), and all pairwise directed-graph distances.  Everything is computed
inside the interval; this equals the ambient-group distance because any
directed path between interval members stays inside the interval (edges
increase Bruhat order).

Intervals are immutable once built and hash/compare by (u, v), so they can be
shared freely and used as cache keys.  Use the module-level :func:`interval`
factory to get memoized instances.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property, lru_cache
from typing import NamedTuple

from .errors import OrderError
from .permutations import (
    Perm,
    Reflection,
    all_perms,
    bruhat_leq,
    format_perm,
    length,
    longest_element,
    reflections,
    right_multiply_reflection,
)

MAX_RANK = 7


class Path(NamedTuple):
    """A directed edge path: r+1 vertices joined by r labeled steps."""

    vertices: tuple[Perm, ...]
    labels: tuple[Reflection, ...]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def support(self) -> frozenset[Perm]:
        return frozenset(self.vertices)


class Interval:
    def __init__(self, u: Perm, v: Perm):
        n = len(u)
        if n != len(v):
            raise OrderError(f"rank mismatch: {u} vs {v}")
        if n > MAX_RANK:
            raise OrderError(f"rank {n} beyond the supported bound {MAX_RANK}")
        if not bruhat_leq(u, v):
            raise OrderError(f"{format_perm(u)} is not below {format_perm(v)} in Bruhat order")
        self.n = n
        self.u = u
        self.v = v
        lu, lv = length(u), length(v)
        members = [
            x
            for x in all_perms(n)
            if lu <= length(x) <= lv and bruhat_leq(u, x) and bruhat_leq(x, v)
        ]
        members.sort(key=lambda x: (length(x), x))
        self.elements: tuple[Perm, ...] = tuple(members)
        self.element_set: frozenset[Perm] = frozenset(members)
        self.rank_length: int = lv - lu

    # ---- identity -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Interval) and (self.u, self.v) == (other.u, other.v)

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __repr__(self) -> str:
        return f"Interval[{format_perm(self.u)}, {format_perm(self.v)}]"

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Perm) -> bool:
        return x in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def require(self, *xs: Perm) -> None:
        for x in xs:
            if x not in self.element_set:
                raise OrderError(f"{format_perm(x)} is not in {self!r}")

    # ---- order --------------------------------------------------------

    @cached_property
    def up(self) -> dict[Perm, frozenset[Perm]]:
        """x -> {y in interval : x <= y}."""
        lens = {x: length(x) for x in self.elements}
        ups: dict[Perm, set[Perm]] = {x: {x} for x in self.elements}
        for x in self.elements:
            for y in self.elements:
                if lens[x] < lens[y] and bruhat_leq(x, y):
                    ups[x].add(y)
        return {x: frozenset(s) for x, s in ups.items()}

    @cached_property
    def down(self) -> dict[Perm, frozenset[Perm]]:
        """x -> {y in interval : y <= x}."""
        downs: dict[Perm, set[Perm]] = {x: set() for x in self.elements}
        for x, above in self.up.items():
            for y in above:
                downs[y].add(x)
        return {x: frozenset(s) for x, s in downs.items()}

    def leq(self, x: Perm, y: Perm) -> bool:
        self.require(x, y)
        return y in self.up[x]

    def subinterval(self, x: Perm, y: Perm) -> "Interval":
        self.require(x, y)
        return interval(x, y)

    # ---- graph --------------------------------------------------------

    @cached_property
    def _graph(self) -> tuple[dict, dict, dict]:
        out: dict[Perm, set[Perm]] = {x: set() for x in self.elements}
        inn: dict[Perm, set[Perm]] = {x: set() for x in self.elements}
        labels: dict[tuple[Perm, Perm], Reflection] = {}
        lens = {x: length(x) for x in self.elements}
        ts = reflections(self.n)
        for x in self.elements:
            lx = lens[x]
            for t in ts:
                y = right_multiply_reflection(x, t)
                if y in self.element_set and lx < lens[y]:
                    out[x].add(y)
                    inn[y].add(x)
                    labels[(x, y)] = t
        return (
            {x: frozenset(s) for x, s in out.items()},
            {x: frozenset(s) for x, s in inn.items()},
            labels,
        )

    @property
    def out_nbrs(self) -> dict[Perm, frozenset[Perm]]:
        return self._graph[0]

    @property
    def in_nbrs(self) -> dict[Perm, frozenset[Perm]]:
        return self._graph[1]

    @property
    def labels(self) -> dict[tuple[Perm, Perm], Reflection]:
        return self._graph[2]

    @property
    def edges(self) -> list[tuple[Perm, Perm, Reflection]]:
        return [(x, y, t) for (x, y), t in sorted(self.labels.items())]

    def label(self, x: Perm, y: Perm) -> Reflection:
        return self.labels[(x, y)]

    @cached_property
    def dist(self) -> dict[Perm, dict[Perm, int]]:
        """BFS distances along directed edges; absent key means unreachable."""
        out = self.out_nbrs
        table: dict[Perm, dict[Perm, int]] = {}
        for x in self.elements:
            seen = {x: 0}
            queue = deque([x])
            while queue:
                c = queue.popleft()
                d = seen[c] + 1
                for y in out[c]:
                    if y not in seen:
                        seen[y] = d
                        queue.append(y)
            table[x] = seen
        return table

    def distance(self, x: Perm, y: Perm) -> int | None:
        """Directed-path distance, or None when y is unreachable from x."""
        self.require(x, y)
        return self.dist[x].get(y)

    def geodesics(self, x: Perm, y: Perm) -> list[Path]:
        """All minimum-length directed paths from x to y (complete)."""
        self.require(x, y)
        total = self.dist[x].get(y)
        if total is None:
            return []
        out, labels = self.out_nbrs, self.labels
        dist_to_y = {c: table.get(y) for c, table in self.dist.items()}
        paths: list[Path] = []

        def walk(c: Perm, verts: list[Perm], labs: list[Reflection]) -> None:
            if c == y:
                paths.append(Path(tuple(verts), tuple(labs)))
                return
            remaining = total - len(labs)
            for w in out[c]:
                if dist_to_y.get(w) == remaining - 1:
                    verts.append(w)
                    labs.append(labels[(c, w)])
                    walk(w, verts, labs)
                    verts.pop()
                    labs.pop()

        walk(x, [x], [])
        return paths

    def covers_of(self, y: Perm) -> list[Perm]:
        """Lower covers of y inside the interval (length gap one)."""
        ly = length(y)
        return [c for c in self.in_nbrs[y] if length(c) == ly - 1]

    def coatom_reflections(self, x: Perm, y: Perm) -> frozenset[Reflection]:
        """Labels of the coatom edges c -> y of the subinterval [x, y]."""
        self.require(x, y)
        if not bruhat_leq(x, y):
            raise OrderError(f"{format_perm(x)} is not below {format_perm(y)}")
        up_x = self.up[x]
        return frozenset(self.labels[(c, y)] for c in self.covers_of(y) if c in up_x)

    # ---- diamond completeness ------------------------------------------

    def is_diamond_complete(self, z: Perm) -> bool:
        """True iff every diamond with both midpoints and top in [z, v] has
        its bottom in [z, v] as well."""
        self.require(z)
        zv = self.up[z]
        out = self.out_nbrs
        for x in self.elements:
            if x in zv:
                continue
            mids = [a for a in out[x] if a in zv]
            if len(mids) < 2:
                continue
            seen: frozenset[Perm] = frozenset()
            for a in mids:
                tops = out[a]
                if seen & tops:
                    return False
                seen |= tops
        return True

    # ---- duality --------------------------------------------------------

    def dual(self) -> "Interval":
        """The interval [v*w0, u*w0]; x -> x*w0 reverses Bruhat order."""
        return interval(dual_element(self.v), dual_element(self.u))


def dual_element(x: Perm) -> Perm:
    """``x * w0``: the reversed window."""
    return tuple(reversed(x))


@lru_cache(maxsize=None)
def interval(u: Perm, v: Perm) -> Interval:
    """Memoized interval factory; repeated calls share one instance."""
    return Interval(u, v)


def build_interval(u: Perm, v: Perm) -> Interval:
    """Construct (or fetch the shared copy of) the interval [u, v]."""
    return interval(u, v)


def comparable_pairs(n: int) -> list[tuple[Perm, Perm]]:
    """All Bruhat-comparable pairs (u, v) in rank n, deterministic order."""
    elems = sorted(all_perms(n), key=lambda x: (length(x), x))
    return [(u, v) for u in elems for v in elems if bruhat_leq(u, v)]


def full_interval(n: int) -> Interval:
    from .permutations import identity

    return interval(identity(n), longest_element(n))


def interval_size(u: Perm, v: Perm) -> int:
    """|[u, v]| without building the interval object."""
    if not bruhat_leq(u, v):
        return 0
    lu, lv = length(u), length(v)
    return sum(
        1
        for x in all_perms(len(u))
        if lu <= length(x) <= lv and bruhat_leq(u, x) and bruhat_leq(x, v)
    )
