"""Independent brute-force oracles used to freeze expected test values.

Everything here recomputes results from first principles: subword Bruhat
comparison, literal path enumeration without pruning, and hypercube cell
assignment over the whole group.  None of it shares a code path with the
implementations under test beyond elementary window arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

from bruhatcubes.permutations import (
    Perm,
    all_perms,
    identity,
    length,
    right_multiply_simple,
)


@lru_cache(maxsize=None)
def reduced_word_of(w: Perm) -> tuple[int, ...]:
    """One reduced word, by repeatedly removing the smallest right descent."""
    word: list[int] = []
    cur = list(w)
    n = len(w)
    while True:
        i = next((i for i in range(1, n) if cur[i - 1] > cur[i]), None)
        if i is None:
            break
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        word.append(i)
    word.reverse()
    return tuple(word)


@lru_cache(maxsize=None)
def subword_products(v: Perm) -> frozenset[Perm]:
    """Products of all subwords of one fixed reduced word of v.

    This set is exactly the lower Bruhat cone of v, giving an independent
    comparison oracle.
    """
    word = reduced_word_of(v)
    n = len(v)
    seen = set()
    for mask in range(1 << len(word)):
        cur = identity(n)
        for k, letter in enumerate(word):
            if (mask >> k) & 1:
                cur = right_multiply_simple(cur, letter)
        seen.add(cur)
    return frozenset(seen)


def subword_leq(x: Perm, y: Perm) -> bool:
    return x in subword_products(y)


def interval_elements_brute(u: Perm, v: Perm) -> set[Perm]:
    return {x for x in subword_products(v) if subword_leq(u, x)}


def bruhat_edges_brute(members: set[Perm]) -> set[tuple[Perm, Perm, tuple[int, int]]]:
    """All labeled arrows between members, found by pairwise window scan."""
    edges = set()
    for x in members:
        for y in members:
            if length(x) >= length(y):
                continue
            diff = [i for i, (a, b) in enumerate(zip(x, y), start=1) if a != b]
            if len(diff) == 2:
                i, j = diff
                if x[i - 1] == y[j - 1] and x[j - 1] == y[i - 1]:
                    edges.add((x, y, (i, j)))
    return edges


def all_directed_paths(members: set[Perm], x: Perm, y: Perm) -> list[list[Perm]]:
    """Every directed edge path x -> ... -> y, by unpruned search."""
    adjacency: dict[Perm, list[Perm]] = {m: [] for m in members}
    for a, b, _ in bruhat_edges_brute(members):
        adjacency[a].append(b)
    paths: list[list[Perm]] = []

    def walk(c: Perm, acc: list[Perm]) -> None:
        if c == y:
            paths.append(list(acc))
            return
        for w in adjacency[c]:
            acc.append(w)
            walk(w, acc)
            acc.pop()

    walk(x, [x])
    return paths


def geodesics_brute(members: set[Perm], x: Perm, y: Perm) -> list[list[Perm]]:
    paths = all_directed_paths(members, x, y)
    if not paths:
        return []
    best = min(len(p) for p in paths)
    return [p for p in paths if len(p) == best]


def shortcuts_brute(members: set[Perm], u: Perm, v: Perm, z: Perm) -> set[Perm]:
    """The geodesic shortcut definition, evaluated literally."""
    zv = {x for x in members if subword_leq(z, x)}
    out = set()
    for p in zv:
        geos = geodesics_brute(members, u, p)
        if all(set(g) & zv == {p} for g in geos):
            out.add(p)
    return out


def enumerate_cube_assignments_brute(
    top: Perm, sources: tuple[Perm, ...]
) -> list[dict[int, Perm]]:
    """Complete injective cell assignments with every candidate drawn from
    the whole group and every Boolean-algebra arrow checked directly."""
    n = len(top)
    k = len(sources)
    size = 1 << k
    full = size - 1
    table: dict[int, Perm] = {full: top}
    for b, s in enumerate(sources):
        table[full ^ (1 << b)] = s

    def is_arrow(x: Perm, y: Perm) -> bool:
        if length(x) >= length(y):
            return False
        diff = [i for i, (a, b) in enumerate(zip(x, y)) if a != b]
        return (
            len(diff) == 2
            and x[diff[0]] == y[diff[1]]
            and x[diff[1]] == y[diff[0]]
        )

    pending = sorted(
        (m for m in range(size) if bin(m).count("1") <= k - 2),
        key=lambda m: bin(m).count("1"),
        reverse=True,
    )
    candidates = list(all_perms(n))
    found: list[dict[int, Perm]] = []

    def fill(idx: int, used: set[Perm]) -> None:
        if idx == len(pending):
            found.append(dict(table))
            return
        m = pending[idx]
        covers = [table[m | (1 << b)] for b in range(k) if not (m >> b) & 1]
        for x in candidates:
            if x in used:
                continue
            if all(is_arrow(x, c) for c in covers):
                table[m] = x
                used.add(x)
                fill(idx + 1, used)
                used.discard(x)
                del table[m]

    fill(0, set(table.values()))
    return found


def count_cube_assignments_brute(top: Perm, sources: tuple[Perm, ...]) -> int:
    return len(enumerate_cube_assignments_brute(top, sources))


def antichain_hypercubes_brute(
    members: set[Perm], u: Perm, v: Perm, z: Perm
) -> list[tuple[int, Perm]]:
    """(rank, p) pairs of the uniquely-spanned antichain hypercubes with
    bottom u whose vertex set meets [z, v] only at p, from first principles."""
    zv = {x for x in members if subword_leq(z, x)}
    edges = bruhat_edges_brute(members)
    out: list[tuple[int, Perm]] = []
    for p in sorted(zv):
        sources = sorted(x for x, y, _ in edges if y == p)
        for mask in range(1 << len(sources)):
            chosen = tuple(s for b, s in enumerate(sources) if (mask >> b) & 1)
            if any(
                subword_leq(a, b) or subword_leq(b, a)
                for i, a in enumerate(chosen)
                for b in chosen[i + 1 :]
            ):
                continue
            hits = enumerate_cube_assignments_brute(p, chosen)
            if len(hits) != 1:
                continue
            table = hits[0]
            image = set(table.values())
            if table[0] == u and image & zv == {p}:
                out.append((len(chosen), p))
    return out


def join_brute(members: set[Perm], z: Perm, x: Perm) -> Perm | None:
    """Unique least member of the joint upper cone, by pairwise scan."""
    cone = [
        y for y in members if subword_leq(z, y) and subword_leq(x, y)
    ]
    least = [m for m in cone if all(subword_leq(m, y) for y in cone)]
    return least[0] if len(least) == 1 else None


def ds_multiset_brute(
    members: set[Perm], u: Perm, v: Perm, z: Perm, zp: Perm
) -> dict[tuple[int, Perm], int]:
    """Double-shortcut multiset computed entirely from the brute oracles."""
    out: dict[tuple[int, Perm], int] = {}
    for p in shortcuts_brute(members, u, v, z):
        d_up = len(geodesics_brute(members, u, p)[0]) - 1
        j = join_brute(members, zp, p)
        assert j is not None
        sub = {x for x in members if subword_leq(p, x)}
        for b in shortcuts_brute(sub, p, v, j):
            d_pb = len(geodesics_brute(sub, p, b)[0]) - 1
            key = (d_up + d_pb, b)
            out[key] = out.get(key, 0) + 1
    return out


def rtilde_brute_by_hand_s3() -> dict[tuple[Perm, Perm], tuple[int, ...]]:
    """Hand-unfolded recurrence values for the rank-3 worked instance."""
    return {
        ((1, 2, 3), (3, 2, 1)): (0, 1, 0, 1),
        ((1, 2, 3), (2, 3, 1)): (0, 0, 1),
        ((1, 2, 3), (3, 1, 2)): (0, 0, 1),
        ((1, 2, 3), (1, 3, 2)): (0, 1),
        ((1, 2, 3), (2, 1, 3)): (0, 1),
        ((2, 3, 1), (3, 2, 1)): (0, 1),
        ((3, 1, 2), (3, 2, 1)): (0, 1),
    }
