"""Double-shortcut multisets, the symmetry relation on decompositions, and
the verification drivers for the pair-level statements.

DS(z, z') collects one entry (d(u,p) + d(p,b), b) for every shortcut p of
[u, v] with respect to z and every shortcut b of [p, v] with respect to the
join of z' and p.  Multisets are plain Counters keyed by (degree, element).

Verification drivers return plain report-record dicts.  Statuses: PASS,
FAIL (a proved statement broke, i.e. an implementation bug), FINDING (a
conjectured statement broke, which is a research result, not an error), and
SKIP (hypotheses not met).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .errors import OrderError
from .interval import Interval, interval
from .permutations import Perm, direct_sum, format_perm, length, split_direct_sum
from .polynomials import QPoly, ZERO, padd, poly_str, pshift
from .hcd import (
    enumerate_hcds,
    is_amazing,
    is_amazing_r_element,
    is_r_element,
    join,
    shortcuts,
)
from .rpoly import rtilde

DegreeMultiset = Counter  # keys (degree, Perm)


def multiset_entries(ms: DegreeMultiset) -> list[tuple[int, str, int]]:
    """Canonical sorted [(degree, window, multiplicity), ...] form."""
    return [(d, format_perm(b), k) for (d, b), k in sorted(ms.items())]


def _require_join(I: Interval, z: Perm, x: Perm) -> Perm:
    j = join(I, z, x)
    if j is None:
        raise OrderError(
            f"[{format_perm(z)},v] and [{format_perm(x)},v] have no minimum in {I!r}; "
            "inputs must be amazing decompositions"
        )
    return j


@lru_cache(maxsize=1 << 16)
def _ds_entries(I: Interval, z: Perm, zp: Perm) -> tuple:
    I.require(z, zp)
    u, v = I.u, I.v
    du = I.dist[u]
    out: DegreeMultiset = Counter()
    for p in shortcuts(I, z):
        j = _require_join(I, zp, p)
        sub = interval(p, v)
        dp = sub.dist[p]
        for b in shortcuts(sub, j):
            out[(du[p] + dp[b], b)] += 1
    return tuple(sorted(out.items()))


def ds_multiset(I: Interval, z: Perm, zp: Perm) -> DegreeMultiset:
    """The double-shortcut multiset for the ordered pair (z, z')."""
    return Counter(dict(_ds_entries(I, z, zp)))


def ds_symmetric(I: Interval, z: Perm, zp: Perm) -> bool:
    return ds_multiset(I, z, zp) == ds_multiset(I, zp, z)


# ---------------------------------------------------------------------------
# the symmetry relation


def partition_by_relation(items, related, key=None) -> list[tuple]:
    """Partition ``items`` by the transitive closure of ``related``; the
    result is independent of input order (classes and members sorted)."""
    items = list(items)
    keyfn = key if key is not None else (lambda x: x)
    parent = {x: x for x in items}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            if related(a, b):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    classes: dict = {}
    for x in items:
        classes.setdefault(find(x), []).append(x)
    return sorted(
        (tuple(sorted(c, key=keyfn)) for c in classes.values()),
        key=lambda c: [keyfn(x) for x in c],
    )


def equivalence_classes(I: Interval, include_min: bool = True) -> list[tuple[Perm, ...]]:
    """Classes of amazing decompositions under symmetric double shortcuts."""
    zs = [z for z in enumerate_hcds(I, amazing_only=True) if include_min or z != I.u]
    return partition_by_relation(
        zs, lambda a, b: ds_symmetric(I, a, b), key=lambda w: (length(w), w)
    )


# ---------------------------------------------------------------------------
# report records


def _record(check: str, I: Interval, status: str, **extra) -> dict:
    rec = {
        "check": check,
        "n": I.n,
        "u": format_perm(I.u),
        "v": format_perm(I.v),
        "status": status,
    }
    rec.update(extra)
    return rec


def verify_congettura(I: Interval) -> dict:
    """Every amazing decomposition must be an R-element (conjecture)."""
    amazing = enumerate_hcds(I, amazing_only=True)
    for z in amazing:
        if not is_r_element(I, z):
            return _record(
                "congettura", I, "FINDING", z=format_perm(z), amazing=len(amazing)
            )
    return _record("congettura", I, "PASS", amazing=len(amazing))


def verify_strong_ds_pair(I: Interval, z: Perm, zp: Perm) -> dict:
    """DS symmetry for one amazing pair (conjectured for all pairs)."""
    ok = ds_symmetric(I, z, zp)
    rec = _record(
        "strong-ds", I, "PASS" if ok else "FINDING", z=format_perm(z), z2=format_perm(zp)
    )
    if not ok:
        rec["ds"] = multiset_entries(ds_multiset(I, z, zp))
        rec["ds_rev"] = multiset_entries(ds_multiset(I, zp, z))
    return rec


def verify_strong_ds(I: Interval) -> dict:
    """DS symmetry across every amazing pair of one interval; the first
    asymmetric pair is the witness."""
    amazing = enumerate_hcds(I, amazing_only=True)
    pairs = 0
    for i, z in enumerate(amazing):
        for zp in amazing[i + 1 :]:
            pairs += 1
            if not ds_symmetric(I, z, zp):
                rec = verify_strong_ds_pair(I, z, zp)
                rec["pairs"] = pairs
                return rec
    return _record("strong-ds", I, "PASS", pairs=pairs)


def verify_em0(I: Interval) -> dict:
    """The symmetry relation should have a single class (conjecture).

    The interval bottom is itself always an amazing decomposition; class
    counts are reported both with and without it.
    """
    with_min = equivalence_classes(I, include_min=True)
    without_min = equivalence_classes(I, include_min=False)
    status = "PASS" if len(with_min) <= 1 else "FINDING"
    return _record(
        "em0",
        I,
        status,
        classes=len(with_min),
        classes_without_min=len(without_min),
        amazing=sum(len(c) for c in with_min),
    )


def bologna_chain(I: Interval, z: Perm, zp: Perm) -> list[QPoly]:
    """The seven successive expressions of the double-expansion identity:
    starting from R-tilde(u, v), expand through z, through the joins of z'
    with the z-shortcuts, through both multisets, and back through z'."""
    u, v = I.u, I.v
    du = I.dist[u]

    def single(w: Perm) -> QPoly:
        total: QPoly = ZERO
        for p in shortcuts(I, w):
            total = padd(total, pshift(rtilde(p, v), du[p]))
        return total

    def double(w: Perm, wp: Perm) -> QPoly:
        total: QPoly = ZERO
        for p in shortcuts(I, w):
            j = _require_join(I, wp, p)
            sub = interval(p, v)
            dp = sub.dist[p]
            for b in shortcuts(sub, j):
                total = padd(total, pshift(rtilde(b, v), du[p] + dp[b]))
        return total

    def from_multiset(ms: DegreeMultiset) -> QPoly:
        total: QPoly = ZERO
        for (a, b), k in sorted(ms.items()):
            term = pshift(rtilde(b, v), a)
            for _ in range(k):
                total = padd(total, term)
        return total

    return [
        rtilde(u, v),
        single(z),
        double(z, zp),
        from_multiset(ds_multiset(I, z, zp)),
        from_multiset(ds_multiset(I, zp, z)),
        double(zp, z),
        single(zp),
    ]


def verify_bologna(I: Interval, z: Perm, zp: Perm) -> dict:
    """Check one instance of the double-expansion theorem.

    Hypotheses: (1) z is an amazing R-element, (2) the join of z' with every
    x above the bottom is an R-element of [x, v], (3) DS(z, z') = DS(z', z).
    When all hold, z' must be an R-element and every step of the expansion
    chain must evaluate equal; any failure is an implementation bug.
    """
    I.require(z, zp)
    if not (is_amazing(I, z) and is_amazing(I, zp)):
        return _record(
            "bologna", I, "SKIP", z=format_perm(z), z2=format_perm(zp), reason="pair not amazing"
        )
    hyp1 = is_amazing_r_element(I, z)
    hyp2 = all(
        is_r_element(interval(x, I.v), _require_join(I, zp, x))
        for x in I.elements
        if x != I.u
    )
    hyp3 = ds_symmetric(I, z, zp)
    hyps = {"h1": hyp1, "h2": hyp2, "h3": hyp3}
    if not (hyp1 and hyp2 and hyp3):
        return _record(
            "bologna", I, "SKIP", z=format_perm(z), z2=format_perm(zp), hypotheses=hyps
        )
    chain = bologna_chain(I, z, zp)
    chain_ok = all(chain[i] == chain[i + 1] for i in range(len(chain) - 1))
    conclusion = is_r_element(I, zp)
    status = "PASS" if (chain_ok and conclusion) else "FAIL"
    rec = _record(
        "bologna",
        I,
        status,
        z=format_perm(z),
        z2=format_perm(zp),
        hypotheses=hyps,
        conclusion=conclusion,
        chain=[poly_str(c) for c in chain],
    )
    return rec


# ---------------------------------------------------------------------------
# products


def verify_product(
    I1: Interval,
    I2: Interval,
    pairs: list[tuple[tuple[Perm, Perm], tuple[Perm, Perm]]] | None = None,
) -> list[dict]:
    """Check that shortcuts and DS symmetry transfer to a block direct sum.

    Each pair is ((z1, z2), (z1', z2')); the block sums z and z' are located
    in the product interval, the componentwise shortcut equivalences are
    checked in both directions, and DS symmetry of the pair in the product is
    required whenever it holds componentwise.
    """
    n1 = I1.n
    U = direct_sum(I1.u, I2.u)
    V = direct_sum(I1.v, I2.v)
    P = interval(U, V)
    records: list[dict] = []
    if pairs is None:
        from .hcd import standard_hcds

        zs1 = standard_hcds(I1)
        zs2 = standard_hcds(I2)
        pairs = [
            ((a1, a2), (b1, b2))
            for a1 in zs1
            for a2 in zs2
            for b1 in zs1
            for b2 in zs2
        ]
    for (z1, z2), (zp1, zp2) in pairs:
        base = {
            "check": "product",
            "n": P.n,
            "u": format_perm(U),
            "v": format_perm(V),
            "factors": [
                [format_perm(I1.u), format_perm(I1.v)],
                [format_perm(I2.u), format_perm(I2.v)],
            ],
            "z": format_perm(direct_sum(z1, z2)),
            "z2": format_perm(direct_sum(zp1, zp2)),
        }
        if not (
            is_amazing(I1, z1)
            and is_amazing(I2, z2)
            and is_amazing(I1, zp1)
            and is_amazing(I2, zp2)
        ):
            records.append({**base, "status": "SKIP", "reason": "components not amazing"})
            continue
        if not (ds_symmetric(I1, z1, zp1) and ds_symmetric(I2, z2, zp2)):
            records.append({**base, "status": "SKIP", "reason": "component DS not symmetric"})
            continue
        z = direct_sum(z1, z2)
        zp = direct_sum(zp1, zp2)
        problems: list[str] = []
        if not (is_amazing(P, z) and is_amazing(P, zp)):
            problems.append("block sums not amazing in the product")
        if not _product_shortcuts_match(P, I1, I2, z, (z1, z2)):
            problems.append("z-shortcuts do not factor")
        if not _product_shortcuts_match(P, I1, I2, zp, (zp1, zp2)):
            problems.append("z'-shortcuts do not factor")
        if not problems and not _product_inner_shortcuts_match(P, n1, z, zp, (zp1, zp2), I1, I2):
            problems.append("inner shortcuts do not factor")
        if not problems and not _product_inner_shortcuts_match(P, n1, zp, z, (z1, z2), I1, I2):
            problems.append("reverse inner shortcuts do not factor")
        if not problems and not ds_symmetric(P, z, zp):
            problems.append("DS symmetry does not transfer")
        if problems:
            records.append({**base, "status": "FAIL", "witness": "; ".join(problems)})
        else:
            records.append({**base, "status": "PASS"})
    return records


def _product_shortcuts_match(P, I1, I2, z, zparts) -> bool:
    """W^z in the product equals the block sums of the component shortcuts."""
    w1 = shortcuts(I1, zparts[0])
    w2 = shortcuts(I2, zparts[1])
    expected = {direct_sum(a, b) for a in w1 for b in w2}
    return shortcuts(P, z) == expected


def _product_inner_shortcuts_match(P, n1, z, zp, zp_parts, I1, I2) -> bool:
    """For every product shortcut p, the shortcuts of [p, V] with respect to
    the join of z' and p equal the block sums of the component versions."""
    V = P.v
    for p in shortcuts(P, z):
        parts = split_direct_sum(p, n1)
        if parts is None:
            return False
        p1, p2 = parts
        j = _require_join(P, zp, p)
        sub = interval(p, V)
        got = shortcuts(sub, j)
        s1 = interval(p1, I1.v)
        s2 = interval(p2, I2.v)
        j1 = _require_join(I1, zp_parts[0], p1)
        j2 = _require_join(I2, zp_parts[1], p2)
        expected = {
            direct_sum(b1, b2)
            for b1 in shortcuts(s1, j1)
            for b2 in shortcuts(s2, j2)
        }
        if got != expected:
            return False
    return True
