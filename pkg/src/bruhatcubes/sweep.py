"""Sweep orchestration: interval enumeration, seeded sampling, check
dispatch, and deterministic report assembly.

A sweep runs a set of named checks over every comparable pair of one rank
(exhaustive mode) or over a seeded uniform sample of pairs (sample mode).
Records are emitted in task order regardless of worker scheduling, so a
report body is a pure function of the configuration.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .appendix import (
    is_cosimple,
    verify_dh_symmetry,
    verify_hw_projection,
    verify_lemma_incpaths,
)
from .doubles import (
    verify_bologna,
    verify_congettura,
    verify_em0,
    verify_product,
    verify_strong_ds_pair,
)
from .errors import ConfigError
from .hcd import enumerate_hcds, is_amazing, is_amazing_r_element, is_upper_hcd, standard_hcds
from .interval import Interval, comparable_pairs, interval, interval_size
from .permutations import Perm, format_perm
from .polynomials import poly_str
from .rpoly import canonical_orders, rtilde, rtilde_dyer

ALL_CHECKS = (
    "dyer",
    "standard-hcd",
    "congettura",
    "em0",
    "strong-ds",
    "bologna",
    "product",
    "cosimple-dh",
    "hw-bijection",
    "lemma-paths",
)

# exhaustive sweeps stay cheap only up to these ranks
_EXHAUSTIVE_LIMIT = {"dyer": 5, "standard-hcd": 5}
_EXHAUSTIVE_DEFAULT_LIMIT = 4

CONVENTIONS = {
    "edge_direction": "x->y iff y=x*t with increasing length; label t=x^{-1}y",
    "inflow_sources": "restricted to [u,v] minus [z,v]",
    "dh_hypercubes": "spanned by arrows into p (top-pinned); bottom must equal u",
}


@dataclass
class SweepConfig:
    n: int
    checks: tuple[str, ...] = ALL_CHECKS
    mode: str = "exhaustive"
    sample_size: int = 50
    seed: int | None = None
    max_interval_size: int | None = None
    threads: int = 1
    timings: bool = False
    lemma_order_limit: int | None = field(default=None)

    def fingerprint(self) -> dict:
        return {
            "n": self.n,
            "checks": list(self.checks),
            "mode": self.mode,
            "sample_size": self.sample_size if self.mode == "sample" else None,
            "seed": self.seed,
            "max_interval_size": self.max_interval_size,
        }

    def fingerprint_digest(self) -> str:
        """Short stable id of the configuration and conventions; stamped on
        every record so appended report files stay self-describing."""
        blob = json.dumps(
            {"config": self.fingerprint(), "conventions": CONVENTIONS}, sort_keys=True
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:12]


def validate_config(cfg: SweepConfig) -> None:
    unknown = [c for c in cfg.checks if c not in ALL_CHECKS]
    if unknown:
        raise ConfigError(f"unknown checks: {', '.join(unknown)}")
    if not cfg.checks:
        raise ConfigError("no checks selected")
    if cfg.mode not in ("exhaustive", "sample"):
        raise ConfigError(f"unknown mode {cfg.mode!r}")
    if cfg.n < 1:
        raise ConfigError("rank must be positive")
    if cfg.mode == "sample":
        if cfg.seed is None:
            raise ConfigError("sample mode requires a seed")
        if cfg.sample_size < 1:
            raise ConfigError("sample size must be positive")
    else:
        for check in cfg.checks:
            limit = _EXHAUSTIVE_LIMIT.get(check, _EXHAUSTIVE_DEFAULT_LIMIT)
            if check != "product" and cfg.n > limit:
                raise ConfigError(
                    f"exhaustive {check} is limited to rank {limit}; use sample mode"
                )
    if cfg.threads < 1:
        raise ConfigError("thread count must be positive")


def sample_pairs(
    n: int, size: int, seed: int, max_interval_size: int | None
) -> list[tuple[Perm, Perm]]:
    """Seeded uniform sample of comparable pairs, with replacement, subject
    to the interval-size bound."""
    rng = random.Random(seed)
    base = list(range(1, n + 1))
    out: list[tuple[Perm, Perm]] = []
    from .permutations import bruhat_leq

    while len(out) < size:
        u = tuple(rng.sample(base, n))
        v = tuple(rng.sample(base, n))
        if not bruhat_leq(u, v):
            continue
        if max_interval_size is not None and interval_size(u, v) > max_interval_size:
            continue
        out.append((u, v))
    return out


def sweep_pairs(cfg: SweepConfig) -> list[tuple[Perm, Perm]]:
    if cfg.mode == "exhaustive":
        pairs = comparable_pairs(cfg.n)
        if cfg.max_interval_size is not None:
            pairs = [
                p for p in pairs if interval_size(*p) <= cfg.max_interval_size
            ]
        return pairs
    assert cfg.seed is not None
    return sample_pairs(cfg.n, cfg.sample_size, cfg.seed, cfg.max_interval_size)


# ---------------------------------------------------------------------------
# per-interval checks


def check_dyer(I: Interval, cfg: SweepConfig) -> list[dict]:
    orders = canonical_orders(I.n, 2 if I.n <= 4 else 3)
    expected = rtilde(I.u, I.v)
    for order in orders:
        got = rtilde_dyer(I, order)
        if got != expected:
            return [
                {
                    "check": "dyer",
                    "n": I.n,
                    "u": format_perm(I.u),
                    "v": format_perm(I.v),
                    "status": "FAIL",
                    "witness": {
                        "order": str(order),
                        "paths": poly_str(got),
                        "recurrence": poly_str(expected),
                    },
                }
            ]
    return [
        {
            "check": "dyer",
            "n": I.n,
            "u": format_perm(I.u),
            "v": format_perm(I.v),
            "status": "PASS",
            "orders": len(orders),
        }
    ]


def check_standard_hcd(I: Interval, cfg: SweepConfig) -> list[dict]:
    base = {"check": "standard-hcd", "n": I.n, "u": format_perm(I.u), "v": format_perm(I.v)}
    try:
        zs = standard_hcds(I)
    except LookupError as exc:
        return [{**base, "status": "FAIL", "witness": str(exc)}]
    for z in zs:
        if not is_upper_hcd(I, z):
            return [{**base, "status": "FAIL", "witness": f"{format_perm(z)} not an upper decomposition"}]
        if not is_amazing(I, z):
            return [{**base, "status": "FAIL", "witness": f"{format_perm(z)} not amazing"}]
        if not is_amazing_r_element(I, z):
            return [{**base, "status": "FAIL", "witness": f"{format_perm(z)} not an amazing R-element"}]
    return [{**base, "status": "PASS", "hcds": [format_perm(z) for z in zs]}]


def check_congettura(I: Interval, cfg: SweepConfig) -> list[dict]:
    return [verify_congettura(I)]


def check_em0(I: Interval, cfg: SweepConfig) -> list[dict]:
    return [verify_em0(I)]


def check_strong_ds(I: Interval, cfg: SweepConfig) -> list[dict]:
    amazing = enumerate_hcds(I, amazing_only=True)
    records = []
    for i, z in enumerate(amazing):
        for zp in amazing[i + 1 :]:
            records.append(verify_strong_ds_pair(I, z, zp))
    if not records:
        records.append(
            {
                "check": "strong-ds",
                "n": I.n,
                "u": format_perm(I.u),
                "v": format_perm(I.v),
                "status": "PASS",
                "pairs": 0,
            }
        )
    return records


def check_bologna(I: Interval, cfg: SweepConfig) -> list[dict]:
    amazing = enumerate_hcds(I, amazing_only=True)
    records = []
    for z in amazing:
        for zp in amazing:
            if z != zp:
                records.append(verify_bologna(I, z, zp))
    return records


def check_cosimple_dh(I: Interval, cfg: SweepConfig) -> list[dict]:
    base = {"check": "cosimple-dh", "n": I.n, "u": format_perm(I.u), "v": format_perm(I.v)}
    if not is_cosimple(I):
        return [{**base, "status": "SKIP", "reason": "not co-simple"}]
    records = []
    standard = set(standard_hcds(I))
    amazing = enumerate_hcds(I, amazing_only=True)
    seen = set()
    for z in sorted(standard):
        for zp in sorted(standard):
            if (zp, z) in seen or z == zp:
                continue
            seen.add((z, zp))
            records.append(verify_dh_symmetry(I, z, zp, conjectural=False))
    for i, z in enumerate(amazing):
        for zp in amazing[i + 1 :]:
            if (z, zp) in seen or (zp, z) in seen:
                continue
            records.append(verify_dh_symmetry(I, z, zp, conjectural=True))
    if not records:
        records.append({**base, "status": "PASS", "reason": "no pairs"})
    return records


def check_hw_bijection(I: Interval, cfg: SweepConfig) -> list[dict]:
    return [verify_hw_projection(I, z) for z in enumerate_hcds(I, amazing_only=True)]


def check_lemma_paths(I: Interval, cfg: SweepConfig) -> list[dict]:
    if not is_cosimple(I):
        return [
            {
                "check": "lemma-paths",
                "n": I.n,
                "u": format_perm(I.u),
                "v": format_perm(I.v),
                "status": "SKIP",
                "reason": "not co-simple",
            }
        ]
    limit = cfg.lemma_order_limit
    if limit is None and I.n >= 5:
        limit = 48
    records = []
    for z in standard_hcds(I):
        records.append(verify_lemma_incpaths(I, z, reading="crossing", order_limit=limit))
        records.append(verify_lemma_incpaths(I, z, reading="coatom", order_limit=limit))
    return records


_CHECK_FUNCS = {
    "dyer": check_dyer,
    "standard-hcd": check_standard_hcd,
    "congettura": check_congettura,
    "em0": check_em0,
    "strong-ds": check_strong_ds,
    "bologna": check_bologna,
    "cosimple-dh": check_cosimple_dh,
    "hw-bijection": check_hw_bijection,
    "lemma-paths": check_lemma_paths,
}


def product_records(cfg: SweepConfig) -> list[dict]:
    """Block-sum transfer checks; rank 5 splits as 2+3, rank 6 as 3+3."""
    if cfg.n == 5:
        splits = [(2, 3)]
    elif cfg.n == 6:
        splits = [(3, 3)]
    else:
        return [
            {
                "check": "product",
                "n": cfg.n,
                "status": "SKIP",
                "reason": "product check is defined for ranks 5 and 6",
            }
        ]
    records: list[dict] = []
    for n1, n2 in splits:
        for u1, v1 in comparable_pairs(n1):
            for u2, v2 in comparable_pairs(n2):
                if cfg.max_interval_size is not None:
                    if interval_size(u1, v1) * interval_size(u2, v2) > cfg.max_interval_size:
                        continue
                records.extend(verify_product(interval(u1, v1), interval(u2, v2)))
    return records


# ---------------------------------------------------------------------------
# the sweep itself


def run_sweep(cfg: SweepConfig) -> tuple[dict, list[dict], int]:
    """Run every selected check; returns (header, records, exit_code).

    Exit code 1 signals at least one FAIL record (a proved statement broke);
    FINDING records never affect the exit code.
    """
    validate_config(cfg)
    digest = cfg.fingerprint_digest()
    header = {
        "report_version": 1,
        "tool": "bruhatcubes",
        "config": cfg.fingerprint(),
        "conventions": CONVENTIONS,
        "fp": digest,
    }
    pairs = sweep_pairs(cfg)
    interval_checks = [c for c in cfg.checks if c in _CHECK_FUNCS]

    def run_pair(pair: tuple[Perm, Perm]) -> list[dict]:
        I = interval(*pair)
        records: list[dict] = []
        for name in interval_checks:
            start = time.perf_counter()
            recs = _CHECK_FUNCS[name](I, cfg)
            if cfg.timings:
                ms = int((time.perf_counter() - start) * 1000)
                for rec in recs:
                    rec["ms"] = ms
            records.extend(recs)
        return records

    records: list[dict] = []
    if interval_checks:
        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                for recs in pool.map(run_pair, pairs):
                    records.extend(recs)
        else:
            for pair in pairs:
                records.extend(run_pair(pair))
    if "product" in cfg.checks:
        records.extend(product_records(cfg))
    for rec in records:
        rec.setdefault("fp", digest)
    failed = any(rec.get("status") == "FAIL" for rec in records)
    return header, records, 1 if failed else 0
