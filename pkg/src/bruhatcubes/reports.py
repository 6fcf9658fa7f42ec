"""Report rendering: JSON lines (machine) or aligned text (human).

The JSON body is deterministic for a fixed configuration: keys are sorted
and the only timestamp lives in the header.
"""

from __future__ import annotations

import datetime
import json
from typing import IO, Iterable


def json_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def text_line(rec: dict) -> str:
    parts = [rec.get("status", "?"), rec.get("check", "?")]
    if "u" in rec and "v" in rec:
        parts.append(f"[{rec['u']},{rec['v']}]")
    for key in ("z", "z2"):
        if key in rec:
            parts.append(f"{key}={rec[key]}")
    extras = {
        k: v
        for k, v in rec.items()
        if k not in {"status", "check", "n", "u", "v", "z", "z2", "fp"}
    }
    if extras:
        parts.append(json.dumps(extras, sort_keys=True, default=str))
    return " ".join(str(p) for p in parts)


def write_report(
    fh: IO[str], header: dict, records: Iterable[dict], fmt: str = "json"
) -> None:
    if fmt == "json":
        stamped = dict(header)
        stamped["created"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        fh.write(json_line(stamped) + "\n")
        for rec in records:
            fh.write(json_line(rec) + "\n")
    else:
        fh.write(f"# {json_line(header)}\n")
        counts: dict[str, int] = {}
        for rec in records:
            counts[rec.get("status", "?")] = counts.get(rec.get("status", "?"), 0) + 1
            fh.write(text_line(rec) + "\n")
        summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        fh.write(f"# summary: {summary}\n")
