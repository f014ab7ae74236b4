"""Append-only JSONL catalog of certificates."""
from __future__ import annotations

import json
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

from .search import Certificate, verify_certificate

STORED_NAME = "certificates.jsonl"


def record(cert: Certificate, timestamp: str | None = None) -> dict:
    rec = cert.to_json()
    rec["timestamp"] = timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds")
    return rec


def append_certificate(path, cert: Certificate, timestamp: str | None = None) -> dict:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    rec = record(cert, timestamp)
    with open(p, "a") as f:
        f.write(json.dumps(rec, sort_keys=False) + "\n")
    return rec


def load_records(path) -> list[dict]:
    """All records of a catalog file; a malformed line is an error, not skipped."""
    p = Path(path)
    if not p.exists():
        return []
    out = []
    with open(p) as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ValueError(f"{p}:{lineno}: malformed catalog line") from exc
    return out


def load_catalog(path, reverify: bool = True) -> list[Certificate]:
    certs = [Certificate.from_json(r) for r in load_records(path)]
    if reverify:
        for c in certs:
            c.verified = verify_certificate(c)
    return certs


def stored_path() -> Path:
    return Path(str(resources.files("simplex_sidon").joinpath("data").joinpath(STORED_NAME)))


def stored_certificates(reverify: bool = False) -> list[Certificate]:
    return load_catalog(stored_path(), reverify=reverify)


def lookup(kind: str, h: int, n: int) -> Certificate | None:
    for cert in stored_certificates():
        if (cert.kind, cert.h, cert.n) == (kind, h, n):
            return cert
    return None


def strip_timestamp(rec: dict) -> dict:
    return {k: v for k, v in rec.items() if k != "timestamp"}
