"""Report documents, canonical serialization and the on-disk result cache."""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

from augcube.errors import ReportError

SCHEMA_VERSION = 1
CACHE_ENV = "AUGCUBE_CACHE_DIR"


@dataclass
class Report:
    check: dict
    graph: dict
    result: dict
    violations: list = field(default_factory=list)
    method: str = ""
    runtime_ms: int = 0
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return bool(self.result.get("pass", not self.violations))

    def digest(self) -> str:
        """sha256 over every field except ``runtime_ms``."""
        body = asdict(self)
        body.pop("runtime_ms")
        return hashlib.sha256(_canonical(body)).hexdigest()


def _canonical(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True).encode("ascii") + b"\n"


def emit_report(report: Report, fmt: str = "structured") -> bytes:
    if fmt == "structured":
        return _canonical(asdict(report))
    if fmt == "table":
        return render_table(report).encode("utf-8")
    raise ReportError("format", f"unknown report format {fmt!r}")


_FIELD_TYPES = {
    "schema_version": int,
    "check": dict,
    "graph": dict,
    "result": dict,
    "violations": list,
    "method": str,
    "runtime_ms": int,
}


def load_report(data: bytes | str) -> Report:
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ReportError("<document>", f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ReportError("<document>", "top level must be an object")
    for name, typ in _FIELD_TYPES.items():
        if name not in raw:
            raise ReportError(name, "missing")
        if not isinstance(raw[name], typ) or (typ is int and isinstance(raw[name], bool)):
            raise ReportError(name, f"expected {typ.__name__}, got {type(raw[name]).__name__}")
    extra = set(raw) - set(_FIELD_TYPES)
    if extra:
        raise ReportError(sorted(extra)[0], "unexpected field")
    if raw["schema_version"] != SCHEMA_VERSION:
        raise ReportError("schema_version", f"unsupported version {raw['schema_version']}")
    if "name" not in raw["check"] or "params" not in raw["check"]:
        raise ReportError("check", "needs 'name' and 'params'")
    return Report(**raw)


def render_table(report: Report) -> str:
    g = report.graph
    lines = [
        f"check:   {report.check['name']}  {_params(report.check['params'])}",
        f"graph:   n={g.get('n')} vertices={g.get('vertices')} edges={g.get('edges')}",
        f"method:  {report.method}",
        f"status:  {'PASS' if report.passed else 'FAIL'}",
    ]
    res = dict(report.result)
    counts = res.pop("class_counts", None)
    sizes = res.pop("class_sizes", None)
    expected = res.pop("expected_sizes", None) or {}
    for key in sorted(res):
        lines.append(f"{key}: {json.dumps(res[key], sort_keys=True)}")
    if counts:
        width = max(len(k) for k in counts) + 2
        lines.append("")
        lines.append(f"{'class':<{width}}{'count':>8}  {'observed':<12}{'expected':>8}")
        for key in sorted(counts):
            obs = ",".join(str(s) for s in (sizes or {}).get(key, []))
            exp = expected.get(key, "")
            lines.append(f"{key:<{width}}{counts[key]:>8}  {obs:<12}{exp!s:>8}")
    if report.violations:
        lines.append("")
        lines.append(f"violations ({len(report.violations)} shown):")
        for v in report.violations:
            lines.append("  " + json.dumps(v, sort_keys=True))
    return "\n".join(lines) + "\n"


def _params(params: dict) -> str:
    return " ".join(f"{k}={params[k]}" for k in sorted(params))


class ResultCache:
    """One JSON document per (n, verb, params) key. Safe to delete at any time."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    @classmethod
    def from_env(cls, flag: str | None) -> ResultCache | None:
        root = flag or os.environ.get(CACHE_ENV)
        return cls(root) if root else None

    def path(self, n: int, verb: str, params: dict) -> Path:
        digest = hashlib.sha256(_canonical(params)).hexdigest()[:16]
        return self.root / f"{verb}-n{n}-{digest}.json"

    def get(self, n: int, verb: str, params: dict) -> Report | None:
        p = self.path(n, verb, params)
        if not p.exists():
            return None
        try:
            return load_report(p.read_bytes())
        except ReportError:
            return None

    def put(self, n: int, verb: str, params: dict, report: Report) -> None:
        p = self.path(n, verb, params)
        p.parent.mkdir(parents=True, exist_ok=True)
        tmp = p.with_suffix(".tmp")
        tmp.write_bytes(emit_report(report))
        tmp.replace(p)
