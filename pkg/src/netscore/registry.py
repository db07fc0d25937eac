"""Network records (accuracy, parameter and MAC counts plus provenance).

Registry file layout (JSON)::

    {"schema_version": 1,
     "curation_notes": ["optional free text", ...],
     "records": [{"name": ..., "family": ..., "year": ...,
                  "top1_accuracy_percent": ..., "params": ..., "macs": ...,
                  "source": ..., "mac_convention": ...}, ...]}
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from types import MappingProxyType
from typing import Any

from netscore.metrics import NetworkMetrics

SCHEMA_VERSION = 1
SEED_FILE = "networks_ilsvrc2012.json"

RECORD_FIELDS = (
    "name", "family", "year", "top1_accuracy_percent", "params", "macs",
    "source", "mac_convention",
)


class MacConvention(str, Enum):
    MACS = "macs"
    MULTIPLY_ADDS_REPORTED_AS_FLOPS = "multiply_adds_reported_as_flops"
    UNKNOWN = "unknown"


class MergePolicy(str, Enum):
    REJECT_CONFLICTS = "reject_conflicts"
    OVERLAY_WINS = "overlay_wins"


class RegistryError(ValueError):
    pass


class RegistrySyntaxError(RegistryError):
    pass


class RegistryValidationError(RegistryError):
    def __init__(self, record: str | None, violations: list[str]):
        self.record = record
        self.violations = list(violations)
        where = f"record {record!r}: " if record is not None else ""
        super().__init__(where + "; ".join(violations))


class DuplicateNameError(RegistryError):
    def __init__(self, names: Iterable[str]):
        self.names = sorted(set(names))
        super().__init__("duplicate record name(s): " + ", ".join(self.names))


class MergeConflictError(RegistryError):
    def __init__(self, names: Iterable[str]):
        self.names = sorted(set(names))
        super().__init__("conflicting record name(s): " + ", ".join(self.names))


@dataclass(frozen=True)
class NetworkRecord:
    name: str
    family: str
    year: int
    metrics: NetworkMetrics
    source: str
    mac_convention: MacConvention = MacConvention.MACS

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name.strip():
            raise ValueError("record name must be a non-empty string")
        object.__setattr__(self, "mac_convention", MacConvention(self.mac_convention))

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "family": self.family,
            "year": self.year,
            "top1_accuracy_percent": self.metrics.accuracy_percent,
            "params": self.metrics.params,
            "macs": self.metrics.macs,
            "source": self.source,
            "mac_convention": self.mac_convention.value,
        }

    @classmethod
    def from_dict(cls, raw: Mapping[str, Any]) -> NetworkRecord:
        violations = validate_record(raw)
        if violations:
            raise RegistryValidationError(_record_label(raw), violations)
        return cls(
            name=raw["name"],
            family=raw["family"],
            year=raw["year"],
            metrics=NetworkMetrics(raw["top1_accuracy_percent"], raw["params"], raw["macs"]),
            source=raw["source"],
            mac_convention=MacConvention(raw["mac_convention"]),
        )


def _record_label(raw: Any) -> str | None:
    if isinstance(raw, Mapping) and isinstance(raw.get("name"), str):
        return raw["name"]
    return None


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_real(value: Any) -> bool:
    return (_is_int(value) or isinstance(value, float)) and math.isfinite(value)


def validate_record(record: Mapping[str, Any] | NetworkRecord) -> list[str]:
    """Return every violation in ``record``; an empty list means valid."""
    if isinstance(record, NetworkRecord):
        record = record.to_dict()
    if not isinstance(record, Mapping):
        return ["record must be an object"]

    out = []
    unknown = sorted(set(record) - set(RECORD_FIELDS))
    if unknown:
        out.append(f"unknown field(s): {', '.join(unknown)}")
    missing = [f for f in RECORD_FIELDS if f not in record]
    if missing:
        out.append(f"missing field(s): {', '.join(missing)}")

    name = record.get("name")
    if "name" in record and (not isinstance(name, str) or not name.strip()):
        out.append("name: must be a non-empty string")
    for key in ("family", "source"):
        if key in record and not isinstance(record[key], str):
            out.append(f"{key}: must be a string")
    if "year" in record and not _is_int(record["year"]):
        out.append("year: must be an integer")

    if "top1_accuracy_percent" in record:
        acc = record["top1_accuracy_percent"]
        if not _is_real(acc):
            out.append("top1_accuracy_percent: must be a finite number")
        elif acc <= 0 or acc > 100:
            out.append(f"top1_accuracy_percent: {acc} outside (0, 100]")
        elif acc <= 1:
            out.append(f"top1_accuracy_percent: {acc} looks like a fraction, expected percent")
    for key in ("params", "macs"):
        if key in record:
            value = record[key]
            if not _is_int(value):
                out.append(f"{key}: must be an integer count")
            elif value < 1:
                out.append(f"{key}: must be >= 1, got {value}")

    if "mac_convention" in record:
        try:
            MacConvention(record["mac_convention"])
        except ValueError:
            allowed = ", ".join(c.value for c in MacConvention)
            out.append(f"mac_convention: {record['mac_convention']!r} not one of {allowed}")
    return out


class Registry(Mapping[str, NetworkRecord]):
    """Immutable name -> record mapping.  Iteration follows insertion order."""

    def __init__(self, records: Iterable[NetworkRecord] = (), schema_version: int = SCHEMA_VERSION,
                 notes: Iterable[str] = ()):
        records = list(records)
        seen: set[str] = set()
        dupes = [r.name for r in records if r.name in seen or seen.add(r.name)]
        if dupes:
            raise DuplicateNameError(dupes)
        self._records = MappingProxyType({r.name: r for r in records})
        self.schema_version = schema_version
        self.notes = tuple(notes)

    def __getitem__(self, name: str) -> NetworkRecord:
        return self._records[name]

    def __iter__(self):
        return iter(self._records)

    def __len__(self) -> int:
        return len(self._records)

    @property
    def records(self) -> tuple[NetworkRecord, ...]:
        return tuple(self._records.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Registry):
            return NotImplemented
        return (
            self.schema_version == other.schema_version
            and self.notes == other.notes
            and self.records == other.records
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Registry({len(self)} records, schema_version={self.schema_version})"


def registry_from_dict(doc: Any) -> Registry:
    if not isinstance(doc, dict):
        raise RegistryValidationError(None, ["document must be a JSON object"])
    unknown = sorted(set(doc) - {"schema_version", "records", "curation_notes"})
    if unknown:
        raise RegistryValidationError(None, [f"unknown top-level field(s): {', '.join(unknown)}"])
    if "schema_version" not in doc:
        raise RegistryValidationError(None, ["missing schema_version"])
    if doc["schema_version"] != SCHEMA_VERSION:
        raise RegistryValidationError(
            None, [f"unsupported schema_version {doc['schema_version']!r}; expected {SCHEMA_VERSION}"]
        )
    if not isinstance(doc.get("records"), list):
        raise RegistryValidationError(None, ["records must be an array"])
    notes = doc.get("curation_notes", [])
    if not isinstance(notes, list) or not all(isinstance(n, str) for n in notes):
        raise RegistryValidationError(None, ["curation_notes must be an array of strings"])

    records = []
    for index, raw in enumerate(doc["records"]):
        violations = validate_record(raw)
        if violations:
            label = _record_label(raw)
            raise RegistryValidationError(label if label is not None else f"#{index}", violations)
        records.append(NetworkRecord.from_dict(raw))
    return Registry(records, doc["schema_version"], notes)


def load_registry(document: str) -> Registry:
    """Parse and validate a registry JSON document."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise RegistrySyntaxError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return registry_from_dict(doc)


def serialize_registry(registry: Registry) -> str:
    """Deterministic JSON text; ``load_registry`` inverts it exactly."""
    doc: dict[str, Any] = {"schema_version": registry.schema_version}
    if registry.notes:
        doc["curation_notes"] = list(registry.notes)
    doc["records"] = [r.to_dict() for r in registry.records]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def merge(base: Registry, overlay: Registry,
          policy: MergePolicy | str = MergePolicy.REJECT_CONFLICTS) -> Registry:
    """Union of two registries.  Inputs are never modified."""
    policy = MergePolicy(policy)
    collisions = [name for name in overlay if name in base]
    if collisions and policy is MergePolicy.REJECT_CONFLICTS:
        raise MergeConflictError(collisions)
    merged = dict(base.items())
    merged.update(overlay.items())
    notes = base.notes + tuple(n for n in overlay.notes if n not in base.notes)
    return Registry(merged.values(), base.schema_version, notes)


def seed_text() -> str:
    return resources.files("netscore").joinpath("data").joinpath(SEED_FILE).read_text(encoding="utf-8")


def load_seed() -> Registry:
    """The bundled ILSVRC 2012 comparison set."""
    return load_registry(seed_text())
