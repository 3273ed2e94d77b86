"""``homtwist/1`` JSON documents.

A document holds named structures.  Scalars are strings ``"p/q"`` or ``"p"``
in lowest terms, never JSON numbers.  Matrices are lists of rows (codomain
index major), so column ``j`` is the image of basis vector ``j``.
Serialization is canonical: sorted keys, fixed layout, lowest-terms scalars,
so equal documents serialize to identical bytes.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .errors import BadRational, DimensionMismatch, InvalidStructure, ParseError, SchemaError
from .structures import Bundle, Comodule, HomAlgebra, HomBialgebra, HomCoalgebra
from .tensor import LinearMap

FORMAT_VERSION = "homtwist/1"
SCALARS = "rational-string"

Structure = Union[HomCoalgebra, HomAlgebra, HomBialgebra, Comodule, Bundle, LinearMap]

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


@dataclass
class NamedComodule:
    """A comodule record, optionally pointing at its host by structure name."""

    comodule: Comodule
    host: str | None = None


@dataclass
class Document:
    structures: dict[str, Any] = field(default_factory=dict)
    format_version: str = FORMAT_VERSION
    scalars: str = SCALARS

    def get(self, name: str):
        try:
            return self.structures[name]
        except KeyError:
            raise SchemaError(f"structures.{name}: no such structure") from None

    def host_of(self, name: str):
        """Resolve the host of a comodule record."""
        rec = self.get(name)
        if not isinstance(rec, NamedComodule) or rec.host is None:
            raise SchemaError(f"structures.{name}: comodule has no host reference")
        host = self.get(rec.host)
        if isinstance(host, NamedComodule) or not isinstance(host, (HomCoalgebra, HomBialgebra)):
            raise SchemaError(f"structures.{name}.host: {rec.host} is not a coalgebra or bialgebra")
        return host


# --- scalars ------------------------------------------------------------------


def parse_rational(text: Any, path: str) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(f"{path}: scalars must be strings, got {type(text).__name__}")
    if not _RATIONAL.fullmatch(text):
        raise BadRational(f"{path}: malformed rational {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise BadRational(f"{path}: zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --- parsing ------------------------------------------------------------------

_FIELDS = {
    "coalgebra": {"kind", "dim", "delta", "alpha"},
    "algebra": {"kind", "dim", "mu", "alpha"},
    "bialgebra": {"kind", "dim", "mu", "delta", "alpha", "unit_vector"},
    "comodule": {"kind", "host_dim", "m_dim", "delta", "alpha_m", "host"},
    "bundle": {"kind", "host", "coalg", "coaction"},
    "endomorphism": {"kind", "dim", "matrix"},
}
_OPTIONAL = {"unit_vector", "host"}


def _positive_int(rec: dict, key: str, path: str) -> int:
    v = rec.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise SchemaError(f"{path}.{key}: expected a positive integer")
    return v


def _matrix(value: Any, rows: int, cols: int, path: str) -> LinearMap:
    if not isinstance(value, list):
        raise SchemaError(f"{path}: expected a list of rows")
    if len(value) != rows:
        raise SchemaError(f"{path}: expected {rows} rows, got {len(value)}")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise SchemaError(f"{path}[{i}]: expected {cols} entries, got {got}")
        out.append([parse_rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)])
    return LinearMap.from_rows(out)


def _record(rec: Any, path: str, expect: str | None = None):
    if not isinstance(rec, dict):
        raise SchemaError(f"{path}: expected an object")
    kind = rec.get("kind")
    if kind not in _FIELDS:
        raise SchemaError(f"{path}.kind: unknown kind {kind!r}")
    if expect is not None and kind != expect:
        raise SchemaError(f"{path}.kind: expected {expect!r}, got {kind!r}")
    allowed = _FIELDS[kind]
    unknown = sorted(set(rec) - allowed)
    if unknown:
        raise SchemaError(f"{path}: unknown fields {unknown}")
    missing = sorted(allowed - _OPTIONAL - set(rec))
    if missing:
        raise SchemaError(f"{path}: missing fields {missing}")

    try:
        if kind == "coalgebra":
            d = _positive_int(rec, "dim", path)
            return HomCoalgebra(
                d, _matrix(rec["delta"], d * d, d, f"{path}.delta"), _matrix(rec["alpha"], d, d, f"{path}.alpha")
            )
        if kind == "algebra":
            d = _positive_int(rec, "dim", path)
            return HomAlgebra(
                d, _matrix(rec["mu"], d, d * d, f"{path}.mu"), _matrix(rec["alpha"], d, d, f"{path}.alpha")
            )
        if kind == "bialgebra":
            d = _positive_int(rec, "dim", path)
            unit = rec.get("unit_vector")
            if unit is not None:
                if not isinstance(unit, list) or len(unit) != d:
                    raise SchemaError(f"{path}.unit_vector: expected {d} entries")
                unit = tuple(parse_rational(x, f"{path}.unit_vector[{i}]") for i, x in enumerate(unit))
            return HomBialgebra(
                d,
                _matrix(rec["mu"], d, d * d, f"{path}.mu"),
                _matrix(rec["delta"], d * d, d, f"{path}.delta"),
                _matrix(rec["alpha"], d, d, f"{path}.alpha"),
                unit,
            )
        if kind == "comodule":
            h = _positive_int(rec, "host_dim", path)
            m = _positive_int(rec, "m_dim", path)
            host = rec.get("host")
            if host is not None and not isinstance(host, str):
                raise SchemaError(f"{path}.host: expected a structure name")
            com = Comodule(
                h, m, _matrix(rec["alpha_m"], m, m, f"{path}.alpha_m"), _matrix(rec["delta"], h * m, m, f"{path}.delta")
            )
            return NamedComodule(com, host)
        if kind == "bundle":
            host = _record(rec["host"], f"{path}.host", "bialgebra")
            coalg = _record(rec["coalg"], f"{path}.coalg", "coalgebra")
            coaction = _record(rec["coaction"], f"{path}.coaction", "comodule")
            if coaction.host is not None:
                raise SchemaError(f"{path}.coaction.host: bundle coactions take no host reference")
            return Bundle(host, coalg, coaction.comodule)
        d = _positive_int(rec, "dim", path)
        return _matrix(rec["matrix"], d, d, f"{path}.matrix")
    except (DimensionMismatch, InvalidStructure) as exc:
        raise SchemaError(f"{path}: {exc}") from None


def parse(text: Union[str, bytes]) -> Document:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise SchemaError("document: expected a JSON object")
    unknown = sorted(set(raw) - {"format_version", "scalars", "structures"})
    if unknown:
        raise SchemaError(f"document: unknown fields {unknown}")
    if raw.get("format_version") != FORMAT_VERSION:
        raise SchemaError(f"format_version: expected {FORMAT_VERSION!r}, got {raw.get('format_version')!r}")
    if raw.get("scalars") != SCALARS:
        raise SchemaError(f"scalars: expected {SCALARS!r}")
    structures = raw.get("structures")
    if not isinstance(structures, dict):
        raise SchemaError("structures: expected an object")
    return Document({name: _record(rec, f"structures.{name}") for name, rec in structures.items()})


def read(path: str) -> Document:
    with open(path, "rb") as fh:
        return parse(fh.read())


# --- serialization --------------------------------------------------------------


def _rows(f: LinearMap) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in f.entries]


def to_record(obj) -> dict:
    if isinstance(obj, NamedComodule):
        rec = to_record(obj.comodule)
        if obj.host is not None:
            rec["host"] = obj.host
        return rec
    if isinstance(obj, HomBialgebra):
        rec = {"kind": "bialgebra", "dim": obj.dim, "mu": _rows(obj.mu), "delta": _rows(obj.delta), "alpha": _rows(obj.alpha)}
        if obj.unit_vector is not None:
            rec["unit_vector"] = [format_rational(x) for x in obj.unit_vector]
        return rec
    if isinstance(obj, HomCoalgebra):
        return {"kind": "coalgebra", "dim": obj.dim, "delta": _rows(obj.delta), "alpha": _rows(obj.alpha)}
    if isinstance(obj, HomAlgebra):
        return {"kind": "algebra", "dim": obj.dim, "mu": _rows(obj.mu), "alpha": _rows(obj.alpha)}
    if isinstance(obj, Comodule):
        return {
            "kind": "comodule",
            "host_dim": obj.host_dim,
            "m_dim": obj.m_dim,
            "delta": _rows(obj.delta),
            "alpha_m": _rows(obj.alpha_m),
        }
    if isinstance(obj, Bundle):
        return {
            "kind": "bundle",
            "host": to_record(obj.host),
            "coalg": to_record(obj.coalg),
            "coaction": to_record(obj.coaction),
        }
    if isinstance(obj, LinearMap):
        if obj.domain_dim != obj.codomain_dim:
            raise SchemaError("only square maps serialize as endomorphisms")
        return {"kind": "endomorphism", "dim": obj.domain_dim, "matrix": _rows(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _dump(value: Any, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump(value[k], indent + 1)}" for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if all(not isinstance(v, (list, dict)) for v in value):
            return "[" + ", ".join(json.dumps(v) for v in value) + "]"
        items = [inner + _dump(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value)


def to_json(obj: Any) -> str:
    return _dump(obj, 0) + "\n"


def serialize(doc: Document) -> str:
    return to_json(
        {
            "format_version": doc.format_version,
            "scalars": doc.scalars,
            "structures": {name: to_record(s) for name, s in doc.structures.items()},
        }
    )


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".homtwist-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
