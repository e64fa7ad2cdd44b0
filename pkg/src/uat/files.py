"""Reading and writing ``.ideal`` and ``.pts`` files.

An ideal file is a list of ``key: value`` lines::

    # the unit circle over QQ(i)
    field: QQ[i]/(i^2+1)
    vars: X, Y
    order: grevlex
    ideal: X^2 + Y^2 - 1
    point: 1, 0

``ideal:`` and ``point:`` may repeat; ``order`` defaults to grevlex.  A
points file has a ``field:`` line, an optional ``vars:`` line, and then one
comma-separated point per line.  Blank lines and ``#`` comments are ignored
and unknown keys are rejected with their line number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ParseError, UATError
from .fields import FieldTower, parse_field
from .ideals import Budget, Ideal
from .poly import MonomialOrder, PolyRing

IDEAL_KEYS = ("field", "vars", "order", "ideal", "point")
POINT_KEYS = ("field", "vars", "point")
_KEY = re.compile(r"([A-Za-z_]+)\s*:(.*)\Z")
_SUFFIX = re.compile(r"\s*\(line \d+, column (\d+)\)\Z")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _strip_location(exc: ParseError):
    msg = str(exc)
    m = _SUFFIX.search(msg)
    return (msg[: m.start()], int(m.group(1))) if m else (msg, 1)


def _reraise(exc: ParseError, source: str, line: int, offset: int):
    msg, col = _strip_location(exc)
    raise ParseError(f"{source}: {msg}", line, offset + col) from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, raw, body


def _key_value(source, lineno, raw, body, allowed):
    m = _KEY.match(body.strip())
    if not m:
        return None
    key = m.group(1).lower()
    if key not in allowed:
        raise ParseError(f"{source}: unknown key {m.group(1)!r}", lineno, raw.index(m.group(1)) + 1)
    value = m.group(2)
    offset = raw.index(":") + 1
    lead = len(value) - len(value.lstrip())
    return key, value.strip(), offset + lead


def _parse_vars(source, lineno, value, offset):
    names = tuple(v.strip() for v in value.split(",") if v.strip())
    for v in names:
        if not _NAME.match(v):
            raise ParseError(f"{source}: bad variable name {v!r}", lineno, offset + value.find(v) + 1)
    if len(set(names)) != len(names):
        raise ParseError(f"{source}: repeated variable name", lineno, offset + 1)
    return names


def _parse_point(F: FieldTower, source, lineno, value, offset):
    coords, pos = [], 0
    for part in value.split(","):
        text = part.strip()
        if not text:
            raise ParseError(f"{source}: empty coordinate", lineno, offset + pos + 1)
        try:
            coords.append(F.parse(text))
        except ParseError as exc:
            _reraise(exc, source, lineno, offset + pos + part.index(text))
        pos += len(part) + 1
    return coords


@dataclass
class IdealFile:
    field_spec: str
    variables: tuple
    order: str = "grevlex"
    generators: list = field(default_factory=list)
    points: list = field(default_factory=list)  # lists of coordinate texts
    source: str = "<string>"

    @property
    def field(self) -> FieldTower:
        return parse_field(self.field_spec)

    def ring(self) -> PolyRing:
        return PolyRing(self.field, self.variables, self.order)

    def ideal(self, budget: Budget | None = None) -> Ideal:
        ring = self.ring()
        return Ideal(ring, [ring.parse(g) for g in self.generators], budget)

    def point_values(self):
        F = self.field
        return [[F.parse(c) for c in p] for p in self.points]

    def to_text(self) -> str:
        lines = [f"field: {self.field_spec}", f"vars: {', '.join(self.variables)}", f"order: {self.order}"]
        lines += [f"ideal: {g}" for g in self.generators]
        lines += [f"point: {', '.join(p)}" for p in self.points]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "field": self.field_spec,
            "vars": list(self.variables),
            "order": self.order,
            "ideal": list(self.generators),
            "points": [list(p) for p in self.points],
        }

    @classmethod
    def from_json(cls, data: dict) -> IdealFile:
        return cls(data["field"], tuple(data["vars"]), data.get("order", "grevlex"), list(data.get("ideal", [])),
                   [list(p) for p in data.get("points", [])], "<report>")

    @classmethod
    def from_ideal(cls, I: Ideal, points=()) -> IdealFile:
        ring = I.ring
        return cls(ring.field.spec, tuple(ring.variables), str(ring.order), [str(g) for g in I.generators],
                   [[ring.field.format(c) for c in p] for p in points])


def parse_ideal_text(text: str, source: str = "<string>", max_tower_depth: int | None = None) -> IdealFile:
    """Parse and validate an ideal file; every polynomial is parsed once so
    that errors carry a file location."""
    seen = {}
    gens, pts = [], []
    for lineno, raw, body in _lines(text):
        kv = _key_value(source, lineno, raw, body, IDEAL_KEYS)
        if kv is None:
            raise ParseError(f"{source}: expected 'key: value'", lineno, 1)
        key, value, offset = kv
        if key in ("field", "vars", "order"):
            if key in seen:
                raise ParseError(f"{source}: duplicate key {key!r}", lineno, 1)
            seen[key] = (lineno, value, offset)
        elif key == "ideal":
            gens.extend((lineno, g, offset) for g in [value] if value)
        else:
            pts.append((lineno, value, offset))
    for key in ("field", "vars"):
        if key not in seen:
            raise ParseError(f"{source}: missing '{key}:' line", 1, 1)
    lineno, spec, offset = seen["field"]
    try:
        F = parse_field(spec)
    except ParseError as exc:
        _reraise(exc, source, lineno, offset)
    except (UATError, ValueError) as exc:
        raise ParseError(f"{source}: {exc}", lineno, offset + 1) from None
    depth = len(F.levels) - 1
    if max_tower_depth is not None and depth > max_tower_depth:
        raise ParseError(f"{source}: tower depth {depth} exceeds the cap of {max_tower_depth}", lineno, offset + 1)
    names = _parse_vars(source, *seen["vars"])
    clash = set(names) & set(F.generator_names)
    if clash:
        raise ParseError(f"{source}: variable {sorted(clash)[0]!r} is also a field generator", seen["vars"][0], 1)
    lineno, order, offset = seen.get("order", (1, "grevlex", 0))
    try:
        ring = PolyRing(F, names, MonomialOrder.parse(order))
    except (ValueError, UATError) as exc:
        raise ParseError(f"{source}: {exc}", lineno, offset + 1) from None
    gen_texts = []
    for lineno, g, offset in gens:
        try:
            ring.parse(g)
        except ParseError as exc:
            _reraise(exc, source, lineno, offset)
        gen_texts.append(g)
    point_texts = []
    for lineno, value, offset in pts:
        coords = _parse_point(F, source, lineno, value, offset)
        if len(coords) != len(names):
            raise ParseError(f"{source}: point has {len(coords)} coordinates, expected {len(names)}", lineno, offset + 1)
        point_texts.append([c.strip() for c in value.split(",")])
    return IdealFile(spec, names, order, gen_texts, point_texts, source)


@dataclass
class PointsFile:
    field_spec: str
    variables: tuple
    points: list  # lists of FieldElement
    source: str = "<string>"

    @property
    def field(self) -> FieldTower:
        return parse_field(self.field_spec)


def parse_points_text(text: str, source: str = "<string>") -> PointsFile:
    spec = None
    names = None
    raw_points = []
    for lineno, raw, body in _lines(text):
        kv = _key_value(source, lineno, raw, body, POINT_KEYS)
        if kv is None:
            raw_points.append((lineno, body.strip(), raw.index(body.strip())))
            continue
        key, value, offset = kv
        if key == "field":
            if spec is not None:
                raise ParseError(f"{source}: duplicate key 'field'", lineno, 1)
            spec = (lineno, value, offset)
        elif key == "vars":
            if names is not None:
                raise ParseError(f"{source}: duplicate key 'vars'", lineno, 1)
            names = _parse_vars(source, lineno, value, offset)
        else:
            raw_points.append((lineno, value, offset))
    if spec is None:
        raise ParseError(f"{source}: missing 'field:' line", 1, 1)
    lineno, value, offset = spec
    try:
        F = parse_field(value)
    except ParseError as exc:
        _reraise(exc, source, lineno, offset)
    except (UATError, ValueError) as exc:
        raise ParseError(f"{source}: {exc}", lineno, offset + 1) from None
    points = [_parse_point(F, source, ln, v, off) for ln, v, off in raw_points]
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise ParseError(f"{source}: points have different numbers of coordinates", raw_points[0][0], 1)
    if names is not None and dims and dims != {len(names)}:
        raise ParseError(f"{source}: points do not match the 'vars:' line", raw_points[0][0], 1)
    return PointsFile(value, names or (), points, source)


def data_dir():
    return resources.files("uat") / "data"


def resolve(path) -> Path:
    """``path`` itself if it exists, else a bundled data file of that name."""
    p = Path(path)
    if p.exists():
        return p
    bundled = data_dir() / p.name
    if bundled.is_file():
        return Path(str(bundled))
    raise FileNotFoundError(f"no such file: {path}")


def bundled_files(suffix: str = ""):
    return sorted(p.name for p in data_dir().iterdir() if p.name.endswith(suffix))


def load_ideal(path, max_tower_depth: int | None = None) -> IdealFile:
    p = resolve(path)
    return parse_ideal_text(p.read_text(), str(path), max_tower_depth)


def load_points(path) -> PointsFile:
    p = resolve(path)
    return parse_points_text(p.read_text(), str(path))
