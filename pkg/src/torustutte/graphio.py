"""Reading and writing graph documents (JSON text).

A document has keys ``name``, ``vertices``, ``edges`` (objects with
``id``, ``from``, ``to``, ``gain``), and optionally ``rotation`` (vertex
-> list of ``"<edge>+"``/``"<edge>-"`` tokens) and ``tags``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .gaingraph import GainGraph, GraphError
from .ribbon import RibbonGraph

KNOWN_TAGS = ("cubic", "cellulation", "planar")


class ParseError(ValueError):
    """Malformed graph document; the message names the offending field."""


@dataclass
class GraphDocument:
    name: str
    graph: GainGraph
    rotation: dict | None = None
    tags: list = field(default_factory=list)

    @property
    def ribbon(self) -> RibbonGraph | None:
        if self.rotation is None:
            return None
        return RibbonGraph(self.graph, self.rotation)

    @classmethod
    def from_ribbon(cls, name: str, R: RibbonGraph, tags=()) -> GraphDocument:
        return cls(name, R.base, R.tokens(), list(tags))


def _require(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise ParseError(f"{where}: {msg}")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse(text: str, source: str = "<document>") -> GraphDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    _require(isinstance(raw, dict), source, "top level must be an object")
    unknown = set(raw) - {"name", "vertices", "edges", "rotation", "tags"}
    _require(not unknown, source, f"unknown keys {sorted(unknown)}")
    name = raw.get("name", "")
    _require(isinstance(name, str), f"{source}: name", "must be a string")
    verts = raw.get("vertices")
    _require(isinstance(verts, list), f"{source}: vertices", "must be a list")
    for i, v in enumerate(verts):
        _require(isinstance(v, str) and v != "", f"{source}: vertices[{i}]",
                 f"vertex id must be a non-empty string, got {v!r}")
    _require(len(set(verts)) == len(verts), f"{source}: vertices", "duplicate vertex id")
    vset = set(verts)
    edges_raw = raw.get("edges")
    _require(isinstance(edges_raw, list), f"{source}: edges", "must be a list")
    edges = []
    seen = set()
    for i, e in enumerate(edges_raw):
        where = f"{source}: edges[{i}]"
        _require(isinstance(e, dict), where, "edge must be an object")
        extra = set(e) - {"id", "from", "to", "gain"}
        _require(not extra, where, f"unknown keys {sorted(extra)}")
        eid = e.get("id")
        _require(isinstance(eid, str) and eid != "", where, f"bad edge id {eid!r}")
        _require(eid[-1] not in "+-", where, f"edge id {eid!r} may not end in '+' or '-'")
        where = f"{source}: edge {eid!r}"
        _require(eid not in seen, where, "duplicate edge id")
        seen.add(eid)
        for key in ("from", "to"):
            end = e.get(key)
            _require(end in vset, where, f"'{key}' references unknown vertex {end!r}")
        gain = e.get("gain")
        _require(isinstance(gain, list) and len(gain) == 2 and all(_is_int(g) for g in gain),
                 where, f"gain must be two integers, got {gain!r}")
        edges.append((eid, e["from"], e["to"], tuple(gain)))
    graph = GainGraph(verts, edges)
    rotation = raw.get("rotation")
    if rotation is not None:
        _require(isinstance(rotation, dict), f"{source}: rotation", "must be an object")
        for v, toks in rotation.items():
            where = f"{source}: rotation[{v!r}]"
            _require(v in vset, where, "unknown vertex")
            _require(isinstance(toks, list), where, "must be a list of tokens")
            for t in toks:
                _require(isinstance(t, str) and len(t) > 1 and t[-1] in "+-" and t[:-1] in seen,
                         where, f"bad rotation token {t!r}")
        rotation = {v: list(rotation.get(v, [])) for v in verts}
        try:
            RibbonGraph(graph, rotation)
        except GraphError as exc:
            raise ParseError(f"{source}: rotation: {exc}") from None
    tags = raw.get("tags", [])
    _require(isinstance(tags, list) and all(isinstance(t, str) for t in tags),
             f"{source}: tags", "must be a list of strings")
    return GraphDocument(name, graph, rotation, list(tags))


def serialize(doc: GraphDocument) -> str:
    """Canonical text: fixed key order, one edge or rotation entry per line."""
    dump = json.dumps
    lines = ["{", f'  "name": {dump(doc.name)},', f'  "vertices": {dump(list(doc.graph.vertices))},']
    edge_lines = [
        "    " + dump({"id": e.id, "from": e.tail, "to": e.head, "gain": list(e.gain)})
        for e in doc.graph.edges
    ]
    if edge_lines:
        lines.append('  "edges": [')
        lines.append(",\n".join(edge_lines))
        lines.append("  ]" + ("," if doc.rotation is not None or doc.tags else ""))
    else:
        lines.append('  "edges": []' + ("," if doc.rotation is not None or doc.tags else ""))
    if doc.rotation is not None:
        rot_lines = [f"    {dump(v)}: {dump(list(doc.rotation.get(v, [])))}" for v in doc.graph.vertices]
        if rot_lines:
            lines.append('  "rotation": {')
            lines.append(",\n".join(rot_lines))
            lines.append("  }" + ("," if doc.tags else ""))
        else:
            lines.append('  "rotation": {}' + ("," if doc.tags else ""))
    if doc.tags:
        lines.append(f'  "tags": {dump(list(doc.tags))}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def resolve_path(path: str | Path) -> Path:
    """Accept ``fixtures/theta`` for ``fixtures/theta.json``."""
    p = Path(path)
    if not p.exists() and p.suffix != ".json" and p.with_suffix(".json").exists():
        return p.with_suffix(".json")
    return p


def load(path: str | Path) -> GraphDocument:
    p = resolve_path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{p}: {exc.strerror}") from None
    return parse(text, str(p))


def load_corpus(directory: str | Path) -> list[GraphDocument]:
    d = Path(directory)
    if d.is_file() or resolve_path(d).is_file():
        return [load(d)]
    if not d.is_dir():
        raise ParseError(f"{d}: no such corpus directory")
    return [load(p) for p in sorted(d.glob("*.json"))]


def save(doc: GraphDocument, path: str | Path) -> None:
    Path(path).write_text(serialize(doc), encoding="utf-8")
