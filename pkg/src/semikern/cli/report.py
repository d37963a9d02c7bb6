"""Reports: a command echo, a results tree, and a verdict.

The JSON form is the stable interface. It is written with sorted keys and a
fixed indent so that equal reports are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..catcore import Category, Morphism, QuotientPair, SubobjectPair


@dataclass
class Report:
    command: str
    args: list = field(default_factory=list)
    category: dict | None = None
    results: dict = field(default_factory=dict)
    ok: bool = True
    errors: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"command": self.command, "args": list(self.args), "category": self.category,
                "results": self.results, "ok": self.ok, "errors": list(self.errors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        d = json.loads(text)
        return cls(d["command"], d["args"], d["category"], d["results"], d["ok"], d["errors"])

    def to_text(self) -> str:
        head = " ".join([self.command, *map(str, self.args)])
        lines = [f"== {head} ==" + (f"  [{self.category['name']}]" if self.category else "")]
        _text_lines(self.results, lines, 0)
        for e in self.errors:
            lines.append(f"error: {e}")
        lines.append("verdict: " + ("OK" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else str(v)


def _text_lines(node, lines, depth):
    pad = "  " * depth
    for key in sorted(node):
        v = node[key]
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{key}:")
            _text_lines(v, lines, depth + 1)
        elif isinstance(v, str) and "\n" in v:
            lines.append(f"{pad}{key}: |")
            lines.extend(pad + "  " + s for s in v.rstrip("\n").split("\n"))
        else:
            lines.append(f"{pad}{key}: {_scalar(v)}")


def category_json(C: Category, kind: str | None, p: int | None) -> dict:
    return {"kind": kind, "p": p, "name": C.name}


def object_json(C: Category, A) -> dict[str, Any]:
    return C.describe_object(A)


def morphism_json(C: Category, m: Morphism) -> dict[str, Any]:
    return {"source": object_json(C, m.source), "target": object_json(C, m.target),
            "matrix": m.data.tolist()}


def subobject_json(C: Category, S: SubobjectPair) -> dict[str, Any]:
    return {"object": object_json(C, S.sub), "embed": morphism_json(C, S.embed)}


def quotient_json(C: Category, Q: QuotientPair) -> dict[str, Any]:
    return {"object": object_json(C, Q.quot), "project": morphism_json(C, Q.project)}


def optional_morphism(C: Category, m: Morphism | None):
    return None if m is None else morphism_json(C, m)
