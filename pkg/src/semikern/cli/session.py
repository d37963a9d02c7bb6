"""Line-oriented session files.

::

    # comments start with '#'
    category lintop p=2
    object A dims=[2] open={[1,1]}
    object S dims=[1]
    morphism a S -> A matrix=[[1],[0]]

``dims`` is ``[n]`` for vect/lintop and the invariant-factor list for
finab/topab. ``open`` lists generators of the open subobject and is allowed
only for the decorated kinds; when omitted the object is discrete. Objects
and morphisms share one namespace.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field

from ..catcore import Category, InvalidMorphism, Morphism
from ..exactlin import Matrix
from ..instances import Finab, FinabObject, Vect, VectObject, decorate

KINDS = ("vect", "finab", "lintop", "topab")
DEFAULT_P = 2

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_CATEGORY = re.compile(r"^category\s+(\S+)(?:\s+p\s*=\s*(\S+))?\s*$")
_OBJECT = re.compile(rf"^object\s+({_NAME})\s+dims\s*=\s*(\[[^\]]*\])"
                     r"(?:\s+open\s*=\s*\{([^}]*)\})?\s*$")
_MORPHISM = re.compile(rf"^morphism\s+({_NAME})\s+({_NAME})\s*->\s*({_NAME})"
                       r"\s+matrix\s*=\s*(\[.*\])\s*$")


class SessionError(Exception):
    def __init__(self, line: int | None, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


def make_category(kind: str, p: int | None = None) -> Category:
    if kind == "vect":
        return Vect(p or DEFAULT_P)
    if kind == "lintop":
        return decorate(Vect(p or DEFAULT_P), "lintop")
    if kind in ("finab", "topab"):
        if p is not None:
            raise ValueError(f"p= does not apply to {kind}")
        C = Finab()
        return C if kind == "finab" else decorate(C, "topab")
    raise ValueError(f"unknown category kind {kind!r} (expected one of {', '.join(KINDS)})")


@dataclass
class Session:
    kind: str | None = None
    p: int | None = None
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    _category: Category | None = field(default=None, repr=False, compare=False)

    @property
    def category(self) -> Category:
        if self._category is None:
            if self.kind is None:
                raise SessionError(None, "session has no category line")
            self._category = make_category(self.kind, self.p)
        return self._category

    @property
    def decorated(self) -> bool:
        return self.kind in ("lintop", "topab")

    @classmethod
    def new(cls, kind: str, p: int | None = None) -> Session:
        if kind in ("vect", "lintop") and p is None:
            p = DEFAULT_P
        s = cls(kind, p)
        s.category  # validate early
        return s

    def names(self):
        return set(self.objects) | set(self.morphisms)

    def add_object(self, name: str, obj):
        if name in self.names():
            raise SessionError(None, f"duplicate name {name!r}")
        self.objects[name] = obj

    def add_morphism(self, name: str, m: Morphism):
        if name in self.names():
            raise SessionError(None, f"duplicate name {name!r}")
        self.morphisms[name] = m

    def object_name(self, obj) -> str | None:
        for name, X in self.objects.items():
            if X == obj:
                return name
        return None

    def get_morphism(self, name: str) -> Morphism:
        if name not in self.morphisms:
            raise SessionError(None, f"unknown morphism {name!r}")
        return self.morphisms[name]

    def get_object(self, name: str):
        if name not in self.objects:
            raise SessionError(None, f"unknown object {name!r}")
        return self.objects[name]


def _literal(text: str, lineno: int, what: str):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        raise SessionError(lineno, f"malformed {what}: {text}") from None


def _int_list(x, lineno: int, what: str) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) for v in x):
        raise SessionError(lineno, f"{what} must be a list of integers")
    return x


def _base_object(session: Session, dims: list[int], lineno: int):
    if session.kind in ("vect", "lintop"):
        if len(dims) != 1 or dims[0] < 0:
            raise SessionError(lineno, "vector-space objects take dims=[n] with n >= 0")
        return VectObject(dims[0])
    try:
        return FinabObject(tuple(dims))
    except ValueError as exc:
        raise SessionError(lineno, str(exc)) from None


def _parse_open(text: str, lineno: int) -> list[list[int]]:
    text = text.strip()
    if not text:
        return []
    out = []
    for part in text.split(";"):
        out.append(_int_list(_literal(part.strip(), lineno, "open generator"), lineno, "open generator"))
    return out


def parse_session(text: str) -> Session:
    s = Session()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split()[0]
        if keyword == "category":
            m = _CATEGORY.match(line)
            if not m:
                raise SessionError(lineno, "expected: category <kind> [p=<prime>]")
            if s.kind is not None:
                raise SessionError(lineno, "category declared twice")
            kind, p = m.group(1), m.group(2)
            if kind not in KINDS:
                raise SessionError(lineno, f"unknown category kind {kind!r}")
            if p is not None and not p.isdigit():
                raise SessionError(lineno, f"p must be a prime, got {p!r}")
            try:
                s = Session.new(kind, int(p) if p is not None else None)
            except ValueError as exc:
                raise SessionError(lineno, str(exc)) from None
            continue
        if s.kind is None:
            raise SessionError(lineno, "category line must come first")
        C = s.category
        if keyword == "object":
            m = _OBJECT.match(line)
            if not m:
                raise SessionError(lineno, "expected: object <name> dims=[...] [open={[...];...}]")
            name, dims, open_text = m.groups()
            if name in s.names():
                raise SessionError(lineno, f"duplicate name {name!r}")
            base = _base_object(s, _int_list(_literal(dims, lineno, "dims"), lineno, "dims"), lineno)
            if open_text is not None and not s.decorated:
                raise SessionError(lineno, f"open= is only allowed for lintop/topab, not {s.kind}")
            if s.decorated:
                gens = _parse_open(open_text or "", lineno)
                size = C.base.object_size(base)
                if any(len(g) != size for g in gens):
                    raise SessionError(lineno, f"open generators must have {size} coordinates")
                obj = C.obj(base, C.base.sub_span(base, gens))
            else:
                obj = base
            s.objects[name] = obj
        elif keyword == "morphism":
            m = _MORPHISM.match(line)
            if not m:
                raise SessionError(lineno, "expected: morphism <name> <src> -> <dst> matrix=[[...],...]")
            name, src, dst, mat = m.groups()
            if name in s.names():
                raise SessionError(lineno, f"duplicate name {name!r}")
            for ref in (src, dst):
                if ref not in s.objects:
                    raise SessionError(lineno, f"undefined object {ref!r}")
            A, B = s.objects[src], s.objects[dst]
            rows = _literal(mat, lineno, "matrix")
            if not isinstance(rows, list) or not all(
                    isinstance(r, list) and all(isinstance(v, int) for v in r) for r in rows):
                raise SessionError(lineno, "matrix must be a list of integer rows")
            cols = C.object_size(A)
            if any(len(r) != cols for r in rows) or len(rows) != C.object_size(B):
                raise SessionError(lineno, f"matrix shape does not match {src} -> {dst} "
                                           f"({C.object_size(B)}x{cols} expected)")
            data = Matrix.from_rows(rows, cols)
            if s.decorated:
                if not C.base.is_valid_morphism(data, A.base, B.base):
                    raise SessionError(lineno, f"{name} is not a well-defined homomorphism")
                if not C.is_continuous(data, A, B):
                    raise SessionError(lineno, f"{name} is not continuous: the open of {src} "
                                               f"is not mapped into the open of {dst}")
            try:
                s.morphisms[name] = C.morphism(A, B, data)
            except InvalidMorphism:
                raise SessionError(lineno, f"{name} is not a well-defined homomorphism") from None
        else:
            raise SessionError(lineno, f"unknown statement {keyword!r}")
    return s


def _fmt_vec(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def _fmt_matrix(M: Matrix) -> str:
    return "[" + ",".join(_fmt_vec(r) for r in M.tolist()) + "]"


def emit_object_line(session: Session, name: str, obj) -> str:
    C = session.category
    base = obj.base if session.decorated else obj
    dims = [base.dim] if session.kind in ("vect", "lintop") else list(base.invariant_factors)
    line = f"object {name} dims={_fmt_vec(dims)}"
    if session.decorated:
        gens = C.base.sub_generators(obj.open)
        line += " open={" + ";".join(_fmt_vec(g) for g in gens) + "}"
    return line


def emit_session(session: Session) -> str:
    lines = []
    if session.kind is not None:
        head = f"category {session.kind}"
        if session.p is not None:
            head += f" p={session.p}"
        lines.append(head)
    for name, obj in session.objects.items():
        lines.append(emit_object_line(session, name, obj))
    for name, m in session.morphisms.items():
        src, dst = session.object_name(m.source), session.object_name(m.target)
        if src is None or dst is None:
            raise SessionError(None, f"endpoints of {name} are not named objects")
        lines.append(f"morphism {name} {src} -> {dst} matrix={_fmt_matrix(m.data)}")
    return "\n".join(lines) + ("\n" if lines else "")
