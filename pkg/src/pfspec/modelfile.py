"""The model file format: a tiny line-oriented grammar for posets, monoids,
semirings and lattices.

    # comments run to end of line
    poset P { elements: a b c ; leq: a<=b b<=c }
    monoid M { elements: 1 a 0 ; unit: 1 ; mul: 1 a 0  a 0 0  0 0 0 }
    semiring R { elements: 0 1 ; zero: 0 ; one: 1 ;
                 add: 0 1 1 1 ; mul: 0 0 0 1 ; order: discrete }
    lattice L { poset: P }

Tables are row-major lists of element names; ``order`` is either the word
``discrete`` or the name of a declared poset.  Whitespace is free inside a
block; parsing is positional enough to report line/column on errors.
"""

from dataclasses import dataclass, field

from .algebra import FiniteCommMonoid, FiniteCommSemiring
from .errors import NonTotalTable, ParseError, UnknownReference
from .order import build_poset, lattice_structure


@dataclass
class PosetBlock:
    name: str
    elements: list
    relations: list  # pairs of names
    line: int = field(default=0, compare=False)


@dataclass
class MonoidBlock:
    name: str
    elements: list
    unit: str
    mul: list
    line: int = field(default=0, compare=False)


@dataclass
class SemiringBlock:
    name: str
    elements: list
    zero: str
    one: str
    add: list
    mul: list
    order: str = "discrete"
    line: int = field(default=0, compare=False)


@dataclass
class LatticeBlock:
    name: str
    poset: str
    line: int = field(default=0, compare=False)


@dataclass
class ModelFile:
    blocks: list = field(default_factory=list)

    def names(self):
        return [b.name for b in self.blocks]

    def get(self, name):
        for b in self.blocks:
            if b.name == name:
                return b
        raise UnknownReference(name)


class _Tokens:
    def __init__(self, text):
        self.items = []  # (token, line, column)
        for ln, line in enumerate(text.splitlines(), start=1):
            body = line.split("#", 1)[0]
            col = 0
            token = ""
            start = 0
            for col, ch in enumerate(body + " ", start=1):
                if ch.isspace() or ch in "{};":
                    if token:
                        self.items.append((token, ln, start))
                        token = ""
                    if ch in "{};":
                        self.items.append((ch, ln, col))
                else:
                    if not token:
                        start = col
                    token += ch
        self.pos = 0

    def peek(self):
        if self.pos < len(self.items):
            return self.items[self.pos]
        return (None, -1, -1)

    def next(self, expect=None):
        token, ln, col = self.peek()
        if token is None:
            raise ParseError("unexpected end of file", ln, col)
        if expect is not None and token != expect:
            raise ParseError(f"expected {expect!r}, found {token!r}", ln, col)
        self.pos += 1
        return token, ln, col

    def done(self):
        return self.pos >= len(self.items)


_BLOCK_KEYS = {
    "poset": ["elements", "leq"],
    "monoid": ["elements", "unit", "mul"],
    "semiring": ["elements", "zero", "one", "add", "mul", "order"],
    "lattice": ["poset"],
}


def parse_model_text(text):
    tokens = _Tokens(text)
    model = ModelFile()
    seen = set()
    while not tokens.done():
        kind, ln, col = tokens.next()
        if kind not in _BLOCK_KEYS:
            raise ParseError(f"unknown block kind {kind!r}", ln, col)
        name, nln, ncol = tokens.next()
        if name in "{};":
            raise ParseError("missing block name", nln, ncol)
        if name in seen:
            raise ParseError(f"duplicate block name {name!r}", nln, ncol)
        seen.add(name)
        tokens.next("{")
        fields = {}
        while True:
            token, fln, fcol = tokens.next()
            if token == "}":
                break
            if token == ";":
                continue
            if not token.endswith(":"):
                raise ParseError(f"expected a key like 'elements:', found {token!r}", fln, fcol)
            key = token[:-1]
            if key not in _BLOCK_KEYS[kind]:
                raise ParseError(f"unknown key {key!r} in {kind} block", fln, fcol)
            if key in fields:
                raise ParseError(f"duplicate key {key!r}", fln, fcol)
            values = []
            while tokens.peek()[0] not in (";", "}", None):
                values.append(tokens.next()[0])
            fields[key] = (values, fln)
        model.blocks.append(_build_block(kind, name, fields, ln))
    _resolve_references(model)
    return model


def _require(fields, key, kind, name, line):
    if key not in fields:
        raise ParseError(f"{kind} {name!r} is missing {key!r}", line, 1)
    return fields[key][0]


def _single(fields, key, kind, name, line):
    values = _require(fields, key, kind, name, line)
    if len(values) != 1:
        raise ParseError(f"{kind} {name!r}: {key!r} wants one value", line, 1)
    return values[0]


def _build_block(kind, name, fields, line):
    if kind == "poset":
        elements = _require(fields, "elements", kind, name, line)
        relations = []
        if "leq" in fields:
            for item, rln in [(v, fields["leq"][1]) for v in fields["leq"][0]]:
                if "<=" not in item:
                    raise ParseError(f"relation {item!r} is not of the form a<=b", rln, 1)
                a, b = item.split("<=", 1)
                relations.append((a, b))
        return PosetBlock(name, elements, relations, line)
    if kind == "monoid":
        return MonoidBlock(
            name,
            _require(fields, "elements", kind, name, line),
            _single(fields, "unit", kind, name, line),
            _require(fields, "mul", kind, name, line),
            line,
        )
    if kind == "semiring":
        order = "discrete"
        if "order" in fields:
            order = _single(fields, "order", kind, name, line)
        return SemiringBlock(
            name,
            _require(fields, "elements", kind, name, line),
            _single(fields, "zero", kind, name, line),
            _single(fields, "one", kind, name, line),
            _require(fields, "add", kind, name, line),
            _require(fields, "mul", kind, name, line),
            order,
            line,
        )
    if kind == "lattice":
        return LatticeBlock(name, _single(fields, "poset", kind, name, line), line)
    raise AssertionError(kind)


def _resolve_references(model):
    posets = {b.name for b in model.blocks if isinstance(b, PosetBlock)}
    for block in model.blocks:
        if isinstance(block, SemiringBlock):
            if block.order != "discrete" and block.order not in posets:
                raise UnknownReference(block.order, block.line)
        if isinstance(block, LatticeBlock):
            if block.poset not in posets:
                raise UnknownReference(block.poset, block.line)
        if isinstance(block, (MonoidBlock, SemiringBlock)):
            known = set(block.elements)
            tables = [("mul", block.mul)]
            if isinstance(block, SemiringBlock):
                tables.append(("add", block.add))
            n = len(block.elements)
            for tname, table in tables:
                if len(table) != n * n:
                    raise NonTotalTable(f"{block.name}.{tname}", n * n, len(table))
                for entry in table:
                    if entry not in known:
                        raise UnknownReference(entry, block.line)
        if isinstance(block, PosetBlock):
            known = set(block.elements)
            for a, b in block.relations:
                if a not in known or b not in known:
                    raise UnknownReference(a if a not in known else b, block.line)


def parse_model(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model_text(fh.read())


def pretty_print(model):
    """Canonical text form; parse(pretty_print(m)) == m."""
    out = []
    for block in model.blocks:
        if isinstance(block, PosetBlock):
            rel = " ".join(f"{a}<={b}" for a, b in block.relations)
            body = f"elements: {' '.join(block.elements)}"
            if rel:
                body += f" ; leq: {rel}"
            out.append(f"poset {block.name} {{ {body} }}")
        elif isinstance(block, MonoidBlock):
            out.append(
                f"monoid {block.name} {{ elements: {' '.join(block.elements)}"
                f" ; unit: {block.unit} ; mul: {' '.join(block.mul)} }}"
            )
        elif isinstance(block, SemiringBlock):
            out.append(
                f"semiring {block.name} {{ elements: {' '.join(block.elements)}"
                f" ; zero: {block.zero} ; one: {block.one}"
                f" ; add: {' '.join(block.add)}"
                f" ; mul: {' '.join(block.mul)}"
                f" ; order: {block.order} }}"
            )
        elif isinstance(block, LatticeBlock):
            out.append(f"lattice {block.name} {{ poset: {block.poset} }}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# realization into package structures


def realize_poset(model, name):
    block = model.get(name)
    if not isinstance(block, PosetBlock):
        raise UnknownReference(f"{name} is not a poset")
    return build_poset(block.elements, block.relations)


def realize_lattice(model, name):
    block = model.get(name)
    if isinstance(block, LatticeBlock):
        return lattice_structure(realize_poset(model, block.poset))
    raise UnknownReference(f"{name} is not a lattice")


def _table(names, flat):
    n = len(names)
    index = {x: i for i, x in enumerate(names)}
    return [
        [index[flat[i * n + j]] for j in range(n)] for i in range(n)
    ]


def realize_monoid(model, name):
    block = model.get(name)
    if not isinstance(block, MonoidBlock):
        raise UnknownReference(f"{name} is not a monoid")
    index = {x: i for i, x in enumerate(block.elements)}
    return FiniteCommMonoid(
        block.elements, index[block.unit], _table(block.elements, block.mul)
    )


def realize_semiring(model, name):
    block = model.get(name)
    if not isinstance(block, SemiringBlock):
        raise UnknownReference(f"{name} is not a semiring")
    index = {x: i for i, x in enumerate(block.elements)}
    semiring = FiniteCommSemiring(
        block.elements,
        index[block.zero],
        index[block.one],
        _table(block.elements, block.add),
        _table(block.elements, block.mul),
    )
    order = None
    if block.order != "discrete":
        order = realize_poset(model, block.order)
    return semiring, order
