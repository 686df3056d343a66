"""Regular path query syntax.

Grammar, loosest binding first::

    union  := concat (('+' | '|') concat)*
    concat := star ('.'? star)*
    star   := atom '*'*
    atom   := SYMBOL | '(' union ')'

When the query contains no ``.`` every non-operator character is its own
symbol, so ``ab*c`` is ``a . b* . c``. As soon as a ``.`` appears, symbols are
maximal runs of non-operator characters, which allows labels such as
``knows.worksAt*``. A lone multi-character label needs ``multichar=True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union as _U

__all__ = [
    "RegexSyntaxError",
    "Symbol",
    "Concat",
    "Union",
    "Star",
    "Epsilon",
    "parse",
    "to_string",
    "is_kleene_free",
    "symbols",
    "node_kinds",
]

OPERATORS = frozenset("()+|.*")


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Star:
    child: "Node"


@dataclass(frozen=True)
class Concat:
    children: tuple

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Concat needs at least two children")


@dataclass(frozen=True)
class Union:
    children: tuple

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Union needs at least two children")


Node = _U[Symbol, Concat, Union, Star, Epsilon]


def concat(*parts: Node) -> Node:
    """Concatenation with nested concatenations flattened."""
    flat: list[Node] = []
    for p in parts:
        if isinstance(p, Concat):
            flat.extend(p.children)
        else:
            flat.append(p)
    return flat[0] if len(flat) == 1 else Concat(tuple(flat))


def union(*parts: Node) -> Node:
    flat: list[Node] = []
    for p in parts:
        if isinstance(p, Union):
            flat.extend(p.children)
        else:
            flat.append(p)
    return flat[0] if len(flat) == 1 else Union(tuple(flat))


def _tokenize(query: str, multichar: bool | None) -> list[tuple[str, str, int]]:
    dot_mode = "." in query if multichar is None else multichar
    tokens = []
    i, n = 0, len(query)
    while i < n:
        ch = query[i]
        if ch.isspace():
            i += 1
        elif ch in OPERATORS:
            tokens.append(("op", ch, i))
            i += 1
        elif dot_mode:
            j = i
            while j < n and query[j] not in OPERATORS and not query[j].isspace():
                j += 1
            tokens.append(("sym", query[i:j], i))
            i = j
        else:
            tokens.append(("sym", ch, i))
            i += 1
    return tokens


class _Parser:
    def __init__(self, query: str, multichar: bool | None):
        self.query = query
        self.tokens = _tokenize(query, multichar)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def where(self) -> int:
        tok = self.peek()
        return tok[2] if tok else len(self.query)

    def parse(self) -> Node:
        if not self.tokens:
            raise RegexSyntaxError("empty query", 0)
        node = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()[1]!r}", self.where())
        return node

    def union(self) -> Node:
        branches = [self.concat()]
        while (tok := self.peek()) and tok[1] in ("+", "|") and tok[0] == "op":
            self.pos += 1
            branches.append(self.concat())
        return union(*branches)

    def concat(self) -> Node:
        parts = [self.star()]
        while (tok := self.peek()) is not None:
            if tok[0] == "op" and tok[1] == ".":
                self.pos += 1
                parts.append(self.star())
            elif tok[0] == "sym" or tok[1] == "(":
                parts.append(self.star())
            else:
                break
        return concat(*parts)

    def star(self) -> Node:
        node = self.atom()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> Node:
        tok = self.peek()
        if tok is None:
            raise RegexSyntaxError("unexpected end of query", len(self.query))
        kind, text, at = tok
        if kind == "sym":
            self.pos += 1
            return Symbol(text)
        if text == "(":
            self.pos += 1
            node = self.union()
            close = self.peek()
            if close is None or close[1] != ")":
                raise RegexSyntaxError("missing ')'", self.where())
            self.pos += 1
            return node
        raise RegexSyntaxError(f"unexpected {text!r}", at)


def parse(query: str, multichar: bool | None = None) -> Node:
    """Parse a query string into an AST.

    ``multichar`` forces symbol tokenization: ``True`` reads maximal
    character runs, ``False`` one character per symbol, ``None`` decides by
    the presence of ``.``.

    >>> parse("ab*c")
    Concat(children=(Symbol(name='a'), Star(child=Symbol(name='b')), Symbol(name='c')))
    """
    return _Parser(query, multichar).parse()


_PREC = {Union: 0, Concat: 1, Star: 2, Symbol: 3, Epsilon: 3}


def to_string(node: Node) -> str:
    """Render an AST back to query syntax (always in ``.`` mode)."""

    def wrap(child: Node, floor: int) -> str:
        s = to_string(child)
        return f"({s})" if _PREC[type(child)] < floor else s

    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, Epsilon):
        raise ValueError("epsilon has no surface syntax")
    if isinstance(node, Star):
        return wrap(node.child, 3) + "*"
    if isinstance(node, Concat):
        return ".".join(wrap(c, 2) for c in node.children)
    if isinstance(node, Union):
        return "+".join(wrap(c, 1) for c in node.children)
    raise TypeError(node)


def node_kinds(node: Node) -> set[type]:
    kinds = {type(node)}
    if isinstance(node, Star):
        kinds |= node_kinds(node.child)
    elif isinstance(node, (Concat, Union)):
        for c in node.children:
            kinds |= node_kinds(c)
    return kinds


def is_kleene_free(node: Node) -> bool:
    """True iff the expression uses only concatenation and union."""
    if isinstance(node, Star):
        return False
    if isinstance(node, (Concat, Union)):
        return all(is_kleene_free(c) for c in node.children)
    return True


def symbols(node: Node) -> list[str]:
    """Distinct symbol names in source order."""
    out: dict[str, None] = {}

    def walk(n: Node):
        if isinstance(n, Symbol):
            out.setdefault(n.name)
        elif isinstance(n, Star):
            walk(n.child)
        elif isinstance(n, (Concat, Union)):
            for c in n.children:
                walk(c)

    walk(node)
    return list(out)
