"""Epsilon-free NFAs: compilation from regex ASTs, a text format, membership."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .regex import Concat, Epsilon, Node, Star, Symbol, Union, parse

__all__ = ["AutomatonFormatError", "Nfa", "compile", "load_automaton", "dump_automaton", "accepts"]


class AutomatonFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Nfa:
    """Automaton over string symbols with dense integer states.

    Every transition ``(q, symbol, p)`` consumes a symbol; there are no
    epsilon moves.
    """

    num_states: int
    starts: frozenset
    finals: frozenset
    transitions: frozenset
    state_names: tuple = ()
    by_symbol: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.state_names:
            object.__setattr__(self, "state_names", tuple(f"q{i}" for i in range(self.num_states)))
        if len(self.state_names) != self.num_states:
            raise ValueError("state_names length mismatch")
        states = range(self.num_states)
        if not (self.starts <= set(states) and self.finals <= set(states)):
            raise ValueError("start/final states out of range")
        index = defaultdict(list)
        for q, sym, p in sorted(self.transitions):
            if sym is None or sym == "":
                raise ValueError("epsilon transition in Nfa")
            if q not in states or p not in states:
                raise ValueError(f"transition {(q, sym, p)} out of range")
            index[sym].append((q, p))
        object.__setattr__(self, "by_symbol", dict(index))

    @property
    def alphabet(self) -> set[str]:
        return set(self.by_symbol)

    def accepts_empty(self) -> bool:
        return bool(self.starts & self.finals)


# -- Thompson construction -------------------------------------------------

class _Builder:
    def __init__(self):
        self.n = 0
        self.eps: dict[int, list[int]] = defaultdict(list)
        self.moves: list[tuple[int, str, int]] = []

    def state(self) -> int:
        self.n += 1
        return self.n - 1

    def build(self, node: Node) -> tuple[int, int]:
        if isinstance(node, Symbol):
            s, t = self.state(), self.state()
            self.moves.append((s, node.name, t))
            return s, t
        if isinstance(node, Epsilon):
            s, t = self.state(), self.state()
            self.eps[s].append(t)
            return s, t
        if isinstance(node, Concat):
            first, last = self.build(node.children[0])
            for child in node.children[1:]:
                s, t = self.build(child)
                self.eps[last].append(s)
                last = t
            return first, last
        if isinstance(node, Union):
            s, t = self.state(), self.state()
            for child in node.children:
                cs, ct = self.build(child)
                self.eps[s].append(cs)
                self.eps[ct].append(t)
            return s, t
        if isinstance(node, Star):
            s, t = self.state(), self.state()
            cs, ct = self.build(node.child)
            self.eps[s] += [cs, t]
            self.eps[ct] += [cs, t]
            return s, t
        raise TypeError(f"not a regex node: {node!r}")


def _closure(eps: dict[int, list[int]], q: int) -> set[int]:
    seen = {q}
    stack = [q]
    while stack:
        for r in eps.get(stack.pop(), ()):
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


def _trim(n: int, starts: set, finals: set, moves: set) -> Nfa:
    """Keep states that are reachable from a start and co-reachable to a final."""
    fwd, bwd = defaultdict(set), defaultdict(set)
    for q, _, p in moves:
        fwd[q].add(p)
        bwd[p].add(q)

    def sweep(seeds, adj):
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            for r in adj[stack.pop()]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return seen

    live = sweep(starts, fwd) & sweep(finals, bwd)
    live |= starts  # an empty language still needs a start state
    order = sorted(live)
    rename = {q: i for i, q in enumerate(order)}
    return Nfa(
        num_states=len(order),
        starts=frozenset(rename[q] for q in starts),
        finals=frozenset(rename[q] for q in finals if q in live),
        transitions=frozenset((rename[q], s, rename[p]) for q, s, p in moves
                              if q in live and p in live),
    )


def compile(ast: Node | str) -> Nfa:
    """Compile a regex to an epsilon-free NFA.

    Thompson construction, then epsilon-closure elimination: a state inherits
    the symbol moves of its closure and is final when its closure meets the
    accepting state. Dead and unreachable states are trimmed.
    """
    if isinstance(ast, str):
        ast = parse(ast)
    b = _Builder()
    start, accept = b.build(ast)

    by_source = defaultdict(list)
    for q, sym, p in b.moves:
        by_source[q].append((sym, p))

    moves = set()
    finals = set()
    for q in range(b.n):
        cl = _closure(b.eps, q)
        if accept in cl:
            finals.add(q)
        for r in cl:
            for sym, p in by_source[r]:
                moves.add((q, sym, p))
    nfa = _trim(b.n, {start}, finals, moves)
    assert all(sym for _, sym, _ in nfa.transitions)
    return nfa


# -- text format -----------------------------------------------------------

def load_automaton(text) -> Nfa:
    """Read ``state``/``start``/``final``/``trans`` lines into an :class:`Nfa`.

    States keep their declaration order. Every referenced state must be
    declared and at least one ``start`` and one ``final`` line must exist.
    """
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")

    names: dict[str, int] = {}
    starts, finals, moves = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kw, args = parts[0], parts[1:]
        if kw == "state" and len(args) == 1:
            if args[0] in names:
                raise AutomatonFormatError(f"state {args[0]!r} declared twice", lineno)
            names[args[0]] = len(names)
        elif kw in ("start", "final") and len(args) == 1:
            (starts if kw == "start" else finals).append((args[0], lineno))
        elif kw == "trans" and len(args) == 3:
            moves.append((args, lineno))
        else:
            raise AutomatonFormatError(f"cannot parse {line!r}", lineno)

    def sid(name, lineno):
        if name not in names:
            raise AutomatonFormatError(f"undeclared state {name!r}", lineno)
        return names[name]

    if not starts:
        raise AutomatonFormatError("no start state declared")
    if not finals:
        raise AutomatonFormatError("no final state declared")
    return Nfa(
        num_states=len(names),
        starts=frozenset(sid(n, ln) for n, ln in starts),
        finals=frozenset(sid(n, ln) for n, ln in finals),
        transitions=frozenset((sid(q, ln), sym, sid(p, ln)) for (q, sym, p), ln in moves),
        state_names=tuple(names),
    )


def dump_automaton(m: Nfa) -> str:
    names = m.state_names
    lines = [f"state {n}" for n in names]
    lines += [f"start {names[q]}" for q in sorted(m.starts)]
    lines += [f"final {names[q]}" for q in sorted(m.finals)]
    lines += [f"trans {names[q]} {s} {names[p]}" for q, s, p in sorted(m.transitions)]
    return "\n".join(lines) + "\n"


def accepts(m: Nfa, word: Iterable[str]) -> bool:
    """Subset simulation; unknown symbols reject."""
    current = set(m.starts)
    for sym in word:
        pairs = m.by_symbol.get(sym)
        if not pairs:
            return False
        current = {p for q, p in pairs if q in current}
        if not current:
            return False
    return bool(current & m.finals)
