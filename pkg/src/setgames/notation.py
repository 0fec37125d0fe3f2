"""Brace notation for games: parser, evaluator and printer.

Grammar (whitespace is ignored)::

    expr  := term ('+' term)*
    term  := '-' term | atom
    atom  := '0' | '1' | '-1' | '*' | '{' list '|' list '}' | '(' expr ')'
    list  := empty | expr (',' expr)*

``-1`` is read as unary minus applied to ``1``; it evaluates to the same game
as the named constant.  There is no binary minus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from setgames.core import GameId, GameStore

CONSTANTS = ("0", "1", "-1", "*")


@dataclass(frozen=True)
class Const:
    name: str

    def __post_init__(self):
        if self.name not in CONSTANTS:
            raise ValueError(f"unknown constant {self.name!r}")


@dataclass(frozen=True)
class Braces:
    left: tuple["Expr", ...] = ()
    right: tuple["Expr", ...] = ()


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


Expr = Union[Const, Braces, Neg, Sum]


class ParseError(ValueError):
    """Syntax error at a 1-based character ``position``."""

    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        self.message = message
        self.position = position
        self.expected = expected
        text = f"position {position}: {message}"
        if expected:
            text += f" (expected one of: {' '.join(sorted(expected))})"
        super().__init__(text)


_SINGLE = set("01*{}|(),+-")
_ATOM_START = frozenset({"0", "1", "*", "{", "(", "-"})
_END = "end of input"


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    for i, ch in enumerate(text, start=1):
        if ch.isspace():
            continue
        if ch not in _SINGLE:
            raise ParseError(f"unexpected character {ch!r}", i, _ATOM_START)
        tokens.append((ch, i))
    tokens.append((_END, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.open_braces: list[tuple[str, int]] = []

    def peek(self) -> tuple[str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: set[str]) -> ParseError:
        tok, at = self.peek()
        if tok == _END and self.open_braces:
            opener, where = self.open_braces[-1]
            return ParseError(f"unbalanced {opener!r} opened at position {where}", at, frozenset(expected))
        if tok in "})" and not self.open_braces:
            return ParseError(f"unbalanced {tok!r}", at, frozenset(expected))
        shown = tok if tok == _END else repr(tok)
        return ParseError(f"unexpected {shown}", at, frozenset(expected))

    def expect(self, tok: str) -> None:
        if self.peek()[0] != tok:
            raise self.fail({tok})
        self.advance()

    def parse(self) -> Expr:
        if self.peek()[0] == _END:
            raise ParseError("empty input", 1, _ATOM_START)
        e = self.expr()
        tok, at = self.peek()
        if tok == "-":
            raise ParseError("subtraction is not defined; write +-", at, frozenset({"+"}))
        if tok != _END:
            raise self.fail({"+", _END})
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[0] == "+":
            self.advance()
            e = Sum(e, self.term())
        if self.peek()[0] == "-":
            raise ParseError("subtraction is not defined; write +-", self.peek()[1], frozenset({"+"}))
        return e

    def term(self) -> Expr:
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.term())
        return self.atom()

    def atom(self) -> Expr:
        tok, at = self.peek()
        if tok in ("0", "1", "*"):
            self.advance()
            return Const(tok)
        if tok == "(":
            self.advance()
            self.open_braces.append(("(", at))
            e = self.expr()
            self.expect(")")
            self.open_braces.pop()
            return e
        if tok == "{":
            self.advance()
            self.open_braces.append(("{", at))
            left = self.expr_list("|")
            self.expect("|")
            right = self.expr_list("}")
            self.expect("}")
            self.open_braces.pop()
            return Braces(tuple(left), tuple(right))
        raise self.fail(set(_ATOM_START))

    def expr_list(self, closer: str) -> list[Expr]:
        if self.peek()[0] == closer:
            return []
        items = [self.expr()]
        while self.peek()[0] == ",":
            self.advance()
            items.append(self.expr())
        if self.peek()[0] != closer:
            raise self.fail({",", "+", closer})
        return items


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(store: GameStore, e: Expr | str) -> GameId:
    """Fold an expression (or its text) into a game handle."""
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, Const):
        return {
            "0": store.zero,
            "1": store.one,
            "-1": store.neg_one,
            "*": store.star,
        }[e.name]()
    if isinstance(e, Braces):
        return store.intern(
            [evaluate(store, x) for x in e.left],
            [evaluate(store, x) for x in e.right],
        )
    if isinstance(e, Neg):
        return store.negate(evaluate(store, e.operand))
    if isinstance(e, Sum):
        return store.sum(evaluate(store, e.left), evaluate(store, e.right))
    raise TypeError(f"not an expression: {e!r}")


def format_expr(e: Expr) -> str:
    """Render an expression tree back to parseable text."""
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Braces):
        left = ",".join(format_expr(x) for x in e.left)
        right = ",".join(format_expr(x) for x in e.right)
        return "{" + left + "|" + right + "}"
    if isinstance(e, Neg):
        inner = format_expr(e.operand)
        return "-(" + inner + ")" if isinstance(e.operand, Sum) else "-" + inner
    if isinstance(e, Sum):
        right = format_expr(e.right)
        if isinstance(e.right, Sum):
            right = "(" + right + ")"
        return format_expr(e.left) + "+" + right
    raise TypeError(f"not an expression: {e!r}")


_NAMED = {
    "0": ((), ()),
    "1": ((0,), ()),
    "-1": ((), (0,)),
    "*": ((0,), (0,)),
}


class Printer:
    """Prints games of one store, caching rendered forms by handle.

    Options are ordered by their fully expanded form, shorter first and then
    lexicographically, so the output does not depend on handle order.
    """

    def __init__(self, store: GameStore):
        self.store = store
        self._named: dict[GameId, str] = {}
        self._expanded: dict[GameId, str] = {}
        self._folded: dict[GameId, str] = {}

    def _resolve_named(self) -> None:
        # printing must not grow the store, so named games are only looked up
        if len(self._named) == len(_NAMED):
            return
        for name, (left, right) in _NAMED.items():
            g = self.store.lookup(left, right)
            if g is not None:
                self._named[g] = name

    def _ordered(self, opts: tuple[GameId, ...]) -> list[GameId]:
        expanded = self._expanded
        return sorted(opts, key=lambda y: (len(expanded[y]), expanded[y]))

    def _fill(self, g: GameId, fold: bool) -> str:
        cache = self._folded if fold else self._expanded
        if fold:
            self._resolve_named()
            self._fill(g, fold=False)  # option order needs every expanded form
        data = self.store.data
        stack = [g]
        while stack:
            x = stack[-1]
            if x in cache:
                stack.pop()
                continue
            if fold and x in self._named:
                cache[x] = self._named[x]
                stack.pop()
                continue
            left, right = data(x)
            pending = [y for y in left + right if y not in cache]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            cache[x] = (
                "{" + ",".join(cache[y] for y in self._ordered(left))
                + "|" + ",".join(cache[y] for y in self._ordered(right)) + "}"
            )
        return cache[g]

    def expanded(self, g: GameId) -> str:
        return self._expanded.get(g) or self._fill(g, fold=False)

    def folded(self, g: GameId) -> str:
        return self._folded.get(g) or self._fill(g, fold=True)

    def __call__(self, g: GameId, fold_constants: bool = True) -> str:
        self.store.data(g)  # validates the handle
        return self.folded(g) if fold_constants else self.expanded(g)


def print_game(store: GameStore, g: GameId, fold_constants: bool = True) -> str:
    return Printer(store)(g, fold_constants)
