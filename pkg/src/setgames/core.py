"""Interned short games.

A game is stored once per distinct (left options, right options) pair, so two
handles from the same store are equal exactly when the games are equal as
sets.  Option sets are kept as strictly increasing tuples of handles.

Negation, sum and birthday are memoized and evaluated with an explicit work
stack, so deep games do not hit the interpreter recursion limit.
"""

from __future__ import annotations

from typing import Iterable

GameId = int
GameData = tuple[tuple[GameId, ...], tuple[GameId, ...]]

ZERO: GameId = 0


class UnknownGameError(KeyError):
    """Raised for a handle the store did not issue."""

    def __str__(self) -> str:
        return f"unknown game handle: {self.args[0]!r}"


class GameStore:
    """Hash-consing table of short games plus memo tables.

    Handle 0 is always the game ``0 = ({}, {})``.  Handles are only meaningful
    relative to the store that issued them; a handle from another store that
    happens to be in range cannot be detected.

    Not thread-safe: every operation except :meth:`options` and
    :meth:`set_equal` may grow the table.
    """

    def __init__(self) -> None:
        self._data: list[GameData] = []
        self._index: dict[GameData, GameId] = {}
        self._neg_memo: dict[GameId, GameId] = {}
        self._sum_memo: dict[tuple[GameId, GameId], GameId] = {}
        self._birthday_memo: dict[GameId, int] = {}
        self._intern_canonical((), ())

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, g: object) -> bool:
        return type(g) is int and 0 <= g < len(self._data)

    def _check(self, g: GameId) -> None:
        if not (type(g) is int and 0 <= g < len(self._data)):
            raise UnknownGameError(g)

    def _intern_canonical(self, left: tuple[GameId, ...], right: tuple[GameId, ...]) -> GameId:
        key = (left, right)
        g = self._index.get(key)
        if g is None:
            g = len(self._data)
            self._data.append(key)
            self._index[key] = g
        return g

    def intern(self, left: Iterable[GameId] = (), right: Iterable[GameId] = ()) -> GameId:
        """Return the handle of the game with the given option sets.

        Order and repetition in ``left``/``right`` are irrelevant.
        """
        left = tuple(sorted(set(left)))
        right = tuple(sorted(set(right)))
        for g in left + right:
            self._check(g)
        return self._intern_canonical(left, right)

    def lookup(self, left: Iterable[GameId] = (), right: Iterable[GameId] = ()) -> GameId | None:
        """Like :meth:`intern` but never adds an entry; ``None`` if absent."""
        return self._index.get((tuple(sorted(set(left))), tuple(sorted(set(right)))))

    # named games

    def zero(self) -> GameId:
        return ZERO

    def one(self) -> GameId:
        return self._intern_canonical((ZERO,), ())

    def neg_one(self) -> GameId:
        return self._intern_canonical((), (ZERO,))

    def star(self) -> GameId:
        return self._intern_canonical((ZERO,), (ZERO,))

    def options(self, g: GameId) -> tuple[list[GameId], list[GameId]]:
        self._check(g)
        left, right = self._data[g]
        return list(left), list(right)

    def data(self, g: GameId) -> GameData:
        """Canonical option tuples of ``g`` (no copy)."""
        self._check(g)
        return self._data[g]

    def set_equal(self, g: GameId, h: GameId) -> bool:
        self._check(g)
        self._check(h)
        return g == h

    # recursive operations

    def negate(self, g: GameId) -> GameId:
        self._check(g)
        memo = self._neg_memo
        if g in memo:
            return memo[g]
        data = self._data
        stack = [g]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            left, right = data[x]
            pending = [y for y in left + right if y not in memo]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            # -(L, R) = (-R, -L); the image of an empty set is empty
            neg_left = tuple(sorted({memo[y] for y in right}))
            neg_right = tuple(sorted({memo[y] for y in left}))
            memo[x] = self._intern_canonical(neg_left, neg_right)
        return memo[g]

    def _sum_option_pairs(
        self, g: GameId, h: GameId
    ) -> tuple[list[tuple[GameId, GameId]], list[tuple[GameId, GameId]]]:
        """Summand pairs whose sums are the left and right options of ``g + h``."""
        (gl, gr), (hl, hr) = self._data[g], self._data[h]
        left = [(x, h) for x in gl] + [(g, y) for y in hl]
        right = [(x, h) for x in gr] + [(g, y) for y in hr]
        return left, right

    def sum(self, g: GameId, h: GameId) -> GameId:
        """Disjunctive sum, memoized on the ordered pair ``(g, h)``.

        The memo never uses ``(h, g)``: commutativity is something to check,
        not something to assume.
        """
        self._check(g)
        self._check(h)
        memo = self._sum_memo
        key = (g, h)
        if key in memo:
            return memo[key]
        stack = [key]
        while stack:
            pair = stack[-1]
            if pair in memo:
                stack.pop()
                continue
            left_pairs, right_pairs = self._sum_option_pairs(*pair)
            pending = [p for p in left_pairs + right_pairs if p not in memo]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            left = tuple(sorted({memo[p] for p in left_pairs}))
            right = tuple(sorted({memo[p] for p in right_pairs}))
            memo[pair] = self._intern_canonical(left, right)
        return memo[key]

    def birthday(self, g: GameId) -> int:
        """Formal birthday: 0 for the game 0, else 1 + the largest option birthday."""
        self._check(g)
        memo = self._birthday_memo
        if g in memo:
            return memo[g]
        data = self._data
        stack = [g]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            left, right = data[x]
            opts = left + right
            pending = [y for y in opts if y not in memo]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            memo[x] = 1 + max(memo[y] for y in opts) if opts else 0
        return memo[g]

    def clear_memos(self) -> None:
        """Drop negate/sum/birthday memo entries. Interned games are kept."""
        self._neg_memo.clear()
        self._sum_memo.clear()
        self._birthday_memo.clear()

    def memo_sizes(self) -> dict[str, int]:
        return {
            "games": len(self._data),
            "negate": len(self._neg_memo),
            "sum": len(self._sum_memo),
            "birthday": len(self._birthday_memo),
        }
