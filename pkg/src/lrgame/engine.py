"""Core engine for LR-ending partisan games.

Positions are interned: within one Engine, two positions are isomorphic
exactly when they are the same object, so equality, hashing and memo keys
are all identity-based. Every deep walk uses an explicit stack because
game trees from the rulesets reach birthdays past 10^4.
"""
from __future__ import annotations

import enum
from typing import Iterable, Iterator, Optional

TERMINAL_KINDS = ("L", "R")


class Outcome(enum.Enum):
    """Winner under optimal play: L, R, first player (N) or second player (P).

    Ordered from Left's point of view: L > P > R and L > N > R, while P and
    N are incomparable (comparisons between them are all False, like
    incomparable sets under ``<=``).
    """

    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def __lt__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return other in _STRICTLY_ABOVE[self]

    def __gt__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self in _STRICTLY_ABOVE[other]

    def __le__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self is other or other in _STRICTLY_ABOVE[self]

    def __ge__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self is other or self in _STRICTLY_ABOVE[other]

    def compare(self, other: "Outcome") -> str:
        """Return 'lt', 'gt', 'eq' or 'incomparable'."""
        if self is other:
            return "eq"
        if self < other:
            return "lt"
        if self > other:
            return "gt"
        return "incomparable"


_STRICTLY_ABOVE = {
    Outcome.R: frozenset((Outcome.P, Outcome.N, Outcome.L)),
    Outcome.P: frozenset((Outcome.L,)),
    Outcome.N: frozenset((Outcome.L,)),
    Outcome.L: frozenset(),
}

_AFTER_STAR_R = {
    Outcome.L: Outcome.R,
    Outcome.R: Outcome.L,
    Outcome.N: Outcome.N,
    Outcome.P: Outcome.P,
}


def outcome_after_star_r(o: Outcome) -> Outcome:
    """Outcome of G + *R given the outcome of G: swaps L and R, fixes N and P."""
    return _AFTER_STAR_R[o]


class Position:
    """One interned game position: a terminal or a nonempty set of options.

    Instances are created only by an Engine. ``kind`` is "L"/"R" for
    terminals and None otherwise; ``options`` is sorted by (birthday, uid)
    and already deduplicated.
    """

    __slots__ = ("uid", "kind", "options", "birthday")

    def __init__(self, uid: int, kind: Optional[str], options: tuple, birthday: int):
        self.uid = uid
        self.kind = kind
        self.options = options
        self.birthday = birthday

    @property
    def is_terminal(self) -> bool:
        return self.kind is not None

    def __repr__(self) -> str:
        if self.kind is not None:
            return f"*{self.kind}"
        return f"<position uid={self.uid} birthday={self.birthday} options={len(self.options)}>"


class Engine:
    """Owner of an interned position universe and all per-universe memo tables.

    Not thread-safe: one owner at a time. Memo tables grow without bound;
    ``reset`` is the explicit way to give the memory back.
    """

    def __init__(self):
        self._init_state()

    def _init_state(self) -> None:
        self._by_uid: list[Position] = []
        self._interned: dict[object, Position] = {}
        self._sum_memo: dict[tuple[int, int], Position] = {}
        self._conj_memo: dict[int, Position] = {}
        self._outcome_memo: dict[int, Outcome] = {}
        self._caches: dict[str, dict] = {}
        self._star_l = self._intern_terminal("L")
        self._star_r = self._intern_terminal("R")

    # ------------------------------------------------------------------
    # construction and interning

    @property
    def star_l(self) -> Position:
        return self._star_l

    @property
    def star_r(self) -> Position:
        return self._star_r

    def _new_position(self, kind: Optional[str], options: tuple, birthday: int) -> Position:
        pos = Position(len(self._by_uid), kind, options, birthday)
        self._by_uid.append(pos)
        return pos

    def _intern_terminal(self, kind: str) -> Position:
        pos = self._interned.get(kind)
        if pos is None:
            pos = self._new_position(kind, (), 0)
            self._interned[kind] = pos
        return pos

    def make_terminal(self, kind: str) -> Position:
        """The terminal of the given kind ("L" or "R")."""
        if kind not in TERMINAL_KINDS:
            raise ValueError(f"terminal kind must be 'L' or 'R', got {kind!r}")
        return self._interned[kind]

    def ensure_owned(self, pos: Position) -> None:
        """Reject positions from another engine or from before a reset."""
        if not isinstance(pos, Position):
            raise TypeError(f"expected a Position, got {type(pos).__name__}")
        uid = pos.uid
        if uid >= len(self._by_uid) or self._by_uid[uid] is not pos:
            raise ValueError(
                "position does not belong to this engine "
                "(foreign or stale after reset); re-intern it with adopt()"
            )

    def make_position(self, options: Iterable[Position]) -> Position:
        """Intern the position with the given options, deduplicating them.

        Options must be nonempty and owned by this engine.
        """
        dedup: dict[int, Position] = {}
        for opt in options:
            self.ensure_owned(opt)
            dedup[opt.uid] = opt
        if not dedup:
            raise ValueError(
                "positions require at least one option; terminals are constructed separately"
            )
        key = frozenset(dedup)
        pos = self._interned.get(key)
        if pos is None:
            opts = tuple(sorted(dedup.values(), key=lambda p: (p.birthday, p.uid)))
            pos = self._new_position(None, opts, opts[-1].birthday + 1)
            self._interned[key] = pos
        return pos

    def adopt(self, pos: Position) -> Position:
        """Re-intern a position tree created by another engine (or before a reset)."""
        if not isinstance(pos, Position):
            raise TypeError(f"expected a Position, got {type(pos).__name__}")
        done: dict[int, Position] = {}
        stack = [pos]
        while stack:
            node = stack[-1]
            if node.uid in done:
                stack.pop()
                continue
            if node.is_terminal:
                done[node.uid] = self.make_terminal(node.kind)
                stack.pop()
                continue
            pending = [o for o in node.options if o.uid not in done]
            if pending:
                stack.extend(pending)
                continue
            done[node.uid] = self.make_position(done[o.uid] for o in node.options)
            stack.pop()
        return done[pos.uid]

    def reset(self) -> None:
        """Discard every interned position and memo table.

        Positions obtained before the reset are stale afterwards; mixing
        them back in raises, and adopt() re-interns them if needed.
        """
        self._init_state()

    def cache(self, name: str) -> dict:
        """A named per-engine memo dict, created on first use, cleared by reset()."""
        table = self._caches.get(name)
        if table is None:
            table = {}
            self._caches[name] = table
        return table

    # ------------------------------------------------------------------
    # structural queries

    def birthday(self, pos: Position) -> int:
        self.ensure_owned(pos)
        return pos.birthday

    def node_count(self, pos: Position) -> int:
        """Number of distinct positions reachable from pos, itself included."""
        self.ensure_owned(pos)
        seen = {pos.uid}
        todo = [pos]
        while todo:
            for opt in todo.pop().options:
                if opt.uid not in seen:
                    seen.add(opt.uid)
                    todo.append(opt)
        return len(seen)

    def subpositions(self, pos: Position) -> Iterator[Position]:
        """All distinct positions reachable from pos, itself included."""
        self.ensure_owned(pos)
        seen = {pos.uid}
        todo = [pos]
        while todo:
            node = todo.pop()
            yield node
            for opt in node.options:
                if opt.uid not in seen:
                    seen.add(opt.uid)
                    todo.append(opt)

    def canonical_text(self, pos: Position) -> str:
        """Plain brace notation with options sorted by (birthday, text); memoized."""
        self.ensure_owned(pos)
        memo = self.cache("canonical_text")
        stack = [pos]
        while stack:
            node = stack[-1]
            if node.uid in memo:
                stack.pop()
                continue
            if node.is_terminal:
                memo[node.uid] = "*L" if node.kind == "L" else "*R"
                stack.pop()
                continue
            pending = [o for o in node.options if o.uid not in memo]
            if pending:
                stack.extend(pending)
                continue
            parts = sorted((o.birthday, memo[o.uid]) for o in node.options)
            memo[node.uid] = "{" + ", ".join(text for _, text in parts) + "}"
            stack.pop()
        return memo[pos.uid]

    def canonical_sort_key(self, pos: Position) -> tuple[int, str]:
        return (pos.birthday, self.canonical_text(pos))

    # ------------------------------------------------------------------
    # game operations

    def conjugate(self, pos: Position) -> Position:
        """Swap the two terminal kinds throughout; an involution."""
        self.ensure_owned(pos)
        memo = self._conj_memo
        stack = [pos]
        while stack:
            node = stack[-1]
            if node.uid in memo:
                stack.pop()
                continue
            if node.is_terminal:
                other = self._star_r if node.kind == "L" else self._star_l
                memo[node.uid] = other
                stack.pop()
                continue
            pending = [o for o in node.options if o.uid not in memo]
            if pending:
                stack.extend(pending)
                continue
            image = self.make_position(memo[o.uid] for o in node.options)
            memo[node.uid] = image
            memo.setdefault(image.uid, node)
            stack.pop()
        return memo[pos.uid]

    def _sum_shortcut(self, a: Position, b: Position) -> Optional[Position]:
        # *L is the sum identity and adding *R conjugates; both hold as
        # isomorphisms, so the shortcuts return the same interned node the
        # option-by-option expansion would.
        if a.is_terminal:
            return b if a.kind == "L" else self.conjugate(b)
        if b.is_terminal:
            return a if b.kind == "L" else self.conjugate(a)
        return None

    def sum(self, a: Position, b: Position) -> Position:
        """Disjunctive sum; memoized on unordered uid pairs, commutative by construction."""
        self.ensure_owned(a)
        self.ensure_owned(b)
        quick = self._sum_shortcut(a, b)
        if quick is not None:
            return quick
        memo = self._sum_memo
        stack = [(a, b)]
        while stack:
            x, y = stack[-1]
            key = (x.uid, y.uid) if x.uid <= y.uid else (y.uid, x.uid)
            if key in memo:
                stack.pop()
                continue
            parts: list[Position] = []
            pending: list[tuple[Position, Position]] = []
            for u, v in self._sum_children(x, y):
                part = self._sum_shortcut(u, v)
                if part is not None:
                    parts.append(part)
                    continue
                child_key = (u.uid, v.uid) if u.uid <= v.uid else (v.uid, u.uid)
                part = memo.get(child_key)
                if part is None:
                    pending.append((u, v))
                else:
                    parts.append(part)
            if pending:
                stack.extend(pending)
                continue
            memo[key] = self.make_position(parts)
            stack.pop()
        key = (a.uid, b.uid) if a.uid <= b.uid else (b.uid, a.uid)
        return memo[key]

    @staticmethod
    def _sum_children(x: Position, y: Position) -> Iterator[tuple[Position, Position]]:
        # Both x and y are non-terminal here: a move is made in one component.
        for xi in x.options:
            yield xi, y
        for yj in y.options:
            yield x, yj

    def sum_all(self, positions: Iterable[Position]) -> Position:
        items = list(positions)
        if not items:
            raise ValueError("sum_all requires at least one position")
        total = items[0]
        for item in items[1:]:
            total = self.sum(total, item)
        return total

    def outcome(self, pos: Position) -> Outcome:
        """Winner under optimal play, by the outcome recursion; memoized."""
        self.ensure_owned(pos)
        memo = self._outcome_memo
        stack = [pos]
        while stack:
            node = stack[-1]
            if node.uid in memo:
                stack.pop()
                continue
            if node.is_terminal:
                memo[node.uid] = Outcome.L if node.kind == "L" else Outcome.R
                stack.pop()
                continue
            pending = [o for o in node.options if o.uid not in memo]
            if pending:
                stack.extend(pending)
                continue
            outs = {memo[o.uid] for o in node.options}
            left_or_p = Outcome.L in outs or Outcome.P in outs
            right_or_p = Outcome.R in outs or Outcome.P in outs
            if left_or_p and right_or_p:
                result = Outcome.N
            elif left_or_p:
                result = Outcome.L
            elif right_or_p:
                result = Outcome.R
            else:
                result = Outcome.P
            memo[node.uid] = result
            stack.pop()
        return memo[pos.uid]
