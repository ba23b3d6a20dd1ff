"""Concrete rulesets: Even Nim and parity-scored subtraction games.

Both are scored by token parity at the end: when no move remains, Left has
won exactly when the total number of tokens left on the board is even.
Game trees are built over canonical pile-multiset states so permuted piles
intern to the same position.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .engine import Engine, Outcome, Position
from .simplify import simplify
from .values import Family, NamedValue, nim_sum

# ----------------------------------------------------------------------
# states


@dataclass(frozen=True)
class EvenNimState:
    """Even Nim piles as (size, fresh) pairs.

    A fresh pile has never been removed from: the first removal may take
    any positive number of tokens, later removals must take an even number.
    Initial piles must be even; a touched pile may hold any size.
    """

    piles: tuple[tuple[int, bool], ...]

    def __post_init__(self):
        object.__setattr__(self, "piles", tuple((int(s), bool(f)) for s, f in self.piles))
        for size, _ in self.piles:
            if size < 0:
                raise ValueError("pile sizes must be nonnegative")

    @classmethod
    def initial(cls, sizes: Iterable[int]) -> "EvenNimState":
        sizes = list(sizes)
        for size in sizes:
            if size % 2 != 0:
                raise ValueError(f"initial Even Nim piles must be even, got {size}")
        return cls(tuple((size, True) for size in sizes))


@dataclass(frozen=True)
class SubtractionState:
    """Piles plus the subtraction set: a move removes some s in the set from one pile."""

    piles: tuple[int, ...]
    subtraction_set: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "piles", tuple(int(p) for p in self.piles))
        object.__setattr__(self, "subtraction_set", frozenset(int(s) for s in self.subtraction_set))
        for pile in self.piles:
            if pile < 0:
                raise ValueError("pile sizes must be nonnegative")
        for s in self.subtraction_set:
            if s < 1:
                raise ValueError("subtraction amounts must be positive")


# ----------------------------------------------------------------------
# trees


def terminal_of_parity(engine: Engine, total: int) -> Position:
    """The terminal for a finished board: even remaining total is a Left win."""
    if total < 0:
        raise ValueError("token totals are nonnegative")
    return engine.star_l if total % 2 == 0 else engine.star_r


def _even_nim_moves(piles: tuple[tuple[int, bool], ...]):
    for i, (size, fresh) in enumerate(piles):
        if fresh:
            takes = range(1, size + 1)
        else:
            takes = range(2, size + 1, 2)
        for take in takes:
            yield tuple(sorted(piles[:i] + ((size - take, False),) + piles[i + 1 :]))


def even_nim_tree(engine: Engine, state: EvenNimState) -> Position:
    """Game tree of an Even Nim state; memoized on the sorted pile multiset."""
    memo = engine.cache("even_nim_tree")
    root = tuple(sorted(state.piles))
    stack = [root]
    while stack:
        piles = stack[-1]
        if piles in memo:
            stack.pop()
            continue
        successors = list(_even_nim_moves(piles))
        if not successors:
            memo[piles] = terminal_of_parity(engine, sum(size for size, _ in piles))
            stack.pop()
            continue
        pending = [s for s in successors if s not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[piles] = engine.make_position(memo[s] for s in successors)
        stack.pop()
    return memo[root]


def _subtraction_moves(piles: tuple[int, ...], amounts: tuple[int, ...]):
    for i, pile in enumerate(piles):
        for s in amounts:
            if s <= pile:
                yield tuple(sorted(piles[:i] + (pile - s,) + piles[i + 1 :]))


def subtraction_tree(engine: Engine, state: SubtractionState) -> Position:
    """Game tree of a subtraction state; memoized on (sorted piles, subtraction set)."""
    memo = engine.cache("subtraction_tree")
    amounts = tuple(sorted(state.subtraction_set))
    root = (tuple(sorted(state.piles)), amounts)
    stack = [root]
    while stack:
        key = stack[-1]
        if key in memo:
            stack.pop()
            continue
        piles = key[0]
        successors = [(s, amounts) for s in _subtraction_moves(piles, amounts)]
        if not successors:
            memo[key] = terminal_of_parity(engine, sum(piles))
            stack.pop()
            continue
        pending = [s for s in successors if s not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[key] = engine.make_position(memo[s] for s in successors)
        stack.pop()
    return memo[root]


# ----------------------------------------------------------------------
# Even Nim closed forms


def even_nim_value(size: int, fresh: bool, initial: bool = False) -> NamedValue:
    """Named value of a single Even Nim pile.

    Fresh piles: 0 is *L, an even size 2k is Mk. Touched piles: even 2k is
    *L_k, odd 2k+1 is *R_k. Fresh odd piles never occur and are rejected.
    """
    if size < 0:
        raise ValueError("pile sizes are nonnegative")
    if initial and not fresh:
        raise ValueError("initial piles are fresh by definition")
    if fresh:
        if size % 2 != 0:
            raise ValueError(f"fresh Even Nim piles must be even, got {size}")
        if size == 0:
            return NamedValue(Family.STAR_L, 0)
        return NamedValue(Family.MALTESE, size // 2)
    if size % 2 == 0:
        return NamedValue(Family.STAR_L, size // 2)
    return NamedValue(Family.STAR_R, size // 2)


def even_nim_outcome(sizes: Iterable[int]) -> Outcome:
    """Closed-form outcome of an initial Even Nim board.

    Zero piles are identities and are dropped first. No piles left: Left
    wins. One: first player wins. Two or more: drop the two smallest and
    xor the half-sizes of the rest; zero means second player, else first.
    """
    halves = []
    for size in sizes:
        if size < 0:
            raise ValueError("pile sizes are nonnegative")
        if size % 2 != 0:
            raise ValueError(f"initial Even Nim piles must be even, got {size}")
        if size > 0:
            halves.append(size // 2)
    if not halves:
        return Outcome.L
    if len(halves) == 1:
        return Outcome.N
    halves.sort()
    return Outcome.P if nim_sum(halves[2:]) == 0 else Outcome.N


# ----------------------------------------------------------------------
# value tables and periodicity


@dataclass(frozen=True)
class ValueTable:
    """Simplified single-pile values for sizes 0..n_max, plus detected periodicity."""

    subtraction_set: frozenset[int]
    n_max: int
    entries: tuple[Position, ...]
    detected_preperiod: Optional[int] = None
    detected_period: Optional[int] = None


def _detect(entries) -> Optional[tuple[int, int]]:
    n_max = len(entries) - 1
    for preperiod in range(0, n_max + 1):
        # demand at least two full periods of evidence beyond the preperiod
        for period in range(1, (n_max + 1 - preperiod) // 2 + 1):
            if all(entries[n] is entries[n + period] for n in range(preperiod, n_max - period + 1)):
                return (preperiod, period)
    return None


def detect_periodicity(table: ValueTable) -> Optional[tuple[int, int]]:
    """Smallest (preperiod, period), lexicographically, backed by two full periods."""
    return _detect(table.entries)


def value_table(engine: Engine, subtraction_set: Iterable[int], n_max: int) -> ValueTable:
    """Simplified values of single piles 0..n_max for one subtraction set."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    amounts = frozenset(int(s) for s in subtraction_set)
    entries = []
    for n in range(n_max + 1):
        tree = subtraction_tree(engine, SubtractionState((n,), amounts))
        entries.append(simplify(engine, tree))
    entries = tuple(entries)
    detected = _detect(entries)
    preperiod, period = detected if detected is not None else (None, None)
    return ValueTable(
        subtraction_set=amounts,
        n_max=n_max,
        entries=entries,
        detected_preperiod=preperiod,
        detected_period=period,
    )


def even_nim_values(engine: Engine, max_size: int) -> list[tuple[int, Position]]:
    """(size, simplified value) for single fresh piles of even size up to max_size."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    rows = []
    for size in range(0, max_size + 1, 2):
        tree = even_nim_tree(engine, EvenNimState.initial([size]))
        rows.append((size, simplify(engine, tree)))
    return rows
