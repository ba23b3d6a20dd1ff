"""Named value families and their closed-form arithmetic.

Four families of literals recur throughout: the star-L and star-R towers,
the maltese positions (all strictly smaller stars of both kinds) and the
big-star positions (both terminals plus all smaller big stars). Sums of
family members reduce by nim-style index arithmetic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Iterable, Optional

from .engine import Engine, Outcome, Position


class Family(enum.Enum):
    STAR_L = "*L"
    STAR_R = "*R"
    MALTESE = "M"
    BIG_STAR = "B"


@dataclass(frozen=True)
class NamedValue:
    """A family member: (family, index). Maltese and big star start at index 1."""

    family: Family
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"index must be a nonnegative integer, got {self.index!r}")
        if self.family in (Family.MALTESE, Family.BIG_STAR) and self.index == 0:
            raise ValueError(f"{self.family.value} is undefined for index 0")

    def __str__(self) -> str:
        if self.family is Family.STAR_L:
            return "*L" if self.index == 0 else f"*L_{self.index}"
        if self.family is Family.STAR_R:
            return "*R" if self.index == 0 else f"*R_{self.index}"
        return f"{self.family.value}{self.index}"


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in values."""
    present = set(values)
    k = 0
    while k in present:
        k += 1
    return k


def nim_sum(values: Iterable[int]) -> int:
    """Bitwise xor of all values; 0 for the empty list."""
    return reduce(xor, values, 0)


# ----------------------------------------------------------------------
# literal construction

def _star_tower(engine: Engine, kind: str, top: int) -> list[Position]:
    """Levels 0..top of the star tower of one kind; level n's options are levels 0..n-1."""
    levels = [engine.make_terminal(kind)]
    for n in range(1, top + 1):
        levels.append(engine.make_position(levels[:n]))
    return levels


def to_position(engine: Engine, value: NamedValue) -> Position:
    """The literal position for a named value (interning dedupes repeats)."""
    fam, n = value.family, value.index
    if fam is Family.STAR_L:
        return _star_tower(engine, "L", n)[n]
    if fam is Family.STAR_R:
        return _star_tower(engine, "R", n)[n]
    if fam is Family.MALTESE:
        lefts = _star_tower(engine, "L", n - 1)
        rights = _star_tower(engine, "R", n - 1)
        return engine.make_position(lefts + rights)
    bigs: list[Position] = []
    terminals = [engine.star_l, engine.star_r]
    for _ in range(n):
        bigs.append(engine.make_position(bigs + terminals))
    return bigs[-1]


# ----------------------------------------------------------------------
# recognizers (memoized per engine; family literals are closed under options)

def star_index(engine: Engine, pos: Position, kind: str) -> Optional[int]:
    """n if pos is the star tower literal of the given kind at level n, else None."""
    engine.ensure_owned(pos)
    memo = engine.cache(f"star_index_{kind}")
    stack = [pos]
    while stack:
        node = stack[-1]
        if node.uid in memo:
            stack.pop()
            continue
        if node.is_terminal:
            memo[node.uid] = 0 if node.kind == kind else None
            stack.pop()
            continue
        pending = [o for o in node.options if o.uid not in memo]
        if pending:
            stack.extend(pending)
            continue
        indices = [memo[o.uid] for o in node.options]
        if None in indices or sorted(indices) != list(range(len(indices))):
            memo[node.uid] = None
        else:
            memo[node.uid] = len(indices)
        stack.pop()
    return memo[pos.uid]


def bigstar_index(engine: Engine, pos: Position) -> Optional[int]:
    """n if pos is the big star literal at level n >= 1, else None."""
    engine.ensure_owned(pos)
    memo = engine.cache("bigstar_index")
    stack = [pos]
    while stack:
        node = stack[-1]
        if node.uid in memo:
            stack.pop()
            continue
        if node.is_terminal:
            memo[node.uid] = None
            stack.pop()
            continue
        inner = [o for o in node.options if not o.is_terminal]
        pending = [o for o in inner if o.uid not in memo]
        if pending:
            stack.extend(pending)
            continue
        kinds = {o.kind for o in node.options if o.is_terminal}
        indices = [memo[o.uid] for o in inner]
        n = len(node.options) - 1
        if kinds == {"L", "R"} and None not in indices and sorted(indices) == list(range(1, n)):
            memo[node.uid] = n
        else:
            memo[node.uid] = None
        stack.pop()
    return memo[pos.uid]


def maltese_index(engine: Engine, pos: Position) -> Optional[int]:
    """n if pos is the maltese literal at level n >= 1, else None."""
    engine.ensure_owned(pos)
    if pos.is_terminal:
        return None
    lefts: list[int] = []
    rights: list[int] = []
    for opt in pos.options:
        li = star_index(engine, opt, "L")
        if li is not None:
            lefts.append(li)
            continue
        ri = star_index(engine, opt, "R")
        if ri is None:
            return None
        rights.append(ri)
    n = len(pos.options) // 2
    if sorted(lefts) == list(range(n)) and sorted(rights) == list(range(n)):
        return n
    return None


_RECOGNIZE_ORDER = (Family.STAR_L, Family.STAR_R, Family.BIG_STAR, Family.MALTESE)


def recognize(engine: Engine, pos: Position) -> Optional[NamedValue]:
    """The named value pos is a literal of, if any.

    Tried in the order star-L, star-R, big star, maltese, so the shared
    literal {*L, *R} reads as B1.
    """
    engine.ensure_owned(pos)
    if pos.is_terminal:
        fam = Family.STAR_L if pos.kind == "L" else Family.STAR_R
        return NamedValue(fam, 0)
    for fam in _RECOGNIZE_ORDER:
        if fam is Family.STAR_L:
            idx = star_index(engine, pos, "L")
        elif fam is Family.STAR_R:
            idx = star_index(engine, pos, "R")
        elif fam is Family.BIG_STAR:
            idx = bigstar_index(engine, pos)
        else:
            idx = maltese_index(engine, pos)
        if idx is not None:
            return NamedValue(fam, idx)
    return None


# ----------------------------------------------------------------------
# closed-form reductions

def starl_mex_reduce(indices: Iterable[int]) -> NamedValue:
    """{*L_a : a in indices} reduces to *L_mex(indices); indices nonempty."""
    items = list(indices)
    if not items:
        raise ValueError("mex reduction needs at least one index")
    return NamedValue(Family.STAR_L, mex(items))


def starr_mex_reduce(indices: Iterable[int]) -> NamedValue:
    """{*R_a : a in indices} reduces to *R_mex(indices); indices nonempty."""
    items = list(indices)
    if not items:
        raise ValueError("mex reduction needs at least one index")
    return NamedValue(Family.STAR_R, mex(items))


def star_sum_reduce(a1: int, f1: Family, a2: int, f2: Family) -> NamedValue:
    """Sum of two star values: indices xor, like kinds give star-L, unlike give star-R."""
    for fam in (f1, f2):
        if fam not in (Family.STAR_L, Family.STAR_R):
            raise ValueError(f"star_sum_reduce takes star families only, got {fam}")
    family = Family.STAR_L if f1 is f2 else Family.STAR_R
    return NamedValue(family, a1 ^ a2)


@dataclass(frozen=True)
class MalteseSumSpec:
    """A sum of maltese, star-L and star-R components, given by their indices."""

    maltese_indices: tuple[int, ...]
    starl_indices: tuple[int, ...] = ()
    starr_indices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "maltese_indices", tuple(sorted(self.maltese_indices)))
        object.__setattr__(self, "starl_indices", tuple(self.starl_indices))
        object.__setattr__(self, "starr_indices", tuple(self.starr_indices))
        if any(a < 1 for a in self.maltese_indices):
            raise ValueError("maltese indices start at 1")
        if any(a < 0 for a in self.starl_indices) or any(a < 0 for a in self.starr_indices):
            raise ValueError("star indices must be nonnegative")


def maltese_sum_position(engine: Engine, spec: MalteseSumSpec) -> Position:
    """The explicit sum position for a maltese sum spec (*L for the empty spec)."""
    total = engine.star_l
    for a in spec.maltese_indices:
        total = engine.sum(total, to_position(engine, NamedValue(Family.MALTESE, a)))
    for b in spec.starl_indices:
        total = engine.sum(total, to_position(engine, NamedValue(Family.STAR_L, b)))
    for c in spec.starr_indices:
        total = engine.sum(total, to_position(engine, NamedValue(Family.STAR_R, c)))
    return total


def maltese_sum_outcome(spec: MalteseSumSpec) -> Outcome:
    """Closed-form outcome of a maltese/star sum.

    With no maltese component the star-R count's parity decides; with one
    the first player wins; with two or more, drop the two smallest maltese
    indices and xor the rest with all star indices: zero means P, else N.
    """
    n = len(spec.maltese_indices)
    if n == 0:
        return Outcome.L if len(spec.starr_indices) % 2 == 0 else Outcome.R
    if n == 1:
        return Outcome.N
    rest = nim_sum(spec.maltese_indices[2:]) ^ nim_sum(spec.starl_indices) ^ nim_sum(spec.starr_indices)
    return Outcome.P if rest == 0 else Outcome.N


def bigstar_sum_outcome(indices: Iterable[int]) -> Outcome:
    """Closed-form outcome of a nonempty sum of big stars: P iff the indices xor to zero."""
    items = list(indices)
    if not items:
        raise ValueError("bigstar_sum_outcome needs at least one index")
    if any(a < 1 for a in items):
        raise ValueError("big star indices start at 1")
    return Outcome.P if nim_sum(items) == 0 else Outcome.N
