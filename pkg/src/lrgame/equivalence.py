"""Bounded-universe equivalence checking.

Two positions are equivalent when no context changes one's outcome without
changing the other's. The full universe is infinite, so the oracle here is
refutation-only: it sweeps every position born by a given day (plus optional
seeded day-3 samples) and reports either a distinguishing witness or
"no counterexample found", never a proof of equivalence.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .engine import Engine, Position

DEFAULT_DAY_CAP = 2


class UniverseTooLargeError(ValueError):
    """Raised when an enumeration request exceeds the day cap."""


def universe_size(day: int) -> int:
    """Number of positions born by the given day (grows as 2^previous + 1)."""
    if day < 0:
        raise ValueError("day must be nonnegative")
    count = 2
    for _ in range(day):
        count = 2**count + 1
    return count


def _size_description(day: int) -> str:
    if day <= 3:
        return str(universe_size(day))
    return f"more than 2**(2**33) (towers of exponentials, day {day})"


@dataclass(frozen=True)
class UniverseIndex:
    """All positions born by `day`, sorted by (birthday, canonical text)."""

    day: int
    members: tuple[Position, ...]


def enumerate_universe(engine: Engine, day: int, cap: int = DEFAULT_DAY_CAP) -> UniverseIndex:
    """Enumerate every position born by `day`; refuses past the cap.

    Day 0 holds the two terminals, day 1 five positions, day 2 thirty-three;
    day 3 already has 2^33 + 1 members, which is why the cap exists.
    """
    if day < 0:
        raise ValueError("day must be nonnegative")
    if day > cap:
        raise UniverseTooLargeError(
            f"day {day} universe has {_size_description(day)} members; "
            f"enumeration is capped at day {cap}"
        )
    memo = engine.cache("universe")
    cached = memo.get(day)
    if cached is not None:
        return cached
    if day == 0:
        members = [engine.star_l, engine.star_r]
    else:
        previous = enumerate_universe(engine, day - 1, cap).members
        members = [engine.star_l, engine.star_r]
        for size in range(1, len(previous) + 1):
            for subset in combinations(previous, size):
                members.append(engine.make_position(subset))
    members.sort(key=engine.canonical_sort_key)
    index = UniverseIndex(day, tuple(members))
    memo[day] = index
    return index


def _day3_samples(engine: Engine, count: int, seed: int, cap: int) -> list[Position]:
    base = enumerate_universe(engine, 2, cap).members
    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        size = rng.randint(1, min(len(base), 8))
        samples.append(engine.make_position(rng.sample(base, size)))
    return samples


@dataclass(frozen=True)
class Verdict:
    """Result of a bounded equivalence check.

    refuted=True comes with the first distinguishing context in universe
    order; refuted=False only means no context in the searched set worked.
    """

    refuted: bool
    witness: Optional[Position] = None
    contexts_checked: int = 0


def equivalent_bounded(
    engine: Engine,
    g: Position,
    h: Position,
    day: int = 2,
    cap: int = DEFAULT_DAY_CAP,
    day3_samples: int = 0,
    seed: int = 0,
) -> Verdict:
    """Search all day-bounded contexts for one that tells g and h apart."""
    engine.ensure_owned(g)
    engine.ensure_owned(h)
    contexts = list(enumerate_universe(engine, day, cap).members)
    if day3_samples:
        contexts.extend(_day3_samples(engine, day3_samples, seed, cap))
    checked = 0
    if g is not h:
        for context in contexts:
            checked += 1
            if engine.outcome(engine.sum(g, context)) is not engine.outcome(engine.sum(h, context)):
                return Verdict(refuted=True, witness=context, contexts_checked=checked)
    return Verdict(refuted=False, witness=None, contexts_checked=checked)


def distinguishing_context(
    engine: Engine,
    g: Position,
    h: Position,
    day: int = 2,
    cap: int = DEFAULT_DAY_CAP,
) -> Optional[Position]:
    """First context (in universe order) with different outcomes for g and h, if any."""
    return equivalent_bounded(engine, g, h, day=day, cap=cap).witness
