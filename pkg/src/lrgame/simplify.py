"""Equivalence-preserving simplification.

Three rewrite rules, applied bottom-up to a fixpoint: the mex pattern
(an option set of same-kind star literals collapses to the mex literal),
bypass (a position with a {*L}-equivalent option where every option can
answer with an *L-equivalent option collapses to *L, mirrored for *R) and
dominate (if every other option can answer with something equivalent to
{G_1}, the whole position collapses to {G_1}).

Every rewrite is recorded in a per-engine registry mapping position uid to
(input, simplified output); outputs are fixpoints, and "known-equivalent"
checks resolve through the registry so later runs reuse earlier results.
"""
from __future__ import annotations

from typing import Optional

from .engine import Engine, Position
from .values import star_index, starl_mex_reduce, starr_mex_reduce, to_position

_REGISTRY = "simplify"


def _resolve(engine: Engine, pos: Position, registry: dict) -> Position:
    entry = registry.get(pos.uid)
    if entry is not None:
        return entry[1]
    return simplify(engine, pos)


def _mex_pattern(engine: Engine, node: Position) -> Optional[Position]:
    for kind, reducer in (("L", starl_mex_reduce), ("R", starr_mex_reduce)):
        indices = []
        for opt in node.options:
            idx = star_index(engine, opt, kind)
            if idx is None:
                indices = None
                break
            indices.append(idx)
        if indices is None:
            continue
        literal = to_position(engine, reducer(indices))
        if literal is not node:
            return literal
    return None


def _bypass(engine: Engine, node: Position, registry: dict) -> Optional[Position]:
    for kind in ("L", "R"):
        terminal = engine.make_terminal(kind)
        target = engine.make_position([terminal])
        if not any(_resolve(engine, opt, registry) is target for opt in node.options):
            continue
        ok = True
        for opt in node.options:
            if opt.is_terminal:
                ok = False
                break
            if not any(_resolve(engine, reply, registry) is terminal for reply in opt.options):
                ok = False
                break
        if ok:
            return terminal
    return None


def _dominate(engine: Engine, node: Position, registry: dict) -> Optional[Position]:
    if len(node.options) == 1:
        # one option makes the hypothesis vacuous; the rewrite is the node itself
        return node
    for candidate in sorted(node.options, key=engine.canonical_sort_key):
        wrapper = engine.make_position([candidate])
        target = _resolve(engine, wrapper, registry)
        ok = True
        for other in node.options:
            if other is candidate:
                continue
            if other.is_terminal:
                ok = False
                break
            if not any(_resolve(engine, reply, registry) is target for reply in other.options):
                ok = False
                break
        if ok:
            return wrapper
    return None


def _apply_rules(engine: Engine, node: Position, registry: dict) -> Optional[Position]:
    """One rewrite step on a node whose options are already simplified, or None."""
    result = _mex_pattern(engine, node)
    if result is not None:
        return result
    result = _bypass(engine, node, registry)
    if result is not None and result is not node:
        return result
    result = _dominate(engine, node, registry)
    if result is not None and result is not node:
        return result
    return None


def _chase(engine: Engine, start: Position, registry: dict) -> Position:
    """Run rules at the top of `start` until nothing fires; register the chain."""
    chain = []
    current = start
    while True:
        entry = registry.get(current.uid)
        if entry is not None:
            final = entry[1]
            if final is current:
                break
            chain.append(current)
            current = final
            continue
        if current.is_terminal:
            break
        step = _apply_rules(engine, current, registry)
        if step is None:
            break
        chain.append(current)
        current = step
    registry.setdefault(current.uid, (current, current))
    for node in chain:
        registry[node.uid] = (node, current)
    return current


def simplify(engine: Engine, pos: Position) -> Position:
    """Bottom-up simplification to a fixpoint; idempotent and outcome-preserving."""
    engine.ensure_owned(pos)
    registry = engine.cache(_REGISTRY)
    stack = [pos]
    while stack:
        node = stack[-1]
        if node.uid in registry:
            stack.pop()
            continue
        if node.is_terminal:
            registry[node.uid] = (node, node)
            stack.pop()
            continue
        pending = [o for o in node.options if o.uid not in registry]
        if pending:
            stack.extend(pending)
            continue
        rebuilt = engine.make_position(registry[o.uid][1] for o in node.options)
        final = _chase(engine, rebuilt, registry)
        if node.uid not in registry:
            registry[node.uid] = (node, final)
        stack.pop()
    return registry[pos.uid][1]


def reduce_bypass(engine: Engine, pos: Position) -> Optional[Position]:
    """Apply the bypass rule once at the top of pos, or None if it does not fire.

    The hypothesis is tested on the options as given; subpositions named in
    the rule are compared by their simplified forms.
    """
    engine.ensure_owned(pos)
    if pos.is_terminal:
        raise ValueError("bypass reduction applies to non-terminal positions")
    return _bypass(engine, pos, engine.cache(_REGISTRY))


def reduce_dominate(engine: Engine, pos: Position) -> Optional[Position]:
    """Apply the dominate rule once at the top of pos, or None if it does not fire.

    With a single option the hypothesis is vacuous and pos itself comes back.
    Candidates are tried in canonical option order.
    """
    engine.ensure_owned(pos)
    if pos.is_terminal:
        raise ValueError("dominate reduction applies to non-terminal positions")
    return _dominate(engine, pos, engine.cache(_REGISTRY))


def registered_simplifications(engine: Engine) -> list[tuple[Position, Position]]:
    """All (input, output) pairs recorded so far with input != output."""
    registry = engine.cache(_REGISTRY)
    return [entry for entry in registry.values() if entry[0] is not entry[1]]
