"""Core engine: interning, sums, conjugates, outcomes, deep trees."""
import pytest

from lrgame import Engine, Outcome, outcome_after_star_r


def test_terminals_are_interned_singletons(engine):
    assert engine.make_terminal("L") is engine.star_l
    assert engine.make_terminal("R") is engine.star_r
    assert engine.star_l is not engine.star_r
    assert engine.star_l.is_terminal and engine.star_l.birthday == 0
    with pytest.raises(ValueError):
        engine.make_terminal("X")


def test_make_position_interns_up_to_option_set(engine):
    L, R = engine.star_l, engine.star_r
    a = engine.make_position([L, R])
    b = engine.make_position([R, L])
    assert a is b
    assert engine.make_position([L, L]) is engine.make_position([L])
    assert not a.is_terminal
    assert a.birthday == 1


def test_make_position_rejects_empty(engine):
    with pytest.raises(ValueError, match="at least one option"):
        engine.make_position([])


def test_positions_are_engine_owned(engine):
    other = Engine()
    foreign = other.make_position([other.star_l])
    with pytest.raises(ValueError, match="does not belong"):
        engine.make_position([foreign])
    with pytest.raises(ValueError, match="does not belong"):
        engine.outcome(foreign)


def test_reset_invalidates_and_adopt_recovers(engine):
    pos = engine.make_position([engine.star_l])
    engine.reset()
    with pytest.raises(ValueError, match="does not belong"):
        engine.birthday(pos)
    again = engine.adopt(pos)
    assert engine.canonical_text(again) == "{*L}"


def test_adopt_across_engines(engine):
    other = Engine()
    g = other.make_position([other.star_l, other.make_position([other.star_r])])
    mine = engine.adopt(g)
    assert engine.canonical_text(mine) == other.canonical_text(g)
    assert engine.adopt(mine) is mine


def test_terminal_sum_axiom_table(engine):
    L, R = engine.star_l, engine.star_r
    assert engine.sum(L, L) is L
    assert engine.sum(R, R) is L
    assert engine.sum(L, R) is R
    assert engine.sum(R, L) is R


def test_sum_skips_terminal_branches(engine):
    # {*L} + {*R}: each component contributes one branch, terminals none
    L, R = engine.star_l, engine.star_r
    gl = engine.make_position([L])
    gr = engine.make_position([R])
    expected = engine.make_position([engine.make_position([R])])
    assert engine.sum(gl, gr) is expected


def test_sum_expands_by_single_component_moves(engine):
    L, R = engine.star_l, engine.star_r
    b1 = engine.make_position([L, R])
    gl = engine.make_position([L])
    total = engine.sum(b1, gl)
    # moves in b1 lead to *L+{*L} and *R+{*L}; the move in gl leads to b1+*L
    assert set(total.options) == {gl, engine.make_position([R]), b1}


def test_sum_is_commutative_and_associative_by_identity(engine):
    L, R = engine.star_l, engine.star_r
    g = engine.make_position([L, engine.make_position([R])])
    h = engine.make_position([engine.make_position([L]), R])
    j = engine.make_position([L, R])
    assert engine.sum(g, h) is engine.sum(h, g)
    assert engine.sum(engine.sum(g, h), j) is engine.sum(g, engine.sum(h, j))


def test_star_l_is_identity_and_star_r_conjugates(engine):
    g = engine.make_position([engine.star_l, engine.make_position([engine.star_r])])
    assert engine.sum(g, engine.star_l) is g
    assert engine.sum(g, engine.star_r) is engine.conjugate(g)


def test_sum_all(engine):
    L, R = engine.star_l, engine.star_r
    assert engine.sum_all([L, R, R]) is L
    assert engine.sum_all([L]) is L
    with pytest.raises(ValueError):
        engine.sum_all([])


def test_conjugate_swaps_terminals_and_is_involutive(engine):
    L, R = engine.star_l, engine.star_r
    assert engine.conjugate(L) is R
    assert engine.conjugate(R) is L
    g = engine.make_position([L, engine.make_position([L, R])])
    assert engine.conjugate(engine.conjugate(g)) is g
    assert engine.conjugate(engine.make_position([L])) is engine.make_position([R])


def test_outcome_recursion_cases(engine):
    L, R = engine.star_l, engine.star_r
    assert engine.outcome(L) is Outcome.L
    assert engine.outcome(R) is Outcome.R
    assert engine.outcome(engine.make_position([L])) is Outcome.L
    assert engine.outcome(engine.make_position([R])) is Outcome.R
    b1 = engine.make_position([L, R])
    assert engine.outcome(b1) is Outcome.N
    # all options N means the mover always hands the opponent a first-player win
    assert engine.outcome(engine.make_position([b1])) is Outcome.P
    gl = engine.make_position([L])
    gr = engine.make_position([R])
    assert engine.outcome(engine.make_position([gl, gr])) is Outcome.N
    # an N option does not spoil a one-sided position
    assert engine.outcome(engine.make_position([L, b1])) is Outcome.L
    assert engine.outcome(engine.make_position([R, b1])) is Outcome.R


def test_outcome_partial_order():
    assert Outcome.L > Outcome.P > Outcome.R
    assert Outcome.L > Outcome.N > Outcome.R
    assert not (Outcome.P < Outcome.N)
    assert not (Outcome.P > Outcome.N)
    assert not (Outcome.P <= Outcome.N)
    assert not (Outcome.N >= Outcome.P)
    assert Outcome.P.compare(Outcome.N) == "incomparable"
    assert Outcome.R.compare(Outcome.L) == "lt"
    assert Outcome.L.compare(Outcome.N) == "gt"
    assert Outcome.N.compare(Outcome.N) == "eq"


def test_outcome_after_star_r_transform(engine):
    assert outcome_after_star_r(Outcome.L) is Outcome.R
    assert outcome_after_star_r(Outcome.R) is Outcome.L
    assert outcome_after_star_r(Outcome.N) is Outcome.N
    assert outcome_after_star_r(Outcome.P) is Outcome.P
    L, R = engine.star_l, engine.star_r
    for g in (L, engine.make_position([L, R]), engine.make_position([engine.make_position([L])])):
        assert engine.outcome(engine.sum(g, R)) is outcome_after_star_r(engine.outcome(g))


def test_birthday(engine):
    L, R = engine.star_l, engine.star_r
    assert engine.birthday(L) == 0
    b1 = engine.make_position([L, R])
    assert engine.birthday(b1) == 1
    assert engine.birthday(engine.make_position([b1, L])) == 2


def test_node_count(engine):
    L, R = engine.star_l, engine.star_r
    assert engine.node_count(L) == 1
    b1 = engine.make_position([L, R])
    assert engine.node_count(b1) == 3
    # sharing is counted once
    assert engine.node_count(engine.make_position([b1, engine.make_position([b1])])) == 5


def test_canonical_text_ordering(engine):
    L, R = engine.star_l, engine.star_r
    assert engine.canonical_text(engine.make_position([R, L])) == "{*L, *R}"
    b1 = engine.make_position([L, R])
    # younger options print first, ties break on text
    assert engine.canonical_text(engine.make_position([b1, L])) == "{*L, {*L, *R}}"


def test_deep_trees_use_no_recursion(engine):
    node = engine.star_l
    for _ in range(12000):
        node = engine.make_position([node])
    assert engine.birthday(node) == 12000
    assert engine.outcome(node) is Outcome.L
    conj = engine.conjugate(node)
    assert engine.conjugate(conj) is node
    assert engine.sum(node, engine.star_r) is conj
    assert engine.canonical_text(node).count("{") == 12000


def test_deep_sum_of_chains(engine):
    node = engine.star_l
    for _ in range(3000):
        node = engine.make_position([node])
    other = engine.make_position([engine.star_l, engine.star_r])
    total = engine.sum(node, other)
    assert engine.birthday(total) == 3001
    assert engine.outcome(total) in (Outcome.L, Outcome.N)
