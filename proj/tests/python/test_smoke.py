import pytest

import resetkit


def test_cerny_lengths():
    for n in range(2, 7):
        assert resetkit.shortest_reset_length(resetkit.cerny_automaton(n)) == (n - 1) ** 2


def test_dfa_from_table_and_words():
    a = resetkit.Dfa(2, 2, [[1, 0], [0, 0]])
    assert a.states == 2 and a.letters == 2
    assert a.next(0, 0) == 1
    assert resetkit.is_synchronizing(a)
    w = resetkit.shortest_reset_word(a)
    assert w == [1]
    assert resetkit.is_reset_word(a, w)
    assert resetkit.greedy_reset_word(a) is not None


def test_not_synchronizing():
    swap = resetkit.Dfa(2, 1, [[1], [0]])
    assert not resetkit.is_synchronizing(swap)
    assert resetkit.shortest_reset_length(swap) is None
    assert resetkit.shortest_length_via_oracle(swap) is None


def test_oracle_algorithms():
    c3 = resetkit.cerny_automaton(3)
    assert resetkit.shortest_length_via_oracle(c3) == (4, 2)
    w = resetkit.shortest_word_via_oracle(c3)
    assert len(w) == 4 and resetkit.is_reset_word(c3, w)
    assert resetkit.has_reset_word_of_length(c3, 10**9)
    assert not resetkit.has_reset_word_of_length(c3, 3)


def test_big_counts():
    constant = resetkit.Dfa(2, 3, [[0, 0, 0], [0, 0, 0]])
    assert resetkit.count_reset_words(constant, 70) == 3**70


def test_text_round_trip():
    c3 = resetkit.cerny_automaton(3)
    assert resetkit.parse_dfa(resetkit.serialize_dfa(c3)) == c3


def test_errors():
    with pytest.raises(resetkit.ParseError):
        resetkit.parse_dfa("dfa 2 1\n0 0 1\n")
    with pytest.raises(resetkit.InputError):
        resetkit.Dfa(2, 1, [[0]])
    with pytest.raises(resetkit.BudgetExceeded):
        resetkit.shortest_reset_length(resetkit.cerny_automaton(8), budget=4)


def test_reductions():
    unsat = "p cnf 1 2\n1 0\n-1 0\n"
    assert resetkit.verify_maxsat(unsat).endswith("RESULT PASS\n")
    assert resetkit.verify_fsat("p cnf 2 1\n1 2 0\n").endswith("RESULT PASS\n")
    assert resetkit.verify_sat_unsat("p cnf 1 1\n1 0\n", unsat).endswith("RESULT PASS\n")
    assert resetkit.max_sat_size(unsat) == 1
    gadget = resetkit.build_maxsat_gadget(unsat)
    assert resetkit.shortest_reset_length(gadget) == 21
