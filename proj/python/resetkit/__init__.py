"""Synchronizing automata: reset words, SAT-oracle algorithms and reduction gadgets."""

from ._resetkit import (
    BudgetExceeded,
    Dfa,
    InputError,
    OracleFailure,
    ParseError,
    build_maxsat_gadget,
    cerny_automaton,
    count_reset_words,
    greedy_reset_word,
    has_reset_word_of_length,
    is_reset_word,
    is_synchronizing,
    max_sat_size,
    parse_dfa,
    serialize_dfa,
    shortest_length_via_oracle,
    shortest_reset_length,
    shortest_reset_word,
    shortest_word_via_oracle,
    verify_fsat,
    verify_maxsat,
    verify_parsimony,
    verify_sat_unsat,
)

__all__ = [name for name in dir() if not name.startswith("_")]
