#pragma once

#include <set>
#include <string_view>
#include <tuple>
#include <variant>

#include "loopbound/ast.hpp"
#include "loopbound/parser.hpp"

namespace loopbound {

// Nondeterministic finite automaton over the alphabet {0, 1}.
struct Nfa {
  int n_states = 0;  // states 1..n_states
  int start = 1;
  std::set<int> accepting;                          // nonempty
  std::set<std::tuple<int, int, int>> transitions;  // (from, symbol, to)
};

// One directive per line: "states <n>", "start <q>",
// "accept <q> [<q> ...]", "trans <q> <0|1> <q'>" (repeatable). "#" starts
// a comment. Structural faults (empty accepting set, out-of-range states)
// are reported as parse errors.
std::variant<Nfa, ParseError> parse_nfa(std::string_view text);

// Encodes the automaton as a program: per-state variables are zero exactly
// when the state is reached on the guessed word, a loop over a free
// counter guesses one symbol per iteration, and a final product over the
// accepting states' variables stays linearly bounded precisely when every
// word reaches acceptance. Variable layout: X_q = q, X'_q = n + q,
// counter = 2n+1, seed/result = 2n+2.
Program nfa_to_program(const Nfa& a);

// Subset-construction reachability from the start state; false exactly
// when some reachable state set (the unreachable sink included) misses
// every accepting state.
bool is_universal(const Nfa& a);

}  // namespace loopbound
