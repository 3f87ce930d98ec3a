#include "loopbound/nfa.hpp"

#include <array>
#include <cstdint>
#include <sstream>
#include <vector>

namespace loopbound {

namespace {

struct Directives {
  bool have_states = false, have_start = false, have_accept = false;
  Nfa nfa;
};

}  // namespace

std::variant<Nfa, ParseError> parse_nfa(std::string_view text) {
  Directives d;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    std::istringstream line(raw);
    std::string word;
    if (!(line >> word)) continue;
    auto want_int = [&](int& out) {
      if (!(line >> out)) {
        throw ParseError{lineno, 1, "expected a number after '" + word + "'"};
      }
    };
    try {
      if (word == "states") {
        want_int(d.nfa.n_states);
        d.have_states = true;
      } else if (word == "start") {
        want_int(d.nfa.start);
        d.have_start = true;
      } else if (word == "accept") {
        int q;
        while (line >> q) d.nfa.accepting.insert(q);
        d.have_accept = true;
      } else if (word == "trans") {
        int from, sym, to;
        want_int(from);
        want_int(sym);
        want_int(to);
        if (sym != 0 && sym != 1)
          return ParseError{lineno, 1, "symbol must be 0 or 1"};
        d.nfa.transitions.insert({from, sym, to});
      } else {
        return ParseError{lineno, 1, "unknown directive '" + word + "'"};
      }
    } catch (const ParseError& e) {
      return e;
    }
  }
  const Nfa& a = d.nfa;
  if (!d.have_states || a.n_states < 1)
    return ParseError{lineno, 1, "missing or invalid 'states' directive"};
  if (!d.have_start || a.start < 1 || a.start > a.n_states)
    return ParseError{lineno, 1, "missing or out-of-range 'start'"};
  if (!d.have_accept || a.accepting.empty())
    return ParseError{lineno, 1, "the accepting set must be non-empty"};
  for (int q : a.accepting)
    if (q < 1 || q > a.n_states)
      return ParseError{lineno, 1,
                        "accepting state " + std::to_string(q) + " out of range"};
  for (const auto& [from, sym, to] : a.transitions)
    if (from < 1 || from > a.n_states || to < 1 || to > a.n_states)
      return ParseError{lineno, 1, "transition endpoint out of range"};
  return d.nfa;
}

namespace {

CommandPtr seq_all(std::vector<CommandPtr> parts) {
  CommandPtr out = std::move(parts.back());
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    out = make_seq(std::move(parts[i]), std::move(out));
  return out;
}

}  // namespace

Program nfa_to_program(const Nfa& a) {
  const int n = a.n_states;
  auto xvar = [](int q) { return q; };
  auto xprime = [n](int q) { return n + q; };
  const int counter = 2 * n + 1;
  const int seed = 2 * n + 2;

  auto symbol_step = [&](int sym) {
    std::vector<CommandPtr> parts;
    for (int q = 1; q <= n; ++q) {
      // next value for state q: seed times every predecessor under sym
      parts.push_back(make_assign(xprime(q), Expr::var(seed)));
      for (int p = 1; p <= n; ++p)
        if (a.transitions.count({p, sym, q}))
          parts.push_back(
              make_assign(xprime(q), Expr::mul(xprime(q), xvar(p))));
    }
    for (int q = 1; q <= n; ++q)
      parts.push_back(make_assign(xvar(q), Expr::var(xprime(q))));
    return seq_all(std::move(parts));
  };

  std::vector<CommandPtr> parts;
  parts.push_back(make_assign(xvar(a.start), Expr::zero()));
  parts.push_back(
      make_loop(counter, make_choose(symbol_step(0), symbol_step(1))));
  for (int q : a.accepting)
    parts.push_back(make_assign(seed, Expr::mul(seed, xvar(q))));

  Program p;
  p.var_count = 2 * n + 2;
  p.root = seq_all(std::move(parts));
  return p;
}

bool is_universal(const Nfa& a) {
  const int n = a.n_states;
  std::vector<std::array<std::uint32_t, 2>> delta(
      static_cast<std::size_t>(n) + 1, {0, 0});
  for (const auto& [from, sym, to] : a.transitions)
    delta[static_cast<std::size_t>(from)][sym] |= std::uint32_t{1} << (to - 1);
  std::uint32_t accept_mask = 0;
  for (int q : a.accepting) accept_mask |= std::uint32_t{1} << (q - 1);

  std::set<std::uint32_t> seen;
  std::vector<std::uint32_t> stack{std::uint32_t{1} << (a.start - 1)};
  while (!stack.empty()) {
    std::uint32_t cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    if ((cur & accept_mask) == 0) return false;  // this word is rejected
    for (int sym : {0, 1}) {
      std::uint32_t next = 0;
      for (int q = 1; q <= n; ++q)
        if (cur & (std::uint32_t{1} << (q - 1)))
          next |= delta[static_cast<std::size_t>(q)][sym];
      stack.push_back(next);
    }
  }
  return true;
}

}  // namespace loopbound
