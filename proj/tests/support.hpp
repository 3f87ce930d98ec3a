#pragma once

// Shared test fixtures: the curated program corpus, seeded random
// generators, and a brute-force execution oracle that enumerates paths
// directly (independent of the library's saturation-based interpreter).

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loopbound/ast.hpp"
#include "loopbound/interp.hpp"
#include "loopbound/nfa.hpp"
#include "loopbound/parser.hpp"

namespace testsupport {

using namespace loopbound;

inline Program parse_ok(const std::string& text) {
  auto r = parse_program(text);
  if (auto* err = std::get_if<ParseError>(&r))
    throw std::runtime_error("corpus program failed to parse: " +
                             err->message + " in: " + text);
  return std::get<Program>(std::move(r));
}

// --- curated programs ---------------------------------------------------

// The two choice examples: identical except that the second branch resets
// instead of copying, which turns exponential growth into quadratic.
inline const char* kChooseCopy =
    "loop X4 { X3 := X1 + X2 ; choose { X1 := X3 } or { X2 := X3 } }";
inline const char* kChooseReset =
    "loop X4 { X3 := X1 + X2 ; choose { X1 := X3 } or { X2 := 0 } }";

// Nested loop whose body can double X2 once per outer iteration; appending
// a reset of the inner counter kills the iterative fact.
inline const char* kNestedDouble =
    "loop X4 { loop X3 { X1 := X2 } ; X2 := X1 + X2 }";
inline const char* kNestedDoubleReset =
    "loop X4 { loop X3 { X1 := X2 } ; X2 := X1 + X2 ; X3 := 0 }";

// Reset followed by a multiply-accumulate loop, in both body orders. In
// the first order the multiplication sees the fresh zero and everything
// collapses; swapping the two assignments re-seeds X2 first and growth is
// exponential.
inline const char* kSeedThenMul =
    "X2 := 0 ; loop X3 { X1 := X2 * X1 ; X2 := X1 }";
inline const char* kMulThenSeed =
    "X2 := 0 ; loop X3 { X2 := X1 ; X1 := X2 * X1 }";

// Linear-mode pair: an unfolded square accumulation (not linear) and a
// plain additive step (linear).
inline const char* kAddSquare = "vars 3\nX3 := X2 * X2 ; X1 := X1 + X3";
inline const char* kAddPlain = "X1 := X1 + X2";

// Closed-form growth samples.
inline const char* kIdentity = "vars 2\nskip";
inline const char* kDoubling = "loop X2 { X1 := X1 + X1 }";
inline const char* kAdditive = "vars 3\nloop X2 { X1 := X1 + X3 }";

inline std::vector<std::string> paper_corpus_texts() {
  return {kChooseCopy,  kChooseReset, kNestedDouble, kNestedDoubleReset,
          kSeedThenMul, kMulThenSeed, kAddSquare,    kAddPlain,
          kIdentity,    kDoubling,    kAdditive};
}

// --- seeded randomness ---------------------------------------------------

// mt19937 with modulo draws: identical sequences on every platform.
struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}
  std::uint32_t next(std::uint32_t bound) { return gen() % bound; }
};

inline CommandPtr random_command(Rng& rng, int n, int depth,
                                 std::uint64_t forbidden) {
  auto rand_var = [&] { return static_cast<VarId>(1 + rng.next(n)); };
  auto make_random_assign = [&]() -> CommandPtr {
    std::vector<VarId> targets;
    for (int v = 1; v <= n; ++v)
      if (!(forbidden & (std::uint64_t{1} << (v - 1)))) targets.push_back(v);
    if (targets.empty()) return make_skip();
    VarId l = targets[rng.next(static_cast<std::uint32_t>(targets.size()))];
    switch (rng.next(5)) {
      case 0:
        return make_assign(l, Expr::zero());
      case 1:
        return make_assign(l, Expr::var(rand_var()));
      case 2:
        return make_assign(l, Expr::add(rand_var(), rand_var()));
      default:
        return make_assign(l, Expr::mul(rand_var(), rand_var()));
    }
  };
  if (depth <= 0) {
    return rng.next(6) == 0 ? make_skip() : make_random_assign();
  }
  switch (rng.next(10)) {
    case 0:
      return make_skip();
    case 1:
    case 2:
    case 3:
      return make_random_assign();
    case 4:
    case 5:
    case 6:
      return make_seq(random_command(rng, n, depth - 1, forbidden),
                      random_command(rng, n, depth - 1, forbidden));
    case 7:
    case 8: {
      VarId counter = rand_var();
      return make_loop(counter,
                       random_command(rng, n, depth - 1,
                                      forbidden | (std::uint64_t{1}
                                                   << (counter - 1))));
    }
    default:
      return make_choose(random_command(rng, n, depth - 1, forbidden),
                         random_command(rng, n, depth - 1, forbidden));
  }
}

inline Program random_program(std::uint32_t seed, int max_n = 5,
                              int max_depth = 4) {
  Rng rng(seed);
  Program p;
  p.var_count = 2 + static_cast<int>(rng.next(static_cast<std::uint32_t>(max_n - 1)));
  p.root = random_command(rng, p.var_count, max_depth, 0);
  return p;
}

inline Nfa random_nfa(Rng& rng, int n_states) {
  Nfa a;
  a.n_states = n_states;
  a.start = 1 + static_cast<int>(rng.next(static_cast<std::uint32_t>(n_states)));
  // density varies per automaton so both universal and non-universal
  // instances show up
  std::uint32_t density = 20 + rng.next(75);  // percent
  for (int p = 1; p <= n_states; ++p)
    for (int sym = 0; sym <= 1; ++sym)
      for (int q = 1; q <= n_states; ++q)
        if (rng.next(100) < density) a.transitions.insert({p, sym, q});
  for (int q = 1; q <= n_states; ++q)
    if (rng.next(2) == 0) a.accepting.insert(q);
  if (a.accepting.empty())
    a.accepting.insert(1 + static_cast<int>(
                               rng.next(static_cast<std::uint32_t>(n_states))));
  return a;
}

// --- brute-force oracle ---------------------------------------------------

// Path enumeration without store deduplication or step folding: every
// execution contributes its (final store, step count) pair. Only usable
// at tiny inputs; that is the point.
inline void brute_paths(const Command& c, const Store& s, std::uint64_t steps,
                        std::set<std::pair<Store, std::uint64_t>>& out) {
  switch (c.kind) {
    case CmdKind::Skip:
      out.insert({s, steps + 1});
      break;
    case CmdKind::Assign: {
      auto val = [&](VarId v) { return s[static_cast<std::size_t>(v - 1)]; };
      std::uint64_t v = 0;
      switch (c.expr.kind) {
        case ExprKind::Zero: v = 0; break;
        case ExprKind::Var: v = val(c.expr.a); break;
        case ExprKind::Add: v = val(c.expr.a) + val(c.expr.b); break;
        case ExprKind::Mul: v = val(c.expr.a) * val(c.expr.b); break;
      }
      Store t = s;
      t[static_cast<std::size_t>(c.var - 1)] = v;
      out.insert({std::move(t), steps + 1});
      break;
    }
    case CmdKind::Seq: {
      std::set<std::pair<Store, std::uint64_t>> mid;
      brute_paths(*c.a, s, steps, mid);
      for (const auto& [y, k] : mid) brute_paths(*c.b, y, k, out);
      break;
    }
    case CmdKind::Choose:
      brute_paths(*c.a, s, steps, out);
      brute_paths(*c.b, s, steps, out);
      break;
    case CmdKind::Loop: {
      const std::uint64_t bound = s[static_cast<std::size_t>(c.var - 1)];
      std::set<std::pair<Store, std::uint64_t>> cur{{s, steps}};
      for (const auto& p : cur) out.insert(p);
      for (std::uint64_t i = 1; i <= bound; ++i) {
        std::set<std::pair<Store, std::uint64_t>> next;
        for (const auto& [y, k] : cur) brute_paths(*c.a, y, k, next);
        for (const auto& p : next) out.insert(p);
        if (next == cur) break;
        cur = std::move(next);
      }
      break;
    }
  }
}

struct BruteResult {
  std::set<Store> final_stores;
  std::vector<std::uint64_t> max_per_var;
  std::uint64_t max_step_count = 0;
};

inline BruteResult brute_exec(const Command& c, const Store& s0) {
  std::set<std::pair<Store, std::uint64_t>> pairs;
  brute_paths(c, s0, 0, pairs);
  BruteResult r;
  r.max_per_var.assign(s0.size(), 0);
  for (const auto& [store, steps] : pairs) {
    r.final_stores.insert(store);
    r.max_step_count = std::max(r.max_step_count, steps);
    for (std::size_t i = 0; i < store.size(); ++i)
      r.max_per_var[i] = std::max(r.max_per_var[i], store[i]);
  }
  return r;
}

}  // namespace testsupport
