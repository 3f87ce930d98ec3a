// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "loopbound/analyzer.hpp"
#include "loopbound/interp.hpp"
#include "loopbound/nfa.hpp"
#include "loopbound/parser.hpp"
#include "support.hpp"

using namespace loopbound;
using testsupport::parse_ok;

namespace {

AnalyzerOptions opts(Mode m, bool full_l2 = false) {
  AnalyzerOptions o;
  o.mode = m;
  o.full_l2_fixpoint = full_l2;
  return o;
}

bool bounded(const std::string& text, Mode m, int var) {
  Program p = parse_ok(text);
  Analysis a(p, opts(m));
  return a.verdict(var).bounded;
}

bool has_exponential(const JudgementSet& s) {
  for (const Entry& e : s.entries())
    if (e.dep.is_unary() && e.dep.type() == DepType::Exponential) return true;
  return false;
}

bool has_reset(const Command& c) {
  if (c.kind == CmdKind::Assign && c.expr.kind == ExprKind::Zero) return true;
  if (c.a && has_reset(*c.a)) return true;
  return c.b && has_reset(*c.b);
}

// paper examples plus seeded random programs, >= 50 total
std::vector<Program> corpus() {
  std::vector<Program> out;
  for (const std::string& text : testsupport::paper_corpus_texts())
    out.push_back(parse_ok(text));
  std::uint32_t seed = 9000;
  while (out.size() < 56) {
    Program p = testsupport::random_program(seed++);
    out.push_back(parse_ok(render(p)));  // normalize sequence nesting
  }
  return out;
}

bool z_linear(const Nfa& a) {
  Program p = nfa_to_program(a);
  Analysis an(p, opts(Mode::Lin));
  return an.verdict(p.var_count).bounded;
}

// ---- criteria ----

bool criterion1(std::string& detail) {
  struct Case {
    const char* text;
    Mode mode;
    int var;
    bool want_bounded;
  };
  const Case cases[] = {
      {testsupport::kChooseCopy, Mode::Poly, 1, false},
      {testsupport::kChooseCopy, Mode::Poly, 2, false},
      {testsupport::kChooseCopy, Mode::Poly, 3, false},
      {testsupport::kChooseCopy, Mode::Poly, 4, true},
      {testsupport::kChooseReset, Mode::Poly, 1, true},
      {testsupport::kChooseReset, Mode::Poly, 2, true},
      {testsupport::kChooseReset, Mode::Poly, 3, true},
      {testsupport::kChooseReset, Mode::Poly, 4, true},
      {testsupport::kAddSquare, Mode::Lin, 1, false},
      {testsupport::kAddPlain, Mode::Lin, 1, true},
  };
  for (const Case& c : cases) {
    if (bounded(c.text, c.mode, c.var) != c.want_bounded) {
      detail = std::string("verdict mismatch for X") + std::to_string(c.var) +
               " of: " + c.text;
      return false;
    }
  }

  // the nested doubling loop proves counter-to-X1 exponential growth ...
  Program L = parse_ok(testsupport::kNestedDouble);
  Analysis aL(L, opts(Mode::Poly));
  if (!aL.judgements(*L.root, Context{})
           .contains({Dependence::unary(4, DepType::Exponential, 1), Context{}})) {
    detail = "missing (X4 -3-> X1, {}) for the nested doubling loop";
    return false;
  }
  // ... and resetting the inner counter leaves only the multiplicative fact
  Program R = parse_ok(testsupport::kNestedDoubleReset);
  Analysis aR(R, opts(Mode::Poly));
  const JudgementSet& sR = aR.judgements(*R.root, Context{});
  if (!sR.contains({Dependence::unary(2, DepType::Multiplicative, 2),
                    Context::of({3})})) {
    detail = "missing (X2 -2-> X2, {3}) for the reset variant";
    return false;
  }
  if (has_exponential(sR)) {
    detail = "unexpected exponential judgement in the reset variant";
    return false;
  }
  return true;
}

bool criterion2(std::string& detail) {
  long checked = 0;
  auto agree = [&](const Nfa& a) {
    ++checked;
    return z_linear(a) == is_universal(a);
  };

  // all automata with one state
  for (int tmask = 0; tmask < 4; ++tmask) {
    Nfa a;
    a.n_states = 1;
    a.start = 1;
    a.accepting = {1};
    if (tmask & 1) a.transitions.insert({1, 0, 1});
    if (tmask & 2) a.transitions.insert({1, 1, 1});
    if (!agree(a)) {
      detail = "1-state disagreement at transition mask " + std::to_string(tmask);
      return false;
    }
  }
  // all automata with two states
  for (int start = 1; start <= 2; ++start)
    for (int accmask = 1; accmask <= 3; ++accmask)
      for (int tmask = 0; tmask < 256; ++tmask) {
        Nfa a;
        a.n_states = 2;
        a.start = start;
        for (int q = 1; q <= 2; ++q)
          if (accmask & (1 << (q - 1))) a.accepting.insert(q);
        int bit = 0;
        for (int p = 1; p <= 2; ++p)
          for (int sym = 0; sym <= 1; ++sym)
            for (int q = 1; q <= 2; ++q, ++bit)
              if (tmask & (1 << bit)) a.transitions.insert({p, sym, q});
        if (!agree(a)) {
          std::ostringstream os;
          os << "2-state disagreement: start=" << start
             << " accmask=" << accmask << " tmask=" << tmask;
          detail = os.str();
          return false;
        }
      }
  // seeded random automata with 3..4 states
  testsupport::Rng rng(20250811);
  for (int i = 0; i < 200; ++i) {
    Nfa a = testsupport::random_nfa(rng, 3 + static_cast<int>(rng.next(2)));
    if (!agree(a)) {
      detail = "random disagreement at index " + std::to_string(i);
      return false;
    }
  }
  detail = std::to_string(checked) + " automata, all agree";
  return true;
}

bool criterion3(std::string& detail) {
  int programs = 0, loop_nodes = 0;
  for (const Program& p : corpus()) {
    ++programs;
    for (Mode m : {Mode::Poly, Mode::Lin}) {
      Analysis a(p, opts(m, false));
      Analysis b(p, opts(m, true));
      a.verdicts();
      b.verdicts();
      auto keys = a.explored_keys();
      for (const auto& [node, ctx] : b.explored_keys()) keys.emplace_back(node, ctx);
      for (const auto& [node, ctx] : keys) {
        if (node->kind == CmdKind::Loop) ++loop_nodes;
        if (!a.judgements(*node, ctx).same_entries(b.judgements(*node, ctx))) {
          detail = "restricted vs fixpoint sets differ at: " + render(*node);
          return false;
        }
      }
    }
  }
  detail = std::to_string(programs) + " programs, " +
           std::to_string(loop_nodes) + " loop-node set comparisons";
  return true;
}

bool criterion4(std::string& detail) {
  int vars = 0;
  for (const Program& p : corpus()) {
    Analysis poly(p, opts(Mode::Poly));
    Analysis lin(p, opts(Mode::Lin));
    for (int j = 1; j <= p.var_count; ++j) {
      ++vars;
      if (lin.verdict(j).bounded && !poly.verdict(j).bounded) {
        detail = "X" + std::to_string(j) +
                 " linearly bounded but not polynomially in: " +
                 render(*p.root);
        return false;
      }
    }
  }
  detail = std::to_string(vars) + " variable verdicts, no exception";
  return true;
}

bool criterion5(std::string& detail) {
  const DepType types[] = {DepType::Identity, DepType::Additive,
                           DepType::Multiplicative, DepType::Exponential};
  for (DepType a : types) {
    if (join(a, a) != a || join(a, DepType::Identity) != a) {
      detail = "join lattice law failed";
      return false;
    }
    for (DepType b : types) {
      if (join(a, b) != join(b, a)) {
        detail = "join commutativity failed";
        return false;
      }
      for (DepType c : types)
        if (join(join(a, b), c) != join(a, join(b, c))) {
          detail = "join associativity failed";
          return false;
        }
    }
  }

  // associativity of composition over every triple with three variables;
  // conjunction composition is set-valued where the pairing is ambiguous
  auto all = enumerate_deps(3);
  long defined_both = 0, definedness_disagreements = 0;
  for (const Dependence& a : all)
    for (const Dependence& b : all) {
      Composed ab = compose_all(a, b);
      for (const Dependence& c : all) {
        std::set<Dependence> left, right;
        for (const Dependence& m : ab)
          for (const Dependence& r : compose_all(m, c)) left.insert(r);
        for (const Dependence& m : compose_all(b, c))
          for (const Dependence& r : compose_all(a, m)) right.insert(r);
        if (!left.empty() && !right.empty()) {
          ++defined_both;
          if (left != right) {
            detail = "composition associativity failed: " + a.to_string() +
                     " . " + b.to_string() + " . " + c.to_string();
            return false;
          }
        } else if (left.empty() != right.empty()) {
          ++definedness_disagreements;
        }
      }
    }

  for (const Dependence& d : all) {
    auto p = loop_correct(Mode::Poly, 2, d);
    auto l = loop_correct(Mode::Lin, 2, d);
    if (p.has_value() != l.has_value()) {
      detail = "correction definedness differs between modes";
      return false;
    }
    if (p && l && !(p->type() <= l->type())) {
      detail = "poly correction exceeds lin correction on " + d.to_string();
      return false;
    }
  }
  detail = std::to_string(defined_both) + " associativity triples, " +
           std::to_string(definedness_disagreements) +
           " definedness disagreements (reported, not asserted)";
  return true;
}

bool criterion6(std::string& detail) {
  auto fib = [](int k) {  // 1, 1, 2, 3, 5, 8, ...
    std::uint64_t x = 1, y = 1;
    for (int i = 2; i < k; ++i) {
      std::uint64_t z = x + y;
      x = y;
      y = z;
    }
    return k <= 2 ? 1ull : y;
  };
  struct Case {
    const char* text;
    std::function<std::vector<std::uint64_t>(std::uint64_t)> expect;
    std::vector<int> unbounded_poly;  // variables that must be NOT-POLY
  };
  const std::vector<Case> cases = {
      {testsupport::kIdentity,
       [](std::uint64_t n) { return std::vector<std::uint64_t>{n, n}; },
       {}},
      {testsupport::kDoubling,
       [](std::uint64_t n) {
         return std::vector<std::uint64_t>{n << n, n};
       },
       {1}},
      {testsupport::kAdditive,
       [](std::uint64_t n) {
         return std::vector<std::uint64_t>{n + n * n, n, n};
       },
       {}},
      {testsupport::kChooseCopy,
       [&](std::uint64_t n) {
         std::uint64_t v = n * fib(static_cast<int>(n) + 2);
         return std::vector<std::uint64_t>{v, v, v, n};
       },
       {1, 2, 3}},
      {testsupport::kChooseReset,
       [](std::uint64_t n) {
         return std::vector<std::uint64_t>{n * (n + 1), n, n * (n + 1), n};
       },
       {}},
  };
  for (const Case& c : cases) {
    Program p = parse_ok(c.text);
    auto rows = growth_probe(p, {1, 2, 3, 4});
    for (const GrowthRow& row : rows) {
      if (row.truncated) {
        detail = std::string("unexpected truncation on: ") + c.text;
        return false;
      }
      std::vector<std::uint64_t> want = c.expect(row.input);
      if (row.max_per_var != want) {
        detail = std::string("closed form mismatch at N=") +
                 std::to_string(row.input) + " for: " + c.text;
        return false;
      }
      // re-verify the closed form with the independent path oracle
      Store s0(static_cast<std::size_t>(p.var_count), row.input);
      testsupport::BruteResult brute = testsupport::brute_exec(*p.root, s0);
      if (brute.max_per_var != want) {
        detail = std::string("oracle disagrees with the closed form at N=") +
                 std::to_string(row.input) + " for: " + c.text;
        return false;
      }
    }
    Analysis a(p, opts(Mode::Poly));
    for (int j = 1; j <= p.var_count; ++j) {
      bool want_unbounded =
          std::find(c.unbounded_poly.begin(), c.unbounded_poly.end(), j) !=
          c.unbounded_poly.end();
      if (a.verdict(j).bounded == want_unbounded) {
        detail = "classification mismatch for X" + std::to_string(j) +
                 " of: " + std::string(c.text);
        return false;
      }
    }
  }
  detail = "5 programs x 4 probes, closed forms and classifications agree";
  return true;
}

bool criterion7(std::string& detail) {
  ExecLimits lim;
  lim.max_stores = 200'000;
  int usable = 0;
  std::uint32_t seed = 31000;
  int attempts = 0;
  while (usable < 100 && attempts < 1000) {
    ++attempts;
    Program p = testsupport::random_program(seed++);
    testsupport::Rng rng(seed * 17 + 3);
    Store lo, hi;
    for (int i = 0; i < p.var_count; ++i) {
      std::uint64_t base = rng.next(4);
      lo.push_back(base);
      hi.push_back(base + rng.next(3));
    }
    ExecResult rlo = reachable_stores(*p.root, lo, lim);
    ExecResult rhi = reachable_stores(*p.root, hi, lim);
    if (rlo.truncated || rhi.truncated) continue;
    ++usable;
    for (int i = 0; i < p.var_count; ++i)
      if (rlo.max_per_var[i] > rhi.max_per_var[i]) {
        detail = "monotonicity violated for X" + std::to_string(i + 1) +
                 " in: " + render(*p.root);
        return false;
      }
  }
  if (usable < 100) {
    detail = "only " + std::to_string(usable) + " non-truncated pairs found";
    return false;
  }
  detail = "100 monotone store pairs, no violation";
  return true;
}

bool criterion8(std::string& detail) {
  int reset_free = 0;
  for (const Program& p : corpus()) {
    if (has_reset(*p.root)) continue;
    ++reset_free;
    Analysis a(p, opts(Mode::Poly));
    a.verdicts();
    if (a.contexts_explored() != 1) {
      detail = "explored " + std::to_string(a.contexts_explored()) +
               " contexts for reset-free: " + render(*p.root);
      return false;
    }
  }
  if (reset_free < 5) {
    detail = "corpus has too few reset-free programs";
    return false;
  }
  detail = std::to_string(reset_free) +
           " reset-free programs, single context each";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"paper-example verdicts", criterion1},
      {"NFA differential suite", criterion2},
      {"restricted vs fixpoint loop correction", criterion3},
      {"mode consistency (lin bounded => poly bounded)", criterion4},
      {"dependence algebra exhaustive properties", criterion5},
      {"interpreter closed-form agreement", criterion6},
      {"interpreter monotonicity", criterion7},
      {"reset-free single-context degeneracy", criterion8},
  };
  int failures = 0;
  int id = 0;
  for (const Criterion& c : criteria) {
    ++id;
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, c.name,
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
