#include "loopbound/interp.hpp"

#include <algorithm>
#include <cassert>

namespace loopbound {

namespace {

// Reachable stores annotated with the largest step count that can produce
// each of them. Keeping only the maximum per store is exact for
// max_step_count because step counts add along sequencing.
using Rel = std::map<Store, std::uint64_t>;

class Evaluator {
 public:
  Evaluator(const ExecLimits& lim)
      : lim_(lim), work_budget_(64 * static_cast<std::uint64_t>(lim.max_stores)) {}

  bool truncated() const { return truncated_; }

  Rel eval(const Command& c, const Store& s) {
    if (out_of_budget()) return {};
    switch (c.kind) {
      case CmdKind::Skip:
        return {{s, 1}};
      case CmdKind::Assign: {
        std::uint64_t v = 0;
        if (!expr_value(c.expr, s, v)) {
          truncated_ = true;  // value above the cap: prune this path
          return {};
        }
        Store t = s;
        t[static_cast<std::size_t>(c.var - 1)] = v;
        return {{std::move(t), 1}};
      }
      case CmdKind::Seq: {
        Rel first = eval(*c.a, s);
        Rel out;
        for (const auto& [y, k] : first) {
          Rel second = eval(*c.b, y);
          for (const auto& [z, k2] : second) merge(out, z, k + k2);
        }
        return out;
      }
      case CmdKind::Choose: {
        Rel out = eval(*c.a, s);
        for (const auto& [y, k] : eval(*c.b, s)) merge(out, y, k);
        return out;
      }
      case CmdKind::Loop:
        return eval_loop(c, s);
      default:
        return {};
    }
  }

 private:
  Rel eval_loop(const Command& c, const Store& s) {
    const std::uint64_t bound = s[static_cast<std::size_t>(c.var - 1)];
    Rel result{{s, 0}};  // zero iterations cost nothing
    Rel cur = result;
    for (std::uint64_t i = 1; i <= bound; ++i) {
      if (out_of_budget()) break;
      Rel next;
      for (const auto& [y, k] : cur) {
        for (const auto& [z, k2] : eval(*c.a, y)) merge(next, z, k + k2);
      }
      if (next == cur) break;  // further iterations change nothing
      if (i < bound && same_keys(next, cur)) {
        // The store set is stable and only step counts move. When they all
        // move by the same delta per iteration, the remaining iterations
        // can be summed up in closed form.
        std::uint64_t delta = next.begin()->second - cur.begin()->second;
        bool uniform = true;
        for (auto itn = next.begin(), itc = cur.begin(); itn != next.end();
             ++itn, ++itc) {
          if (itn->second < itc->second ||
              itn->second - itc->second != delta) {
            uniform = false;
            break;
          }
        }
        if (uniform) {
          const std::uint64_t remaining = bound - i;
          for (const auto& [y, k] : next) {
            std::uint64_t total = k;
            if (delta != 0 && remaining > (UINT64_MAX - k) / delta) {
              truncated_ = true;
              total = UINT64_MAX;
            } else {
              total = k + remaining * delta;
            }
            merge(result, y, total);
          }
          return result;
        }
      }
      for (const auto& [y, k] : next) merge(result, y, k);
      cur = std::move(next);
    }
    return result;
  }

  bool expr_value(const Expr& e, const Store& s, std::uint64_t& out) const {
    auto val = [&](VarId v) { return s[static_cast<std::size_t>(v - 1)]; };
    switch (e.kind) {
      case ExprKind::Zero:
        out = 0;
        return true;
      case ExprKind::Var:
        out = val(e.a);
        return out <= lim_.max_value;
      case ExprKind::Add:
        out = val(e.a) + val(e.b);
        return out <= lim_.max_value;
      case ExprKind::Mul: {
        std::uint64_t x = val(e.a), y = val(e.b);
        if (y != 0 && x > lim_.max_value / y) return false;
        out = x * y;
        return true;
      }
    }
    return false;
  }

  void merge(Rel& rel, const Store& s, std::uint64_t steps) {
    ++work_;
    auto it = rel.find(s);
    if (it != rel.end()) {
      it->second = std::max(it->second, steps);
      return;
    }
    if (rel.size() >= lim_.max_stores) {
      truncated_ = true;
      return;
    }
    rel.emplace(s, steps);
  }

  static bool same_keys(const Rel& a, const Rel& b) {
    if (a.size() != b.size()) return false;
    for (auto ita = a.begin(), itb = b.begin(); ita != a.end(); ++ita, ++itb)
      if (ita->first != itb->first) return false;
    return true;
  }

  bool out_of_budget() {
    if (work_ > work_budget_) {
      truncated_ = true;
      return true;
    }
    return false;
  }

  const ExecLimits& lim_;
  std::uint64_t work_ = 0;
  const std::uint64_t work_budget_;
  bool truncated_ = false;
};

}  // namespace

ExecResult reachable_stores(const Command& c, const Store& s0,
                            const ExecLimits& lim) {
  Evaluator ev(lim);
  Rel rel = ev.eval(c, s0);
  ExecResult res;
  res.truncated = ev.truncated();
  res.max_per_var.assign(s0.size(), 0);
  for (const auto& [store, steps] : rel) {
    res.max_step_count = std::max(res.max_step_count, steps);
    for (std::size_t i = 0; i < store.size(); ++i)
      res.max_per_var[i] = std::max(res.max_per_var[i], store[i]);
    res.final_stores.insert(store);
  }
  return res;
}

std::vector<std::uint64_t> max_outputs(const Command& c, const Store& s0,
                                       const ExecLimits& lim) {
  return reachable_stores(c, s0, lim).max_per_var;
}

std::vector<GrowthRow> growth_probe(const Program& p,
                                    const std::vector<std::uint64_t>& probes,
                                    const ExecLimits& lim) {
  std::vector<GrowthRow> rows;
  for (std::uint64_t n : probes) {
    Store s(static_cast<std::size_t>(p.var_count), n);
    ExecResult r = reachable_stores(*p.root, s, lim);
    rows.push_back({n, r.max_per_var, r.truncated});
  }
  return rows;
}

}  // namespace loopbound
