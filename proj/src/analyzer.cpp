#include "loopbound/analyzer.hpp"

#include <algorithm>
#include <cassert>

#include "loopbound/parser.hpp"

namespace loopbound {

std::string Context::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v = 1; v <= 64; ++v) {
    if (!contains(v)) continue;
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::A1: return "1";
    case RuleId::A2: return "2";
    case RuleId::A3: return "3";
    case RuleId::A4: return "4";
    case RuleId::A5: return "5";
    case RuleId::A6: return "6";
    case RuleId::C: return "C";
    case RuleId::S: return "S";
    case RuleId::L0: return "L0";
    case RuleId::L1: return "L1";
    case RuleId::L2: return "L2";
    case RuleId::W: return "W";
  }
  return "?";
}

// ---------------------------------------------------------------- sets

bool JudgementSet::insert(const Entry& e, Provenance prov) {
  auto [it, fresh] = index_.emplace(e, static_cast<std::uint32_t>(order_.size()));
  if (!fresh) return false;
  order_.push_back(e);
  provs_.push_back(std::move(prov));
  if (indexed_) {
    const Entry& stored = order_.back();
    std::uint32_t key = stored.dep.is_unary()
                            ? unary_key(stored.dep.src())
                            : binary_key(stored.dep.src1(), stored.dep.src2());
    by_src_[key].push_back(static_cast<std::uint32_t>(order_.size() - 1));
  }
  return true;
}

const Provenance* JudgementSet::find_prov(const Entry& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? nullptr : &provs_[it->second];
}

bool JudgementSet::same_entries(const JudgementSet& o) const {
  if (size() != o.size()) return false;
  for (const Entry& e : order_)
    if (!o.contains(e)) return false;
  return true;
}

void JudgementSet::ensure_index() const {
  if (indexed_) return;
  for (std::uint32_t i = 0; i < order_.size(); ++i) {
    const Entry& e = order_[i];
    std::uint32_t key = e.dep.is_unary()
                            ? unary_key(e.dep.src())
                            : binary_key(e.dep.src1(), e.dep.src2());
    by_src_[key].push_back(i);
  }
  indexed_ = true;
}

// ------------------------------------------------------ atomic rules

JudgementSet atomic_judgements(Mode mode, const Command& c, Context pre,
                               int var_count) {
  JudgementSet out;
  auto frame = [&](RuleId rule, Context post, VarId exclude) {
    for (int i = 1; i <= var_count; ++i) {
      if (pre.contains(i) || i == exclude) continue;
      out.insert({Dependence::unary(i, DepType::Identity, i), post},
                 {rule, {}});
    }
  };

  if (c.kind == CmdKind::Skip) {
    frame(RuleId::A1, pre, 0);
  } else {
    assert(c.kind == CmdKind::Assign);
    const VarId l = c.var;
    switch (c.expr.kind) {
      case ExprKind::Zero: {
        frame(RuleId::A2, pre.with(l), l);
        break;
      }
      case ExprKind::Var: {
        const VarId r = c.expr.a;
        Context post = pre.contains(r) ? pre.with(l) : pre.without(l);
        frame(RuleId::A3, post, l);
        if (!pre.contains(r))
          out.insert({Dependence::unary(r, DepType::Identity, l), post},
                     {RuleId::A3, {}});
        break;
      }
      case ExprKind::Mul: {
        const VarId r = c.expr.a, s = c.expr.b;
        const bool zeroed = pre.contains(r) || pre.contains(s);
        Context post = zeroed ? pre.with(l) : pre.without(l);
        frame(RuleId::A4, post, l);
        if (!zeroed) {
          DepType t = mode == Mode::Lin ? DepType::Exponential
                                        : DepType::Multiplicative;
          out.insert({Dependence::unary(r, t, l), post}, {RuleId::A4, {}});
          out.insert({Dependence::unary(s, t, l), post}, {RuleId::A4, {}});
        }
        break;
      }
      case ExprKind::Add: {
        const VarId r = c.expr.a, s = c.expr.b;
        if (r == s) {
          // doubling: multiplicative in one step, still a linear bound
          Context post = pre.contains(r) ? pre.with(l) : pre.without(l);
          frame(RuleId::A5, post, l);
          if (!pre.contains(r))
            out.insert(
                {Dependence::unary(r, DepType::Multiplicative, l), post},
                {RuleId::A5, {}});
          break;
        }
        const bool rz = pre.contains(r), sz = pre.contains(s);
        Context post = (rz && sz) ? pre.with(l) : pre.without(l);
        frame(RuleId::A5, post, l);
        if (!rz && sz) {
          out.insert({Dependence::unary(r, DepType::Identity, l), post},
                     {RuleId::A5, {}});
        } else if (rz && !sz) {
          out.insert({Dependence::unary(s, DepType::Identity, l), post},
                     {RuleId::A5, {}});
        } else if (!rz && !sz) {
          out.insert({Dependence::unary(r, DepType::Additive, l), post},
                     {RuleId::A5, {}});
          out.insert({Dependence::unary(s, DepType::Additive, l), post},
                     {RuleId::A5, {}});
        }
        break;
      }
    }
  }

  // pairing: every two distinct near-identity facts hold simultaneously
  const std::size_t unary_count = out.size();
  for (std::size_t i = 0; i < unary_count; ++i) {
    const Entry ei = out.entries()[i];
    if (!ei.dep.is_unary() || !near_identity(ei.dep.type())) continue;
    for (std::size_t j = i + 1; j < unary_count; ++j) {
      const Entry ej = out.entries()[j];
      if (!ej.dep.is_unary() || !near_identity(ej.dep.type())) continue;
      if (ei.post != ej.post) continue;
      if (ei.dep.src() == ej.dep.src() && ei.dep.dst() == ej.dep.dst())
        continue;
      out.insert({Dependence::binary(ei.dep.src(), ej.dep.src(), ei.dep.dst(),
                                     ej.dep.dst()),
                  ei.post},
                 {RuleId::A6, {{&c, pre, ei}, {&c, pre, ej}}});
    }
  }
  return out;
}

// ---------------------------------------------------------- analysis

Analysis::Analysis(const Program& p, AnalyzerOptions opt)
    : prog_(&p), opt_(opt) {
  assert(p.root);
  assert(p.var_count <= 63);
}

const JudgementSet& Analysis::judgements(const Command& node, Context pre) {
  return analyze(node, pre);
}

const JudgementSet& Analysis::analyze(const Command& c, Context pre) {
  Key k{&c, pre.bits()};
  if (auto it = memo_.find(k); it != memo_.end()) return *it->second;
  check_capacity(c);
  contexts_.insert(pre.bits());
  auto set = std::make_unique<JudgementSet>(compute(c, pre));
  return *memo_.emplace(k, std::move(set)).first->second;
}

JudgementSet Analysis::compute(const Command& c, Context pre) {
  JudgementSet out;
  switch (c.kind) {
    case CmdKind::Skip:
    case CmdKind::Assign:
      out = atomic_judgements(opt_.mode, c, pre, prog_->var_count);
      break;
    case CmdKind::Choose: {
      for (const Command* branch : {c.a.get(), c.b.get()}) {
        const JudgementSet& s = analyze(*branch, pre);
        for (const Entry& e : s.entries())
          out.insert(e, {RuleId::C, {{branch, pre, e}}});
      }
      break;
    }
    case CmdKind::Seq: {
      const JudgementSet& first = analyze(*c.a, pre);
      for (std::size_t i = 0; i < first.size(); ++i) {
        const Entry ea = first.entries()[i];
        const JudgementSet& second = analyze(*c.b, ea.post);
        second.for_each_composable(
            ea.dep, [&](const Entry& eb, const Dependence& d) {
              out.insert({d, eb.post},
                         {RuleId::S,
                          {{c.a.get(), pre, ea}, {c.b.get(), ea.post, eb}}});
            });
      }
      break;
    }
    case CmdKind::Loop:
      out = loop_closure(c, pre);
      break;
  }
  if (opt_.post_weakening) close_weakening(c, pre, out);
  return out;
}

JudgementSet Analysis::loop_zero_set(Context pre) const {
  static const Command kSkip{};  // CmdKind::Skip by default
  JudgementSet s0 = atomic_judgements(opt_.mode, kSkip, pre, prog_->var_count);
  JudgementSet out;
  for (const Entry& e : s0.entries()) out.insert(e, {RuleId::L0, {}});
  return out;
}

void Analysis::extend_chains(const Command& loop, Context pre,
                             JudgementSet& out) {
  // Left-fold over iteration counts: each entry is extended by one more
  // body step at its post-context until nothing new appears. Identity
  // entries double as seeds, since composing an identity with a body fact
  // reproduces the body fact.
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Entry e = out.entries()[i];
    const JudgementSet& body = analyze(*loop.a, e.post);
    body.for_each_composable(e.dep, [&](const Entry& eb, const Dependence& d) {
      out.insert({d, eb.post},
                 {RuleId::L1, {{&loop, pre, e}, {loop.a.get(), e.post, eb}}});
    });
  }
}

const JudgementSet& Analysis::loop_base(const Command& loop, Context pre) {
  Key k{&loop, pre.bits()};
  if (auto it = base_.find(k); it != base_.end()) return *it->second;
  check_capacity(loop);
  contexts_.insert(pre.bits());
  auto set = std::make_unique<JudgementSet>(loop_zero_set(pre));
  if (!pre.contains(loop.var)) extend_chains(loop, pre, *set);
  if (opt_.post_weakening) close_weakening(loop, pre, *set);
  return *base_.emplace(k, std::move(set)).first->second;
}

void Analysis::apply_l2(const Command& loop, Context pre,
                        const JudgementSet& first,
                        const std::function<const JudgementSet&(Context)>& pool,
                        JudgementSet& out) {
  for (std::size_t i1 = 0; i1 < first.size(); ++i1) {
    const Entry e1 = first.entries()[i1];
    const Context p1 = e1.post;
    const JudgementSet& mid = pool(p1);
    for (std::size_t i2 = 0; i2 < mid.size(); ++i2) {
      const Entry e2 = mid.entries()[i2];
      if (e2.post != p1) continue;  // only iterable facts can be corrected
      auto lc = loop_correct(opt_.mode, loop.var, e2.dep);
      if (!lc) continue;
      auto d12 = compose(e1.dep, *lc);
      if (!d12) continue;
      for (std::size_t i3 = 0; i3 < mid.size(); ++i3) {
        const Entry e3 = mid.entries()[i3];
        for (const Dependence& d : compose_all(*d12, e3.dep))
          out.insert({d, e3.post},
                     {RuleId::L2,
                      {{&loop, pre, e1}, {&loop, p1, e2}, {&loop, p1, e3}}});
      }
    }
  }
}

JudgementSet Analysis::loop_closure(const Command& loop, Context pre) {
  if (pre.contains(loop.var)) return loop_zero_set(pre);

  if (!opt_.full_l2_fixpoint) {
    const JudgementSet& u0 = loop_base(loop, pre);
    JudgementSet out = u0;
    apply_l2(loop, pre, u0,
             [&](Context c) -> const JudgementSet& { return loop_base(loop, c); },
             out);
    if (opt_.post_weakening) close_weakening(loop, pre, out);
    return out;
  }

  // Close the per-context judgement sets under the correction rule with
  // premises drawn from the closed sets themselves, until nothing changes
  // anywhere. New post-contexts pull in their base sets on demand.
  std::map<Context, JudgementSet> closed;
  closed.emplace(pre, loop_base(loop, pre));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Context> ctxs;
    ctxs.reserve(closed.size());
    for (const auto& [c0, _] : closed) ctxs.push_back(c0);
    for (Context c0 : ctxs) {
      if (c0.contains(loop.var)) continue;
      JudgementSet& set0 = closed.at(c0);
      for (std::size_t i1 = 0; i1 < set0.size(); ++i1) {
        const Entry e1 = set0.entries()[i1];
        const Context p1 = e1.post;
        auto it = closed.find(p1);
        if (it == closed.end()) {
          it = closed.emplace(p1, loop_base(loop, p1)).first;
          changed = true;
        }
        JudgementSet& mid = it->second;  // may alias set0
        for (std::size_t i2 = 0; i2 < mid.size(); ++i2) {
          const Entry e2 = mid.entries()[i2];
          if (e2.post != p1) continue;
          auto lc = loop_correct(opt_.mode, loop.var, e2.dep);
          if (!lc) continue;
          auto d12 = compose(e1.dep, *lc);
          if (!d12) continue;
          for (std::size_t i3 = 0; i3 < mid.size(); ++i3) {
            const Entry e3 = mid.entries()[i3];
            for (const Dependence& d : compose_all(*d12, e3.dep)) {
              if (set0.insert({d, e3.post},
                              {RuleId::L2,
                               {{&loop, c0, e1},
                                {&loop, p1, e2},
                                {&loop, p1, e3}}}))
                changed = true;
            }
          }
        }
      }
    }
  }
  JudgementSet out = std::move(closed.at(pre));
  if (opt_.post_weakening) close_weakening(loop, pre, out);
  return out;
}

void Analysis::close_weakening(const Command& node, Context pre,
                               JudgementSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Entry e = s.entries()[i];
    const std::uint64_t bits = e.post.bits();
    if (bits == 0) continue;
    for (std::uint64_t sub = (bits - 1) & bits;; sub = (sub - 1) & bits) {
      s.insert({e.dep, Context::from_bits(sub)}, {RuleId::W, {{&node, pre, e}}});
      if (sub == 0) break;
    }
  }
}

void Analysis::check_capacity(const Command& at) {
  if (memo_.size() + base_.size() >= opt_.max_memo_entries)
    throw ResourceLimitError(
        "analysis exceeded the table limit of " +
            std::to_string(opt_.max_memo_entries) +
            " (node, context) pairs near: " + render(at).substr(0, 60),
        &at);
}

Verdict Analysis::verdict(VarId variable) {
  const JudgementSet& root = analyze(*prog_->root, Context{});
  for (const Entry& e : root.entries()) {
    if (e.dep.is_unary() && e.dep.type() == DepType::Exponential &&
        e.dep.dst() == variable) {
      Verdict v;
      v.variable = variable;
      v.bounded = false;
      v.mode = opt_.mode;
      v.witness = witness(*prog_->root, Context{}, e);
      return v;
    }
  }
  return {variable, true, opt_.mode, std::nullopt};
}

std::vector<Verdict> Analysis::verdicts() {
  std::vector<Verdict> out;
  for (int j = 1; j <= prog_->var_count; ++j) out.push_back(verdict(j));
  return out;
}

std::vector<std::pair<const Command*, Context>> Analysis::explored_keys()
    const {
  std::vector<std::pair<const Command*, Context>> out;
  out.reserve(memo_.size());
  for (const auto& [k, _] : memo_)
    out.emplace_back(k.node, Context::from_bits(k.ctx));
  return out;
}

const JudgementSet* Analysis::find_set(const Command* node,
                                       Context pre) const {
  Key k{node, pre.bits()};
  if (auto it = memo_.find(k); it != memo_.end()) return it->second.get();
  if (auto it = base_.find(k); it != base_.end()) return it->second.get();
  return nullptr;
}

WitnessNode Analysis::witness(const Command& node, Context pre,
                              const Entry& e) const {
  std::size_t budget = 1'000'000;
  return build_witness(&node, pre, e, budget);
}

WitnessNode Analysis::build_witness(const Command* node, Context pre,
                                    const Entry& e,
                                    std::size_t& budget) const {
  if (budget == 0)
    throw ResourceLimitError("witness tree exceeds the node budget", node);
  --budget;
  const JudgementSet* s = find_set(node, pre);
  const Provenance* p = s ? s->find_prov(e) : nullptr;
  if (!p) throw std::logic_error("no recorded derivation for a judgement");
  WitnessNode w;
  w.rule = p->rule;
  w.node = node;
  w.pre = pre;
  w.entry = e;
  w.children.reserve(p->premises.size());
  for (const PremiseRef& ref : p->premises)
    w.children.push_back(build_witness(ref.node, ref.pre, ref.entry, budget));
  return w;
}

// ---------------------------------------------------------- witnesses

namespace {

std::string snippet(const Command* c) {
  if (!c) return "<none>";
  std::string s = render(*c);
  if (s.size() > 48) s = s.substr(0, 45) + "...";
  return s;
}

void render_rec(const WitnessNode& w, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "(";
  out += rule_name(w.rule);
  out += ") ";
  out += snippet(w.node);
  out += ": " + w.pre.to_string() + " |- " + w.entry.dep.to_string() + ", " +
         w.entry.post.to_string() + "\n";
  for (const WitnessNode& ch : w.children) render_rec(ch, depth + 1, out);
}

struct Replayer {
  const Program& prog;
  Mode mode;
  std::string err;

  bool fail(const WitnessNode& w, const std::string& msg) {
    err = "(" + std::string(rule_name(w.rule)) + ") at '" + snippet(w.node) +
          "': " + msg;
    return false;
  }

  bool check(const WitnessNode& w) {
    for (const WitnessNode& ch : w.children)
      if (!check(ch)) return false;

    switch (w.rule) {
      case RuleId::A1:
      case RuleId::A2:
      case RuleId::A3:
      case RuleId::A4:
      case RuleId::A5: {
        if (!w.children.empty()) return fail(w, "unary atomic rule with premises");
        if (!atomic_matches(w)) return fail(w, "rule does not fit the command");
        JudgementSet s = atomic_judgements(mode, *w.node, w.pre, prog.var_count);
        if (!s.contains(w.entry)) return fail(w, "conclusion not derivable");
        return true;
      }
      case RuleId::A6: {
        if (w.children.size() != 2) return fail(w, "pairing needs two premises");
        const WitnessNode& x = w.children[0];
        const WitnessNode& y = w.children[1];
        if (x.node != w.node || y.node != w.node || x.pre != w.pre ||
            y.pre != w.pre)
          return fail(w, "pairing premises from a different judgement site");
        if (!x.entry.dep.is_unary() || !y.entry.dep.is_unary() ||
            !near_identity(x.entry.dep.type()) ||
            !near_identity(y.entry.dep.type()))
          return fail(w, "pairing premises must be near-identity facts");
        if (x.entry.post != w.entry.post || y.entry.post != w.entry.post)
          return fail(w, "pairing premises disagree on the post-context");
        if (x.entry.dep.src() == y.entry.dep.src() &&
            x.entry.dep.dst() == y.entry.dep.dst())
          return fail(w, "pairing premises must differ");
        Dependence d =
            Dependence::binary(x.entry.dep.src(), y.entry.dep.src(),
                               x.entry.dep.dst(), y.entry.dep.dst());
        if (!(d == w.entry.dep)) return fail(w, "conclusion mismatch");
        return true;
      }
      case RuleId::C: {
        if (w.children.size() != 1) return fail(w, "choice needs one premise");
        if (!w.node || w.node->kind != CmdKind::Choose)
          return fail(w, "not a choice node");
        const WitnessNode& ch = w.children[0];
        if (ch.node != w.node->a.get() && ch.node != w.node->b.get())
          return fail(w, "premise is not a branch of this choice");
        if (ch.pre != w.pre || !(ch.entry == w.entry))
          return fail(w, "conclusion must equal the branch judgement");
        return true;
      }
      case RuleId::S: {
        if (w.children.size() != 2) return fail(w, "sequence needs two premises");
        if (!w.node || w.node->kind != CmdKind::Seq)
          return fail(w, "not a sequence node");
        const WitnessNode& x = w.children[0];
        const WitnessNode& y = w.children[1];
        if (x.node != w.node->a.get() || y.node != w.node->b.get())
          return fail(w, "premises are not the two halves");
        if (x.pre != w.pre) return fail(w, "left premise pre-context mismatch");
        if (y.pre != x.entry.post)
          return fail(w, "middle context does not chain");
        if (!compose_includes(x.entry.dep, y.entry.dep, w.entry.dep))
          return fail(w, "composition mismatch");
        if (w.entry.post != y.entry.post)
          return fail(w, "post-context mismatch");
        return true;
      }
      case RuleId::L0: {
        if (!w.children.empty()) return fail(w, "zero-iteration rule has no premises");
        if (!w.node || w.node->kind != CmdKind::Loop)
          return fail(w, "not a loop node");
        if (w.entry.post != w.pre) return fail(w, "post must equal pre");
        static const Command kSkip{};
        JudgementSet s = atomic_judgements(mode, kSkip, w.pre, prog.var_count);
        if (!s.contains(w.entry)) return fail(w, "not an identity fact");
        return true;
      }
      case RuleId::L1: {
        if (w.children.size() != 2) return fail(w, "iteration step needs two premises");
        if (!w.node || w.node->kind != CmdKind::Loop)
          return fail(w, "not a loop node");
        if (w.pre.contains(w.node->var))
          return fail(w, "loop counter presumed zero");
        const WitnessNode& chain = w.children[0];
        const WitnessNode& step = w.children[1];
        if (chain.node != w.node) return fail(w, "prefix is not this loop");
        if (chain.pre != w.pre) return fail(w, "prefix pre-context mismatch");
        if (step.node != w.node->a.get())
          return fail(w, "step premise is not the loop body");
        if (step.pre != chain.entry.post)
          return fail(w, "step context does not chain");
        if (!compose_includes(chain.entry.dep, step.entry.dep, w.entry.dep))
          return fail(w, "composition mismatch");
        if (w.entry.post != step.entry.post)
          return fail(w, "post-context mismatch");
        return true;
      }
      case RuleId::L2: {
        if (w.children.size() != 3)
          return fail(w, "correction rule needs three premises");
        if (!w.node || w.node->kind != CmdKind::Loop)
          return fail(w, "not a loop node");
        if (w.pre.contains(w.node->var))
          return fail(w, "loop counter presumed zero");
        const WitnessNode& d1 = w.children[0];
        const WitnessNode& d2 = w.children[1];
        const WitnessNode& d3 = w.children[2];
        if (d1.node != w.node || d2.node != w.node || d3.node != w.node)
          return fail(w, "premises must concern this loop");
        if (d1.pre != w.pre) return fail(w, "preamble pre-context mismatch");
        if (d2.pre != d1.entry.post || d2.entry.post != d2.pre)
          return fail(w, "corrected premise must be iterable at the preamble's post");
        if (d3.pre != d2.pre) return fail(w, "postamble pre-context mismatch");
        auto lc = loop_correct(mode, w.node->var, d2.entry.dep);
        if (!lc) return fail(w, "premise is not correctable");
        auto left = compose(d1.entry.dep, *lc);
        if (!left) return fail(w, "preamble does not compose");
        if (!compose_includes(*left, d3.entry.dep, w.entry.dep))
          return fail(w, "composition mismatch");
        if (w.entry.post != d3.entry.post)
          return fail(w, "post-context mismatch");
        return true;
      }
      case RuleId::W: {
        if (w.children.size() != 1) return fail(w, "weakening needs one premise");
        const WitnessNode& ch = w.children[0];
        if (ch.node != w.node || ch.pre != w.pre)
          return fail(w, "weakening premise from a different site");
        if (!(ch.entry.dep == w.entry.dep))
          return fail(w, "weakening must keep the dependence");
        if (!w.entry.post.subset_of(ch.entry.post))
          return fail(w, "weakened post-context must shrink");
        return true;
      }
    }
    return fail(w, "unknown rule");
  }

  bool atomic_matches(const WitnessNode& w) const {
    if (!w.node) return false;
    switch (w.rule) {
      case RuleId::A1:
        return w.node->kind == CmdKind::Skip;
      case RuleId::A2:
        return w.node->kind == CmdKind::Assign &&
               w.node->expr.kind == ExprKind::Zero;
      case RuleId::A3:
        return w.node->kind == CmdKind::Assign &&
               w.node->expr.kind == ExprKind::Var;
      case RuleId::A4:
        return w.node->kind == CmdKind::Assign &&
               w.node->expr.kind == ExprKind::Mul;
      case RuleId::A5:
        return w.node->kind == CmdKind::Assign &&
               w.node->expr.kind == ExprKind::Add;
      default:
        return false;
    }
  }
};

}  // namespace

std::string render_witness(const WitnessNode& w) {
  std::string out;
  render_rec(w, 0, out);
  return out;
}

bool replay_witness(const WitnessNode& w, const Program& p, Mode mode,
                    std::string* err) {
  Replayer r{p, mode, {}};
  bool ok = r.check(w);
  if (!ok && err) *err = r.err;
  return ok;
}

}  // namespace loopbound
