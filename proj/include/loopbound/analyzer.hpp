#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "loopbound/ast.hpp"
#include "loopbound/deps.hpp"

namespace loopbound {

// Set of variables known to hold zero, as a bitmask over X1..Xn (n <= 63).
class Context {
 public:
  Context() = default;

  static Context of(std::initializer_list<int> vars) {
    Context c;
    for (int v : vars) c = c.with(v);
    return c;
  }

  static Context from_bits(std::uint64_t bits) { return Context(bits); }

  bool contains(int v) const { return bits_ & bit(v); }
  Context with(int v) const { return Context(bits_ | bit(v)); }
  Context without(int v) const { return Context(bits_ & ~bit(v)); }
  bool subset_of(Context o) const { return (bits_ & ~o.bits_) == 0; }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  auto operator<=>(const Context&) const = default;

  std::string to_string() const;

 private:
  explicit Context(std::uint64_t b) : bits_(b) {}
  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }
  std::uint64_t bits_ = 0;
};

// One derivable result for a command node under a fixed pre-context: the
// dependence together with the guaranteed post-context.
struct Entry {
  Dependence dep;
  Context post;

  auto operator<=>(const Entry&) const = default;
};

// Rule tags recorded per derivation. Atomic rules are numbered: 1 skip
// frame, 2 reset, 3 copy, 4 multiplication, 5 addition, 6 conjunction
// pairing. C/S are choice and sequencing; L0/L1/L2 the loop rules; W the
// optional post-context weakening.
enum class RuleId : std::uint8_t {
  A1 = 1,
  A2,
  A3,
  A4,
  A5,
  A6,
  C,
  S,
  L0,
  L1,
  L2,
  W,
};

const char* rule_name(RuleId r);

struct PremiseRef {
  const Command* node = nullptr;
  Context pre;
  Entry entry;
};

struct Provenance {
  RuleId rule = RuleId::A1;
  std::vector<PremiseRef> premises;
};

// Deduplicated entries in first-insertion order; each entry keeps the
// first derivation that produced it. A bucket index by composition source
// accelerates chaining.
class JudgementSet {
 public:
  // Returns true when e was new; an existing entry keeps its provenance.
  bool insert(const Entry& e, Provenance prov);

  bool contains(const Entry& e) const { return index_.count(e) != 0; }
  const std::vector<Entry>& entries() const { return order_; }
  std::size_t size() const { return order_.size(); }
  const Provenance* find_prov(const Entry& e) const;

  bool same_entries(const JudgementSet& o) const;

  // Invokes fn(right_entry, composed) for every entry whose dependence
  // composes on the right of d, once per pairing.
  template <typename Fn>
  void for_each_composable(const Dependence& d, Fn&& fn) const {
    ensure_index();
    auto bucket = [&](std::uint32_t key) {
      auto it = by_src_.find(key);
      if (it == by_src_.end()) return;
      for (std::uint32_t idx : it->second) {
        const Entry& e = order_[idx];
        for (const Dependence& c : compose_all(d, e.dep)) fn(e, c);
      }
    };
    if (d.is_unary()) {
      bucket(unary_key(d.dst()));
      if (near_identity(d.type())) bucket(binary_key(d.dst(), d.dst()));
    } else {
      if (d.dst1() == d.dst2()) bucket(unary_key(d.dst1()));
      bucket(binary_key(d.dst1(), d.dst2()));
    }
  }

 private:
  static std::uint32_t unary_key(int src) {
    return static_cast<std::uint32_t>(src);
  }
  static std::uint32_t binary_key(int s1, int s2) {
    if (s1 > s2) std::swap(s1, s2);
    return 0x10000u | (static_cast<std::uint32_t>(s1) << 8) |
           static_cast<std::uint32_t>(s2);
  }
  void ensure_index() const;

  struct EntryHash {
    std::size_t operator()(const Entry& e) const {
      std::uint64_t h = e.dep.key();
      h = h * 0x9e3779b97f4a7c15ull + e.post.bits();
      h ^= h >> 29;
      return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ull);
    }
  };

  std::vector<Entry> order_;
  std::vector<Provenance> provs_;
  std::unordered_map<Entry, std::uint32_t, EntryHash> index_;
  mutable std::unordered_map<std::uint32_t, std::vector<std::uint32_t>>
      by_src_;
  mutable bool indexed_ = false;
};

// All results derivable for a skip or assignment under pre: the frame
// facts for untouched nonzero variables, the value-flow facts of the
// specific assignment form (multiplication reports exponential growth
// when mode is Lin), and every conjunction of two distinct near-identity
// facts. X := 0 publishes the target in the post-context instead of
// emitting any fact about it; X := Y + Y is treated as scaling, a
// multiplicative fact in both modes.
JudgementSet atomic_judgements(Mode mode, const Command& c, Context pre,
                               int var_count);

struct AnalyzerOptions {
  Mode mode = Mode::Poly;
  // Close the per-loop judgement sets under repeated applications of the
  // iteration-correction rule instead of drawing its premises only from
  // the zero/iteration base sets.
  bool full_l2_fixpoint = false;
  // Experimental: also derive (D, Q') from (D, Q) for every Q' subset of Q.
  bool post_weakening = false;
  // Cap on (node, pre-context) pairs ever materialized.
  std::size_t max_memo_entries = std::size_t{1} << 20;
};

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, const Command* where)
      : std::runtime_error(what), node(where) {}
  const Command* node;
};

struct WitnessNode {
  RuleId rule = RuleId::A1;
  const Command* node = nullptr;
  Context pre;
  Entry entry;
  std::vector<WitnessNode> children;
};

struct Verdict {
  VarId variable = 0;
  bool bounded = true;
  Mode mode = Mode::Poly;
  std::optional<WitnessNode> witness;  // present exactly when !bounded
};

// The judgement engine. Computes, per command node and pre-context, every
// derivable (dependence, post-context) pair, memoized over (node,
// pre-context). A variable is flagged unbounded exactly when some
// exponential fact targeting it is derivable for the root under the empty
// pre-context.
class Analysis {
 public:
  explicit Analysis(const Program& p, AnalyzerOptions opt = {});

  // Full judgement set for a node of the program under pre.
  const JudgementSet& judgements(const Command& node, Context pre);

  Verdict verdict(VarId variable);
  std::vector<Verdict> verdicts();  // one per variable 1..n

  std::size_t memo_entries() const { return memo_.size() + base_.size(); }
  std::size_t contexts_explored() const { return contexts_.size(); }
  std::vector<std::pair<const Command*, Context>> explored_keys() const;

  WitnessNode witness(const Command& node, Context pre, const Entry& e) const;

  const Program& program() const { return *prog_; }
  const AnalyzerOptions& options() const { return opt_; }

 private:
  struct Key {
    const Command* node;
    std::uint64_t ctx;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = reinterpret_cast<std::uintptr_t>(k.node);
      h = (h ^ k.ctx) * 0x9e3779b97f4a7c15ull;
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };
  using SetMap = std::unordered_map<Key, std::unique_ptr<JudgementSet>, KeyHash>;

  const JudgementSet& analyze(const Command& c, Context pre);
  JudgementSet compute(const Command& c, Context pre);
  JudgementSet loop_closure(const Command& loop, Context pre);
  // Judgements for a loop derivable by the zero- and iteration-rules only:
  // the premise pool for the correction rule.
  const JudgementSet& loop_base(const Command& loop, Context pre);
  JudgementSet loop_zero_set(Context pre) const;
  void extend_chains(const Command& loop, Context pre, JudgementSet& out);
  void apply_l2(const Command& loop, Context pre, const JudgementSet& first,
                const std::function<const JudgementSet&(Context)>& pool,
                JudgementSet& out);
  void close_weakening(const Command& node, Context pre, JudgementSet& s);
  void check_capacity(const Command& at);
  const JudgementSet* find_set(const Command* node, Context pre) const;
  WitnessNode build_witness(const Command* node, Context pre, const Entry& e,
                            std::size_t& budget) const;

  const Program* prog_;
  AnalyzerOptions opt_;
  SetMap memo_;
  SetMap base_;
  std::set<std::uint64_t> contexts_;
};

// One rule application per line, children indented below their parent.
std::string render_witness(const WitnessNode& w);

// Re-executes every rule application in the tree and confirms each
// conclusion; returns false (with a diagnostic in *err) on any mismatch.
bool replay_witness(const WitnessNode& w, const Program& p, Mode mode,
                    std::string* err = nullptr);

}  // namespace loopbound
