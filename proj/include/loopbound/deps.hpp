#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace loopbound {

// Growth classes, totally ordered: identity < additive < multiplicative
// < exponential. Printed as 1, 1+, 2, 3.
enum class DepType : std::uint8_t {
  Identity = 0,
  Additive = 1,
  Multiplicative = 2,
  Exponential = 3,
};

constexpr bool near_identity(DepType t) { return t <= DepType::Additive; }
constexpr DepType join(DepType a, DepType b) { return a < b ? b : a; }
const char* to_string(DepType t);

// Poly flags growth beyond any polynomial; Lin flags growth beyond any
// linear function.
enum class Mode { Poly, Lin };

// Either a single growth fact "dst grows as <type>(src)" or a conjunction
// of two simultaneous near-identity facts. Conjunctions carry no type
// marks; their components are kept sorted by (src, dst) so that equal
// conjunctions compare equal.
class Dependence {
 public:
  Dependence() = default;

  static Dependence unary(int src, DepType type, int dst) {
    Dependence d;
    d.binary_ = false;
    d.type_ = type;
    d.s1_ = static_cast<std::uint8_t>(src);
    d.d1_ = static_cast<std::uint8_t>(dst);
    return d;
  }

  // Conjunction of src1->dst1 and src2->dst2. The two component facts must
  // differ as (src, dst) pairs.
  static Dependence binary(int src1, int src2, int dst1, int dst2) {
    assert(src1 != src2 || dst1 != dst2);
    Dependence d;
    d.binary_ = true;
    d.type_ = DepType::Identity;
    if (std::pair(src1, dst1) <= std::pair(src2, dst2)) {
      d.s1_ = static_cast<std::uint8_t>(src1);
      d.d1_ = static_cast<std::uint8_t>(dst1);
      d.s2_ = static_cast<std::uint8_t>(src2);
      d.d2_ = static_cast<std::uint8_t>(dst2);
    } else {
      d.s1_ = static_cast<std::uint8_t>(src2);
      d.d1_ = static_cast<std::uint8_t>(dst2);
      d.s2_ = static_cast<std::uint8_t>(src1);
      d.d2_ = static_cast<std::uint8_t>(dst1);
    }
    return d;
  }

  bool is_unary() const { return !binary_; }
  bool is_binary() const { return binary_; }

  // unary accessors
  int src() const { assert(!binary_); return s1_; }
  int dst() const { assert(!binary_); return d1_; }
  DepType type() const { assert(!binary_); return type_; }

  // binary accessors (components in canonical order)
  int src1() const { assert(binary_); return s1_; }
  int dst1() const { assert(binary_); return d1_; }
  int src2() const { assert(binary_); return s2_; }
  int dst2() const { assert(binary_); return d2_; }

  auto operator<=>(const Dependence&) const = default;

  std::uint32_t key() const {
    return static_cast<std::uint32_t>(binary_) |
           (static_cast<std::uint32_t>(type_) << 1) | (s1_ << 3) |
           (d1_ << 10) | (s2_ << 17) |
           (static_cast<std::uint32_t>(d2_) << 24);
  }

  std::string to_string() const;

 private:
  bool binary_ = false;
  DepType type_ = DepType::Identity;
  std::uint8_t s1_ = 0, d1_ = 0, s2_ = 0, d2_ = 0;
};

// Abstract relational composition. Defined only when the middle indices
// line up:
//   (i -a-> j) . (j -b-> k)              = i -(a|_|b)-> k
//   (i -a-> j) . [j->k & j->k']          = [i->k & i->k']    if a near 1
//   [i->j & i'->j] . (j -a-> k)          = [i->k & i'->k]    if a near 1
//   [i->j & i'->j'] . [j->k & j'->k']    = [i->k & i'->k'],
//                          or i -2-> k when both sides would coincide.
// For the last rule the component pairing of the right operand may be
// swapped in tandem when the direct orientation does not match.
std::optional<Dependence> compose(const Dependence& a, const Dependence& b);

// When both conjunction middles coincide ([i->j & i'->j] . [j->k & j->k'])
// the two components can be paired either way and both pairings hold
// simultaneously; a single-valued pick of either breaks associativity.
// This variant yields every result (at most two); it is what judgement
// derivation composes with.
struct Composed {
  Dependence vals[2];
  int count = 0;
  const Dependence* begin() const { return vals; }
  const Dependence* end() const { return vals + count; }
};
Composed compose_all(const Dependence& a, const Dependence& b);

// True when d is one of the results of compose_all(a, b).
bool compose_includes(const Dependence& a, const Dependence& b,
                      const Dependence& d);

// Turns a fact that survives one loop iteration into a fact about the loop
// counter: additive self-growth becomes multiplicative (exponential when
// only linear bounds count), multiplicative self-growth becomes
// exponential. Undefined on anything else.
std::optional<Dependence> loop_correct(Mode mode, int loop_var,
                                       const Dependence& d);

// Every distinct dependence over variables 1..n: 4*n^2 unary facts plus
// all canonical conjunctions. Intended for exhaustive algebra checks.
std::vector<Dependence> enumerate_deps(int n);

}  // namespace loopbound
