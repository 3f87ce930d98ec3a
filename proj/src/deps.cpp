#include "loopbound/deps.hpp"

namespace loopbound {

const char* to_string(DepType t) {
  switch (t) {
    case DepType::Identity: return "1";
    case DepType::Additive: return "1+";
    case DepType::Multiplicative: return "2";
    case DepType::Exponential: return "3";
  }
  return "?";
}

std::string Dependence::to_string() const {
  if (!binary_) {
    return "X" + std::to_string(s1_) + " -" + loopbound::to_string(type_) +
           "-> X" + std::to_string(d1_);
  }
  return "[X" + std::to_string(s1_) + "->X" + std::to_string(d1_) + " & X" +
         std::to_string(s2_) + "->X" + std::to_string(d2_) + "]";
}

std::optional<Dependence> compose(const Dependence& a, const Dependence& b) {
  if (a.is_unary() && b.is_unary()) {
    if (a.dst() != b.src()) return std::nullopt;
    return Dependence::unary(a.src(), join(a.type(), b.type()), b.dst());
  }
  if (a.is_unary() && b.is_binary()) {
    if (!near_identity(a.type())) return std::nullopt;
    if (b.src1() != a.dst() || b.src2() != a.dst()) return std::nullopt;
    return Dependence::binary(a.src(), a.src(), b.dst1(), b.dst2());
  }
  if (a.is_binary() && b.is_unary()) {
    if (!near_identity(b.type())) return std::nullopt;
    if (a.dst1() != b.src() || a.dst2() != b.src()) return std::nullopt;
    return Dependence::binary(a.src1(), a.src2(), b.dst(), b.dst());
  }
  // binary . binary: pair the middle indices, trying the right operand's
  // components swapped in tandem if the direct orientation does not fit.
  int k1, k2;
  if (a.dst1() == b.src1() && a.dst2() == b.src2()) {
    k1 = b.dst1();
    k2 = b.dst2();
  } else if (a.dst1() == b.src2() && a.dst2() == b.src1()) {
    k1 = b.dst2();
    k2 = b.dst1();
  } else {
    return std::nullopt;
  }
  if (a.src1() == a.src2() && k1 == k2)
    return Dependence::unary(a.src1(), DepType::Multiplicative, k1);
  return Dependence::binary(a.src1(), a.src2(), k1, k2);
}

Composed compose_all(const Dependence& a, const Dependence& b) {
  Composed out;
  if (auto d = compose(a, b)) out.vals[out.count++] = *d;
  if (a.is_binary() && b.is_binary() && a.dst1() == a.dst2() &&
      b.src1() == b.src2() && a.dst1() == b.src1()) {
    // crossed pairing; its components are always distinct because the
    // sources of a and the targets of b are
    out.vals[out.count++] =
        Dependence::binary(a.src1(), a.src2(), b.dst2(), b.dst1());
  }
  return out;
}

bool compose_includes(const Dependence& a, const Dependence& b,
                      const Dependence& d) {
  for (const Dependence& r : compose_all(a, b))
    if (r == d) return true;
  return false;
}

std::optional<Dependence> loop_correct(Mode mode, int loop_var,
                                       const Dependence& d) {
  if (!d.is_unary() || d.src() != d.dst()) return std::nullopt;
  switch (d.type()) {
    case DepType::Additive:
      return Dependence::unary(loop_var,
                               mode == Mode::Poly ? DepType::Multiplicative
                                                  : DepType::Exponential,
                               d.dst());
    case DepType::Multiplicative:
      return Dependence::unary(loop_var, DepType::Exponential, d.dst());
    default:
      return std::nullopt;
  }
}

std::vector<Dependence> enumerate_deps(int n) {
  std::vector<Dependence> out;
  static constexpr DepType kTypes[] = {DepType::Identity, DepType::Additive,
                                       DepType::Multiplicative,
                                       DepType::Exponential};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (DepType t : kTypes) out.push_back(Dependence::unary(i, t, j));
  // conjunctions: every unordered pair of distinct (src, dst) components
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int i2 = 1; i2 <= n; ++i2)
        for (int j2 = 1; j2 <= n; ++j2)
          if (std::pair(i, j) < std::pair(i2, j2))
            out.push_back(Dependence::binary(i, i2, j, j2));
  return out;
}

}  // namespace loopbound
