#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace loopbound {

// Variables are 1-based indices; a program over n variables uses X1..Xn.
using VarId = int;

enum class ExprKind { Zero, Var, Add, Mul };

// Right-hand side of an assignment. Operands are always plain variables,
// never nested expressions.
struct Expr {
  ExprKind kind = ExprKind::Zero;
  VarId a = 0;  // Var/Add/Mul first operand
  VarId b = 0;  // Add/Mul second operand

  static Expr zero() { return {ExprKind::Zero, 0, 0}; }
  static Expr var(VarId r) { return {ExprKind::Var, r, 0}; }
  static Expr add(VarId r, VarId s) { return {ExprKind::Add, r, s}; }
  static Expr mul(VarId r, VarId s) { return {ExprKind::Mul, r, s}; }

  bool operator==(const Expr&) const = default;
};

enum class CmdKind { Skip, Assign, Seq, Loop, Choose };

// One node of a command tree. Seq and Choose use children a and b; Loop
// keeps its body in a. Nodes are immutable once built; analysis results
// are keyed by node address, so trees must stay alive while in use.
struct Command {
  CmdKind kind = CmdKind::Skip;
  VarId var = 0;  // Assign target or Loop counter
  Expr expr{};
  std::unique_ptr<Command> a;
  std::unique_ptr<Command> b;
  int line = 0, col = 0;  // source position when parsed, 0 otherwise
};

using CommandPtr = std::unique_ptr<Command>;

CommandPtr make_skip();
CommandPtr make_assign(VarId target, Expr e);
CommandPtr make_seq(CommandPtr first, CommandPtr second);
CommandPtr make_loop(VarId counter, CommandPtr body);
CommandPtr make_choose(CommandPtr left, CommandPtr right);

CommandPtr clone(const Command& c);
bool equal(const Command& x, const Command& y);

struct Program {
  int var_count = 0;
  CommandPtr root;
};

Program clone(const Program& p);
bool equal(const Program& x, const Program& y);

struct Violation {
  std::string path;  // slash-separated route to the offending node
  std::string message;
  int line = 0, col = 0;
};

// Structural well-formedness: every variable index within 1..var_count and
// no loop counter assigned anywhere inside its own body. Violations are
// returned as data; an empty list means the command is valid.
std::vector<Violation> validate(const Command& root, int var_count);

// Every variable occurring in c: assignment targets, operands, loop counters.
std::set<VarId> vars_of(const Command& c);

// Largest variable index occurring in c, 0 if none.
VarId max_var(const Command& c);

}  // namespace loopbound
