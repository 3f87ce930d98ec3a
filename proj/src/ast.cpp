#include "loopbound/ast.hpp"

#include <cassert>
#include <functional>

namespace loopbound {

CommandPtr make_skip() {
  auto c = std::make_unique<Command>();
  c->kind = CmdKind::Skip;
  return c;
}

CommandPtr make_assign(VarId target, Expr e) {
  auto c = std::make_unique<Command>();
  c->kind = CmdKind::Assign;
  c->var = target;
  c->expr = e;
  return c;
}

CommandPtr make_seq(CommandPtr first, CommandPtr second) {
  assert(first && second);
  auto c = std::make_unique<Command>();
  c->kind = CmdKind::Seq;
  c->a = std::move(first);
  c->b = std::move(second);
  return c;
}

CommandPtr make_loop(VarId counter, CommandPtr body) {
  assert(body);
  auto c = std::make_unique<Command>();
  c->kind = CmdKind::Loop;
  c->var = counter;
  c->a = std::move(body);
  return c;
}

CommandPtr make_choose(CommandPtr left, CommandPtr right) {
  assert(left && right);
  auto c = std::make_unique<Command>();
  c->kind = CmdKind::Choose;
  c->a = std::move(left);
  c->b = std::move(right);
  return c;
}

CommandPtr clone(const Command& c) {
  auto out = std::make_unique<Command>();
  out->kind = c.kind;
  out->var = c.var;
  out->expr = c.expr;
  out->line = c.line;
  out->col = c.col;
  if (c.a) out->a = clone(*c.a);
  if (c.b) out->b = clone(*c.b);
  return out;
}

bool equal(const Command& x, const Command& y) {
  if (x.kind != y.kind || x.var != y.var || !(x.expr == y.expr)) return false;
  if ((x.a == nullptr) != (y.a == nullptr)) return false;
  if ((x.b == nullptr) != (y.b == nullptr)) return false;
  if (x.a && !equal(*x.a, *y.a)) return false;
  if (x.b && !equal(*x.b, *y.b)) return false;
  return true;
}

Program clone(const Program& p) {
  Program out;
  out.var_count = p.var_count;
  if (p.root) out.root = clone(*p.root);
  return out;
}

bool equal(const Program& x, const Program& y) {
  if (x.var_count != y.var_count) return false;
  if ((x.root == nullptr) != (y.root == nullptr)) return false;
  return !x.root || equal(*x.root, *y.root);
}

namespace {

void check_var(VarId v, int n, const std::string& path, const Command& at,
               std::vector<Violation>& out) {
  if (v < 1 || v > n) {
    out.push_back({path, "variable X" + std::to_string(v) + " out of range 1.." +
                             std::to_string(n),
                   at.line, at.col});
  }
}

// forbidden: loop counters of all enclosing loops; assigning one is an error.
void walk(const Command& c, int n, const std::string& path,
          std::vector<std::pair<VarId, std::string>>& forbidden,
          std::vector<Violation>& out) {
  switch (c.kind) {
    case CmdKind::Skip:
      break;
    case CmdKind::Assign: {
      check_var(c.var, n, path, c, out);
      for (const auto& [lv, lpath] : forbidden) {
        if (c.var == lv) {
          out.push_back({path, "loop variable X" + std::to_string(lv) +
                                   " (bound at " + lpath +
                                   ") assigned inside its loop body",
                         c.line, c.col});
        }
      }
      switch (c.expr.kind) {
        case ExprKind::Zero:
          break;
        case ExprKind::Var:
          check_var(c.expr.a, n, path, c, out);
          break;
        case ExprKind::Add:
        case ExprKind::Mul:
          check_var(c.expr.a, n, path, c, out);
          check_var(c.expr.b, n, path, c, out);
          break;
      }
      break;
    }
    case CmdKind::Seq:
      walk(*c.a, n, path + "/seq.1", forbidden, out);
      walk(*c.b, n, path + "/seq.2", forbidden, out);
      break;
    case CmdKind::Loop:
      check_var(c.var, n, path, c, out);
      forbidden.emplace_back(c.var, path);
      walk(*c.a, n, path + "/loop.body", forbidden, out);
      forbidden.pop_back();
      break;
    case CmdKind::Choose:
      walk(*c.a, n, path + "/choose.1", forbidden, out);
      walk(*c.b, n, path + "/choose.2", forbidden, out);
      break;
  }
}

}  // namespace

std::vector<Violation> validate(const Command& root, int var_count) {
  std::vector<Violation> out;
  std::vector<std::pair<VarId, std::string>> forbidden;
  walk(root, var_count, "root", forbidden, out);
  return out;
}

std::set<VarId> vars_of(const Command& c) {
  std::set<VarId> out;
  std::function<void(const Command&)> go = [&](const Command& cmd) {
    switch (cmd.kind) {
      case CmdKind::Skip:
        break;
      case CmdKind::Assign:
        out.insert(cmd.var);
        if (cmd.expr.kind != ExprKind::Zero) out.insert(cmd.expr.a);
        if (cmd.expr.kind == ExprKind::Add || cmd.expr.kind == ExprKind::Mul)
          out.insert(cmd.expr.b);
        break;
      case CmdKind::Seq:
      case CmdKind::Choose:
        go(*cmd.a);
        go(*cmd.b);
        break;
      case CmdKind::Loop:
        out.insert(cmd.var);
        go(*cmd.a);
        break;
    }
  };
  go(c);
  return out;
}

VarId max_var(const Command& c) {
  auto vars = vars_of(c);
  return vars.empty() ? 0 : *vars.rbegin();
}

}  // namespace loopbound
