#include "loopbound/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace loopbound {

namespace {

enum class Tok {
  KwSkip,
  KwLoop,
  KwChoose,
  KwOr,
  KwVars,
  Var,     // X<digits>
  Number,  // digits (only "0" is legal in expressions)
  Assign,  // :=
  Semi,
  Plus,
  Star,
  LBrace,
  RBrace,
  End,
};

struct Token {
  Tok kind = Tok::End;
  long value = 0;  // Var index or Number value
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError{cur_.line, cur_.col, msg};
  }

 private:
  void advance() {
    skip_ws();
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (c == ';') return one(Tok::Semi);
    if (c == '+') return one(Tok::Plus);
    if (c == '*') return one(Tok::Star);
    if (c == '{') return one(Tok::LBrace);
    if (c == '}') return one(Tok::RBrace);
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
        bump();
        bump();
        cur_.kind = Tok::Assign;
        return;
      }
      throw ParseError{line_, col_, "expected ':=' after ':'"};
    }
    if (c == 'X' && pos_ + 1 < text_.size() && std::isdigit(text_[pos_ + 1])) {
      bump();
      cur_.kind = Tok::Var;
      cur_.value = read_digits();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur_.kind = Tok::Number;
      cur_.value = read_digits();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        word += text_[pos_];
        bump();
      }
      if (word == "skip") cur_.kind = Tok::KwSkip;
      else if (word == "loop") cur_.kind = Tok::KwLoop;
      else if (word == "choose") cur_.kind = Tok::KwChoose;
      else if (word == "or") cur_.kind = Tok::KwOr;
      else if (word == "vars") cur_.kind = Tok::KwVars;
      else
        throw ParseError{cur_.line, cur_.col, "unknown word '" + word + "'"};
      return;
    }
    throw ParseError{line_, col_,
                     std::string("unexpected character '") + c + "'"};
  }

  void one(Tok k) {
    bump();
    cur_.kind = k;
  }

  long read_digits() {
    long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError{line_, col_, "number too large"};
      bump();
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Program run() {
    Program p;
    bool have_header = false;
    if (lex_.peek().kind == Tok::KwVars) {
      Token kw = lex_.take();
      if (lex_.peek().kind != Tok::Number)
        throw ParseError{kw.line, kw.col, "expected a count after 'vars'"};
      p.var_count = static_cast<int>(lex_.take().value);
      have_header = true;
    }
    p.root = parse_seq();
    expect(Tok::End, "end of input");
    if (!have_header) p.var_count = max_var(*p.root);
    auto violations = validate(*p.root, p.var_count);
    if (!violations.empty()) {
      const Violation& v = violations.front();
      throw ParseError{v.line, v.col, v.message + " (at " + v.path + ")"};
    }
    return p;
  }

 private:
  CommandPtr parse_seq() {
    CommandPtr first = parse_single();
    if (lex_.peek().kind != Tok::Semi) return first;
    lex_.take();
    // tolerate a trailing ';' before '}' or end of input
    Tok next = lex_.peek().kind;
    if (next == Tok::RBrace || next == Tok::End) return first;
    return make_seq(std::move(first), parse_seq());
  }

  CommandPtr parse_single() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::KwSkip: {
        lex_.take();
        auto c = make_skip();
        set_pos(*c, t);
        return c;
      }
      case Tok::KwLoop: {
        lex_.take();
        Token var = expect(Tok::Var, "loop variable");
        expect(Tok::LBrace, "'{'");
        CommandPtr body = parse_seq();
        expect(Tok::RBrace, "'}'");
        auto c = make_loop(static_cast<VarId>(var.value), std::move(body));
        set_pos(*c, t);
        return c;
      }
      case Tok::KwChoose: {
        lex_.take();
        expect(Tok::LBrace, "'{'");
        CommandPtr left = parse_seq();
        expect(Tok::RBrace, "'}'");
        expect(Tok::KwOr, "'or'");
        expect(Tok::LBrace, "'{'");
        CommandPtr right = parse_seq();
        expect(Tok::RBrace, "'}'");
        auto c = make_choose(std::move(left), std::move(right));
        set_pos(*c, t);
        return c;
      }
      case Tok::Var: {
        Token lhs = lex_.take();
        expect(Tok::Assign, "':='");
        Expr e = parse_rhs();
        auto c = make_assign(static_cast<VarId>(lhs.value), e);
        set_pos(*c, lhs);
        return c;
      }
      default:
        throw ParseError{t.line, t.col, "expected a command"};
    }
  }

  Expr parse_rhs() {
    Token t = lex_.peek();
    if (t.kind == Tok::Number) {
      lex_.take();
      if (t.value != 0)
        throw ParseError{t.line, t.col,
                         "only the constant 0 is allowed in expressions"};
      return Expr::zero();
    }
    if (t.kind != Tok::Var)
      throw ParseError{t.line, t.col, "expected a variable or 0"};
    Token first = lex_.take();
    Tok op = lex_.peek().kind;
    if (op == Tok::Plus || op == Tok::Star) {
      lex_.take();
      Token second = expect(Tok::Var, "a variable");
      VarId r = static_cast<VarId>(first.value);
      VarId s = static_cast<VarId>(second.value);
      return op == Tok::Plus ? Expr::add(r, s) : Expr::mul(r, s);
    }
    return Expr::var(static_cast<VarId>(first.value));
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.peek();
    if (t.kind != kind)
      throw ParseError{t.line, t.col, "expected " + what};
    return lex_.take();
  }

  static void set_pos(Command& c, const Token& t) {
    c.line = t.line;
    c.col = t.col;
  }

  Lexer lex_;
};

void render_cmd(const Command& c, std::string& out) {
  switch (c.kind) {
    case CmdKind::Skip:
      out += "skip";
      break;
    case CmdKind::Assign: {
      out += "X" + std::to_string(c.var) + " := ";
      switch (c.expr.kind) {
        case ExprKind::Zero:
          out += "0";
          break;
        case ExprKind::Var:
          out += "X" + std::to_string(c.expr.a);
          break;
        case ExprKind::Add:
          out += "X" + std::to_string(c.expr.a) + " + X" +
                 std::to_string(c.expr.b);
          break;
        case ExprKind::Mul:
          out += "X" + std::to_string(c.expr.a) + " * X" +
                 std::to_string(c.expr.b);
          break;
      }
      break;
    }
    case CmdKind::Seq:
      render_cmd(*c.a, out);
      out += " ; ";
      render_cmd(*c.b, out);
      break;
    case CmdKind::Loop:
      out += "loop X" + std::to_string(c.var) + " { ";
      render_cmd(*c.a, out);
      out += " }";
      break;
    case CmdKind::Choose:
      out += "choose { ";
      render_cmd(*c.a, out);
      out += " } or { ";
      render_cmd(*c.b, out);
      out += " }";
      break;
  }
}

}  // namespace

std::variant<Program, ParseError> parse_program(std::string_view text) {
  try {
    return Parser(text).run();
  } catch (const ParseError& e) {
    return e;
  }
}

std::string render(const Command& c) {
  std::string out;
  render_cmd(c, out);
  return out;
}

std::string render(const Program& p) {
  std::string out;
  if (p.root && p.var_count != max_var(*p.root))
    out += "vars " + std::to_string(p.var_count) + "\n";
  if (p.root) render_cmd(*p.root, out);
  return out;
}

}  // namespace loopbound
