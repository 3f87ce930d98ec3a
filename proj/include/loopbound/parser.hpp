#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "loopbound/ast.hpp"

namespace loopbound {

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
};

// Text format:
//   cmd ::= "skip" | var ":=" rhs | cmd ";" cmd
//         | "loop" var "{" cmd "}"
//         | "choose" "{" cmd "}" "or" "{" cmd "}"
//   rhs ::= "0" | var | var "+" var | var "*" var
//   var ::= "X" digits
// An optional first line "vars <n>" fixes the variable count; otherwise it
// is the largest index mentioned. "#" starts a comment to end of line.
// ";" binds right-associatively and a trailing ";" before "}" or end of
// input is tolerated. The returned program always passes validate().
std::variant<Program, ParseError> parse_program(std::string_view text);

// Canonical single-line text. Sequences are emitted flattened, so programs
// whose Seq chains are right-nested (as parse_program builds them)
// round-trip to structurally equal trees. A "vars <n>" header is emitted
// only when n exceeds the largest index used.
std::string render(const Program& p);
std::string render(const Command& c);

}  // namespace loopbound
