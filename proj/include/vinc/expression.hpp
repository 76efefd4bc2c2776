#pragma once

// Expression language for the `eval` command: sums of (rational *) atoms and function calls.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := [rational '*'] factor
//   factor := name '(' expr (',' expr)* ')' | '(' expr ')' | atom
//   atom   := '[' n,... ']'            composition
//           | a.b.c                    word
//           | digits | '()'            permutation (a one-letter word where a word is expected)
//           | digits|digits|...        vincular pattern; `{10,2|1}` when entries exceed 9

#include <string>
#include <variant>

#include "vinc/hopf_tools.hpp"

namespace vinc {

using Value = std::variant<Rational, PartComb, WordComb, PermComb, VincComb, PartComb2, PermComb2, VincComb2>;

/// "scalar", "composition", "word", "permutation", "vincular", or "<kind> (x) <kind>".
std::string value_kind(const Value& v);
std::string value_string(const Value& v);

/// One (coefficient, basis) pair per term, in canonical order; legs filled for tensors.
struct RenderedTerm {
    std::string coeff;
    std::string basis;
    std::vector<std::string> legs;
};
std::vector<RenderedTerm> value_terms(const Value& v);

/// Throws ParseError for malformed input or type errors; ResourceError from size guards.
Value evaluate_expression(const std::string& text);

/// Names accepted by evaluate_expression.
std::vector<std::string> expression_functions();

}  // namespace vinc
