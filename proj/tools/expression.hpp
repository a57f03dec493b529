#pragma once

#include <iqc/iqg.hpp>

#include <stdexcept>
#include <string_view>

namespace iqc::cli {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Grammar, over the generator table of Sigma_n:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*        division only by constants
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?              half-integer exponents only on q
//   atom   := integer | 'q' | '(' expr ')' | B(i) | k(i) | kinv(i) | X(label) | X[label]
//           | T[i1,...,ir](B(j)) | T[i1,...,ir](k(j))
// iota_B and iota_k are accepted as spellings of B and k.
TorusElement parse_expression(const GeneratorTable& table, std::string_view text);

}  // namespace iqc::cli
