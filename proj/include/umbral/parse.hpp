#pragma once

#include <string>
#include <vector>

#include "umbral/exponent_vector.hpp"

namespace umbral {

/// Exponent-vector list: items separated by ';' or blanks, coordinates by
/// ',', an optional "^k" repeats an item k times, and one pair of enclosing
/// brackets is ignored. "2,0;1,0", "1^5;2^3;3^2" and "[1^5 2^3 3^2]" are all
/// accepted. Every vector must be non-zero and all must share one arity.
std::vector<ExpVec> parse_vector_list(const std::string& text);

/// Symbol multiset such as "a^3,g^2" or "a,a,b": comma-separated
/// identifiers, each with an optional "^k" repeat count.
std::vector<std::string> parse_symbol_list(const std::string& text);

/// One or more multiset arguments of the same kind. Symbol arguments share
/// one symbol table; symbol j (in order of first appearance) becomes the
/// j-th unit vector. `symbols` is empty for vector-list input.
struct MultisetInput {
  std::vector<std::vector<ExpVec>> groups;
  std::vector<std::string> symbols;
};

/// Arguments starting with a letter are symbol multisets, all others
/// vector lists. Mixing the two kinds is an error.
MultisetInput parse_multisets(const std::vector<std::string>& args);

/// Strictly positive decimal integer.
int parse_positive_int(const std::string& text, const std::string& what);

}  // namespace umbral
