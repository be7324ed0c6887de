#pragma once

// Text form shared by polynomials and series: ascending exponents, explicit
// " + " / " - " separators, "c·x^k" tokens, coefficient 1 elided on
// non-constant terms. Example: "x^-2 + 1/12 - 1/240·x^2".

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bps/rat.hpp"

namespace bps {

std::string render_terms(const std::vector<std::pair<int, Rat>>& terms, std::string_view var);

/// Inverse of render_terms. Terms may appear in any order; repeated
/// exponents are summed. Throws InputError on malformed text.
std::vector<std::pair<int, Rat>> parse_terms(std::string_view text, std::string_view var);

}  // namespace bps
