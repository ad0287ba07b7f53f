#pragma once

// Plain-text word syntax.
//
//   word   := factor* | "1"
//   factor := letter ('^' int)?
//
// Whitespace between factors is optional. Letters are
//   mapping classes : a b g          (d_alpha, d_beta, d_gamma)
//   loops           : a b g A        (alpha-bar, beta-bar, gamma-bar, alpha-hat)
//   cyclic words    : x<index>       (x1, x12, ...)
// Adjacent factors on the same letter are merged. A zero exponent is
// rejected with a ParseError pointing at the factor.

#include <ostream>
#include <string>
#include <string_view>

#include "oneone/cyclicpres.hpp"
#include "oneone/mcg.hpp"
#include "oneone/words.hpp"

namespace oneone {

MCGWord parse_mcg(std::string_view text);
Pi1Word parse_pi1(std::string_view text);
CyclicWord parse_cyclic_word(std::string_view text);

/// Empty words render as "1".
std::string to_string(const MCGWord& w);
std::string to_string(const Pi1Word& w);
std::string to_string(const CyclicWord& w);

std::ostream& operator<<(std::ostream& os, const MCGWord& w);
std::ostream& operator<<(std::ostream& os, const Pi1Word& w);
std::ostream& operator<<(std::ostream& os, const CyclicWord& w);

}  // namespace oneone
