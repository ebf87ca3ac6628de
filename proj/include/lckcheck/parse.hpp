#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lckcheck/poly.hpp"

namespace lck {

// "3", "-7/4"; throws InvalidInput.
mpq_class parse_rational(std::string_view text);

// Accepts "x^4 - 2x^2 - 1", "3/2*x^2 + x", or a JSON coefficient array in
// ascending degree order such as "[-1, 0, -2, 0, 1]" (numbers or rational strings).
RatPoly parse_rat_poly(std::string_view text);
// As parse_rat_poly, rejecting non-integral coefficients.
IntPoly parse_int_poly(std::string_view text);

std::vector<mpq_class> parse_rational_list(const std::vector<std::string>& items);

}  // namespace lck
