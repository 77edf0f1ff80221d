#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weil/matrix.hpp"

namespace weil {

/// Canonical text for a sum of (monomial text, End V coefficient) terms.
/// Terms whose coefficient is c*I print as scalars ("-1/2*v1*y2"); others as
/// "v1*y2 ⊗ [[0,1],[0,0]]". The empty sum prints as "0".
std::string render_terms(const std::vector<std::pair<std::string, Matrix>>& terms);

}  // namespace weil
