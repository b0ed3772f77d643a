#pragma once

#include <string>

#include "qam/bounds.hpp"

namespace qam {

// Shortest-stable float formatting used across all outputs: 17 significant
// digits, enough to round-trip a double exactly.
std::string format_double(double v);

// Deterministic serializations of a report: identical inputs produce
// byte-identical output. Params maps are sorted, emission order is fixed.
std::string to_json(const BoundReport& report);
std::string to_csv(const BoundReport& report);
std::string to_text(const BoundReport& report);

std::string to_json(const RhoEstimate& rho);
std::string to_text(const RhoEstimate& rho);

}  // namespace qam
