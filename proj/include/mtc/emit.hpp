#pragma once

#include <string>

#include <json.hpp>

#include "mtc/modular_data.hpp"

namespace mtc {

// Exact serialization: {"order": M, "coeffs": ["p/q", ...]} over the power
// basis of the field of order M.
nlohmann::json cyc_to_json(const Cyc& z);
Cyc cyc_from_json(const nlohmann::json& j);

// {labels, dims, theta, S} with exact entries.
nlohmann::json modular_data_to_json(const ModularData& md);
ModularData modular_data_from_json(const nlohmann::json& j);

// Compact human form: rationals as "p/q", pure roots of unity as "z24^5",
// anything else as a sum of monomials.
std::string cyc_to_pretty(const Cyc& z);

// "a+bi" with the given number of significant digits.
std::string cyc_to_numeric(const Cyc& z, int digits);

// One row per matrix row; numeric entries.
std::string modular_data_to_csv(const ModularData& md, int digits);

// S as a bmatrix plus a T diagonal line, exact pretty entries.
std::string modular_data_to_latex(const ModularData& md);

std::string modular_data_to_pretty(const ModularData& md, int digits);

} // namespace mtc
