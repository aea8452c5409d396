#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "cvbell/bell.hpp"

namespace cvbell {

// Documented shapes:
//   {"n": N, "classes": [{"k": K, "num": NUM, "den_pow2": D}, ...]}
//   {"n": N, "terms":   [{"num": NUM, "den_pow2": D, "selector_bits": S}, ...]}
// NUM is a JSON integer when it fits in 64 bits and a decimal string otherwise.
// Classes with zero coefficient are omitted.
nlohmann::ordered_json classes_to_json(const ClassCoefficients& classes);
nlohmann::ordered_json terms_to_json(int n, const std::vector<BellTerm>& terms);

ClassCoefficients classes_from_json(const nlohmann::ordered_json& doc);
std::vector<BellTerm> terms_from_json(const nlohmann::ordered_json& doc);

}  // namespace cvbell
