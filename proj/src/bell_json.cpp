#include "cvbell/bell_json.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "cvbell/errors.hpp"

namespace cvbell {

namespace {

nlohmann::ordered_json numerator_to_json(const BigInt& num) {
  if (num >= std::numeric_limits<std::int64_t>::min() &&
      num <= std::numeric_limits<std::int64_t>::max()) {
    return num.convert_to<std::int64_t>();
  }
  return num.str();
}

Dyadic dyadic_from_json(const nlohmann::ordered_json& entry) {
  const auto& num = entry.at("num");
  const auto den = entry.at("den_pow2").get<unsigned>();
  if (num.is_string()) return Dyadic(BigInt(num.get<std::string>()), den);
  if (num.is_number_integer()) return Dyadic(BigInt(num.get<std::int64_t>()), den);
  throw InvalidArgument("expansion JSON: num must be an integer or a decimal string");
}

}  // namespace

nlohmann::ordered_json classes_to_json(const ClassCoefficients& classes) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (int k = 0; k <= classes.n; ++k) {
    const Dyadic& c = classes.coeffs[k];
    if (c.is_zero()) continue;
    list.push_back({{"k", k}, {"num", numerator_to_json(c.num())}, {"den_pow2", c.den_pow2()}});
  }
  return {{"n", classes.n}, {"classes", std::move(list)}};
}

nlohmann::ordered_json terms_to_json(int n, const std::vector<BellTerm>& terms) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& t : terms) {
    list.push_back({{"num", numerator_to_json(t.coefficient.num())},
                    {"den_pow2", t.coefficient.den_pow2()},
                    {"selector_bits", t.selector}});
  }
  return {{"n", n}, {"terms", std::move(list)}};
}

ClassCoefficients classes_from_json(const nlohmann::ordered_json& doc) {
  ClassCoefficients out;
  out.n = doc.at("n").get<int>();
  if (out.n < 2) throw InvalidArgument("expansion JSON: n must be >= 2");
  out.coeffs.assign(static_cast<std::size_t>(out.n + 1), Dyadic{});
  for (const auto& entry : doc.at("classes")) {
    const int k = entry.at("k").get<int>();
    if (k < 0 || k > out.n) throw InvalidArgument("expansion JSON: class index out of range");
    out.coeffs[k] = dyadic_from_json(entry);
  }
  return out;
}

std::vector<BellTerm> terms_from_json(const nlohmann::ordered_json& doc) {
  std::vector<BellTerm> out;
  for (const auto& entry : doc.at("terms")) {
    out.push_back({dyadic_from_json(entry), entry.at("selector_bits").get<std::uint32_t>()});
  }
  return out;
}

}  // namespace cvbell
