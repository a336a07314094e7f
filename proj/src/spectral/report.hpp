#pragma once

#include <string>

#include <json.hpp>

#include "spectral/spectrum.hpp"

namespace f2s {

// {name, k, w, h, h_per_bit, min_modulus, max_modulus, power, ...}
nlohmann::json entropy_report_json(const std::string& name, unsigned k, unsigned w, const EntropyReport& r,
                                   long long power);

}  // namespace f2s
