#include "spectral/report.hpp"

namespace f2s {

nlohmann::json entropy_report_json(const std::string& name, unsigned k, unsigned w, const EntropyReport& r,
                                   long long power) {
  return {
      {"name", name},
      {"k", k},
      {"w", w},
      {"h", r.h},
      {"h_per_bit", r.h_per_bit},
      {"min_modulus", r.min_modulus},
      {"max_modulus", r.max_modulus},
      {"power", power},
      {"count_inside", r.count_inside},
      {"count_outside", r.count_outside},
  };
}

}  // namespace f2s
