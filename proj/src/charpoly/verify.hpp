#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charpoly/charpoly.hpp"
#include "gf2poly/gf2poly.hpp"

namespace f2s {

struct IdentityReport {
  unsigned configs = 0;
  unsigned matched = 0;
  // TGFSR check only: how often phi_S(t^n + t^m) differs over Z / agrees mod 2.
  unsigned plus_variant_differs = 0;
  unsigned plus_variant_agrees_mod2 = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return configs > 0 && matched == configs; }
};

// Random (n <= 6, m < n, w <= 3, r = 0) configurations with a random 0/1 S.
IdentityReport verify_tgfsr_identity(unsigned configs, std::uint64_t seed);
// Random configurations with r >= 1 and n w - r <= 48.
IdentityReport verify_mt_identity(unsigned configs, std::uint64_t seed);

struct Mod2Report {
  bool equal = false;
  long formula_degree = -1;
  long minpoly_degree = -1;
  std::size_t formula_weight = 0;
  std::size_t minpoly_weight = 0;
};

BlockSpec mt19937_block_spec();
Mod2Report compare_mt19937_mod2(const GF2Poly& minpoly);

}  // namespace f2s
