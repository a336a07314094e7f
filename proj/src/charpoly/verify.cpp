#include "charpoly/verify.hpp"

#include <random>
#include <sstream>

namespace f2s {

IdentityReport verify_tgfsr_identity(unsigned configs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
  IdentityReport rep;
  for (unsigned t = 0; t < configs; ++t) {
    const unsigned n = uniform(2, 6), m = uniform(1, n - 1), w = uniform(1, 3);
    IntMatrix S(w, std::vector<long long>(w));
    for (auto& row : S)
      for (auto& x : row) x = uniform(0, 1);
    const ZPoly phiS = brute_charpoly(S);
    const ZPoly oracle = brute_charpoly(assemble_tgfsr_matrix(n, m, S));
    const ZPoly formula = tgfsr_charpoly(n, m, phiS);
    const ZPoly plus = tgfsr_charpoly_plus(n, m, phiS);
    ++rep.configs;
    if (formula == oracle) {
      ++rep.matched;
    } else {
      std::ostringstream msg;
      msg << "n=" << n << " m=" << m << " w=" << w << ": formula " << formula.to_string() << " vs " << oracle.to_string();
      rep.mismatches.push_back(msg.str());
    }
    if (!(plus == oracle)) ++rep.plus_variant_differs;
    if (plus.mod2() == oracle.mod2()) ++rep.plus_variant_agrees_mod2;
  }
  return rep;
}

IdentityReport verify_mt_identity(unsigned configs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
  IdentityReport rep;
  for (unsigned t = 0; t < configs; ++t) {
    BlockSpec s;
    do {
      s.n = uniform(2, 6);
      s.w = uniform(2, 8);
      s.r = uniform(1, s.w - 1);
    } while (s.n * s.w - s.r > 48);
    s.m = uniform(1, s.n - 1);
    s.a = rng() & ((std::uint64_t{1} << s.w) - 1);
    const ZPoly oracle = brute_charpoly(assemble_block_matrix(s));
    const ZPoly formula = mt_charpoly(s);
    ++rep.configs;
    if (formula == oracle) {
      ++rep.matched;
    } else {
      std::ostringstream msg;
      msg << "n=" << s.n << " m=" << s.m << " w=" << s.w << " r=" << s.r << " a=0x" << std::hex << s.a;
      rep.mismatches.push_back(msg.str());
    }
  }
  return rep;
}

BlockSpec mt19937_block_spec() { return BlockSpec{624, 397, 32, 31, 0x9908b0dfULL}; }

Mod2Report compare_mt19937_mod2(const GF2Poly& minpoly) {
  const GF2Poly f = mt_charpoly(mt19937_block_spec()).mod2();
  Mod2Report rep;
  rep.equal = f == minpoly;
  rep.formula_degree = f.degree();
  rep.minpoly_degree = minpoly.degree();
  rep.formula_weight = f.weight();
  rep.minpoly_weight = minpoly.weight();
  return rep;
}

}  // namespace f2s
