#pragma once

#include <cstdint>
#include <vector>

#include "charpoly/zpoly.hpp"

namespace f2s {

using IntMatrix = std::vector<std::vector<long long>>;

struct BlockSpec {
  unsigned n = 0;
  unsigned m = 0;
  unsigned w = 0;
  unsigned r = 0;
  std::uint64_t a = 0;  // a_i = bit i
};

constexpr unsigned kOracleDimension = 64;

// t^w - sum_i a_i t^(w-i-1), a_i = bit i of a.
ZPoly phi_A(std::uint64_t a, unsigned w);
ZPoly phi_A(const std::vector<int>& a_bits);

// phi_S(t^n - t^m)
ZPoly tgfsr_charpoly(unsigned n, unsigned m, const ZPoly& phi_S);
// phi_S(t^n + t^m): right over GF(2), wrong over Z in general.
ZPoly tgfsr_charpoly_plus(unsigned n, unsigned m, const ZPoly& phi_S);

ZPoly mt_charpoly(const BlockSpec& spec);
// Exponents e of the (t^(n-1) - t^(m-1))^e factors in the expansion, leading
// term first (only meaningful for w - r = 1).
std::vector<unsigned> mt_expansion_exponents(const BlockSpec& spec);

// det(tI - M) by the Faddeev-LeVerrier recurrence in exact integers.
ZPoly brute_charpoly(const IntMatrix& m);
// det(M) by fraction-free Bareiss elimination.
BigInt exact_det(const IntMatrix& m);

// The w x w matrix with (A y)_j = y_(j+1) + a_j y_0.
IntMatrix companion_A(std::uint64_t a, unsigned w);
// Words ordered oldest first; the new word x_(i+n) = x_(i+m) + S x_i fills the last block row.
IntMatrix assemble_tgfsr_matrix(unsigned n, unsigned m, const IntMatrix& S);
// Same layout with the oldest word reduced to its top w - r bits and the MT twist.
IntMatrix assemble_block_matrix(const BlockSpec& spec);

}  // namespace f2s
