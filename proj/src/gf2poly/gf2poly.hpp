#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gf2poly/biguint.hpp"

namespace f2s {

// Polynomial over GF(2); coefficient of t^i is bit i. Limbs are kept trimmed.
class GF2Poly {
 public:
  GF2Poly() = default;
  static GF2Poly one() { return monomial(0); }
  static GF2Poly monomial(std::size_t d);
  static GF2Poly from_limbs(std::vector<std::uint64_t> limbs);
  // Highest coefficient first, as written by to_hex().
  static GF2Poly from_hex(const std::string& hex);
  // "1011" -> 1 + t^2 + t^3 (index = power).
  static GF2Poly from_coeff_string(const std::string& bits);

  long degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return limbs_.empty(); }
  bool coeff(std::size_t i) const {
    return i / 64 < limbs_.size() && ((limbs_[i / 64] >> (i % 64)) & 1u);
  }
  void set_coeff(std::size_t i, bool v);
  std::size_t weight() const;
  const std::vector<std::uint64_t>& limbs() const { return limbs_; }
  std::string to_hex() const;

  GF2Poly& operator+=(const GF2Poly& o);
  friend GF2Poly operator+(GF2Poly a, const GF2Poly& b) { return a += b; }
  bool operator==(const GF2Poly& o) const = default;

  GF2Poly shifted_up(std::size_t s) const;    // times t^s
  GF2Poly shifted_down(std::size_t s) const;  // floor division by t^s

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

GF2Poly mul(const GF2Poly& a, const GF2Poly& b, std::size_t karatsuba_threshold = 512);
GF2Poly mul_schoolbook(const GF2Poly& a, const GF2Poly& b);
GF2Poly square(const GF2Poly& a);
GF2Poly mod(const GF2Poly& a, const GF2Poly& m);
GF2Poly powmod(const GF2Poly& base, const BigUint& e, const GF2Poly& m);
// Reciprocal t^d p(1/t) for a declared degree d >= deg p.
GF2Poly reciprocal(const GF2Poly& p, std::size_t d);

// Minimal polynomial of a bit sequence, returned as the characteristic
// polynomial of the shortest linear recurrence (degree = linear complexity).
GF2Poly berlekamp_massey(const std::vector<std::uint8_t>& seq);

}  // namespace f2s
