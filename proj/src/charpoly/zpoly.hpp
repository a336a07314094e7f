#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gf2poly/gf2poly.hpp"

namespace f2s {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial, coefficient i multiplies t^i. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<BigInt> coeffs);
  static ZPoly constant(const BigInt& c);
  static ZPoly monomial(std::size_t d, const BigInt& c = 1);
  // t^n + sign * t^m
  static ZPoly binomial(std::size_t n, std::size_t m, int sign);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& operator[](std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  std::size_t nonzero_count() const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const BigInt& s, const ZPoly& a);
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  BigInt evaluate(const BigInt& x) const;
  GF2Poly mod2() const;
  std::string to_string() const;  // human readable, highest power first

 private:
  void trim();
  std::vector<BigInt> c_;
};

ZPoly pow(const ZPoly& p, unsigned e);
// p(q(t))
ZPoly compose(const ZPoly& p, const ZPoly& q);

// Decimal coefficients one per line, lowest degree first.
void write_zpoly(const ZPoly& p, std::ostream& out);
ZPoly read_zpoly(std::istream& in);

}  // namespace f2s
