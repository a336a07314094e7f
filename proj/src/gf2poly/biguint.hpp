#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace f2s {

// Nonnegative arbitrary-precision integer. Boost's unsigned cpp_int backends
// are fixed-width, so this wraps the signed type and rejects negative results.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static BigUint pow2(unsigned e);
  // Decimal, or hex with a 0x prefix. Also accepts "2^k", "2^k-d" and "2^k+d".
  static BigUint parse(const std::string& text);

  bool is_zero() const { return v_.is_zero(); }
  std::size_t bit_length() const;
  bool bit(std::size_t i) const { return boost::multiprecision::bit_test(v_, static_cast<unsigned>(i)); }
  bool fits_u64() const { return bit_length() <= 64; }
  std::uint64_t to_u64() const;
  std::string to_string() const { return v_.str(); }
  const boost::multiprecision::cpp_int& value() const { return v_; }

  friend BigUint operator+(const BigUint& a, const BigUint& b) { return BigUint(a.v_ + b.v_, 0); }
  friend BigUint operator-(const BigUint& a, const BigUint& b);
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.v_ == b.v_; }
  friend auto operator<=>(const BigUint& a, const BigUint& b) {
    return a.v_ < b.v_ ? std::strong_ordering::less : a.v_ == b.v_ ? std::strong_ordering::equal : std::strong_ordering::greater;
  }

 private:
  BigUint(boost::multiprecision::cpp_int v, int) : v_(std::move(v)) {}
  boost::multiprecision::cpp_int v_;
};

}  // namespace f2s
