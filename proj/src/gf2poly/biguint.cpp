#include "gf2poly/biguint.hpp"

#include <cctype>

#include "common/error.hpp"

namespace f2s {

namespace {

boost::multiprecision::cpp_int parse_plain(const std::string& s) {
  if (s.empty()) fail(ErrorCode::Parse, "empty integer");
  const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
  for (std::size_t i = hex ? 2 : 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (hex ? !std::isxdigit(c) : !std::isdigit(c)) fail(ErrorCode::Parse, "bad integer '" + s + "'");
  }
  if (hex && s.size() == 2) fail(ErrorCode::Parse, "bad integer '" + s + "'");
  return boost::multiprecision::cpp_int(s);
}

}  // namespace

BigUint BigUint::pow2(unsigned e) {
  boost::multiprecision::cpp_int v = 0;
  boost::multiprecision::bit_set(v, e);
  return BigUint(v, 0);
}

BigUint BigUint::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  if (text.rfind("2^", 0) == 0) {
    std::size_t op = text.find_first_of("+-", 2);
    std::string exp = text.substr(2, op == std::string::npos ? std::string::npos : op - 2);
    auto e = parse_plain(exp);
    if (e > 1000000) fail(ErrorCode::Parse, "exponent too large in '" + raw + "'");
    BigUint base = pow2(e.convert_to<unsigned>());
    if (op == std::string::npos) return base;
    BigUint rest(parse_plain(text.substr(op + 1)), 0);
    return text[op] == '+' ? base + rest : base - rest;
  }
  return BigUint(parse_plain(text), 0);
}

std::size_t BigUint::bit_length() const {
  if (v_.is_zero()) return 0;
  return boost::multiprecision::msb(v_) + 1;
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) fail(ErrorCode::InvalidArgument, "integer does not fit in 64 bits");
  return v_.convert_to<std::uint64_t>();
}

BigUint operator-(const BigUint& a, const BigUint& b) {
  if (a.v_ < b.v_) fail(ErrorCode::InvalidArgument, "unsigned subtraction would go negative");
  return BigUint(a.v_ - b.v_, 0);
}

}  // namespace f2s
