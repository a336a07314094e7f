#include "charpoly/zpoly.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "common/error.hpp"

namespace f2s {

namespace {
const BigInt kZero = 0;

std::vector<std::size_t> support(const std::vector<BigInt>& c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) idx.push_back(i);
  return idx;
}
}  // namespace

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const BigInt& c) { return ZPoly(std::vector<BigInt>{c}); }

ZPoly ZPoly::monomial(std::size_t d, const BigInt& c) {
  std::vector<BigInt> v(d + 1);
  v[d] = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::binomial(std::size_t n, std::size_t m, int sign) {
  std::vector<BigInt> v(std::max(n, m) + 1);
  v[n] += 1;
  v[m] += sign;
  return ZPoly(std::move(v));
}

const BigInt& ZPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

std::size_t ZPoly::nonzero_count() const { return support(c_).size(); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // The closed forms multiply sparse binomial powers, so skip zeros on both sides.
  const auto sa = support(a.c_), sb = support(b.c_);
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (auto i : sa)
    for (auto j : sb) out[i + j] += a.c_[i] * b.c_[j];
  return ZPoly(std::move(out));
}

ZPoly operator*(const BigInt& s, const ZPoly& a) {
  std::vector<BigInt> out(a.c_);
  for (auto& x : out) x *= s;
  return ZPoly(std::move(out));
}

BigInt ZPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

GF2Poly ZPoly::mod2() const {
  std::vector<std::uint64_t> limbs(c_.size() / 64 + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (boost::multiprecision::bit_test(boost::multiprecision::abs(c_[i]), 0)) limbs[i / 64] |= std::uint64_t{1} << (i % 64);
  return GF2Poly::from_limbs(std::move(limbs));
}

std::string ZPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c.is_zero()) continue;
    BigInt mag = boost::multiprecision::abs(c);
    if (first)
      s << (c < 0 ? "-" : "");
    else
      s << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || i == 0) s << mag;
    if (i > 0) s << (mag != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.str();
}

ZPoly pow(const ZPoly& p, unsigned e) {
  ZPoly result = ZPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) result = result * p;
  return result;
}

ZPoly compose(const ZPoly& p, const ZPoly& q) {
  ZPoly acc;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + ZPoly::constant(c[i]);
  return acc;
}

void write_zpoly(const ZPoly& p, std::ostream& out) {
  for (const auto& c : p.coeffs()) out << c << '\n';
  if (!out) fail(ErrorCode::Io, "failed writing polynomial");
}

ZPoly read_zpoly(std::istream& in) {
  std::vector<BigInt> c;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t start = (line[0] == '-' || line[0] == '+') ? 1 : 0;
    if (start == line.size() || line.find_first_not_of("0123456789", start) != std::string::npos)
      fail(ErrorCode::Parse, "polynomial line is not a decimal integer: '" + line + "'");
    c.emplace_back(line[0] == '+' ? line.substr(1) : line);
  }
  return ZPoly(std::move(c));
}

}  // namespace f2s
