#include "gf2poly/gf2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "common/error.hpp"

namespace f2s {

namespace {

using u128 = unsigned __int128;

// Carry-less 64x64 -> 128 multiply, 4-bit windows.
inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  std::array<u128, 16> tab;
  tab[0] = 0;
  tab[1] = a;
  for (unsigned i = 2; i < 16; i += 2) {
    tab[i] = tab[i / 2] << 1;
    tab[i + 1] = tab[i] ^ static_cast<u128>(a);
  }
  u128 r = 0;
  for (int s = 60; s >= 0; s -= 4) r = (r << 4) ^ tab[(b >> s) & 15];
  lo = static_cast<std::uint64_t>(r);
  hi = static_cast<std::uint64_t>(r >> 64);
}

void trim_vec(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void schoolbook(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb, std::uint64_t* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      std::uint64_t lo, hi;
      clmul64(a[i], b[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
}

// out (2n limbs, zeroed) ^= a * b with both of length n.
void karatsuba(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t* out, std::size_t threshold) {
  if (n < threshold || n < 2) {
    schoolbook(a, n, b, n, out);
    return;
  }
  const std::size_t h = n / 2;
  const std::size_t hh = n - h;  // upper half length, >= h
  std::vector<std::uint64_t> lo(2 * h, 0), hi(2 * hh, 0), mid(2 * hh, 0), sa(hh, 0), sb(hh, 0);
  karatsuba(a, b, h, lo.data(), threshold);
  karatsuba(a + h, b + h, hh, hi.data(), threshold);
  for (std::size_t i = 0; i < hh; ++i) {
    sa[i] = a[h + i] ^ (i < h ? a[i] : 0);
    sb[i] = b[h + i] ^ (i < h ? b[i] : 0);
  }
  karatsuba(sa.data(), sb.data(), hh, mid.data(), threshold);
  for (std::size_t i = 0; i < lo.size(); ++i) mid[i] ^= lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) mid[i] ^= hi[i];
  for (std::size_t i = 0; i < lo.size(); ++i) out[i] ^= lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) out[2 * h + i] ^= hi[i];
  for (std::size_t i = 0; i < mid.size(); ++i) out[h + i] ^= mid[i];
}

std::uint16_t spread8(unsigned x) {
  std::uint16_t r = 0;
  for (unsigned i = 0; i < 8; ++i) r |= static_cast<std::uint16_t>(((x >> i) & 1u) << (2 * i));
  return r;
}

// Reduction modulo a fixed polynomial, using 64 pre-shifted copies.
class Reducer {
 public:
  explicit Reducer(const GF2Poly& m) : dm_(static_cast<std::size_t>(m.degree())) {
    const auto& ml = m.limbs();
    shifted_.assign(64, std::vector<std::uint64_t>(ml.size() + 1, 0));
    for (unsigned s = 0; s < 64; ++s) {
      auto& dst = shifted_[s];
      for (std::size_t i = 0; i < ml.size(); ++i) {
        dst[i] ^= ml[i] << s;
        if (s) dst[i + 1] ^= ml[i] >> (64 - s);
      }
      trim_vec(dst);
    }
  }

  void reduce(std::vector<std::uint64_t>& r) const {
    trim_vec(r);
    if (r.empty()) return;
    std::size_t top = r.size() * 64 - 1;
    while (top >= dm_) {
      if ((r[top >> 6] >> (top & 63)) & 1u) {
        const std::size_t shift = top - dm_;
        const auto& sh = shifted_[shift & 63];
        const std::size_t off = shift >> 6;
        for (std::size_t i = 0; i < sh.size(); ++i) r[off + i] ^= sh[i];
      }
      if (top == 0) break;
      --top;
    }
    trim_vec(r);
  }

 private:
  std::size_t dm_;
  std::vector<std::vector<std::uint64_t>> shifted_;
};

}  // namespace

GF2Poly GF2Poly::monomial(std::size_t d) {
  GF2Poly p;
  p.limbs_.assign(d / 64 + 1, 0);
  p.limbs_.back() = std::uint64_t{1} << (d % 64);
  return p;
}

GF2Poly GF2Poly::from_limbs(std::vector<std::uint64_t> limbs) {
  GF2Poly p;
  p.limbs_ = std::move(limbs);
  p.trim();
  return p;
}

GF2Poly GF2Poly::from_hex(const std::string& hex) {
  GF2Poly p;
  std::size_t nd = hex.size();
  p.limbs_.assign((nd + 15) / 16, 0);
  for (std::size_t i = 0; i < nd; ++i) {
    const char c = hex[nd - 1 - i];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v = static_cast<unsigned>(c - 'A' + 10);
    else
      fail(ErrorCode::Parse, "bad hex digit in polynomial");
    p.limbs_[i / 16] |= static_cast<std::uint64_t>(v) << (4 * (i % 16));
  }
  p.trim();
  return p;
}

GF2Poly GF2Poly::from_coeff_string(const std::string& bits) {
  GF2Poly p;
  p.limbs_.assign(bits.size() / 64 + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      p.limbs_[i / 64] |= std::uint64_t{1} << (i % 64);
    else if (bits[i] != '0')
      fail(ErrorCode::Parse, "coefficient string may only contain 0 and 1");
  }
  p.trim();
  return p;
}

long GF2Poly::degree() const {
  if (limbs_.empty()) return -1;
  return static_cast<long>((limbs_.size() - 1) * 64) + 63 - std::countl_zero(limbs_.back());
}

void GF2Poly::set_coeff(std::size_t i, bool v) {
  if (i / 64 >= limbs_.size()) {
    if (!v) return;
    limbs_.resize(i / 64 + 1, 0);
  }
  if (v)
    limbs_[i / 64] |= std::uint64_t{1} << (i % 64);
  else
    limbs_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  trim();
}

std::size_t GF2Poly::weight() const {
  std::size_t w = 0;
  for (auto l : limbs_) w += static_cast<std::size_t>(std::popcount(l));
  return w;
}

std::string GF2Poly::to_hex() const {
  if (limbs_.empty()) return "0";
  static const char* digits = "0123456789abcdef";
  std::string s;
  const long d = degree();
  for (long nib = d / 4; nib >= 0; --nib)
    s.push_back(digits[(limbs_[static_cast<std::size_t>(nib) / 16] >> (4 * (nib % 16))) & 15]);
  return s;
}

GF2Poly& GF2Poly::operator+=(const GF2Poly& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  for (std::size_t i = 0; i < o.limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
  trim();
  return *this;
}

GF2Poly GF2Poly::shifted_up(std::size_t s) const {
  if (limbs_.empty()) return {};
  std::vector<std::uint64_t> out(limbs_.size() + s / 64 + 1, 0);
  const std::size_t off = s / 64;
  const unsigned bs = s % 64;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out[i + off] ^= limbs_[i] << bs;
    if (bs) out[i + off + 1] ^= limbs_[i] >> (64 - bs);
  }
  return from_limbs(std::move(out));
}

GF2Poly GF2Poly::shifted_down(std::size_t s) const {
  const std::size_t off = s / 64;
  if (off >= limbs_.size()) return {};
  const unsigned bs = s % 64;
  std::vector<std::uint64_t> out(limbs_.size() - off, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = limbs_[i + off] >> bs;
    if (bs && i + off + 1 < limbs_.size()) out[i] |= limbs_[i + off + 1] << (64 - bs);
  }
  return from_limbs(std::move(out));
}

void GF2Poly::trim() { trim_vec(limbs_); }

GF2Poly mul_schoolbook(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> out(a.limbs().size() + b.limbs().size(), 0);
  schoolbook(a.limbs().data(), a.limbs().size(), b.limbs().data(), b.limbs().size(), out.data());
  return GF2Poly::from_limbs(std::move(out));
}

GF2Poly mul(const GF2Poly& a, const GF2Poly& b, std::size_t karatsuba_threshold) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = std::max(a.limbs().size(), b.limbs().size());
  if (std::min(a.limbs().size(), b.limbs().size()) < karatsuba_threshold) return mul_schoolbook(a, b);
  std::vector<std::uint64_t> pa(a.limbs()), pb(b.limbs()), out(2 * n, 0);
  pa.resize(n, 0);
  pb.resize(n, 0);
  karatsuba(pa.data(), pb.data(), n, out.data(), std::max<std::size_t>(karatsuba_threshold, 2));
  return GF2Poly::from_limbs(std::move(out));
}

GF2Poly square(const GF2Poly& a) {
  static const auto table = [] {
    std::array<std::uint16_t, 256> t{};
    for (unsigned i = 0; i < 256; ++i) t[i] = spread8(i);
    return t;
  }();
  std::vector<std::uint64_t> out(2 * a.limbs().size(), 0);
  for (std::size_t i = 0; i < a.limbs().size(); ++i) {
    const std::uint64_t x = a.limbs()[i];
    std::uint64_t lo = 0, hi = 0;
    for (unsigned byte = 0; byte < 4; ++byte) {
      lo |= static_cast<std::uint64_t>(table[(x >> (8 * byte)) & 0xff]) << (16 * byte);
      hi |= static_cast<std::uint64_t>(table[(x >> (8 * byte + 32)) & 0xff]) << (16 * byte);
    }
    out[2 * i] = lo;
    out[2 * i + 1] = hi;
  }
  return GF2Poly::from_limbs(std::move(out));
}

GF2Poly mod(const GF2Poly& a, const GF2Poly& m) {
  if (m.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial modulus is zero");
  if (a.degree() < m.degree()) return a;
  if (m.degree() == 0) return {};
  std::vector<std::uint64_t> r(a.limbs());
  Reducer(m).reduce(r);
  return GF2Poly::from_limbs(std::move(r));
}

GF2Poly powmod(const GF2Poly& base, const BigUint& e, const GF2Poly& m) {
  if (m.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial modulus is zero");
  if (m.degree() == 0) return {};
  const Reducer red(m);
  auto reduce = [&](const GF2Poly& p) {
    std::vector<std::uint64_t> v(p.limbs());
    red.reduce(v);
    return GF2Poly::from_limbs(std::move(v));
  };
  const GF2Poly b = reduce(base);
  const bool base_is_t = b == GF2Poly::monomial(1);
  GF2Poly acc = GF2Poly::one();
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    acc = reduce(square(acc));
    if (e.bit(i)) acc = reduce(base_is_t ? acc.shifted_up(1) : mul(acc, b));
  }
  return acc;
}

GF2Poly reciprocal(const GF2Poly& p, std::size_t d) {
  if (p.degree() > static_cast<long>(d)) fail(ErrorCode::InvalidArgument, "reciprocal degree below polynomial degree");
  std::vector<std::uint64_t> out(d / 64 + 1, 0);
  for (long i = 0; i <= p.degree(); ++i)
    if (p.coeff(static_cast<std::size_t>(i))) {
      const std::size_t j = d - static_cast<std::size_t>(i);
      out[j / 64] |= std::uint64_t{1} << (j % 64);
    }
  return GF2Poly::from_limbs(std::move(out));
}

GF2Poly berlekamp_massey(const std::vector<std::uint8_t>& seq) {
  const std::size_t N = seq.size();
  const std::size_t limbs = N / 64 + 2;
  // rev[j] = seq[N-1-j], padded with zero limbs so unaligned loads stay in range.
  std::vector<std::uint64_t> rev(2 * limbs + 2, 0);
  for (std::size_t j = 0; j < N; ++j)
    if (seq[N - 1 - j] & 1u) rev[j / 64] |= std::uint64_t{1} << (j % 64);
  auto load = [&](std::size_t bitpos) {
    const std::size_t l = bitpos / 64;
    const unsigned o = bitpos % 64;
    std::uint64_t v = rev[l] >> o;
    if (o) v |= rev[l + 1] << (64 - o);
    return v;
  };

  std::vector<std::uint64_t> C(limbs, 0), B(limbs, 0), T;
  C[0] = B[0] = 1;
  std::size_t L = 0, shift = 1;
  for (std::size_t n = 0; n < N; ++n) {
    // d = sum_{i=0..L} c_i s[n-i] = sum c_i rev[N-1-n+i]
    const std::size_t base = N - 1 - n;
    std::uint64_t acc = 0;
    for (std::size_t q = 0; q <= L / 64; ++q) acc ^= C[q] & load(base + 64 * q);
    if ((std::popcount(acc) & 1) == 0) {
      ++shift;
      continue;
    }
    const bool grow = 2 * L <= n;
    if (grow) T = C;
    const std::size_t off = shift / 64;
    const unsigned bs = shift % 64;
    for (std::size_t i = 0; i + off < limbs; ++i) {
      C[i + off] ^= B[i] << bs;
      if (bs && i + off + 1 < limbs) C[i + off + 1] ^= B[i] >> (64 - bs);
    }
    if (grow) {
      L = n + 1 - L;
      B.swap(T);
      shift = 1;
    } else {
      ++shift;
    }
  }
  GF2Poly conn = GF2Poly::from_limbs(C);
  return reciprocal(conn, L);
}

}  // namespace f2s
