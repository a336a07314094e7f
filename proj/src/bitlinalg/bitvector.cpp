#include "bitlinalg/bitvector.hpp"

#include <bit>

#include "common/error.hpp"

namespace f2s {

BitVector BitVector::unit(std::size_t nbits, std::size_t index) {
  if (index >= nbits) fail(ErrorCode::InvalidArgument, "unit vector index out of range");
  BitVector v(nbits);
  v.set(index, true);
  return v;
}

BitVector BitVector::random(std::size_t nbits, std::mt19937_64& rng) {
  BitVector v(nbits);
  for (auto& limb : v.limbs_) limb = rng();
  v.clear_tail();
  return v;
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      fail(ErrorCode::Parse, "bit string may only contain '0' and '1'");
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.nbits_ != nbits_) fail(ErrorCode::DimensionMismatch, "xor of bit vectors with different lengths");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
  return *this;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t c = 0;
  for (auto limb : limbs_) c += static_cast<std::size_t>(std::popcount(limb));
  return c;
}

bool BitVector::any() const noexcept {
  for (auto limb : limbs_)
    if (limb) return true;
  return false;
}

void BitVector::clear() noexcept {
  for (auto& limb : limbs_) limb = 0;
}

void BitVector::clear_tail() noexcept {
  if (nbits_ % 64 && !limbs_.empty()) limbs_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
}

std::string BitVector::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

namespace {

std::uint64_t reverse64(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0f0f0f0f0f0f0f0fULL) | ((x & 0x0f0f0f0f0f0f0f0fULL) << 4);
  return __builtin_bswap64(x);
}

}  // namespace

void BitWriter::put(std::uint64_t value, unsigned nbits) {
  if (nbits == 0) return;
  if (pos_ + nbits > v_.size()) fail(ErrorCode::Internal, "bit writer overflow");
  // Field is MSB-first, storage is LSB-first: reverse so field bit 0 lands at pos_.
  std::uint64_t rev = reverse64(value) >> (64 - nbits);
  const std::uint64_t fmask = nbits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nbits) - 1;
  std::uint64_t* d = v_.data();
  const std::size_t limb = pos_ >> 6;
  const unsigned off = pos_ & 63;
  d[limb] = (d[limb] & ~(fmask << off)) | (rev << off);
  if (off + nbits > 64) {
    const unsigned spill = off + nbits - 64;
    const std::uint64_t smask = (std::uint64_t{1} << spill) - 1;
    d[limb + 1] = (d[limb + 1] & ~smask) | (rev >> (64 - off));
  }
  pos_ += nbits;
}

std::uint64_t BitReader::take(unsigned nbits) {
  if (nbits == 0) return 0;
  if (pos_ + nbits > v_.size()) fail(ErrorCode::Internal, "bit reader overflow");
  const std::uint64_t* d = v_.data();
  const std::size_t limb = pos_ >> 6;
  const unsigned off = pos_ & 63;
  std::uint64_t raw = d[limb] >> off;
  if (off + nbits > 64) raw |= d[limb + 1] << (64 - off);
  if (nbits < 64) raw &= (std::uint64_t{1} << nbits) - 1;
  pos_ += nbits;
  return reverse64(raw) >> (64 - nbits);
}

}  // namespace f2s
