#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace f2s {

// Bit i lives in limb i / 64 at position i % 64. Bits past size() are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits) : nbits_(nbits), limbs_((nbits + 63) / 64, 0) {}

  static BitVector unit(std::size_t nbits, std::size_t index);
  static BitVector random(std::size_t nbits, std::mt19937_64& rng);
  static BitVector from_string(const std::string& bits);

  std::size_t size() const noexcept { return nbits_; }
  std::size_t limb_count() const noexcept { return limbs_.size(); }
  std::uint64_t* data() noexcept { return limbs_.data(); }
  const std::uint64_t* data() const noexcept { return limbs_.data(); }

  bool get(std::size_t i) const noexcept { return (limbs_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
      limbs_[i >> 6] |= bit;
    else
      limbs_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) noexcept { limbs_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;

  std::size_t popcount() const noexcept;
  bool any() const noexcept;
  void clear() noexcept;
  void clear_tail() noexcept;
  std::string to_string() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> limbs_;
};

// Sequential reader/writer of bit fields, most significant bit of each field first.
class BitWriter {
 public:
  explicit BitWriter(BitVector& v) : v_(v) {}
  void put(std::uint64_t value, unsigned nbits);
  std::size_t position() const noexcept { return pos_; }

 private:
  BitVector& v_;
  std::size_t pos_ = 0;
};

class BitReader {
 public:
  explicit BitReader(const BitVector& v) : v_(v) {}
  std::uint64_t take(unsigned nbits);
  std::size_t position() const noexcept { return pos_; }

 private:
  const BitVector& v_;
  std::size_t pos_ = 0;
};

}  // namespace f2s
