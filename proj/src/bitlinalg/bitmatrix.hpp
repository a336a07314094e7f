#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bitlinalg/bitvector.hpp"

namespace f2s {

// Row-major GF(2) matrix, each row padded to a whole number of 64-bit limbs.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  std::uint64_t* row(std::size_t i) noexcept { return data_.data() + i * stride_; }
  const std::uint64_t* row(std::size_t i) const noexcept { return data_.data() + i * stride_; }

  bool get(std::size_t i, std::size_t j) const noexcept { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
  void set(std::size_t i, std::size_t j, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (v)
      row(i)[j >> 6] |= bit;
    else
      row(i)[j >> 6] &= ~bit;
  }

  void set_row(std::size_t i, const BitVector& v);
  BitVector get_row(std::size_t i) const;

  BitMatrix transpose() const;
  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

BitVector matvec(const BitMatrix& m, const BitVector& v);
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitMatrix matpow(const BitMatrix& m, std::uint64_t e);
std::size_t rank_gf2(const BitMatrix& m);

// Text: one row per line of '0'/'1'. Binary: "F2M1", rows and cols as 64-bit
// little-endian integers, then each row's limbs little-endian.
void write_matrix(const BitMatrix& m, std::ostream& out);
BitMatrix read_matrix(std::istream& in);
void write_matrix_binary(const BitMatrix& m, std::ostream& out);
BitMatrix read_matrix_binary(std::istream& in);

}  // namespace f2s
