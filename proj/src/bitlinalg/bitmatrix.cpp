#include "bitlinalg/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "common/error.hpp"

namespace f2s {

namespace {

// In-place transpose of a 64x64 bit block (row r bit c <-> row c bit r).
void transpose64(std::uint64_t a[64]) {
  std::uint64_t m = 0x00000000ffffffffULL;
  for (unsigned j = 32; j != 0; j >>= 1, m ^= m << j) {
    for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "row length does not match matrix columns");
  std::copy(v.data(), v.data() + stride_, row(i));
}

BitVector BitMatrix::get_row(std::size_t i) const {
  BitVector v(cols_);
  std::copy(row(i), row(i) + stride_, v.data());
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  std::uint64_t block[64];
  for (std::size_t rb = 0; rb < rows_; rb += 64) {
    for (std::size_t cl = 0; cl < stride_; ++cl) {
      for (unsigned r = 0; r < 64; ++r) block[r] = rb + r < rows_ ? row(rb + r)[cl] : 0;
      transpose64(block);
      // After the transpose, block[c] holds column (64*cl + c) restricted to rows rb..rb+63.
      for (unsigned c = 0; c < 64; ++c) {
        std::size_t col = cl * 64 + c;
        if (col >= cols_) break;
        t.row(col)[rb >> 6] = block[c];
      }
    }
  }
  return t;
}

BitVector matvec(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) fail(ErrorCode::DimensionMismatch, "matvec: vector length does not match columns");
  BitVector out(m.rows());
  const std::uint64_t* x = v.data();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::uint64_t* r = m.row(i);
    std::uint64_t acc = 0;
    for (std::size_t l = 0; l < m.stride(); ++l) acc ^= r[l] & x[l];
    if (std::popcount(acc) & 1) out.set(i, true);
  }
  return out;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matmul: inner dimensions differ");
  BitMatrix c(a.rows(), b.cols());
  const std::size_t s = b.stride();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t* out = c.row(i);
    const std::uint64_t* ar = a.row(i);
    for (std::size_t l = 0; l < a.stride(); ++l) {
      std::uint64_t word = ar[l];
      while (word) {
        std::size_t j = l * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        const std::uint64_t* br = b.row(j);
        for (std::size_t q = 0; q < s; ++q) out[q] ^= br[q];
      }
    }
  }
  return c;
}

BitMatrix matpow(const BitMatrix& m, std::uint64_t e) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "matpow needs a square matrix");
  BitMatrix result = BitMatrix::identity(m.rows());
  BitMatrix base = m;
  while (e) {
    if (e & 1) result = matmul(result, base);
    e >>= 1;
    if (e) base = matmul(base, base);
  }
  return result;
}

std::size_t rank_gf2(const BitMatrix& m) {
  BitMatrix a = m;
  const std::size_t s = a.stride();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    const std::size_t limb = col >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (col & 63);
    std::size_t pivot = rank;
    while (pivot < a.rows() && !(a.row(pivot)[limb] & bit)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) std::swap_ranges(a.row(pivot), a.row(pivot) + s, a.row(rank));
    const std::uint64_t* pr = a.row(rank);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      std::uint64_t* r = a.row(i);
      if (r[limb] & bit)
        for (std::size_t q = limb; q < s; ++q) r[q] ^= pr[q];
    }
    ++rank;
  }
  return rank;
}

}  // namespace f2s
