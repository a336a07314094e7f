#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "bitlinalg/bitmatrix.hpp"
#include "common/error.hpp"

namespace f2s {

namespace {

constexpr char kMagic[4] = {'F', '2', 'M', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 8)) fail(ErrorCode::Parse, "truncated binary matrix header");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

void write_matrix(const BitMatrix& m, std::ostream& out) {
  std::string line(m.cols() + 1, '0');
  line.back() = '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) line[j] = m.get(i, j) ? '1' : '0';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  if (!out) fail(ErrorCode::Io, "failed writing matrix");
}

BitMatrix read_matrix(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!lines.empty() && line.size() != lines.front().size())
      fail(ErrorCode::Parse, "matrix line " + std::to_string(lines.size() + 1) + " has length " +
                                 std::to_string(line.size()) + ", expected " + std::to_string(lines.front().size()));
    lines.push_back(std::move(line));
  }
  const std::size_t cols = lines.empty() ? 0 : lines.front().size();
  BitMatrix m(lines.size(), cols);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      char c = lines[i][j];
      if (c == '1')
        m.set(i, j, true);
      else if (c != '0')
        fail(ErrorCode::Parse, "matrix line " + std::to_string(i + 1) + " contains a character other than 0/1");
    }
  }
  return m;
}

void write_matrix_binary(const BitMatrix& m, std::ostream& out) {
  out.write(kMagic, 4);
  put_u64(out, m.rows());
  put_u64(out, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t l = 0; l < m.stride(); ++l) put_u64(out, m.row(i)[l]);
  if (!out) fail(ErrorCode::Io, "failed writing binary matrix");
}

BitMatrix read_matrix_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) fail(ErrorCode::Parse, "missing F2M1 magic");
  const std::uint64_t rows = get_u64(in);
  const std::uint64_t cols = get_u64(in);
  if (rows > (1u << 20) || cols > (1u << 20)) fail(ErrorCode::Parse, "binary matrix dimensions are implausible");
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t l = 0; l < m.stride(); ++l) m.row(i)[l] = get_u64(in);
  if (cols % 64)
    for (std::size_t i = 0; i < rows; ++i)
      if (m.row(i)[m.stride() - 1] >> (cols % 64)) fail(ErrorCode::Parse, "binary matrix has bits past the column count");
  return m;
}

}  // namespace f2s
