#include <random>
#include <sstream>
#include <tuple>

#include "bitlinalg/bitmatrix.hpp"
#include "bitlinalg/extract.hpp"
#include "common/error.hpp"
#include "doctest.h"
#include "generators/generator.hpp"

using namespace f2s;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, BitVector::random(cols, rng));
  return m;
}

BitMatrix naive_matmul(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t l = 0; l < a.cols(); ++l) v ^= a.get(i, l) && b.get(l, j);
      c.set(i, j, v);
    }
  return c;
}

}  // namespace

TEST_CASE("bitvector string round trip and tail handling") {
  const auto v = BitVector::from_string("1011001");
  CHECK(v.size() == 7);
  CHECK(v.get(0));
  CHECK_FALSE(v.get(1));
  CHECK(v.to_string() == "1011001");
  CHECK(v.popcount() == 4);
  std::mt19937_64 rng(3);
  const auto r = BitVector::random(130, rng);
  CHECK((r.data()[2] >> 2) == 0);  // bits past 130 stay clear
}

TEST_CASE("bit writer and reader agree on MSB-first fields") {
  std::mt19937_64 rng(11);
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  std::size_t total = 0;
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 64);
    const std::uint64_t value = n == 64 ? rng() : rng() & ((std::uint64_t{1} << n) - 1);
    fields.emplace_back(value, n);
    total += n;
  }
  BitVector v(total);
  BitWriter w(v);
  for (auto [value, n] : fields) w.put(value, n);
  CHECK(w.position() == total);
  BitReader r(v);
  for (auto [value, n] : fields) CHECK(r.take(n) == value);

  BitVector small(8);
  BitWriter(small).put(0b10000001, 8);
  CHECK(small.get(0));  // the MSB lands at the lowest index
  CHECK(small.get(7));
  CHECK(small.popcount() == 2);
}

TEST_CASE("identity and matvec") {
  std::mt19937_64 rng(5);
  const auto id = BitMatrix::identity(77);
  for (int i = 0; i < 20; ++i) {
    const auto v = BitVector::random(77, rng);
    CHECK(matvec(id, v) == v);
  }
}

TEST_CASE("matmul matches the naive triple loop, including odd shapes") {
  std::mt19937_64 rng(7);
  for (auto [r, k, c] : std::vector<std::tuple<int, int, int>>{{5, 7, 3}, {64, 64, 64}, {65, 130, 67}, {1, 200, 9}}) {
    const auto a = random_matrix(r, k, rng);
    const auto b = random_matrix(k, c, rng);
    CHECK(matmul(a, b) == naive_matmul(a, b));
  }
}

TEST_CASE("transpose") {
  std::mt19937_64 rng(9);
  const auto a = random_matrix(131, 70, rng);
  const auto t = a.transpose();
  REQUIRE(t.rows() == 70);
  REQUIRE(t.cols() == 131);
  bool ok = true;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) ok = ok && a.get(i, j) == t.get(j, i);
  CHECK(ok);
  CHECK(t.transpose() == a);
}

TEST_CASE("rank") {
  CHECK(rank_gf2(BitMatrix::identity(7)) == 7);
  CHECK(rank_gf2(BitMatrix(9, 9)) == 0);
  BitMatrix m(3, 3);
  m.set_row(0, BitVector::from_string("110"));
  m.set_row(1, BitVector::from_string("011"));
  m.set_row(2, BitVector::from_string("101"));  // sum of the first two
  CHECK(rank_gf2(m) == 2);
  CHECK(rank_gf2(extract_transition_matrix(find_spec("well607b"))) == 607);
}

TEST_CASE("matrix text and binary formats") {
  std::ostringstream out;
  write_matrix(BitMatrix::identity(2), out);
  CHECK(out.str() == "10\n01\n");

  std::mt19937_64 rng(13);
  const auto a = random_matrix(70, 129, rng);
  std::stringstream text;
  write_matrix(a, text);
  CHECK(read_matrix(text) == a);
  std::stringstream bin(std::ios::in | std::ios::out | std::ios::binary);
  write_matrix_binary(a, bin);
  CHECK(read_matrix_binary(bin) == a);

  std::istringstream ragged("101\n10\n");
  CHECK_THROWS_AS(read_matrix(ragged), Error);
  std::istringstream junk("1x1\n");
  CHECK_THROWS_AS(read_matrix(junk), Error);
}

TEST_CASE("matpow") {
  std::mt19937_64 rng(17);
  const auto m = random_matrix(40, 40, rng);
  CHECK(matpow(m, 0) == BitMatrix::identity(40));
  CHECK(matpow(m, 1) == m);
  CHECK(matpow(m, 5) == matmul(matmul(matmul(matmul(m, m), m), m), m));

  const auto& spec = find_spec("well607b");
  const auto b5 = matpow(extract_transition_matrix(spec), 5);
  for (int i = 0; i < 10; ++i) {
    auto x = BitVector::random(spec.k, rng);
    const auto y = matvec(b5, x);
    for (int s = 0; s < 5; ++s) x = raw_step(spec, x);
    CHECK(y == x);
  }
}

TEST_CASE("extracted matrices reproduce one generator step") {
  std::mt19937_64 rng(19);
  for (const char* name : {"well607b", "melg607", "well1024a"}) {
    CAPTURE(name);
    const auto& spec = find_spec(name);
    const auto b = extract_transition_matrix(spec);
    REQUIRE(b.rows() == spec.k);
    REQUIRE(b.cols() == spec.k);
    for (int i = 0; i < 100; ++i) {
      const auto x = BitVector::random(spec.k, rng);
      CHECK(matvec(b, x) == raw_step(spec, x));
    }
    CHECK(extract_probe_matrix(spec) == b.transpose());
  }
}

TEST_CASE("extraction is independent of the thread count") {
  const auto& spec = find_spec("well1024a");
  CHECK(extract_transition_matrix(spec, 1) == extract_transition_matrix(spec, 3));
}

TEST_CASE("MT19937 transition matrix carries the word shift") {
  const auto& spec = find_spec("mt19937");
  const auto b = extract_transition_matrix(spec);
  REQUIRE(b.rows() == 19937);
  // Word of age j moves to age j+1: identity blocks below the first block row.
  bool ok = true;
  for (unsigned j = 0; j + 2 < spec.n && ok; ++j)
    for (unsigned bit = 0; bit < spec.w && ok; ++bit) {
      const std::size_t row = (j + 1) * spec.w + bit, col = j * spec.w + bit;
      ok = b.get(row, col) && b.get_row(row).popcount() == 1;
    }
  CHECK(ok);
}

TEST_CASE("nonzero block counts") {
  auto count = [](const char* name) {
    const auto& spec = find_spec(name);
    return nonzero_block_count(spec, extract_transition_matrix(spec));
  };
  CHECK(count("mt19937") == 2);
  CHECK(count("mt19937-64id1") == 2);
  CHECK(count("mt19937-64id3") == 4);
  CHECK(count("well607b") == 4);
  CHECK(count("well1024a") == 5);
  // The lung is counted as one block, so MELG shows twist + m + lung.
  CHECK(count("melg607") == 3);
}
