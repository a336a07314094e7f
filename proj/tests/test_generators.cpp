#include <cstdint>
#include <random>
#include <sstream>
#include <vector>

#include "common/error.hpp"
#include "doctest.h"
#include "generators/generator.hpp"
#include "generators/seed_file.hpp"

using namespace f2s;

namespace {

std::vector<std::uint64_t> first_words(const char* name, std::uint64_t seed, int count) {
  Generator g(find_spec(name), seed);
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(g.next_word());
  return out;
}

}  // namespace

TEST_CASE("MT19937 and MT19937-64 ID1 match the standard library engines") {
  Generator mt(find_spec("mt19937"), 5489);
  std::mt19937 ref32(5489);
  Generator mt64(find_spec("mt19937-64id1"), 5489);
  std::mt19937_64 ref64(5489);
  bool ok = true;
  for (int i = 0; i < 20000; ++i) {
    ok = ok && mt.next_word() == ref32();
    ok = ok && mt64.next_word() == ref64();
  }
  CHECK(ok);
}

TEST_CASE("frozen first outputs") {
  using V = std::vector<std::uint64_t>;
  CHECK(first_words("well607b", 1, 3) == V{0xca5fdfd3, 0x7f56d3f0, 0x22bd0a38});
  CHECK(first_words("well1024a", 1, 3) == V{0x89a961fc, 0xae3b8968, 0xe48c53b5});
  CHECK(first_words("well19937a", 1, 3) == V{0x23927bf8, 0xcc1d0667, 0x4f38e9b5});
  CHECK(first_words("melg607", 1, 3) == V{0x7feaa6e777ee5fb4, 0xcc47d37b05a4f584, 0xb2f0909dd36e9063});
  CHECK(first_words("melg19937", 1, 3) == V{0x2f3854c0febe5959, 0x1fb331abbcd195fa, 0x5d16213b0b9116e5});
  CHECK(first_words("mt19937-64id3", 5489, 3) == V{0xd2ffd9be39827ba1, 0x122d503d83dbd3cf, 0xc76e9dd6cd3e19e7});
}

TEST_CASE("next_real follows the 53-bit conversions") {
  Generator mt(find_spec("mt19937"), 42);
  std::mt19937 ref32(42);
  Generator mt64(find_spec("mt19937-64id1"), 42);
  std::mt19937_64 ref64(42);
  for (int i = 0; i < 1000; ++i) {
    const double a = static_cast<double>(ref32() >> 5), b = static_cast<double>(ref32() >> 6);
    CHECK(mt.next_real() == (a * 67108864.0 + b) / 9007199254740992.0);
    CHECK(mt64.next_real() == static_cast<double>(ref64() >> 11) / 9007199254740992.0);
  }
  for (const auto& spec : bundled_specs()) {
    Generator g(spec, 7);
    for (int i = 0; i < 1000; ++i) {
      const double x = g.next_real();
      REQUIRE(x >= 0.0);
      REQUIRE(x < 1.0);
    }
  }
}

TEST_CASE("raw state round trip") {
  std::mt19937_64 rng(101);
  for (const auto& spec : bundled_specs()) {
    CAPTURE(spec.name);
    Generator g(spec);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
      const auto x = BitVector::random(spec.k, rng);
      g.set_raw_state(x);
      ok = ok && g.get_raw_state() == x;
    }
    CHECK(ok);

    // Reading back after stepping matches raw_step on the canonical state.
    const auto x = BitVector::random(spec.k, rng);
    g.set_raw_state(x);
    g.step();
    CHECK(g.get_raw_state() == raw_step(spec, x));
  }
}

TEST_CASE("zero is a fixed point and the step is linear") {
  std::mt19937_64 rng(202);
  for (const auto& spec : bundled_specs()) {
    CAPTURE(spec.name);
    const BitVector zero(spec.k);
    CHECK(raw_step(spec, zero) == zero);
    for (int i = 0; i < 20; ++i) {
      const auto x = BitVector::random(spec.k, rng);
      const auto y = BitVector::random(spec.k, rng);
      CHECK(raw_step(spec, x ^ y) == (raw_step(spec, x) ^ raw_step(spec, y)));
    }
  }
}

TEST_CASE("consecutive words") {
  // MT: the word of age j becomes the word of age j+1. WELL rewrites two words
  // per step, so the shift fails somewhere; MELG also moves the lung.
  for (const auto& spec : bundled_specs()) {
    CAPTURE(spec.name);
    Generator g(spec, 99);
    bool shifted = true;
    bool lung_moved = false;
    for (int s = 0; s < 50; ++s) {
      std::vector<std::uint64_t> before;
      for (unsigned j = 0; j + 1 < spec.n; ++j) before.push_back(g.word_by_age(j));
      const auto lung = g.lung();
      g.step();
      for (unsigned j = 0; j + 2 < spec.n; ++j) shifted = shifted && g.word_by_age(j + 1) == before[j];
      lung_moved = lung_moved || g.lung() != lung;
    }
    if (spec.is_mt()) CHECK(shifted);
    if (spec.family == Family::WELL) CHECK_FALSE(shifted);
    if (spec.has_lung) CHECK(lung_moved);
  }
}

TEST_CASE("state dimensions") {
  CHECK(find_spec("mt19937").k == 19937);
  CHECK(find_spec("mt19937-64id1").k == 19937);
  CHECK(find_spec("mt19937-64id3").k == 19937);
  CHECK(find_spec("well607b").k == 607);
  CHECK(find_spec("well1024a").k == 1024);
  CHECK(find_spec("well19937a").k == 19937);
  CHECK(find_spec("melg607").k == 607);
  CHECK(find_spec("melg19937").k == 19937);
  CHECK(bundled_specs().size() == 8);
}

TEST_CASE("spec lookup and parsing errors") {
  CHECK(find_spec("WELL607B").name == "well607b");
  try {
    find_spec("nosuchgen");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSpec);
  }
  CHECK_THROWS_AS(parse_spec("name = x\nfamily = NOPE\n"), Error);
  CHECK_THROWS_AS(parse_spec("just some words\n"), Error);
  CHECK_THROWS_AS(parse_spec("name = x\nfamily = MT32\nw = abc\n"), Error);
}

TEST_CASE("seed file round trip") {
  for (const char* name : {"well607b", "melg607", "mt19937"}) {
    CAPTURE(name);
    const auto& spec = find_spec(name);
    Generator g(spec, 31337);
    for (int i = 0; i < 17; ++i) g.step();  // move the cursor off zero
    std::stringstream io;
    write_seed_file(g, io, "test");
    auto h = generator_from_seed_file(spec, read_seed_file(io));
    CHECK(h.get_raw_state() == g.get_raw_state());
    bool ok = true;
    for (int i = 0; i < 100; ++i) ok = ok && h.next_word() == g.next_word();
    CHECK(ok);
  }
}

TEST_CASE("seed file errors") {
  std::istringstream no_lung("0123\n4567\n");
  CHECK_THROWS_AS(generator_from_seed_file(find_spec("melg607"), read_seed_file(no_lung)), Error);
  std::istringstream extra_lung("0123\nlung=1\n");
  CHECK_THROWS_AS(generator_from_seed_file(find_spec("well607b"), read_seed_file(extra_lung)), Error);
  std::istringstream junk("zz\n");
  CHECK_THROWS_AS(read_seed_file(junk), Error);
  std::istringstream short_file("1\n2\n");
  CHECK_THROWS_AS(generator_from_seed_file(find_spec("well607b"), read_seed_file(short_file)), Error);
}

TEST_CASE("bundled bad seeds load") {
  for (const char* name : {"melg19937", "well19937a"}) {
    const auto& spec = find_spec(name);
    auto g = generator_from_seed_file(spec, read_seed_file(std::string(F2S_DATA_DIR) + "/seeds/" + name + "_bad.txt"));
    CHECK(g.get_raw_state().popcount() > 0);
  }
}

TEST_CASE("MELG seeding fills the lung") {
  Generator g(find_spec("melg607"), 1);
  CHECK(g.lung() != 0);
}
