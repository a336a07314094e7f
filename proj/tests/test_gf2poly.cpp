#include <random>
#include <sstream>

#include "common/error.hpp"
#include "doctest.h"
#include "generators/generator.hpp"
#include "gf2poly/biguint.hpp"
#include "gf2poly/gf2poly.hpp"
#include "gf2poly/jump.hpp"
#include "gf2poly/minpoly.hpp"

using namespace f2s;

namespace {

GF2Poly random_poly(std::size_t degree, std::mt19937_64& rng) {
  GF2Poly p = GF2Poly::monomial(degree);
  for (std::size_t i = 0; i < degree; ++i)
    if (rng() & 1) p.set_coeff(i, true);
  return p;
}

// s_{j+L} = sum_{i<L} c_i s_{j+i}, so t^L + sum c_i t^i annihilates the sequence.
std::vector<std::uint8_t> lfsr(const GF2Poly& charpoly, std::vector<std::uint8_t> init, std::size_t len) {
  const auto L = static_cast<std::size_t>(charpoly.degree());
  while (init.size() < len) {
    std::uint8_t v = 0;
    for (std::size_t i = 0; i < L; ++i) v ^= charpoly.coeff(i) & init[init.size() - L + i];
    init.push_back(v);
  }
  return init;
}

bool annihilates(const GF2Poly& p, const std::vector<std::uint8_t>& s) {
  const auto L = static_cast<std::size_t>(p.degree());
  for (std::size_t j = 0; j + L < s.size(); ++j) {
    std::uint8_t v = 0;
    for (std::size_t i = 0; i <= L; ++i) v ^= p.coeff(i) & s[j + i];
    if (v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Berlekamp-Massey on small LFSRs") {
  const auto p = GF2Poly::from_coeff_string("1101");  // 1 + t + t^3, primitive
  CHECK(berlekamp_massey(lfsr(p, {1, 0, 0}, 40)) == p);
  CHECK(berlekamp_massey(std::vector<std::uint8_t>(30, 0)) == GF2Poly::one());

  // Against exhaustive search: no recurrence shorter than the one found annihilates the sequence.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = random_poly(1 + rng() % 8, rng);
    std::vector<std::uint8_t> init;
    for (long i = 0; i < q.degree(); ++i) init.push_back(rng() & 1);
    const auto s = lfsr(q, init, 40);
    const auto found = berlekamp_massey(s);
    CHECK(annihilates(found, s));
    CHECK(found.degree() <= q.degree());
    bool shorter = false;
    for (long d = 0; d < found.degree() && !shorter; ++d)
      for (std::uint64_t low = 0; low < (std::uint64_t{1} << d) && !shorter; ++low)
        shorter = annihilates(GF2Poly::from_limbs({low | (std::uint64_t{1} << d)}), s);
    CHECK_FALSE(shorter);
  }
}

TEST_CASE("basic polynomial arithmetic") {
  CHECK(GF2Poly::one().weight() == 1);
  CHECK(GF2Poly().degree() == -1);
  const auto p = GF2Poly::from_hex("1b");
  CHECK(p.degree() == 4);
  CHECK(p.to_hex() == "1b");
  CHECK(p + p == GF2Poly());
  CHECK(GF2Poly::monomial(70).shifted_down(70) == GF2Poly::one());
  CHECK(reciprocal(GF2Poly::from_coeff_string("1101"), 3) == GF2Poly::from_coeff_string("1011"));
}

TEST_CASE("Karatsuba, squaring and schoolbook agree") {
  std::mt19937_64 rng(5);
  for (std::size_t d : {1u, 63u, 64u, 65u, 700u, 3000u}) {
    const auto a = random_poly(d, rng);
    const auto b = random_poly(d + 17, rng);
    CHECK(mul(a, b, 64) == mul_schoolbook(a, b));
    CHECK(square(a) == mul_schoolbook(a, a));
  }
}

TEST_CASE("mod and powmod") {
  std::mt19937_64 rng(7);
  const auto phi = random_poly(8, rng);
  GF2Poly naive = GF2Poly::one();
  for (int i = 0; i < 37; ++i) naive = mod(mul_schoolbook(naive, GF2Poly::monomial(1)), phi);
  CHECK(powmod(GF2Poly::monomial(1), BigUint(37), phi) == naive);
  CHECK(powmod(GF2Poly::monomial(1), BigUint(5), GF2Poly::monomial(2)) == GF2Poly());
  CHECK(powmod(GF2Poly::monomial(1), BigUint(0), phi) == GF2Poly::one());
  const auto a = random_poly(300, rng);
  CHECK(mod(a, phi).degree() < 8);
  CHECK(mod(a + mul(phi, random_poly(50, rng)), phi) == mod(a, phi));
}

TEST_CASE("BigUint parsing") {
  CHECK(BigUint::parse("12345").to_u64() == 12345);
  CHECK(BigUint::parse("0xff").to_u64() == 255);
  CHECK(BigUint::parse("2^10").to_u64() == 1024);
  CHECK(BigUint::parse("2^10-1").to_u64() == 1023);
  CHECK(BigUint::parse("2^10+3").to_u64() == 1027);
  CHECK(BigUint::parse("2^200").bit_length() == 201);
  CHECK_THROWS_AS(BigUint::parse("12a"), Error);
  CHECK_THROWS_AS(BigUint::parse("-5"), Error);
  CHECK_THROWS_AS(BigUint(1) - BigUint(2), Error);
}

TEST_CASE("jump ahead matches stepping") {
  for (const char* name : {"well607b", "well1024a", "melg607"}) {
    CAPTURE(name);
    const auto& spec = find_spec(name);
    for (std::uint64_t J : {0ull, 1ull, 12345ull}) {
      Generator a(spec, 77), b(spec, 77);
      jump_ahead(a, BigUint(J));
      for (std::uint64_t i = 0; i < J; ++i) b.step();
      CHECK(a.get_raw_state() == b.get_raw_state());
    }
  }
}

TEST_CASE("jump back inverts jump ahead") {
  const auto& spec = find_spec("well607b");
  Generator g(spec, 5);
  const auto start = g.get_raw_state();
  jump_ahead(g, BigUint::parse("2^300+17"));
  jump_back(g, BigUint::parse("2^300+17"));
  CHECK(g.get_raw_state() == start);

  // A full period is the identity.
  jump_ahead(g, period(spec));
  CHECK(g.get_raw_state() == start);
}

TEST_CASE("low weight state one step before e_1") {
  const auto& spec = find_spec("well607b");
  const BigUint d = period(spec) - BigUint(1);  // 2^k - 2
  CHECK(find_low_weight_state(spec, d) == raw_step(spec, BitVector::unit(spec.k, 0)));

  Generator g(spec);
  g.set_raw_state(find_low_weight_state(spec, BigUint(100)));
  for (int i = 0; i < 100; ++i) g.step();
  CHECK(g.get_raw_state() == BitVector::unit(spec.k, 0));
}

TEST_CASE("large jumps need extended mode") {
  Generator g(find_spec("mt19937"), 5489);
  CHECK_THROWS_AS(jump_ahead(g, BigUint::parse("2^100")), Error);
}

TEST_CASE("minimal polynomials of the small generators") {
  for (const char* name : {"well607b", "melg607", "well1024a"}) {
    CAPTURE(name);
    const auto& spec = find_spec(name);
    const auto phi = cached_minpoly(spec);
    CHECK(phi.degree() == static_cast<long>(spec.k));
    // phi(B) annihilates every state.
    Generator g(spec, 9);
    apply_polynomial(g, phi);
    CHECK_FALSE(g.get_raw_state().any());
  }
  CHECK(cached_minpoly(find_spec("well607b")).weight() == 313);
  CHECK(cached_minpoly(find_spec("well1024a")).weight() == 407);
}

TEST_CASE("minpoly file round trip") {
  const auto phi = cached_minpoly(find_spec("well607b"));
  std::stringstream io;
  write_minpoly_file(io, {"well607b", kMinpolySeed, phi});
  const auto back = read_minpoly_file(io);
  CHECK(back.spec == "well607b");
  CHECK(back.seed == kMinpolySeed);
  CHECK(back.poly == phi);
  std::istringstream bad("spec=x\n");
  CHECK_THROWS_AS(read_minpoly_file(bad), Error);
}
