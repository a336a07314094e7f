#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "generators/spec.hpp"
#include "gf2poly/gf2poly.hpp"

namespace f2s {

constexpr std::uint64_t kMinpolySeed = 12345;

// Bit `bit` of successive tempered outputs of a seeded generator.
std::vector<std::uint8_t> output_bit_sequence(const GeneratorSpec& spec, std::uint64_t seed, std::size_t length,
                                              unsigned bit = 0);

// Berlekamp-Massey over 2k + 64 output bits.
GF2Poly compute_minpoly(const GeneratorSpec& spec, std::uint64_t seed = kMinpolySeed);

// Process-wide cache. With a non-empty cache_dir (or F2SPECTRA_CACHE_DIR set)
// the polynomial is also read from / written to <dir>/<spec>.minpoly.
GF2Poly cached_minpoly(const GeneratorSpec& spec, const std::string& cache_dir = {});

struct MinpolyFile {
  std::string spec;
  std::uint64_t seed = 0;
  GF2Poly poly;
};
void write_minpoly_file(std::ostream& out, const MinpolyFile& f);
MinpolyFile read_minpoly_file(std::istream& in);

}  // namespace f2s
