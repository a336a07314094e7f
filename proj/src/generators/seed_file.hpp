#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "generators/generator.hpp"

namespace f2s {

// One hex word per line in reference array order (cursor at zero); for MELG a
// final "lung=<hex>" line. '#' lines are comments.
struct SeedFile {
  std::vector<std::uint64_t> words;
  std::uint64_t lung = 0;
  bool has_lung = false;
};

SeedFile read_seed_file(std::istream& in);
SeedFile read_seed_file(const std::string& path);
void write_seed_file(const Generator& g, std::ostream& out, const std::string& comment = {});

Generator generator_from_seed_file(const GeneratorSpec& spec, const SeedFile& seed);

}  // namespace f2s
