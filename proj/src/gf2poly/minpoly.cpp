#include "gf2poly/minpoly.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "common/error.hpp"
#include "generators/generator.hpp"

namespace f2s {

std::vector<std::uint8_t> output_bit_sequence(const GeneratorSpec& spec, std::uint64_t seed, std::size_t length,
                                              unsigned bit) {
  if (bit >= spec.w) fail(ErrorCode::InvalidArgument, "output bit index exceeds word size");
  Generator g(spec, seed);
  std::vector<std::uint8_t> seq(length);
  for (auto& s : seq) s = static_cast<std::uint8_t>((g.next_word() >> bit) & 1u);
  return seq;
}

GF2Poly compute_minpoly(const GeneratorSpec& spec, std::uint64_t seed) {
  return berlekamp_massey(output_bit_sequence(spec, seed, 2 * static_cast<std::size_t>(spec.k) + 64));
}

void write_minpoly_file(std::ostream& out, const MinpolyFile& f) {
  out << "# minimal polynomial over GF(2), hex, highest coefficient first\n";
  out << "spec=" << f.spec << '\n';
  out << "seed=" << f.seed << '\n';
  out << "degree=" << f.poly.degree() << '\n';
  out << "weight=" << f.poly.weight() << '\n';
  out << "hex=" << f.poly.to_hex() << '\n';
  if (!out) fail(ErrorCode::Io, "failed writing minimal polynomial");
}

MinpolyFile read_minpoly_file(std::istream& in) {
  MinpolyFile f;
  std::string line;
  long degree = -2;
  bool have_hex = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::Parse, "minpoly file: expected key=value");
    const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "spec")
      f.spec = value;
    else if (key == "seed")
      f.seed = std::stoull(value);
    else if (key == "degree")
      degree = std::stol(value);
    else if (key == "hex") {
      f.poly = GF2Poly::from_hex(value);
      have_hex = true;
    }
  }
  if (!have_hex) fail(ErrorCode::Parse, "minpoly file has no hex= line");
  if (degree != -2 && degree != f.poly.degree()) fail(ErrorCode::Parse, "minpoly file degree does not match its coefficients");
  return f;
}

GF2Poly cached_minpoly(const GeneratorSpec& spec, const std::string& cache_dir) {
  static std::mutex mutex;
  static std::map<std::string, GF2Poly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(spec.name); it != memo.end()) return it->second;
  }
  std::string dir = cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("F2SPECTRA_CACHE_DIR")) dir = env;

  GF2Poly poly;
  bool loaded = false;
  std::filesystem::path path;
  if (!dir.empty()) {
    path = std::filesystem::path(dir) / (spec.name + ".minpoly");
    std::ifstream in(path);
    if (in) {
      MinpolyFile f = read_minpoly_file(in);
      if (f.spec == spec.name && f.seed == kMinpolySeed && f.poly.degree() == static_cast<long>(spec.k)) {
        poly = f.poly;
        loaded = true;
      }
    }
  }
  if (!loaded) {
    poly = compute_minpoly(spec);
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      std::ofstream out(path);
      if (out) write_minpoly_file(out, {spec.name, kMinpolySeed, poly});
    }
  }
  std::lock_guard lock(mutex);
  memo.emplace(spec.name, poly);
  return poly;
}

}  // namespace f2s
