#include "generators/seed_file.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

#include "common/error.hpp"

namespace f2s {

namespace {

std::uint64_t parse_hex_word(const std::string& s, int lineno) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || s.size() > 16 || ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorCode::Parse, "seed file line " + std::to_string(lineno) + ": expected a hex word, got '" + s + "'");
  return v;
}

}  // namespace

SeedFile read_seed_file(std::istream& in) {
  SeedFile out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    if (out.has_lung) fail(ErrorCode::Parse, "seed file line " + std::to_string(lineno) + ": data after the lung line");
    if (line.rfind("lung=", 0) == 0) {
      out.lung = parse_hex_word(line.substr(5), lineno);
      out.has_lung = true;
      continue;
    }
    if (line.rfind("0x", 0) == 0) line = line.substr(2);
    out.words.push_back(parse_hex_word(line, lineno));
  }
  return out;
}

SeedFile read_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open seed file '" + path + "'");
  return read_seed_file(in);
}

void write_seed_file(const Generator& g, std::ostream& out, const std::string& comment) {
  const GeneratorSpec& s = g.spec();
  if (!comment.empty()) out << "# " << comment << '\n';
  const int digits = static_cast<int>(s.w / 4);
  out << std::hex << std::setfill('0');
  for (auto w : g.reference_words()) out << std::setw(digits) << w << '\n';
  if (s.has_lung) out << "lung=" << std::setw(digits) << g.lung() << '\n';
  out << std::dec;
  if (!out) fail(ErrorCode::Io, "failed writing seed file");
}

Generator generator_from_seed_file(const GeneratorSpec& spec, const SeedFile& seed) {
  if (spec.has_lung != seed.has_lung)
    fail(ErrorCode::Parse, spec.has_lung ? "seed file for " + spec.name + " needs a lung= line"
                                         : "seed file has a lung line but " + spec.name + " has no lung");
  Generator g(spec);
  g.load_reference_words(seed.words, seed.lung);
  return g;
}

}  // namespace f2s
