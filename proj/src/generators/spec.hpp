#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace f2s {

enum class Family { MT32, MT64_ID1, MT64_ID3, WELL, MELG };
enum class InitScheme { reference_knuth_style, raw };

const char* family_name(Family f);

// One of the eight WELL transform kinds: M0 = 0, M1 = identity,
// M2(t) = shift, M3(t) = v ^ shift(v). Positive t shifts right.
struct WellTransform {
  enum Kind { M0, M1, M2, M3 } kind = M0;
  int shift = 0;
};

struct GeneratorSpec {
  Family family = Family::MT32;
  std::string name;
  unsigned w = 32;
  unsigned n = 0;  // words in the rotating array (MELG lung not included)
  unsigned m = 0;
  unsigned r = 0;  // masked low bits of the oldest word
  unsigned k = 0;
  std::uint64_t a = 0;
  std::vector<unsigned> taps;  // extra offsets XORed into the new word (MT64 ID3)

  // MT tempering
  unsigned temper_u = 0, temper_s = 0, temper_t = 0, temper_l = 0;
  std::uint64_t temper_d = 0, temper_b = 0, temper_c = 0;

  // WELL
  unsigned m1 = 0, m2 = 0, m3 = 0;
  std::array<WellTransform, 8> transforms{};

  // MELG
  unsigned sigma1 = 0, sigma2 = 0, lag = 0, shift = 0;
  std::uint64_t mask = 0;

  bool has_lung = false;
  InitScheme init_scheme = InitScheme::reference_knuth_style;

  std::uint64_t word_mask() const { return w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1; }
  bool is_mt() const { return family == Family::MT32 || family == Family::MT64_ID1 || family == Family::MT64_ID3; }
};

// Parses the key=value parameter format; '#' starts a comment.
GeneratorSpec parse_spec(const std::string& text);

const std::vector<GeneratorSpec>& bundled_specs();
const GeneratorSpec& find_spec(const std::string& name);

namespace detail {
const std::vector<std::pair<std::string, std::string>>& bundled_spec_texts();
}

}  // namespace f2s
