#pragma once

#include <cstdint>
#include <vector>

#include "bitlinalg/bitvector.hpp"
#include "generators/spec.hpp"

namespace f2s {

// Running instance of a bundled generator. Internally a circular word buffer
// with a cursor, laid out exactly like the family's reference code so that
// reference seed dumps load verbatim.
//
// Canonical k-bit raw state: words ordered newest first, each word most
// significant bit first; the oldest word contributes only its top w - r bits;
// the MELG lung comes last.
class Generator {
 public:
  Generator(const GeneratorSpec& spec, std::uint64_t seed);
  explicit Generator(const GeneratorSpec& spec);  // all-zero state

  const GeneratorSpec& spec() const noexcept { return *spec_; }

  void seed(std::uint64_t s);
  void step();
  std::uint64_t next_word();
  double next_real();

  BitVector get_raw_state() const;
  void set_raw_state(const BitVector& bits);

  // Words in reference array order, cursor rotated to zero.
  std::vector<std::uint64_t> reference_words() const;
  std::uint64_t lung() const noexcept { return lung_; }
  void load_reference_words(const std::vector<std::uint64_t>& words, std::uint64_t lung);

  // Words indexed by age, 0 = newest.
  std::uint64_t word_by_age(unsigned age) const;

 private:
  std::uint64_t step_mt();
  std::uint64_t step_well();
  std::uint64_t step_melg();
  std::uint64_t temper_mt(std::uint64_t y) const;
  std::uint32_t well_apply(const WellTransform& t, std::uint32_t v) const;
  std::size_t slot_of_age(unsigned age) const;

  const GeneratorSpec* spec_;
  std::vector<std::uint64_t> buf_;
  unsigned cursor_ = 0;
  std::uint64_t lung_ = 0;
  std::uint64_t upper_mask_ = 0;  // top w - r bits
  std::uint64_t lower_mask_ = 0;  // low r bits
};

// One application of the transition map B to a canonical state.
BitVector raw_step(const GeneratorSpec& spec, const BitVector& state);

}  // namespace f2s
