#include "generators/generator.hpp"

#include "common/error.hpp"

namespace f2s {

Generator::Generator(const GeneratorSpec& spec) : spec_(&spec), buf_(spec.n, 0) {
  const std::uint64_t wm = spec.word_mask();
  lower_mask_ = spec.r == 0 ? 0 : (std::uint64_t{1} << spec.r) - 1;
  upper_mask_ = wm & ~lower_mask_;
}

Generator::Generator(const GeneratorSpec& spec, std::uint64_t s) : Generator(spec) { seed(s); }

void Generator::seed(std::uint64_t s) {
  const GeneratorSpec& sp = *spec_;
  cursor_ = 0;
  lung_ = 0;
  if (sp.w == 32) {
    // init_genrand of the 32-bit reference code
    std::uint32_t x = static_cast<std::uint32_t>(s);
    buf_[0] = x;
    for (unsigned i = 1; i < sp.n; ++i) {
      x = 1812433253u * (x ^ (x >> 30)) + i;
      buf_[i] = x;
    }
  } else {
    std::uint64_t x = s;
    buf_[0] = x;
    for (unsigned i = 1; i < sp.n; ++i) {
      x = 6364136223846793005ULL * (x ^ (x >> 62)) + i;
      buf_[i] = x;
    }
    if (sp.has_lung) lung_ = 6364136223846793005ULL * (x ^ (x >> 62)) + sp.n;
  }
}

std::uint64_t Generator::temper_mt(std::uint64_t y) const {
  const GeneratorSpec& s = *spec_;
  const std::uint64_t wm = s.word_mask();
  y ^= (y >> s.temper_u) & s.temper_d;
  y ^= (y << s.temper_s) & s.temper_b & wm;
  y ^= (y << s.temper_t) & s.temper_c & wm;
  y ^= y >> s.temper_l;
  return y;
}

std::uint32_t Generator::well_apply(const WellTransform& t, std::uint32_t v) const {
  switch (t.kind) {
    case WellTransform::M0: return 0;
    case WellTransform::M1: return v;
    case WellTransform::M2: return t.shift > 0 ? v >> t.shift : v << -t.shift;
    case WellTransform::M3: return v ^ (t.shift > 0 ? v >> t.shift : v << -t.shift);
  }
  return 0;
}

std::uint64_t Generator::step_mt() {
  const GeneratorSpec& s = *spec_;
  const unsigned n = s.n;
  const unsigned c = cursor_;
  auto at = [&](unsigned off) { unsigned i = c + off; return buf_[i >= n ? i - n : i]; };
  const std::uint64_t y = (buf_[c] & upper_mask_) | (at(1) & lower_mask_);
  std::uint64_t v = at(s.m) ^ (y >> 1) ^ ((y & 1) ? s.a : 0);
  for (unsigned t : s.taps) v ^= at(t);
  buf_[c] = v;
  cursor_ = c + 1 == n ? 0 : c + 1;
  return v;
}

std::uint64_t Generator::step_well() {
  const GeneratorSpec& s = *spec_;
  const unsigned n = s.n;
  const unsigned c = cursor_;
  auto V = [&](unsigned off) { unsigned i = c + off; return static_cast<std::uint32_t>(buf_[i >= n ? i - n : i]); };
  const auto& T = s.transforms;
  const std::uint32_t lo = static_cast<std::uint32_t>(lower_mask_);
  const std::uint32_t z0 = (V(n - 1) & ~lo) | (V(n - 2) & lo);
  const std::uint32_t z1 = well_apply(T[0], V(0)) ^ well_apply(T[1], V(s.m1));
  const std::uint32_t z2 = well_apply(T[2], V(s.m2)) ^ well_apply(T[3], V(s.m3));
  const std::uint32_t z3 = z1 ^ z2;
  const std::uint32_t z4 = well_apply(T[4], z0) ^ well_apply(T[5], z1) ^ well_apply(T[6], z2) ^ well_apply(T[7], z3);
  buf_[c] = z3;
  cursor_ = c == 0 ? n - 1 : c - 1;
  buf_[cursor_] = z4;
  return z4;
}

std::uint64_t Generator::step_melg() {
  const GeneratorSpec& s = *spec_;
  const unsigned n = s.n;
  const unsigned c = cursor_;
  auto at = [&](unsigned off) { unsigned i = c + off; return buf_[i >= n ? i - n : i]; };
  const std::uint64_t x = (buf_[c] & upper_mask_) | (at(1) & lower_mask_);
  lung_ = (x >> 1) ^ ((x & 1) ? s.a : 0) ^ at(s.m) ^ lung_ ^ (lung_ << s.sigma1);
  const std::uint64_t v = x ^ lung_ ^ (lung_ >> s.sigma2);
  buf_[c] = v;
  const std::uint64_t out = v ^ (v << s.shift) ^ (at(s.lag) & s.mask);
  cursor_ = c + 1 == n ? 0 : c + 1;
  return out;
}

void Generator::step() {
  switch (spec_->family) {
    case Family::WELL: step_well(); break;
    case Family::MELG: step_melg(); break;
    default: step_mt(); break;
  }
}

std::uint64_t Generator::next_word() {
  switch (spec_->family) {
    case Family::WELL: return step_well();
    case Family::MELG: return step_melg();
    default: return temper_mt(step_mt());
  }
}

double Generator::next_real() {
  constexpr double inv53 = 1.0 / 9007199254740992.0;
  if (spec_->w == 64) return static_cast<double>(next_word() >> 11) * inv53;
  const std::uint64_t a = next_word() >> 5;
  const std::uint64_t b = next_word() >> 6;
  return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) * inv53;
}

std::size_t Generator::slot_of_age(unsigned age) const {
  const unsigned n = spec_->n;
  if (spec_->family == Family::WELL) return (cursor_ + age) % n;
  // MT and MELG: the cursor marks the oldest word, the newest sits just before it.
  return (cursor_ + 2 * n - 1 - age) % n;
}

std::uint64_t Generator::word_by_age(unsigned age) const {
  if (age >= spec_->n) fail(ErrorCode::InvalidArgument, "word age out of range");
  return buf_[slot_of_age(age)];
}

BitVector Generator::get_raw_state() const {
  const GeneratorSpec& s = *spec_;
  BitVector v(s.k);
  BitWriter out(v);
  for (unsigned age = 0; age + 1 < s.n; ++age) out.put(buf_[slot_of_age(age)], s.w);
  out.put(buf_[slot_of_age(s.n - 1)] >> s.r, s.w - s.r);
  if (s.has_lung) out.put(lung_, s.w);
  return v;
}

void Generator::set_raw_state(const BitVector& bits) {
  const GeneratorSpec& s = *spec_;
  if (bits.size() != s.k)
    fail(ErrorCode::DimensionMismatch,
         "raw state has " + std::to_string(bits.size()) + " bits, spec " + s.name + " needs " + std::to_string(s.k));
  cursor_ = 0;
  BitReader in(bits);
  for (unsigned age = 0; age + 1 < s.n; ++age) buf_[slot_of_age(age)] = in.take(s.w);
  buf_[slot_of_age(s.n - 1)] = in.take(s.w - s.r) << s.r;
  lung_ = s.has_lung ? in.take(s.w) : 0;
}

std::vector<std::uint64_t> Generator::reference_words() const {
  std::vector<std::uint64_t> out(spec_->n);
  for (unsigned i = 0; i < spec_->n; ++i) out[i] = buf_[(cursor_ + i) % spec_->n];
  return out;
}

void Generator::load_reference_words(const std::vector<std::uint64_t>& words, std::uint64_t lung) {
  const GeneratorSpec& s = *spec_;
  if (words.size() != s.n)
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(s.n) + " state words, got " + std::to_string(words.size()));
  for (auto w : words)
    if (w & ~s.word_mask()) fail(ErrorCode::InvalidArgument, "state word wider than the generator word size");
  buf_ = words;
  cursor_ = 0;
  lung_ = s.has_lung ? lung : 0;
}

BitVector raw_step(const GeneratorSpec& spec, const BitVector& state) {
  Generator g(spec);
  g.set_raw_state(state);
  g.step();
  return g.get_raw_state();
}

}  // namespace f2s
