#include "zeroland/zeroland.hpp"

#include <cmath>
#include <ostream>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "generators/generator.hpp"

namespace f2s {

namespace {

unsigned normalization_of(unsigned w) { return w / 32; }

std::size_t raw_steps_for(unsigned max_n, unsigned norm) { return max_n / norm; }

void check_window(unsigned p, unsigned max_n, unsigned norm) {
  if (p < norm) fail(ErrorCode::InvalidArgument, "window p must be at least the normalization factor");
  if (max_n < p) fail(ErrorCode::InvalidArgument, "max_n must be at least p");
}

std::vector<std::uint64_t> run_weights(Generator& g, std::size_t steps) {
  std::vector<std::uint64_t> out(steps);
  for (auto& x : out) x = hamming(g.next_word());
  return out;
}

}  // namespace

ZerolandTrace trace_from_weight_sums(const std::vector<std::uint64_t>& sums, unsigned p, std::size_t k_ensemble,
                                     unsigned w) {
  const unsigned norm = normalization_of(w);
  if (norm == 0) fail(ErrorCode::InvalidArgument, "word size must be 32 or 64");
  ZerolandTrace t;
  t.p = p;
  t.raw_p = p / norm;
  if (t.raw_p == 0) fail(ErrorCode::InvalidArgument, "window p too small");
  t.k_ensemble = k_ensemble;
  t.w = w;
  t.normalization = norm;
  const double bits = static_cast<double>(t.raw_p) * static_cast<double>(k_ensemble) * w;
  t.sigma = 1.0 / std::sqrt(4.0 * bits);
  if (sums.size() < t.raw_p) return t;
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < t.raw_p; ++i) acc += sums[i];
  t.values.reserve(sums.size() - t.raw_p + 1);
  for (std::size_t i = 0;; ++i) {
    t.values.push_back(static_cast<double>(acc) / bits);
    if (i + t.raw_p >= sums.size()) break;
    acc += sums[i + t.raw_p];
    acc -= sums[i];
  }
  return t;
}

ZerolandTrace unit_seed_sweep(const GeneratorSpec& spec, unsigned p, unsigned max_n, unsigned threads) {
  const unsigned norm = normalization_of(spec.w);
  check_window(p, max_n, norm);
  const std::size_t steps = raw_steps_for(max_n, norm);
  const unsigned nthreads = resolve_threads(threads);
  std::vector<std::vector<std::uint64_t>> partial(nthreads, std::vector<std::uint64_t>(steps, 0));
  parallel_for(spec.k, nthreads, [&](std::size_t begin, std::size_t end, unsigned worker) {
    Generator g(spec);
    BitVector e(spec.k);
    auto& sums = partial[worker];
    for (std::size_t j = begin; j < end; ++j) {
      e.set(j, true);
      g.set_raw_state(e);
      e.set(j, false);
      for (std::size_t i = 0; i < steps; ++i) sums[i] += hamming(g.next_word());
    }
  });
  std::vector<std::uint64_t> total(steps, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < steps; ++i) total[i] += part[i];
  return trace_from_weight_sums(total, p, spec.k, spec.w);
}

ZerolandTrace replay_seed(const GeneratorSpec& spec, const SeedFile& seed, unsigned p, unsigned max_n) {
  const unsigned norm = normalization_of(spec.w);
  check_window(p, max_n, norm);
  Generator g = generator_from_seed_file(spec, seed);
  return trace_from_weight_sums(run_weights(g, raw_steps_for(max_n, norm)), p, 1, spec.w);
}

ZerolandTrace replay_state(const GeneratorSpec& spec, const BitVector& raw_state, unsigned p, unsigned max_n) {
  const unsigned norm = normalization_of(spec.w);
  check_window(p, max_n, norm);
  Generator g(spec);
  g.set_raw_state(raw_state);
  return trace_from_weight_sums(run_weights(g, raw_steps_for(max_n, norm)), p, 1, spec.w);
}

std::optional<long long> balanced_time(const ZerolandTrace& t, double band_sigmas) {
  if (t.values.empty()) fail(ErrorCode::InvalidArgument, "empty trace");
  const double lo = 0.5 - band_sigmas * t.sigma, hi = 0.5 + band_sigmas * t.sigma;
  const std::size_t need = static_cast<std::size_t>(t.raw_p) + 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    const double g = t.values[i];
    run = (g >= lo && g <= hi) ? run + 1 : 0;
    if (run == need) return t.normalized_n(i + 1 - need);
  }
  return std::nullopt;
}

std::optional<long long> band_entry_time(const ZerolandTrace& t, double band_sigmas) {
  if (t.values.empty()) fail(ErrorCode::InvalidArgument, "empty trace");
  const double lo = 0.5 - band_sigmas * t.sigma, hi = 0.5 + band_sigmas * t.sigma;
  for (std::size_t i = 0; i < t.values.size(); ++i)
    if (t.values[i] >= lo && t.values[i] <= hi) return t.normalized_n(i);
  return std::nullopt;
}

TraceMinimum trace_minimum(const ZerolandTrace& t) {
  if (t.values.empty()) fail(ErrorCode::InvalidArgument, "empty trace");
  std::size_t best = 0;
  for (std::size_t i = 1; i < t.values.size(); ++i)
    if (t.values[i] < t.values[best]) best = i;
  return {t.normalized_n(best), t.values[best]};
}

void write_trace_csv(const ZerolandTrace& t, std::ostream& out, double band_sigmas) {
  out.precision(12);
  const double lo = 0.5 - band_sigmas * t.sigma, hi = 0.5 + band_sigmas * t.sigma;
  out << "n,gamma,sigma_band_low,sigma_band_high\n";
  for (std::size_t i = 0; i < t.values.size(); ++i)
    out << t.normalized_n(i) << ',' << t.values[i] << ',' << lo << ',' << hi << '\n';
  if (!out) fail(ErrorCode::Io, "failed writing trace CSV");
}

}  // namespace f2s
