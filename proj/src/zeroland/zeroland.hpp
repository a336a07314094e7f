#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "generators/seed_file.hpp"
#include "generators/spec.hpp"

namespace f2s {

inline unsigned hamming(std::uint64_t word) { return static_cast<unsigned>(__builtin_popcountll(word)); }

// gamma_{n,p} over an ensemble of initial states. Iterations are normalized to
// 32-bit words: a 64-bit generator step counts twice and its window holds p/2 steps.
struct ZerolandTrace {
  std::vector<double> values;  // values[i]: window over outputs i+1 .. i+raw_p
  unsigned p = 0;              // normalized window length
  unsigned raw_p = 0;          // window length in generator steps
  std::size_t k_ensemble = 0;
  unsigned w = 0;
  unsigned normalization = 1;
  double sigma = 0;  // 1 / sqrt(4 p k w)

  long long normalized_n(std::size_t index) const { return static_cast<long long>(index) * normalization; }
};

// Builds the trace from per-step sums of output Hamming weights over the ensemble.
ZerolandTrace trace_from_weight_sums(const std::vector<std::uint64_t>& sums, unsigned p, std::size_t k_ensemble,
                                     unsigned w);

// Ensemble of the k unit vectors e_j; max_n is in normalized iterations.
ZerolandTrace unit_seed_sweep(const GeneratorSpec& spec, unsigned p, unsigned max_n, unsigned threads = 0);

ZerolandTrace replay_seed(const GeneratorSpec& spec, const SeedFile& seed, unsigned p, unsigned max_n);
ZerolandTrace replay_state(const GeneratorSpec& spec, const BitVector& raw_state, unsigned p, unsigned max_n);

// Smallest normalized n whose windows n..n+p all lie in 0.5 +- band_sigmas*sigma.
std::optional<long long> balanced_time(const ZerolandTrace& t, double band_sigmas);

// Smallest normalized n whose window lies in the band, with no persistence requirement.
std::optional<long long> band_entry_time(const ZerolandTrace& t, double band_sigmas);

struct TraceMinimum {
  long long n = 0;
  double gamma = 0;
};
TraceMinimum trace_minimum(const ZerolandTrace& t);

// Columns: n, gamma, sigma_band_low, sigma_band_high.
void write_trace_csv(const ZerolandTrace& t, std::ostream& out, double band_sigmas = 2.0);

}  // namespace f2s
