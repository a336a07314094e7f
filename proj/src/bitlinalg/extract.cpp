#include "bitlinalg/extract.hpp"

#include <algorithm>
#include <set>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "generators/generator.hpp"

namespace f2s {

BitMatrix extract_probe_matrix(const GeneratorSpec& spec, unsigned threads) {
  const std::size_t k = spec.k;
  BitMatrix probe(k, k);
  parallel_for(k, resolve_threads(threads), [&](std::size_t begin, std::size_t end, unsigned) {
    Generator g(spec);
    BitVector e(k);
    for (std::size_t i = begin; i < end; ++i) {
      e.set(i, true);
      g.set_raw_state(e);
      g.step();
      probe.set_row(i, g.get_raw_state());
      e.set(i, false);
    }
  });
  return probe;
}

BitMatrix extract_transition_matrix(const GeneratorSpec& spec, unsigned threads) {
  return extract_probe_matrix(spec, threads).transpose();
}

unsigned nonzero_block_count(const GeneratorSpec& spec, const BitMatrix& b) {
  if (b.rows() != spec.k || b.cols() != spec.k) fail(ErrorCode::DimensionMismatch, "matrix does not match spec dimension");
  // Column index -> block id. Ages 0..n-3 are their own blocks, ages n-2 and
  // n-1 (the twist pair) share one, the lung is last.
  const unsigned w = spec.w;
  const std::size_t twist_start = static_cast<std::size_t>(spec.n - 2) * w;
  const std::size_t lung_start = static_cast<std::size_t>(spec.n) * w - spec.r;
  auto block_of = [&](std::size_t col) -> std::size_t {
    if (col >= lung_start) return spec.n;
    if (col >= twist_start) return spec.n - 2;
    return col / w;
  };
  std::set<std::size_t> blocks;
  auto scan_rows = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i)
      for (std::size_t l = 0; l < b.stride(); ++l) {
        std::uint64_t word = b.row(i)[l];
        while (word) {
          blocks.insert(block_of(l * 64 + static_cast<std::size_t>(__builtin_ctzll(word))));
          word &= word - 1;
        }
      }
  };
  scan_rows(0, w);
  if (spec.has_lung) scan_rows(lung_start, spec.k);
  return static_cast<unsigned>(blocks.size());
}

}  // namespace f2s
