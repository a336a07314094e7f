#pragma once

#include "bitlinalg/bitmatrix.hpp"
#include "generators/spec.hpp"

namespace f2s {

// Row i of the probe matrix is raw_step(e_i), i.e. column i of B. This is the
// order in which the matrix text file is written.
BitMatrix extract_probe_matrix(const GeneratorSpec& spec, unsigned threads = 0);

// B itself: raw_step(x) = B x for every canonical state x.
BitMatrix extract_transition_matrix(const GeneratorSpec& spec, unsigned threads = 0);

// Number of nonzero w-wide column blocks feeding the newest word (and the lung
// for MELG). The masked oldest word and its successor count as one block.
unsigned nonzero_block_count(const GeneratorSpec& spec, const BitMatrix& b);

}  // namespace f2s
