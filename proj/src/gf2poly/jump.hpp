#pragma once

#include "bitlinalg/bitvector.hpp"
#include "generators/generator.hpp"
#include "gf2poly/biguint.hpp"
#include "gf2poly/gf2poly.hpp"

namespace f2s {

// Replaces the state x by p(B) x, Horner-style with single raw steps.
void apply_polynomial(Generator& g, const GF2Poly& p);

// 2^k - 1
BigUint period(const GeneratorSpec& spec);

// Advances by J steps via t^J mod minpoly. For k > 4096 an exponent wider than
// 64 bits is refused unless `extended`, except when J is within 2^64 of the
// period, where the cheap backward route t^{-(P-J)} is taken instead.
void jump_ahead(Generator& g, const BigUint& J, bool extended = false);

// Moves back by d steps using t^{-1} = (minpoly - 1) / t. Needs a full-period spec.
void jump_back(Generator& g, const BigUint& d);

// Raw state reached from e_1 (canonical bit 0) after P - d steps, i.e. d steps
// before returning to e_1.
BitVector find_low_weight_state(const GeneratorSpec& spec, const BigUint& d, bool extended = false);

}  // namespace f2s
