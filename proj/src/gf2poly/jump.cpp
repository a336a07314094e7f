#include "gf2poly/jump.hpp"

#include "common/error.hpp"
#include "gf2poly/minpoly.hpp"

namespace f2s {

namespace {

constexpr unsigned kLargeDimension = 4096;

const GF2Poly& checked_minpoly(const GeneratorSpec& spec, GF2Poly& storage) {
  storage = cached_minpoly(spec);
  if (storage.degree() != static_cast<long>(spec.k))
    fail(ErrorCode::Numeric, "minimal polynomial of " + spec.name + " has degree " + std::to_string(storage.degree()) +
                                 ", expected " + std::to_string(spec.k));
  return storage;
}

}  // namespace

void apply_polynomial(Generator& g, const GF2Poly& p) {
  const BitVector x = g.get_raw_state();
  BitVector acc(x.size());
  for (long i = p.degree(); i >= 0; --i) {
    g.set_raw_state(acc);
    g.step();
    acc = g.get_raw_state();
    if (p.coeff(static_cast<std::size_t>(i))) acc ^= x;
  }
  g.set_raw_state(acc);
}

BigUint period(const GeneratorSpec& spec) { return BigUint::pow2(spec.k) - BigUint(1); }

void jump_back(Generator& g, const BigUint& d) {
  GF2Poly storage;
  const GF2Poly& phi = checked_minpoly(g.spec(), storage);
  if (!phi.coeff(0)) fail(ErrorCode::Numeric, "minimal polynomial has zero constant term; B is singular");
  const GF2Poly t_inv = phi.shifted_down(1);
  apply_polynomial(g, powmod(t_inv, d, phi));
}

void jump_ahead(Generator& g, const BigUint& J, bool extended) {
  if (J.is_zero()) return;
  const GeneratorSpec& spec = g.spec();
  const BigUint P = period(spec);
  if (!extended && spec.k > kLargeDimension && J.bit_length() > 64) {
    if (J <= P && (P - J).bit_length() <= 64) {
      jump_back(g, P - J);
      return;
    }
    fail(ErrorCode::LimitExceeded, "jump distance of " + std::to_string(J.bit_length()) + " bits on " + spec.name +
                                       " requires extended mode");
  }
  GF2Poly storage;
  const GF2Poly& phi = checked_minpoly(spec, storage);
  apply_polynomial(g, powmod(GF2Poly::monomial(1), J, phi));
}

BitVector find_low_weight_state(const GeneratorSpec& spec, const BigUint& d, bool extended) {
  const BigUint P = period(spec);
  if (d >= P) fail(ErrorCode::InvalidArgument, "d must be below the period 2^k - 1");
  Generator g(spec);
  g.set_raw_state(BitVector::unit(spec.k, 0));
  const BigUint J = P - d;
  if (!extended && spec.k > kLargeDimension && J.bit_length() > 64)
    jump_back(g, d);  // same state, since B^P = I on a full-period generator
  else
    jump_ahead(g, J, extended);
  return g.get_raw_state();
}

}  // namespace f2s
