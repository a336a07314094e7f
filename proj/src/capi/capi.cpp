#include "f2spectra/f2spectra.h"

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "bitlinalg/extract.hpp"
#include "charpoly/verify.hpp"
#include "common/error.hpp"
#include "generators/generator.hpp"
#include "generators/seed_file.hpp"
#include "gf2poly/jump.hpp"
#include "gf2poly/minpoly.hpp"
#include "spectral/spectrum.hpp"
#include "zeroland/zeroland.hpp"

struct f2s_generator {
  f2s::Generator g;
};
struct f2s_matrix {
  f2s::BitMatrix m;
};
struct f2s_spectrum {
  f2s::Spectrum s;
};
struct f2s_poly {
  f2s::GF2Poly p;
};
struct f2s_trace {
  f2s::ZerolandTrace t;
};

namespace {

thread_local std::string g_last_error;

f2s_status set_error(f2s_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

// Runs body and converts any exception into a status plus message.
template <class F>
f2s_status guarded(F&& body) {
  try {
    body();
    return F2S_OK;
  } catch (const f2s::Error& e) {
    return set_error(static_cast<f2s_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(F2S_E_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return set_error(F2S_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(F2S_E_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* what) {
  if (!p) f2s::fail(f2s::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::string str_arg(const char* s, const char* what) {
  need(s, what);
  return s;
}

// Opens path for writing; "-" means stdout.
template <class F>
void with_output(const char* path, bool binary, F&& body) {
  const std::string p = str_arg(path, "path");
  if (p == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(p, binary ? std::ios::binary : std::ios::out);
  if (!out) f2s::fail(f2s::ErrorCode::Io, "cannot open '" + p + "' for writing");
  body(out);
  out.close();
  if (!out) f2s::fail(f2s::ErrorCode::Io, "failed writing '" + p + "'");
}

f2s::BitVector unpack_state(unsigned k, const std::uint64_t* limbs, std::size_t nlimbs) {
  need(limbs, "limbs");
  f2s::BitVector v(k);
  if (nlimbs != v.limb_count())
    f2s::fail(f2s::ErrorCode::DimensionMismatch,
              "expected " + std::to_string(v.limb_count()) + " limbs, got " + std::to_string(nlimbs));
  std::memcpy(v.data(), limbs, nlimbs * sizeof(std::uint64_t));
  v.clear_tail();
  return v;
}

f2s::EigenBackend backend_of(const char* name) {
  return name ? f2s::parse_backend(name) : f2s::default_backend();
}

void fill(f2s_identity_report* out, const f2s::IdentityReport& r) {
  out->configs = r.configs;
  out->matched = r.matched;
  out->plus_variant_differs = r.plus_variant_differs;
  out->plus_variant_agrees_mod2 = r.plus_variant_agrees_mod2;
  if (!r.passed()) {
    std::string msg = "identity mismatch";
    for (const auto& m : r.mismatches) msg += "; " + m;
    g_last_error = msg;
  }
}

}  // namespace

extern "C" {

const char* f2s_version(void) { return F2S_VERSION; }

const char* f2s_last_error(void) { return g_last_error.c_str(); }

const char* f2s_status_name(f2s_status s) {
  switch (s) {
    case F2S_OK: return "ok";
    case F2S_E_INVALID_ARGUMENT: return "invalid argument";
    case F2S_E_UNKNOWN_SPEC: return "unknown spec";
    case F2S_E_DIMENSION: return "dimension mismatch";
    case F2S_E_PARSE: return "parse error";
    case F2S_E_IO: return "i/o error";
    case F2S_E_NUMERIC: return "numeric failure";
    case F2S_E_LIMIT: return "limit exceeded";
    case F2S_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

size_t f2s_spec_count(void) { return f2s::bundled_specs().size(); }

f2s_status f2s_spec_name(size_t index, const char** name) {
  return guarded([&] {
    need(name, "name");
    const auto& specs = f2s::bundled_specs();
    if (index >= specs.size()) f2s::fail(f2s::ErrorCode::InvalidArgument, "spec index out of range");
    *name = specs[index].name.c_str();
  });
}

f2s_status f2s_spec_info_get(const char* spec, f2s_spec_info* out) {
  return guarded([&] {
    need(out, "out");
    const auto& s = f2s::find_spec(str_arg(spec, "spec"));
    *out = {s.w, s.n, s.m, s.r, s.k, s.has_lung ? 1 : 0};
  });
}

f2s_status f2s_generator_create(const char* spec, uint64_t seed, f2s_generator** out) {
  return guarded([&] {
    need(out, "out");
    *out = new f2s_generator{f2s::Generator(f2s::find_spec(str_arg(spec, "spec")), seed)};
  });
}

f2s_status f2s_generator_create_zero(const char* spec, f2s_generator** out) {
  return guarded([&] {
    need(out, "out");
    *out = new f2s_generator{f2s::Generator(f2s::find_spec(str_arg(spec, "spec")))};
  });
}

f2s_status f2s_generator_from_seed_file(const char* spec, const char* path, f2s_generator** out) {
  return guarded([&] {
    need(out, "out");
    const auto& s = f2s::find_spec(str_arg(spec, "spec"));
    *out = new f2s_generator{f2s::generator_from_seed_file(s, f2s::read_seed_file(str_arg(path, "path")))};
  });
}

void f2s_generator_destroy(f2s_generator* g) { delete g; }

f2s_status f2s_generator_next_word(f2s_generator* g, uint64_t* out) {
  return guarded([&] {
    need(g, "generator");
    need(out, "out");
    *out = g->g.next_word();
  });
}

f2s_status f2s_generator_next_real(f2s_generator* g, double* out) {
  return guarded([&] {
    need(g, "generator");
    need(out, "out");
    *out = g->g.next_real();
  });
}

f2s_status f2s_generator_step(f2s_generator* g, uint64_t count) {
  return guarded([&] {
    need(g, "generator");
    for (uint64_t i = 0; i < count; ++i) g->g.step();
  });
}

size_t f2s_generator_state_limbs(const f2s_generator* g) { return g ? (g->g.spec().k + 63) / 64 : 0; }

f2s_status f2s_generator_get_state(const f2s_generator* g, uint64_t* limbs, size_t nlimbs) {
  return guarded([&] {
    need(g, "generator");
    need(limbs, "limbs");
    const auto v = g->g.get_raw_state();
    if (nlimbs != v.limb_count())
      f2s::fail(f2s::ErrorCode::DimensionMismatch, "expected " + std::to_string(v.limb_count()) + " limbs");
    std::memcpy(limbs, v.data(), nlimbs * sizeof(uint64_t));
  });
}

f2s_status f2s_generator_set_state(f2s_generator* g, const uint64_t* limbs, size_t nlimbs) {
  return guarded([&] {
    need(g, "generator");
    g->g.set_raw_state(unpack_state(g->g.spec().k, limbs, nlimbs));
  });
}

f2s_status f2s_generator_jump(f2s_generator* g, const char* distance, int extended) {
  return guarded([&] {
    need(g, "generator");
    f2s::jump_ahead(g->g, f2s::BigUint::parse(str_arg(distance, "distance")), extended != 0);
  });
}

f2s_status f2s_generator_jump_back(f2s_generator* g, const char* distance) {
  return guarded([&] {
    need(g, "generator");
    f2s::jump_back(g->g, f2s::BigUint::parse(str_arg(distance, "distance")));
  });
}

f2s_status f2s_generator_write_seed_file(const f2s_generator* g, const char* path, const char* comment) {
  return guarded([&] {
    need(g, "generator");
    with_output(path, false, [&](std::ostream& out) { f2s::write_seed_file(g->g, out, comment ? comment : ""); });
  });
}

f2s_status f2s_find_low_weight_state(const char* spec, const char* d, int extended, f2s_generator** out) {
  return guarded([&] {
    need(out, "out");
    const auto& s = f2s::find_spec(str_arg(spec, "spec"));
    auto state = f2s::find_low_weight_state(s, f2s::BigUint::parse(str_arg(d, "d")), extended != 0);
    auto g = std::make_unique<f2s_generator>(f2s_generator{f2s::Generator(s)});
    g->g.set_raw_state(state);
    *out = g.release();
  });
}

f2s_status f2s_matrix_extract(const char* spec, f2s_layout layout, unsigned threads, f2s_matrix** out) {
  return guarded([&] {
    need(out, "out");
    const auto& s = f2s::find_spec(str_arg(spec, "spec"));
    if (layout != F2S_LAYOUT_TRANSITION && layout != F2S_LAYOUT_PROBE)
      f2s::fail(f2s::ErrorCode::InvalidArgument, "unknown matrix layout");
    *out = new f2s_matrix{layout == F2S_LAYOUT_PROBE ? f2s::extract_probe_matrix(s, threads)
                                                     : f2s::extract_transition_matrix(s, threads)};
  });
}

f2s_status f2s_matrix_read(const char* path, f2s_matrix_format format, f2s_matrix** out) {
  return guarded([&] {
    need(out, "out");
    const std::string p = str_arg(path, "path");
    std::ifstream in(p, format == F2S_FORMAT_BINARY ? std::ios::binary : std::ios::in);
    if (!in) f2s::fail(f2s::ErrorCode::Io, "cannot open '" + p + "'");
    *out = new f2s_matrix{format == F2S_FORMAT_BINARY ? f2s::read_matrix_binary(in) : f2s::read_matrix(in)};
  });
}

f2s_status f2s_matrix_write(const f2s_matrix* m, const char* path, f2s_matrix_format format) {
  return guarded([&] {
    need(m, "matrix");
    const bool binary = format == F2S_FORMAT_BINARY;
    with_output(path, binary, [&](std::ostream& out) {
      if (binary)
        f2s::write_matrix_binary(m->m, out);
      else
        f2s::write_matrix(m->m, out);
    });
  });
}

void f2s_matrix_destroy(f2s_matrix* m) { delete m; }

f2s_status f2s_matrix_dims(const f2s_matrix* m, size_t* rows, size_t* cols) {
  return guarded([&] {
    need(m, "matrix");
    if (rows) *rows = m->m.rows();
    if (cols) *cols = m->m.cols();
  });
}

f2s_status f2s_matrix_get(const f2s_matrix* m, size_t i, size_t j, int* bit) {
  return guarded([&] {
    need(m, "matrix");
    need(bit, "bit");
    if (i >= m->m.rows() || j >= m->m.cols()) f2s::fail(f2s::ErrorCode::InvalidArgument, "index out of range");
    *bit = m->m.get(i, j) ? 1 : 0;
  });
}

f2s_status f2s_matrix_rank(const f2s_matrix* m, size_t* rank) {
  return guarded([&] {
    need(m, "matrix");
    need(rank, "rank");
    *rank = f2s::rank_gf2(m->m);
  });
}

f2s_status f2s_matrix_apply(const f2s_matrix* m, const uint64_t* in, size_t in_limbs, uint64_t* out,
                            size_t out_limbs) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    const auto x = unpack_state(static_cast<unsigned>(m->m.cols()), in, in_limbs);
    const auto y = f2s::matvec(m->m, x);
    if (out_limbs != y.limb_count()) f2s::fail(f2s::ErrorCode::DimensionMismatch, "output limb count mismatch");
    std::memcpy(out, y.data(), out_limbs * sizeof(uint64_t));
  });
}

f2s_status f2s_matrix_transpose(const f2s_matrix* m, f2s_matrix** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = new f2s_matrix{m->m.transpose()};
  });
}

f2s_status f2s_matrix_power(const f2s_matrix* m, uint64_t e, f2s_matrix** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = new f2s_matrix{f2s::matpow(m->m, e)};
  });
}

f2s_status f2s_matrix_block_count(const char* spec, const f2s_matrix* m, unsigned* count) {
  return guarded([&] {
    need(m, "matrix");
    need(count, "count");
    *count = f2s::nonzero_block_count(f2s::find_spec(str_arg(spec, "spec")), m->m);
  });
}

f2s_status f2s_spectrum_compute(const f2s_matrix* m, const char* backend, int extended, f2s_spectrum** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    auto s = f2s::eigenvalues(m->m, backend_of(backend), extended != 0);
    s.source = "B";
    *out = new f2s_spectrum{std::move(s)};
  });
}

f2s_status f2s_spectrum_of_real_power(const f2s_matrix* m, unsigned n, const char* backend, int extended,
                                      f2s_spectrum** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    if (n == 0) f2s::fail(f2s::ErrorCode::InvalidArgument, "power must be at least 1");
    if (!extended && m->m.rows() > f2s::kDefaultEigenCap)
      f2s::fail(f2s::ErrorCode::LimitExceeded, "dimension exceeds the eigensolver cap; use extended mode");
    auto s = f2s::eigenvalues(f2s::real_matpow(f2s::to_real(m->m), n), backend_of(backend), extended != 0);
    s.source = "B^" + std::to_string(n);
    *out = new f2s_spectrum{std::move(s)};
  });
}

f2s_status f2s_spectrum_power(const f2s_spectrum* s, long long n, f2s_spectrum** out) {
  return guarded([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = new f2s_spectrum{f2s::power_spectrum(s->s, n)};
  });
}

void f2s_spectrum_destroy(f2s_spectrum* s) { delete s; }

size_t f2s_spectrum_size(const f2s_spectrum* s) { return s ? s->s.values.size() : 0; }

long long f2s_spectrum_exponent(const f2s_spectrum* s) { return s ? s->s.power : 0; }

const char* f2s_spectrum_solver(const f2s_spectrum* s) { return s ? s->s.solver.c_str() : ""; }

f2s_status f2s_spectrum_get(const f2s_spectrum* s, size_t i, double* re, double* im) {
  return guarded([&] {
    need(s, "spectrum");
    if (i >= s->s.values.size()) f2s::fail(f2s::ErrorCode::InvalidArgument, "index out of range");
    if (re) *re = s->s.values[i].real();
    if (im) *im = s->s.values[i].imag();
  });
}

f2s_status f2s_spectrum_entropy(const f2s_spectrum* s, unsigned w, f2s_entropy* out) {
  return guarded([&] {
    need(s, "spectrum");
    need(out, "out");
    const auto r = f2s::entropy(s->s, w);
    *out = {r.h, r.h_per_bit, r.min_modulus, r.max_modulus, r.count_inside, r.count_outside};
  });
}

f2s_status f2s_spectrum_radius(const f2s_spectrum* s, double* out) {
  return guarded([&] {
    need(s, "spectrum");
    need(out, "out");
    *out = f2s::spectral_radius(s->s);
  });
}

f2s_status f2s_spectrum_distance(const f2s_spectrum* a, const f2s_spectrum* b, double* out) {
  return guarded([&] {
    need(a, "spectrum");
    need(b, "spectrum");
    need(out, "out");
    *out = f2s::max_matched_distance(a->s, b->s);
  });
}

f2s_status f2s_spectrum_conjugate_paired(const f2s_spectrum* s, double tol, int* paired) {
  return guarded([&] {
    need(s, "spectrum");
    need(paired, "paired");
    *paired = f2s::conjugate_paired(s->s, tol) ? 1 : 0;
  });
}

f2s_status f2s_spectrum_write_csv(const f2s_spectrum* s, const char* path) {
  return guarded([&] {
    need(s, "spectrum");
    with_output(path, false, [&](std::ostream& out) { f2s::write_spectrum_csv(s->s, out); });
  });
}

f2s_status f2s_spectrum_write_histogram(const f2s_spectrum* s, unsigned bins, const char* path) {
  return guarded([&] {
    need(s, "spectrum");
    const auto h = f2s::modulus_histogram(s->s, bins);
    with_output(path, false, [&](std::ostream& out) { f2s::write_histogram_csv(h, out); });
  });
}

f2s_status f2s_minpoly_compute(const char* spec, const char* cache_dir, f2s_poly** out) {
  return guarded([&] {
    need(out, "out");
    const auto& s = f2s::find_spec(str_arg(spec, "spec"));
    *out = new f2s_poly{f2s::cached_minpoly(s, cache_dir ? cache_dir : "")};
  });
}

void f2s_poly_destroy(f2s_poly* p) { delete p; }

long f2s_poly_degree(const f2s_poly* p) { return p ? p->p.degree() : -1; }

size_t f2s_poly_weight(const f2s_poly* p) { return p ? p->p.weight() : 0; }

f2s_status f2s_poly_hex(const f2s_poly* p, char* buf, size_t len, size_t* needed) {
  return guarded([&] {
    need(p, "poly");
    const std::string hex = p->p.to_hex();
    if (needed) *needed = hex.size() + 1;
    if (buf && len > 0) {
      const std::size_t n = std::min(len - 1, hex.size());
      std::memcpy(buf, hex.data(), n);
      buf[n] = '\0';
    }
  });
}

f2s_status f2s_poly_write(const f2s_poly* p, const char* spec, const char* path) {
  return guarded([&] {
    need(p, "poly");
    f2s::MinpolyFile f{str_arg(spec, "spec"), f2s::kMinpolySeed, p->p};
    with_output(path, false, [&](std::ostream& out) { f2s::write_minpoly_file(out, f); });
  });
}

f2s_status f2s_check_tgfsr_identity(unsigned configs, uint64_t seed, f2s_identity_report* out) {
  return guarded([&] {
    need(out, "out");
    fill(out, f2s::verify_tgfsr_identity(configs, seed));
  });
}

f2s_status f2s_check_mt_identity(unsigned configs, uint64_t seed, f2s_identity_report* out) {
  return guarded([&] {
    need(out, "out");
    fill(out, f2s::verify_mt_identity(configs, seed));
  });
}

f2s_status f2s_check_mt19937_mod2(const char* cache_dir, f2s_mod2_report* out) {
  return guarded([&] {
    need(out, "out");
    const auto mp = f2s::cached_minpoly(f2s::find_spec("mt19937"), cache_dir ? cache_dir : "");
    const auto r = f2s::compare_mt19937_mod2(mp);
    *out = {r.equal ? 1 : 0, r.formula_degree, r.minpoly_degree, r.formula_weight, r.minpoly_weight};
  });
}

f2s_status f2s_zeroland_sweep(const char* spec, unsigned p, unsigned max_n, unsigned threads, f2s_trace** out) {
  return guarded([&] {
    need(out, "out");
    *out = new f2s_trace{f2s::unit_seed_sweep(f2s::find_spec(str_arg(spec, "spec")), p, max_n, threads)};
  });
}

f2s_status f2s_zeroland_replay_file(const char* spec, const char* seed_path, unsigned p, unsigned max_n,
                                    f2s_trace** out) {
  return guarded([&] {
    need(out, "out");
    const auto& s = f2s::find_spec(str_arg(spec, "spec"));
    *out = new f2s_trace{f2s::replay_seed(s, f2s::read_seed_file(str_arg(seed_path, "seed path")), p, max_n)};
  });
}

f2s_status f2s_zeroland_replay(const f2s_generator* g, unsigned p, unsigned max_n, f2s_trace** out) {
  return guarded([&] {
    need(g, "generator");
    need(out, "out");
    *out = new f2s_trace{f2s::replay_state(g->g.spec(), g->g.get_raw_state(), p, max_n)};
  });
}

void f2s_trace_destroy(f2s_trace* t) { delete t; }

size_t f2s_trace_size(const f2s_trace* t) { return t ? t->t.values.size() : 0; }

double f2s_trace_sigma(const f2s_trace* t) { return t ? t->t.sigma : 0.0; }

f2s_status f2s_trace_get(const f2s_trace* t, size_t i, long long* n, double* gamma) {
  return guarded([&] {
    need(t, "trace");
    if (i >= t->t.values.size()) f2s::fail(f2s::ErrorCode::InvalidArgument, "index out of range");
    if (n) *n = t->t.normalized_n(i);
    if (gamma) *gamma = t->t.values[i];
  });
}

f2s_status f2s_trace_balanced_time(const f2s_trace* t, double band_sigmas, long long* n) {
  return guarded([&] {
    need(t, "trace");
    need(n, "n");
    const auto bt = f2s::balanced_time(t->t, band_sigmas);
    *n = bt ? *bt : -1;
  });
}

f2s_status f2s_trace_band_entry(const f2s_trace* t, double band_sigmas, long long* n) {
  return guarded([&] {
    need(t, "trace");
    need(n, "n");
    const auto e = f2s::band_entry_time(t->t, band_sigmas);
    *n = e ? *e : -1;
  });
}

f2s_status f2s_trace_minimum(const f2s_trace* t, long long* n, double* gamma) {
  return guarded([&] {
    need(t, "trace");
    const auto m = f2s::trace_minimum(t->t);
    if (n) *n = m.n;
    if (gamma) *gamma = m.gamma;
  });
}

f2s_status f2s_trace_write_csv(const f2s_trace* t, const char* path, double band_sigmas) {
  return guarded([&] {
    need(t, "trace");
    with_output(path, false, [&](std::ostream& out) { f2s::write_trace_csv(t->t, out, band_sigmas); });
  });
}

f2s_status f2s_bench_next_real(const char* spec, uint64_t count, double* ns_per_double) {
  return guarded([&] {
    need(ns_per_double, "ns_per_double");
    if (count == 0) f2s::fail(f2s::ErrorCode::InvalidArgument, "count must be positive");
    f2s::Generator g(f2s::find_spec(str_arg(spec, "spec")), 5489);
    volatile double sink = 0;
    for (uint64_t i = 0; i < count / 10; ++i) sink = sink + g.next_real();
    const auto t0 = std::chrono::steady_clock::now();
    double acc = 0;
    for (uint64_t i = 0; i < count; ++i) acc += g.next_real();
    const auto t1 = std::chrono::steady_clock::now();
    sink = sink + acc;
    *ns_per_double = std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(count);
  });
}

}  // extern "C"
