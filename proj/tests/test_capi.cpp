#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "f2spectra/f2spectra.h"

namespace {

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "f2s_test_capi";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::strlen(f2s_version()) > 0);
  CHECK(std::string(f2s_status_name(F2S_OK)) == "ok");
  CHECK(std::string(f2s_status_name(F2S_E_UNKNOWN_SPEC)) == "unknown spec");
}

TEST_CASE("spec listing") {
  REQUIRE(f2s_spec_count() == 8);
  const char* name = nullptr;
  CHECK(f2s_spec_name(0, &name) == F2S_OK);
  CHECK(name != nullptr);
  CHECK(f2s_spec_name(8, &name) == F2S_E_INVALID_ARGUMENT);
  f2s_spec_info info{};
  CHECK(f2s_spec_info_get("melg607", &info) == F2S_OK);
  CHECK(info.k == 607);
  CHECK(info.w == 64);
  CHECK(info.has_lung == 1);
}

TEST_CASE("errors carry a message") {
  f2s_generator* g = nullptr;
  CHECK(f2s_generator_create("nosuchgen", 1, &g) == F2S_E_UNKNOWN_SPEC);
  CHECK(g == nullptr);
  CHECK(std::string(f2s_last_error()).find("nosuchgen") != std::string::npos);
  CHECK(f2s_generator_create(nullptr, 1, &g) == F2S_E_INVALID_ARGUMENT);
  CHECK(f2s_generator_create("mt19937", 1, nullptr) == F2S_E_INVALID_ARGUMENT);
  f2s_generator_destroy(nullptr);
}

TEST_CASE("generator round trip through the C API") {
  f2s_generator* g = nullptr;
  REQUIRE(f2s_generator_create("well607b", 1, &g) == F2S_OK);
  uint64_t word = 0;
  CHECK(f2s_generator_next_word(g, &word) == F2S_OK);
  CHECK(word == 0xca5fdfd3u);

  const size_t limbs = f2s_generator_state_limbs(g);
  CHECK(limbs == 10);
  std::vector<uint64_t> state(limbs);
  CHECK(f2s_generator_get_state(g, state.data(), limbs) == F2S_OK);
  CHECK(f2s_generator_get_state(g, state.data(), limbs - 1) == F2S_E_DIMENSION);

  f2s_generator* h = nullptr;
  REQUIRE(f2s_generator_create_zero("well607b", &h) == F2S_OK);
  CHECK(f2s_generator_set_state(h, state.data(), limbs) == F2S_OK);
  uint64_t a = 0, b = 0;
  for (int i = 0; i < 10; ++i) {
    f2s_generator_next_word(g, &a);
    f2s_generator_next_word(h, &b);
    CHECK(a == b);
  }
  double x = -1;
  CHECK(f2s_generator_next_real(g, &x) == F2S_OK);
  CHECK(x >= 0.0);
  CHECK(x < 1.0);

  // Jump ahead equals stepping; jumping back undoes it.
  f2s_generator_get_state(g, state.data(), limbs);
  f2s_generator_set_state(h, state.data(), limbs);
  CHECK(f2s_generator_jump(g, "1000", 0) == F2S_OK);
  CHECK(f2s_generator_step(h, 1000) == F2S_OK);
  std::vector<uint64_t> sg(limbs), sh(limbs);
  f2s_generator_get_state(g, sg.data(), limbs);
  f2s_generator_get_state(h, sh.data(), limbs);
  CHECK(sg == sh);
  CHECK(f2s_generator_jump_back(g, "1000") == F2S_OK);
  f2s_generator_get_state(g, sg.data(), limbs);
  CHECK(sg == state);
  CHECK(f2s_generator_jump(g, "banana", 0) == F2S_E_PARSE);

  const auto path = scratch("well607b.seed").string();
  CHECK(f2s_generator_write_seed_file(g, path.c_str(), "capi") == F2S_OK);
  f2s_generator* k = nullptr;
  REQUIRE(f2s_generator_from_seed_file("well607b", path.c_str(), &k) == F2S_OK);
  f2s_generator_next_word(g, &a);
  f2s_generator_next_word(k, &b);
  CHECK(a == b);
  CHECK(f2s_generator_from_seed_file("well607b", "/nonexistent/seed", &k) == F2S_E_IO);

  f2s_generator_destroy(g);
  f2s_generator_destroy(h);
  f2s_generator_destroy(k);
}

TEST_CASE("large jumps need extended mode") {
  f2s_generator* g = nullptr;
  REQUIRE(f2s_generator_create("mt19937", 5489, &g) == F2S_OK);
  CHECK(f2s_generator_jump(g, "2^100", 0) == F2S_E_LIMIT);
  f2s_generator_destroy(g);
}

TEST_CASE("matrix extraction, I/O and products") {
  f2s_matrix* b = nullptr;
  REQUIRE(f2s_matrix_extract("well607b", F2S_LAYOUT_TRANSITION, 2, &b) == F2S_OK);
  size_t rows = 0, cols = 0, rank = 0;
  CHECK(f2s_matrix_dims(b, &rows, &cols) == F2S_OK);
  CHECK(rows == 607);
  CHECK(cols == 607);
  CHECK(f2s_matrix_rank(b, &rank) == F2S_OK);
  CHECK(rank == 607);
  unsigned blocks = 0;
  CHECK(f2s_matrix_block_count("well607b", b, &blocks) == F2S_OK);
  CHECK(blocks == 4);

  f2s_matrix* probe = nullptr;
  REQUIRE(f2s_matrix_extract("well607b", F2S_LAYOUT_PROBE, 0, &probe) == F2S_OK);
  int x = 0, y = 0;
  bool transposed = true;
  for (size_t i = 0; i < 607; i += 37)
    for (size_t j = 0; j < 607; j += 13) {
      f2s_matrix_get(b, i, j, &x);
      f2s_matrix_get(probe, j, i, &y);
      transposed = transposed && x == y;
    }
  CHECK(transposed);
  f2s_matrix* t = nullptr;
  REQUIRE(f2s_matrix_transpose(probe, &t) == F2S_OK);
  CHECK(f2s_matrix_block_count("well607b", t, &blocks) == F2S_OK);
  CHECK(blocks == 4);
  f2s_matrix_destroy(t);
  CHECK(f2s_matrix_get(b, 607, 0, &x) == F2S_E_INVALID_ARGUMENT);

  // B applied to the state equals one generator step.
  f2s_generator* g = nullptr;
  REQUIRE(f2s_generator_create("well607b", 3, &g) == F2S_OK);
  std::vector<uint64_t> s0(10), s1(10), out(10);
  f2s_generator_get_state(g, s0.data(), 10);
  f2s_generator_step(g, 1);
  f2s_generator_get_state(g, s1.data(), 10);
  CHECK(f2s_matrix_apply(b, s0.data(), 10, out.data(), 10) == F2S_OK);
  CHECK(out == s1);

  f2s_matrix* b2 = nullptr;
  REQUIRE(f2s_matrix_power(b, 2, &b2) == F2S_OK);
  f2s_generator_step(g, 1);
  f2s_generator_get_state(g, s1.data(), 10);
  f2s_matrix_apply(b2, s0.data(), 10, out.data(), 10);
  CHECK(out == s1);

  for (auto fmt : {F2S_FORMAT_TEXT, F2S_FORMAT_BINARY}) {
    const auto path = scratch(fmt == F2S_FORMAT_TEXT ? "b.txt" : "b.bin").string();
    CHECK(f2s_matrix_write(b, path.c_str(), fmt) == F2S_OK);
    f2s_matrix* back = nullptr;
    REQUIRE(f2s_matrix_read(path.c_str(), fmt, &back) == F2S_OK);
    size_t r = 0;
    f2s_matrix_rank(back, &r);
    CHECK(r == 607);
    f2s_matrix_destroy(back);
  }
  {
    const auto path = scratch("bad.txt").string();
    std::ofstream(path) << "10\n1\n";
    f2s_matrix* bad = nullptr;
    CHECK(f2s_matrix_read(path.c_str(), F2S_FORMAT_TEXT, &bad) == F2S_E_PARSE);
  }

  f2s_generator_destroy(g);
  f2s_matrix_destroy(b2);
  f2s_matrix_destroy(probe);
  f2s_matrix_destroy(b);
}

TEST_CASE("spectrum and entropy") {
  f2s_matrix* b = nullptr;
  REQUIRE(f2s_matrix_extract("well1024a", F2S_LAYOUT_TRANSITION, 0, &b) == F2S_OK);
  f2s_spectrum* s = nullptr;
  REQUIRE(f2s_spectrum_compute(b, nullptr, 0, &s) == F2S_OK);
  CHECK(f2s_spectrum_size(s) == 1024);
  CHECK(std::string(f2s_spectrum_solver(s)) == "eigen");
  f2s_entropy e{};
  CHECK(f2s_spectrum_entropy(s, 32, &e) == F2S_OK);
  CHECK(std::abs(e.h - 25.79) <= 0.05);
  CHECK(e.count_inside + e.count_outside == 1024);
  int paired = 0;
  CHECK(f2s_spectrum_conjugate_paired(s, 1e-8, &paired) == F2S_OK);
  CHECK(paired == 1);

  f2s_spectrum* s2 = nullptr;
  REQUIRE(f2s_spectrum_power(s, 2, &s2) == F2S_OK);
  CHECK(f2s_spectrum_exponent(s2) == 2);
  f2s_spectrum* direct = nullptr;
  REQUIRE(f2s_spectrum_of_real_power(b, 2, "eigen", 0, &direct) == F2S_OK);
  double dist = 0, radius = 0;
  CHECK(f2s_spectrum_distance(s2, direct, &dist) == F2S_OK);
  CHECK(f2s_spectrum_radius(s2, &radius) == F2S_OK);
  CHECK(dist / radius <= 1e-6);

  CHECK(f2s_spectrum_write_csv(s, scratch("s.csv").string().c_str()) == F2S_OK);
  CHECK(f2s_spectrum_write_histogram(s, 10, scratch("h.csv").string().c_str()) == F2S_OK);
  CHECK(f2s_spectrum_compute(b, "magma", 0, &s2) == F2S_E_INVALID_ARGUMENT);

  f2s_spectrum_destroy(direct);
  f2s_spectrum_destroy(s2);
  f2s_spectrum_destroy(s);
  f2s_matrix_destroy(b);

  f2s_matrix* big = nullptr;
  REQUIRE(f2s_matrix_extract("mt19937", F2S_LAYOUT_TRANSITION, 0, &big) == F2S_OK);
  CHECK(f2s_spectrum_compute(big, nullptr, 0, &s) == F2S_E_LIMIT);
  f2s_matrix_destroy(big);
}

TEST_CASE("minimal polynomial and identities") {
  f2s_poly* p = nullptr;
  REQUIRE(f2s_minpoly_compute("well607b", nullptr, &p) == F2S_OK);
  CHECK(f2s_poly_degree(p) == 607);
  CHECK(f2s_poly_weight(p) == 313);
  size_t needed = 0;
  CHECK(f2s_poly_hex(p, nullptr, 0, &needed) == F2S_OK);
  std::string hex(needed, '\0');
  CHECK(f2s_poly_hex(p, hex.data(), hex.size(), &needed) == F2S_OK);
  CHECK(hex[0] == '8');  // t^607: bit 3 of the leading hex digit
  CHECK(f2s_poly_write(p, "well607b", scratch("p.minpoly").string().c_str()) == F2S_OK);
  f2s_poly_destroy(p);

  f2s_identity_report r{};
  CHECK(f2s_check_tgfsr_identity(20, 20240611, &r) == F2S_OK);
  CHECK(r.matched == 20);
  CHECK(r.plus_variant_agrees_mod2 == 20);
  CHECK(f2s_check_mt_identity(20, 20240611, &r) == F2S_OK);
  CHECK(r.matched == 20);
}

TEST_CASE("zeroland through the C API") {
  f2s_trace* t = nullptr;
  REQUIRE(f2s_zeroland_sweep("well607b", 100, 1000, 0, &t) == F2S_OK);
  long long n = 0;
  CHECK(f2s_trace_balanced_time(t, 2.0, &n) == F2S_OK);
  CHECK(n >= 0);
  CHECK(n < 50);
  double gamma = 0;
  CHECK(f2s_trace_get(t, 0, &n, &gamma) == F2S_OK);
  CHECK(n == 0);
  CHECK(gamma < 0.5);
  CHECK(f2s_trace_sigma(t) > 0);
  CHECK(f2s_trace_write_csv(t, scratch("t.csv").string().c_str(), 2.0) == F2S_OK);
  f2s_trace_destroy(t);

  f2s_generator* g = nullptr;
  REQUIRE(f2s_find_low_weight_state("well607b", "100", 0, &g) == F2S_OK);
  REQUIRE(f2s_zeroland_replay(g, 32, 400, &t) == F2S_OK);
  CHECK(f2s_trace_minimum(t, &n, &gamma) == F2S_OK);
  CHECK(gamma < 0.2);
  f2s_trace_destroy(t);
  f2s_generator_destroy(g);

  const std::string seed = std::string(F2S_DATA_DIR) + "/seeds/melg19937_bad.txt";
  REQUIRE(f2s_zeroland_replay_file("melg19937", seed.c_str(), 624, 8000, &t) == F2S_OK);
  CHECK(f2s_trace_minimum(t, &n, &gamma) == F2S_OK);
  CHECK(gamma < 0.05);
  f2s_trace_destroy(t);
  CHECK(f2s_zeroland_sweep("well607b", 100, 10, 0, &t) == F2S_E_INVALID_ARGUMENT);
}

TEST_CASE("bench") {
  double ns = 0;
  CHECK(f2s_bench_next_real("mt19937", 10000, &ns) == F2S_OK);
  CHECK(ns > 0);
  CHECK(f2s_bench_next_real("mt19937", 0, &ns) == F2S_E_INVALID_ARGUMENT);
}
