// f2spectra command line: matrices, spectra, minimal polynomials and zeroland traces
// for the bundled F2-linear generators. Everything goes through the C API.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "f2spectra/f2spectra.h"
#include "json.hpp"
#include "manifest.hpp"

using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
  f2s_status status;
  CliError(f2s_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(f2s_status s) {
  if (s != F2S_OK) throw CliError(s, f2s_last_error());
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Gen = std::unique_ptr<f2s_generator, Deleter<f2s_generator, f2s_generator_destroy>>;
using Matrix = std::unique_ptr<f2s_matrix, Deleter<f2s_matrix, f2s_matrix_destroy>>;
using Spec = std::unique_ptr<f2s_spectrum, Deleter<f2s_spectrum, f2s_spectrum_destroy>>;
using Poly = std::unique_ptr<f2s_poly, Deleter<f2s_poly, f2s_poly_destroy>>;
using Trace = std::unique_ptr<f2s_trace, Deleter<f2s_trace, f2s_trace_destroy>>;

f2s_spec_info info_of(const std::string& spec) {
  f2s_spec_info info{};
  check(f2s_spec_info_get(spec.c_str(), &info));
  return info;
}

std::vector<std::string> all_specs() {
  std::vector<std::string> out;
  for (size_t i = 0; i < f2s_spec_count(); ++i) {
    const char* name = nullptr;
    check(f2s_spec_name(i, &name));
    out.emplace_back(name);
  }
  return out;
}

bool within(double value, double expected, double rel_tol) {
  return std::fabs(value - expected) <= rel_tol * std::fabs(expected);
}

std::string hardware_string() {
  std::ifstream cpu("/proc/cpuinfo");
  std::string line;
  while (std::getline(cpu, line))
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) return line.substr(line.find_first_not_of(' ', colon + 1));
    }
  return "unknown";
}

struct Globals {
  unsigned threads = 0;
  bool json_out = false;
  std::string manifest;
  std::string cache_dir;
};

// Result of one command: payload for stdout and whether its checks passed.
struct Outcome {
  json payload = json::object();
  bool ok = true;
  void expect(const std::string& name, bool passed, json detail = nullptr) {
    payload["checks"][name] = {{"passed", passed}, {"detail", std::move(detail)}};
    ok = ok && passed;
  }
};

void print_plain(const json& j, const std::string& prefix = {}) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      print_plain(*it, key);
    else
      std::cout << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
}

// ---- matrix ----

struct MatrixOpts {
  std::string spec, out = "-", format = "text", layout = "probe";
  bool rank = false;
};

Outcome run_matrix(const MatrixOpts& o, const Globals& g, RunManifest& man) {
  Matrix m;
  f2s_matrix* raw = nullptr;
  check(f2s_matrix_extract(o.spec.c_str(), o.layout == "probe" ? F2S_LAYOUT_PROBE : F2S_LAYOUT_TRANSITION, g.threads,
                           &raw));
  m.reset(raw);
  check(f2s_matrix_write(m.get(), o.out.c_str(), o.format == "binary" ? F2S_FORMAT_BINARY : F2S_FORMAT_TEXT));
  man.add_output(o.out);
  Outcome r;
  size_t rows = 0, cols = 0;
  check(f2s_matrix_dims(m.get(), &rows, &cols));
  r.payload = {{"spec", o.spec}, {"rows", rows}, {"cols", cols}, {"layout", o.layout}, {"path", o.out}};
  if (o.rank) {
    size_t rank = 0;
    check(f2s_matrix_rank(m.get(), &rank));
    r.payload["rank"] = rank;
    r.expect("full_rank", rank == rows, rank);
  }
  return r;
}

// ---- entropy ----

struct EntropyOpts {
  std::string spec, matrix_path, layout = "probe", backend, csv, histogram, base_csv, base_histogram;
  unsigned w = 0, bins = 50;
  long long power = 1;
  bool extended = false, blocks = false;
  std::optional<double> expect_h;
  double tol = 0.05;
};

Outcome run_entropy(const EntropyOpts& o, const Globals& g, RunManifest& man) {
  Matrix m;
  f2s_matrix* raw = nullptr;
  unsigned w = o.w;
  if (o.spec.empty() && o.matrix_path.empty()) throw CliError(F2S_E_INVALID_ARGUMENT, "entropy needs --spec or --matrix");
  if (!o.matrix_path.empty()) {
    check(f2s_matrix_read(o.matrix_path.c_str(), F2S_FORMAT_TEXT, &raw));
    if (o.layout == "probe") {
      // The spectrum does not care, but the block count reads rows of B.
      Matrix probe(raw);
      raw = nullptr;
      check(f2s_matrix_transpose(probe.get(), &raw));
    }
    if (w == 0) {
      if (o.spec.empty()) throw CliError(F2S_E_INVALID_ARGUMENT, "--matrix needs --w or --spec");
      w = info_of(o.spec).w;
    }
  } else {
    w = info_of(o.spec).w;
    check(f2s_matrix_extract(o.spec.c_str(), F2S_LAYOUT_TRANSITION, g.threads, &raw));
  }
  m.reset(raw);
  f2s_spectrum* sraw = nullptr;
  check(f2s_spectrum_compute(m.get(), o.backend.empty() ? nullptr : o.backend.c_str(), o.extended ? 1 : 0, &sraw));
  Spec s(sraw);
  f2s_entropy base{};
  check(f2s_spectrum_entropy(s.get(), w, &base));
  if (!o.base_csv.empty()) {
    check(f2s_spectrum_write_csv(s.get(), o.base_csv.c_str()));
    man.add_output(o.base_csv);
  }
  if (!o.base_histogram.empty()) {
    check(f2s_spectrum_write_histogram(s.get(), o.bins, o.base_histogram.c_str()));
    man.add_output(o.base_histogram);
  }
  if (o.power != 1) {
    check(f2s_spectrum_power(s.get(), o.power, &sraw));
    s.reset(sraw);
  }
  f2s_entropy e{};
  check(f2s_spectrum_entropy(s.get(), w, &e));
  Outcome r;
  r.payload = {{"spec", o.spec.empty() ? o.matrix_path : o.spec},
               {"k", f2s_spectrum_size(s.get())},
               {"w", w},
               {"power", o.power},
               {"solver", f2s_spectrum_solver(s.get())},
               {"h", e.h},
               {"h_per_bit", e.h_per_bit},
               {"h_of_B", base.h},
               {"min_modulus", e.min_modulus},
               {"max_modulus", e.max_modulus},
               {"count_inside", e.count_inside},
               {"count_outside", e.count_outside}};
  if (o.blocks && !o.spec.empty()) {
    unsigned blocks = 0;
    check(f2s_matrix_block_count(o.spec.c_str(), m.get(), &blocks));
    r.payload["nonzero_blocks"] = blocks;
  }
  if (!o.csv.empty()) {
    check(f2s_spectrum_write_csv(s.get(), o.csv.c_str()));
    man.add_output(o.csv);
  }
  if (!o.histogram.empty()) {
    check(f2s_spectrum_write_histogram(s.get(), o.bins, o.histogram.c_str()));
    man.add_output(o.histogram);
  }
  if (o.expect_h) r.expect("h", std::fabs(base.h - *o.expect_h) <= o.tol, {{"h", base.h}, {"expected", *o.expect_h}});
  return r;
}

// ---- minpoly ----

struct MinpolyOpts {
  std::vector<std::string> specs;
  std::string out;
  std::optional<long> expect_n1;
};

Outcome run_minpoly(const MinpolyOpts& o, const Globals& g, RunManifest& man) {
  Outcome r;
  json rows = json::array();
  for (const auto& spec : o.specs) {
    f2s_poly* raw = nullptr;
    check(f2s_minpoly_compute(spec.c_str(), g.cache_dir.empty() ? nullptr : g.cache_dir.c_str(), &raw));
    Poly p(raw);
    const long degree = f2s_poly_degree(p.get());
    const size_t n1 = f2s_poly_weight(p.get());
    const unsigned k = info_of(spec).k;
    rows.push_back({{"spec", spec}, {"degree", degree}, {"N1", n1}, {"k", k}});
    r.expect(spec + ".degree_is_k", degree == static_cast<long>(k), degree);
    if (o.expect_n1) r.expect(spec + ".N1", static_cast<long>(n1) == *o.expect_n1, n1);
    if (!o.out.empty()) {
      if (o.specs.size() > 1) std::filesystem::create_directories(o.out);
      const std::string path = o.specs.size() == 1 ? o.out : o.out + "/" + spec + ".minpoly";
      check(f2s_poly_write(p.get(), spec.c_str(), path.c_str()));
      man.add_output(path);
    }
  }
  r.payload["minpoly"] = rows;
  return r;
}

// ---- charpoly ----

struct CharpolyOpts {
  std::string which;
  unsigned configs = 20;
  std::uint64_t seed = 20240611;
};

Outcome run_charpoly(const CharpolyOpts& o, const Globals& g) {
  Outcome r;
  if (o.which == "mt19937-mod2") {
    f2s_mod2_report rep{};
    check(f2s_check_mt19937_mod2(g.cache_dir.empty() ? nullptr : g.cache_dir.c_str(), &rep));
    r.payload = {{"check", o.which},
                 {"formula_degree", rep.formula_degree},
                 {"minpoly_degree", rep.minpoly_degree},
                 {"formula_weight", rep.formula_weight},
                 {"minpoly_weight", rep.minpoly_weight}};
    r.expect("formula_mod2_equals_minpoly", rep.equal != 0);
    return r;
  }
  const bool tgfsr = o.which == "verify-appendix-a";
  f2s_identity_report rep{};
  const f2s_status st = tgfsr ? f2s_check_tgfsr_identity(o.configs, o.seed, &rep)
                              : f2s_check_mt_identity(o.configs, o.seed, &rep);
  check(st);
  r.payload = {{"check", o.which}, {"configs", rep.configs}, {"matched", rep.matched}, {"seed", o.seed}};
  r.expect("exact_match", rep.configs > 0 && rep.matched == rep.configs,
           rep.matched == rep.configs ? json(nullptr) : json(f2s_last_error()));
  if (tgfsr) {
    r.payload["plus_variant_differs"] = rep.plus_variant_differs;
    r.payload["plus_variant_agrees_mod2"] = rep.plus_variant_agrees_mod2;
    r.expect("plus_variant_differs_over_Z", rep.plus_variant_differs >= 1);
    r.expect("plus_variant_agrees_mod2", rep.plus_variant_agrees_mod2 == rep.configs);
  }
  return r;
}

// ---- zeroland ----

struct ZerolandOpts {
  std::string spec, seed_file, out;
  unsigned p = 100, max_n = 6000;
  double band = 2.0;
  std::optional<long long> expect_balanced;
  double tol = 0.10;
  std::optional<double> expect_dip;
};

Outcome run_zeroland(const ZerolandOpts& o, const Globals& g, RunManifest& man) {
  f2s_trace* raw = nullptr;
  if (o.seed_file.empty())
    check(f2s_zeroland_sweep(o.spec.c_str(), o.p, o.max_n, g.threads, &raw));
  else
    check(f2s_zeroland_replay_file(o.spec.c_str(), o.seed_file.c_str(), o.p, o.max_n, &raw));
  Trace t(raw);
  long long balanced = -1, entry = -1, min_n = 0;
  double min_gamma = 0;
  check(f2s_trace_balanced_time(t.get(), o.band, &balanced));
  check(f2s_trace_band_entry(t.get(), o.band, &entry));
  check(f2s_trace_minimum(t.get(), &min_n, &min_gamma));
  Outcome r;
  r.payload = {{"spec", o.spec},
               {"mode", o.seed_file.empty() ? "unit-seed sweep" : "replay"},
               {"p", o.p},
               {"max_n", o.max_n},
               {"sigma", f2s_trace_sigma(t.get())},
               {"band_sigmas", o.band},
               {"balanced_time", balanced < 0 ? json(nullptr) : json(balanced)},
               {"band_entry", entry < 0 ? json(nullptr) : json(entry)},
               {"min_n", min_n},
               {"min_gamma", min_gamma}};
  if (!o.out.empty()) {
    check(f2s_trace_write_csv(t.get(), o.out.c_str(), o.band));
    man.add_output(o.out);
  }
  if (o.expect_balanced)
    r.expect("balanced_time", balanced >= 0 && within(static_cast<double>(balanced), *o.expect_balanced, o.tol),
             balanced);
  if (o.expect_dip) r.expect("dip", min_gamma < *o.expect_dip, min_gamma);
  return r;
}

// ---- badseed ----

struct BadseedOpts {
  std::string spec, d = "100", out = "-";
  bool extended = false;
  unsigned p = 0;
};

Outcome run_badseed(const BadseedOpts& o, const Globals&, RunManifest& man) {
  f2s_generator* raw = nullptr;
  check(f2s_find_low_weight_state(o.spec.c_str(), o.d.c_str(), o.extended ? 1 : 0, &raw));
  Gen gen(raw);
  std::vector<uint64_t> limbs(f2s_generator_state_limbs(gen.get()));
  check(f2s_generator_get_state(gen.get(), limbs.data(), limbs.size()));
  size_t weight = 0;
  for (auto l : limbs) weight += static_cast<size_t>(__builtin_popcountll(l));
  const std::string comment = o.spec + " state " + o.d + " steps before the unit state e_1";
  check(f2s_generator_write_seed_file(gen.get(), o.out.c_str(), comment.c_str()));
  man.add_output(o.out);
  const auto info = info_of(o.spec);
  Outcome r;
  r.payload = {{"spec", o.spec}, {"d", o.d}, {"state_weight", weight}, {"k", info.k}, {"path", o.out}};
  // Replay across the dip when d is small enough to walk.
  char* end = nullptr;
  const unsigned long long d = std::strtoull(o.d.c_str(), &end, 10);
  if (*end == '\0' && d > 0 && d < 1000000) {
    const unsigned norm = info.w / 32;
    const unsigned p = o.p ? o.p : 32 * norm;
    const unsigned max_n = static_cast<unsigned>((d + 4 * info.n) * norm) + p;
    f2s_trace* traw = nullptr;
    check(f2s_zeroland_replay(gen.get(), p, max_n, &traw));
    Trace t(traw);
    long long min_n = 0;
    double min_gamma = 0;
    check(f2s_trace_minimum(t.get(), &min_n, &min_gamma));
    r.payload["replay"] = {{"p", p}, {"min_n", min_n}, {"min_gamma", min_gamma}};
  }
  return r;
}

// ---- jump ----

struct JumpOpts {
  std::string spec, distance = "0";
  std::uint64_t seed = 5489;
  bool extended = false, back = false, verify = false;
  unsigned count = 4;
};

Outcome run_jump(const JumpOpts& o, const Globals&) {
  f2s_generator* raw = nullptr;
  check(f2s_generator_create(o.spec.c_str(), o.seed, &raw));
  Gen gen(raw);
  if (o.back)
    check(f2s_generator_jump_back(gen.get(), o.distance.c_str()));
  else
    check(f2s_generator_jump(gen.get(), o.distance.c_str(), o.extended ? 1 : 0));
  Outcome r;
  std::vector<uint64_t> state(f2s_generator_state_limbs(gen.get()));
  check(f2s_generator_get_state(gen.get(), state.data(), state.size()));
  json words = json::array();
  for (unsigned i = 0; i < o.count; ++i) {
    uint64_t wd = 0;
    check(f2s_generator_next_word(gen.get(), &wd));
    words.push_back(wd);
  }
  r.payload = {{"spec", o.spec}, {"seed", o.seed}, {"distance", o.distance}, {"back", o.back}, {"next_words", words}};
  if (o.verify) {
    if (o.back) throw CliError(F2S_E_INVALID_ARGUMENT, "--verify walks forward only");
    char* end = nullptr;
    const unsigned long long d = std::strtoull(o.distance.c_str(), &end, 10);
    if (*end != '\0' || d > 100000000ULL)
      throw CliError(F2S_E_INVALID_ARGUMENT, "--verify needs a decimal distance of at most 1e8");
    f2s_generator* wraw = nullptr;
    check(f2s_generator_create(o.spec.c_str(), o.seed, &wraw));
    Gen walk(wraw);
    check(f2s_generator_step(walk.get(), d));
    std::vector<uint64_t> walked(state.size());
    check(f2s_generator_get_state(walk.get(), walked.data(), walked.size()));
    r.expect("matches_stepping", walked == state);
  }
  return r;
}

// ---- bench ----

struct BenchOpts {
  std::vector<std::string> specs;
  std::uint64_t count = 1000000;
};

Outcome run_bench(const BenchOpts& o, const Globals&) {
  std::vector<std::string> specs = o.specs.empty() ? all_specs() : o.specs;
  std::vector<double> ns(specs.size());
  std::optional<double> mt_ns;
  for (size_t i = 0; i < specs.size(); ++i) {
    check(f2s_bench_next_real(specs[i].c_str(), o.count, &ns[i]));
    if (specs[i] == "mt19937") mt_ns = ns[i];
  }
  if (!mt_ns) {
    double t = 0;
    check(f2s_bench_next_real("mt19937", o.count, &t));
    mt_ns = t;
  }
  json rows = json::array();
  for (size_t i = 0; i < specs.size(); ++i)
    rows.push_back({{"spec", specs[i]}, {"ns_per_double", ns[i]}, {"throughput_vs_mt19937", *mt_ns / ns[i]}});
  Outcome r;
  r.payload = {{"doubles", o.count}, {"hardware", hardware_string()}, {"mt19937_ns_per_double", *mt_ns}, {"results", rows}};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transition matrices, spectra, minimal polynomials and zeroland traces of F2-linear generators"};
  app.set_version_flag("--version", std::string(f2s_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("F2SPECTRA_THREADS")) g.threads = static_cast<unsigned>(std::atoi(env));
  app.add_option("--threads", g.threads, "Worker threads (default: F2SPECTRA_THREADS, else all cores)");
  app.add_flag("--json", g.json_out, "Print the result as JSON on stdout");
  app.add_option("--manifest", g.manifest, "Run manifest path (default: next to the first output)");
  app.add_option("--cache-dir", g.cache_dir, "Minimal polynomial cache (default: F2SPECTRA_CACHE_DIR)");

  const std::vector<std::string> spec_names = all_specs();
  auto spec_check = CLI::IsMember(spec_names, CLI::ignore_case);

  MatrixOpts mo;
  auto* matrix = app.add_subcommand("matrix", "Extract the transition matrix, one line of k digits per row");
  matrix->add_option("--spec", mo.spec)->required()->transform(spec_check);
  matrix->add_option("--out", mo.out, "Output path, - for stdout")->capture_default_str();
  matrix->add_option("--format", mo.format)->check(CLI::IsMember({"text", "binary"}))->capture_default_str();
  matrix->add_option("--layout", mo.layout,
                     "probe: row i is the next state from e_i; transition: B with x' = B x")
      ->check(CLI::IsMember({"probe", "transition"}))
      ->capture_default_str();
  matrix->add_flag("--rank", mo.rank, "Also compute the GF(2) rank");

  EntropyOpts eo;
  auto* entropy = app.add_subcommand(
      "entropy", "Eigenvalues of B over the reals and h = -sum ln|l| over |l| < 1.\n"
                 "Spectrum CSV columns: re,im,modulus. Histogram CSV columns: bin_low,bin_high,count");
  entropy->add_option("--spec", eo.spec, "Generator; with --matrix it only supplies the word size")->transform(spec_check);
  entropy->add_option("--matrix", eo.matrix_path, "Text matrix file instead of extracting");
  entropy->add_option("--layout", eo.layout, "Layout of the --matrix file, as written by the matrix command")
      ->check(CLI::IsMember({"probe", "transition"}))
      ->capture_default_str();
  entropy->add_option("--w", eo.w, "Word size used for h_per_bit with --matrix");
  entropy->add_option("--power", eo.power, "Report the spectrum of B^n")->check(CLI::PositiveNumber);
  entropy->add_flag("--extended", eo.extended, "Allow dimensions above 4096");
  entropy->add_option("--backend", eo.backend, "eigen (default) or lapacke")
      ->check(CLI::IsMember({"lapacke", "eigen"}));
  entropy->add_option("--csv", eo.csv, "Spectrum CSV of B, or of B^n with --power");
  entropy->add_option("--histogram", eo.histogram, "Modulus histogram CSV");
  entropy->add_option("--base-csv", eo.base_csv, "Spectrum CSV of B itself when --power is given");
  entropy->add_option("--base-histogram", eo.base_histogram, "Histogram CSV of B itself when --power is given");
  entropy->add_option("--bins", eo.bins)->capture_default_str();
  entropy->add_flag("--blocks", eo.blocks, "Count nonzero blocks in the newest-word rows");
  entropy->add_option("--expect-h", eo.expect_h, "Fail unless h of B is within --tol");
  entropy->add_option("--tol", eo.tol)->capture_default_str();

  MinpolyOpts mpo;
  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial by Berlekamp-Massey; reports degree and N1");
  minpoly->add_option("--spec", mpo.specs)->required()->transform(spec_check);
  minpoly->add_option("--out", mpo.out, "Minpoly file, or a directory when several specs are given");
  minpoly->add_option("--expect-n1", mpo.expect_n1);

  CharpolyOpts co;
  auto* charpoly = app.add_subcommand("charpoly", "Check the closed-form integer characteristic polynomials");
  charpoly->add_option("check", co.which, "verify-appendix-a | verify-appendix-b | mt19937-mod2")
      ->required()
      ->check(CLI::IsMember({"verify-appendix-a", "verify-appendix-b", "mt19937-mod2"}));
  charpoly->add_option("--configs", co.configs)->capture_default_str();
  charpoly->add_option("--seed", co.seed)->capture_default_str();

  ZerolandOpts zo;
  auto* zeroland = app.add_subcommand(
      "zeroland", "gamma_{n,p} over the unit-seed ensemble, or one trajectory with --seed-file.\n"
                  "n and p count 32-bit iterations. CSV columns: n,gamma,sigma_band_low,sigma_band_high");
  zeroland->add_option("--spec", zo.spec)->required()->transform(spec_check);
  zeroland->add_option("--p", zo.p)->capture_default_str();
  zeroland->add_option("--max-n", zo.max_n)->capture_default_str();
  zeroland->add_option("--seed-file", zo.seed_file)->check(CLI::ExistingFile);
  zeroland->add_option("--band", zo.band, "Band half-width in sigmas")->capture_default_str();
  zeroland->add_option("--out", zo.out, "Trace CSV path");
  zeroland->add_option("--expect-balanced", zo.expect_balanced, "Fail unless balanced_time is within --tol");
  zeroland->add_option("--tol", zo.tol, "Relative tolerance")->capture_default_str();
  zeroland->add_option("--expect-dip", zo.expect_dip, "Fail unless min gamma falls below this");

  BadseedOpts bo;
  auto* badseed = app.add_subcommand("badseed", "Write the state d steps before the unit state e_1");
  badseed->add_option("--spec", bo.spec)->required()->transform(spec_check);
  badseed->add_option("--d", bo.d, "Steps before e_1, in generator steps (not normalized)")->capture_default_str();
  badseed->add_option("--out", bo.out)->capture_default_str();
  badseed->add_option("--p", bo.p, "Replay window in normalized iterations (default: 32 generator steps)");
  badseed->add_flag("--extended", bo.extended);

  JumpOpts jo;
  auto* jump = app.add_subcommand("jump", "Seed a generator, jump by a distance and print the next words");
  jump->add_option("--spec", jo.spec)->required()->transform(spec_check);
  jump->add_option("--seed", jo.seed)->capture_default_str();
  jump->add_option("--distance", jo.distance, "decimal, 0x-hex, 2^k, 2^k-d or 2^k+d")->required();
  jump->add_option("--count", jo.count)->capture_default_str();
  jump->add_flag("--back", jo.back, "Jump backwards");
  jump->add_flag("--extended", jo.extended);
  jump->add_flag("--verify", jo.verify, "Compare against stepping one at a time");

  BenchOpts bno;
  auto* bench = app.add_subcommand("bench", "Time next_real; throughput relative to mt19937");
  bench->add_option("--spec", bno.specs)->transform(spec_check);
  bench->add_option("--count", bno.count)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  RunManifest man;
  Outcome result;
  int code = 0;
  try {
    if (*matrix) {
      man.command = "matrix";
      man.specs = {mo.spec};
      man.params = {{"out", mo.out}, {"format", mo.format}, {"layout", mo.layout}, {"rank", mo.rank}};
      result = run_matrix(mo, g, man);
    } else if (*entropy) {
      man.command = "entropy";
      if (!eo.spec.empty()) man.specs = {eo.spec};
      man.params = {{"matrix", eo.matrix_path}, {"layout", eo.layout}, {"power", eo.power}, {"extended", eo.extended},
                    {"backend", eo.backend.empty() ? "default" : eo.backend}};
      result = run_entropy(eo, g, man);
    } else if (*minpoly) {
      man.command = "minpoly";
      man.specs = mpo.specs;
      result = run_minpoly(mpo, g, man);
    } else if (*charpoly) {
      man.command = "charpoly";
      man.params = {{"check", co.which}, {"configs", co.configs}, {"seed", co.seed}};
      result = run_charpoly(co, g);
    } else if (*zeroland) {
      man.command = "zeroland";
      man.specs = {zo.spec};
      man.params = {{"p", zo.p}, {"max_n", zo.max_n}, {"seed_file", zo.seed_file}, {"band", zo.band}};
      result = run_zeroland(zo, g, man);
    } else if (*badseed) {
      man.command = "badseed";
      man.specs = {bo.spec};
      man.params = {{"d", bo.d}, {"extended", bo.extended}};
      result = run_badseed(bo, g, man);
    } else if (*jump) {
      man.command = "jump";
      man.specs = {jo.spec};
      man.params = {{"seed", jo.seed}, {"distance", jo.distance}, {"back", jo.back}, {"extended", jo.extended}};
      result = run_jump(jo, g);
    } else if (*bench) {
      man.command = "bench";
      man.specs = bno.specs;
      man.params = {{"count", bno.count}};
      result = run_bench(bno, g);
    }
    man.params["threads"] = g.threads;
    code = result.ok ? 0 : 1;
    result.payload["passed"] = result.ok;
  } catch (const CliError& e) {
    std::cerr << "f2spectra " << man.command << ": " << f2s_status_name(e.status) << ": " << e.what() << '\n';
    code = 2;
  } catch (const std::exception& e) {
    std::cerr << "f2spectra " << man.command << ": " << e.what() << '\n';
    code = 2;
  }

  // Matrix and trace payloads may go to stdout; keep the summary off it then.
  const bool stdout_taken = (*matrix && mo.out == "-") || (*badseed && bo.out == "-");
  if (code != 2) {
    std::ostream& sink = stdout_taken ? std::cerr : std::cout;
    if (g.json_out)
      sink << result.payload.dump(2) << '\n';
    else if (stdout_taken)
      sink << result.payload.dump() << '\n';
    else
      print_plain(result.payload);
  }
  try {
    man.write(g.manifest, code);
  } catch (const std::exception& e) {
    std::cerr << "f2spectra: " << e.what() << '\n';
    if (code == 0) code = 2;
  }
  return code;
}
