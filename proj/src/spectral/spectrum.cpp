#include "spectral/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "common/error.hpp"

namespace f2s {

namespace {
// Backward-stable solvers land within a few hundred rounding units; broken ones miss by orders of magnitude.
constexpr double kTraceCheckLimit = 1e4;
}  // namespace

EigenBackend default_backend() { return EigenBackend::Eigen; }

const char* backend_name(EigenBackend b) { return b == EigenBackend::Lapacke ? "lapacke" : "eigen"; }

EigenBackend parse_backend(const std::string& name) {
  if (name == "lapacke") {
#ifndef F2S_HAVE_LAPACKE
    fail(ErrorCode::InvalidArgument, "this build has no LAPACKE backend");
#endif
    return EigenBackend::Lapacke;
  }
  if (name == "eigen") return EigenBackend::Eigen;
  fail(ErrorCode::InvalidArgument, "unknown eigensolver backend '" + name + "'");
}

Eigen::MatrixXd to_real(const BitMatrix& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t l = 0; l < m.stride(); ++l) {
      std::uint64_t word = m.row(i)[l];
      while (word) {
        const std::size_t j = l * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
        word &= word - 1;
      }
    }
  return out;
}

Spectrum eigenvalues(const Eigen::MatrixXd& m, EigenBackend backend, bool extended) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "eigenvalues need a square matrix");
  if (!extended && static_cast<std::size_t>(m.rows()) > kDefaultEigenCap)
    fail(ErrorCode::LimitExceeded, "dimension " + std::to_string(m.rows()) + " exceeds the eigensolver cap of " +
                                       std::to_string(kDefaultEigenCap) + "; use extended mode");
  Spectrum s;
  if (m.rows() == 0) return s;
#ifdef F2S_HAVE_LAPACKE
  if (backend == EigenBackend::Lapacke) {
    s.values = detail::lapacke_solve(m);
    s.solver = "lapacke";
    const double err = trace_moment_error(m, s.values);
    if (err > kTraceCheckLimit) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", err);
      fail(ErrorCode::Numeric, std::string("dgeev eigenvalues fail the trace check (error ") + buf +
                                   " rounding units); a faulty BLAS kernel is likely, try OPENBLAS_CORETYPE=Haswell");
    }
    return s;
  }
#else
  if (backend == EigenBackend::Lapacke) fail(ErrorCode::InvalidArgument, "this build has no LAPACKE backend");
#endif
  s.values = detail::eigen_solve(m);
  s.solver = "eigen";
  return s;
}

double trace_moment_error(const Eigen::MatrixXd& m, const std::vector<std::complex<double>>& values) {
  std::complex<double> s1 = 0, s2 = 0;
  for (const auto& z : values) {
    s1 += z;
    s2 += z * z;
  }
  const double t1 = m.trace();
  const double t2 = m.cwiseProduct(m.transpose()).sum();
  const double fro2 = m.squaredNorm();
  const double scale = static_cast<double>(m.rows()) * std::numeric_limits<double>::epsilon() * std::max(1.0, fro2);
  return std::max(std::abs(s1 - t1), std::abs(s2 - t2)) / scale;
}

Spectrum eigenvalues(const BitMatrix& m, EigenBackend backend, bool extended) {
  if (!extended && m.rows() > kDefaultEigenCap)
    fail(ErrorCode::LimitExceeded, "dimension " + std::to_string(m.rows()) + " exceeds the eigensolver cap of " +
                                       std::to_string(kDefaultEigenCap) + "; use extended mode");
  return eigenvalues(to_real(m), backend, extended);
}

EntropyReport entropy(const Spectrum& s, unsigned w) {
  if (s.values.empty()) fail(ErrorCode::InvalidArgument, "entropy of an empty spectrum");
  if (w == 0) fail(ErrorCode::InvalidArgument, "word size must be positive");
  EntropyReport r;
  r.min_modulus = std::numeric_limits<double>::infinity();
  r.max_modulus = 0;
  // A base eigenvalue at or below 1e-12 is a numerical zero; the floor follows the power.
  const double floor = std::pow(1e-12, static_cast<double>(s.power));
  for (const auto& z : s.values) {
    const double mod = std::abs(z);
    if (!(mod > floor) || !std::isfinite(mod))
      fail(ErrorCode::Numeric, "eigenvalue of modulus " + std::to_string(mod) + ": entropy diverges");
    r.min_modulus = std::min(r.min_modulus, mod);
    r.max_modulus = std::max(r.max_modulus, mod);
    if (mod < 1.0 - 1e-12) {
      r.h -= std::log(mod);
      ++r.count_inside;
    } else {
      ++r.count_outside;
    }
  }
  r.h_per_bit = r.h / w;
  return r;
}

Spectrum power_spectrum(const Spectrum& s, long long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "power must be at least 1");
  Spectrum out;
  out.source = s.source;
  out.solver = s.solver;
  out.power = s.power * n;
  out.values.reserve(s.values.size());
  const double dn = static_cast<double>(n);
  for (const auto& z : s.values) out.values.push_back(std::polar(std::pow(std::abs(z), dn), std::arg(z) * dn));
  return out;
}

Eigen::MatrixXd real_matpow(const Eigen::MatrixXd& m, unsigned e) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "matrix power needs a square matrix");
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::MatrixXd base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

double spectral_radius(const Spectrum& s) {
  double r = 0;
  for (const auto& z : s.values) r = std::max(r, std::abs(z));
  return r;
}

double max_matched_distance(const Spectrum& a, const Spectrum& b) {
  const std::size_t n = a.values.size();
  if (b.values.size() != n) fail(ErrorCode::DimensionMismatch, "spectra differ in size");
  if (n == 0) return 0;
  // Hungarian algorithm (potentials form), 1-based internally.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  auto cost = [&](std::size_t i, std::size_t j) { return std::abs(a.values[i - 1] - b.values[j - 1]); };
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double worst = 0;
  for (std::size_t j = 1; j <= n; ++j) worst = std::max(worst, cost(p[j], j));
  return worst;
}

bool conjugate_paired(const Spectrum& s, double tol) {
  std::vector<std::complex<double>> upper, lower;
  for (const auto& z : s.values) {
    if (z.imag() > tol)
      upper.push_back(z);
    else if (z.imag() < -tol)
      lower.push_back(std::conj(z));
  }
  if (upper.size() != lower.size()) return false;
  auto key = [](const std::complex<double>& x, const std::complex<double>& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::sort(upper.begin(), upper.end(), key);
  std::sort(lower.begin(), lower.end(), key);
  std::vector<char> taken(lower.size(), 0);
  // Sorted by real part; search a small neighbourhood for each partner.
  for (const auto& z : upper) {
    auto it = std::lower_bound(lower.begin(), lower.end(), std::complex<double>(z.real() - tol, -1e300), key);
    bool found = false;
    for (; it != lower.end() && it->real() <= z.real() + tol; ++it) {
      const std::size_t idx = static_cast<std::size_t>(it - lower.begin());
      if (!taken[idx] && std::abs(*it - z) <= tol) {
        taken[idx] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<HistogramBin> modulus_histogram(const Spectrum& s, unsigned bins) {
  if (bins == 0) fail(ErrorCode::InvalidArgument, "histogram needs at least one bin");
  std::vector<HistogramBin> h(bins);
  if (s.values.empty()) return h;
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (const auto& z : s.values) {
    lo = std::min(lo, std::abs(z));
    hi = std::max(hi, std::abs(z));
  }
  const double width = (hi - lo) / bins;
  for (unsigned b = 0; b < bins; ++b) {
    h[b].low = lo + b * width;
    h[b].high = b + 1 == bins ? hi : lo + (b + 1) * width;
  }
  for (const auto& z : s.values) {
    std::size_t b = width > 0 ? static_cast<std::size_t>((std::abs(z) - lo) / width) : 0;
    h[std::min<std::size_t>(b, bins - 1)].count++;
  }
  return h;
}

void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
  out.precision(17);
  out << "re,im,modulus\n";
  for (const auto& z : s.values) out << z.real() << ',' << z.imag() << ',' << std::abs(z) << '\n';
  if (!out) fail(ErrorCode::Io, "failed writing spectrum CSV");
}

void write_histogram_csv(const std::vector<HistogramBin>& h, std::ostream& out) {
  out.precision(17);
  out << "bin_low,bin_high,count\n";
  for (const auto& b : h) out << b.low << ',' << b.high << ',' << b.count << '\n';
  if (!out) fail(ErrorCode::Io, "failed writing histogram CSV");
}

}  // namespace f2s
