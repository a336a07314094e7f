#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bitlinalg/bitmatrix.hpp"

namespace f2s {

// Eigen is the default. Lapacke (dgeev) is faster on large matrices but is only as good as the
// BLAS underneath; its results are checked against the traces of M and M^2.
enum class EigenBackend { Lapacke, Eigen };

EigenBackend default_backend();
const char* backend_name(EigenBackend b);
EigenBackend parse_backend(const std::string& name);

constexpr std::size_t kDefaultEigenCap = 4096;

struct Spectrum {
  std::vector<std::complex<double>> values;
  std::string source;
  std::string solver;  // backend that produced the values
  long long power = 1;
};

struct EntropyReport {
  double h = 0;
  double h_per_bit = 0;
  double min_modulus = 0;
  double max_modulus = 0;
  std::size_t count_inside = 0;
  std::size_t count_outside = 0;
};

Eigen::MatrixXd to_real(const BitMatrix& m);

// Full complex spectrum of a dense nonsymmetric matrix. Dimensions above
// kDefaultEigenCap are refused unless `extended`.
Spectrum eigenvalues(const Eigen::MatrixXd& m, EigenBackend backend = default_backend(), bool extended = false);
Spectrum eigenvalues(const BitMatrix& m, EigenBackend backend = default_backend(), bool extended = false);

// h = -sum_{|lambda| < 1} ln |lambda|; moduli within 1e-12 of 1 count as outside.
EntropyReport entropy(const Spectrum& s, unsigned w);

Spectrum power_spectrum(const Spectrum& s, long long n);

// Integer matrix power carried out in doubles (exact while entries stay below 2^53).
Eigen::MatrixXd real_matpow(const Eigen::MatrixXd& m, unsigned e);

// Largest |a_i - b_pi(i)| under the assignment pi minimising the summed distance.
double max_matched_distance(const Spectrum& a, const Spectrum& b);
double spectral_radius(const Spectrum& s);

// Every eigenvalue with |Im| > tol has a conjugate partner within tol.
bool conjugate_paired(const Spectrum& s, double tol);

struct HistogramBin {
  double low = 0;
  double high = 0;
  std::size_t count = 0;
};
std::vector<HistogramBin> modulus_histogram(const Spectrum& s, unsigned bins);

void write_spectrum_csv(const Spectrum& s, std::ostream& out);
void write_histogram_csv(const std::vector<HistogramBin>& h, std::ostream& out);

// Largest deviation of sum(l) and sum(l^2) from tr(M) and tr(M^2), relative to the
// rounding scale n * eps * ||M||_F^2. Values far above 1 mean the eigenvalues are wrong.
double trace_moment_error(const Eigen::MatrixXd& m, const std::vector<std::complex<double>>& values);

namespace detail {
std::vector<std::complex<double>> eigen_solve(const Eigen::MatrixXd& m);
std::vector<std::complex<double>> lapacke_solve(const Eigen::MatrixXd& m);
}  // namespace detail

}  // namespace f2s
