#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "common/error.hpp"
#include "spectral/spectrum.hpp"

namespace f2s::detail {

// dgeev with balancing, Hessenberg reduction and shifted QR; eigenvalues only.
std::vector<std::complex<double>> lapacke_solve(const Eigen::MatrixXd& m) {
  const lapack_int n = static_cast<lapack_int>(m.rows());
  Eigen::MatrixXd a = m;  // column major, overwritten by dgeev
  std::vector<double> wr(static_cast<std::size_t>(n)), wi(static_cast<std::size_t>(n));
  const lapack_int info =
      LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, wr.data(), wi.data(), nullptr, 1, nullptr, 1);
  if (info > 0)
    fail(ErrorCode::Numeric, "dgeev failed to converge (dimension " + std::to_string(n) + ", " + std::to_string(info) +
                                 " eigenvalues unresolved)");
  if (info < 0) fail(ErrorCode::Internal, "dgeev rejected argument " + std::to_string(-info));
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {wr[i], wi[i]};
  return out;
}

}  // namespace f2s::detail
