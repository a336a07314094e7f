#include <Eigen/Eigenvalues>

#include "common/error.hpp"
#include "spectral/spectrum.hpp"

namespace f2s::detail {

std::vector<std::complex<double>> eigen_solve(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::Numeric, "Eigen QR iteration did not converge (dimension " + std::to_string(m.rows()) + ")");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace f2s::detail
