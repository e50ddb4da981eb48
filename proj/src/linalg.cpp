#include "qlsa/linalg.hpp"

#include <cmath>

namespace qlsa::detail {

// Eigenvalues closer than sqrt(tol) are treated as one repeated eigenvalue;
// a defective matrix perturbed by rounding splits its eigenvalues by roughly
// sqrt(eps), far above tol itself.
bool complex_is_semisimple(const Matrix<Complex>& a) {
  const Index n = a.rows();
  if (n == 0) return true;
  Eigen::ComplexEigenSolver<Matrix<Complex>> solver(a, /*computeEigenvectors=*/false);
  const auto& values = solver.eigenvalues();
  const double cluster = std::max(std::sqrt(tolerance()), tolerance());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Index i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    Complex centre = values(i);
    Index multiplicity = 0;
    for (Index j = i; j < n; ++j) {
      if (!used[static_cast<std::size_t>(j)] && std::abs(values(j) - values(i)) < cluster) {
        used[static_cast<std::size_t>(j)] = true;
        ++multiplicity;
      }
    }
    if (multiplicity == 1) continue;
    Matrix<Complex> shifted = a - centre * identity<Complex>(n);
    // Geometric multiplicity must match algebraic multiplicity. Rank is taken
    // with the looser cluster tolerance for the same reason as above.
    ScopedTolerance loose(cluster);
    if (n - rank(shifted) != multiplicity) return false;
  }
  return true;
}

}  // namespace qlsa::detail
