#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "irpdf/perm.hpp"

namespace irpdf {

using Complex = std::complex<double>;

/// A normalized positive definite function presented as an evaluator over
/// group elements of type G; evaluate(e) = 1 is the caller's normalization.
template <class G>
using PdFunction = std::function<Complex(const G&)>;

struct GramReport {
  Eigen::MatrixXcd matrix;
  double min_eigenvalue = 0.0;
  double spectral_norm = 0.0;
  double tolerance = 0.0;
  bool psd = false;
};

/// Thrown when a Gram matrix fails certification; carries the full report.
class PsdError : public std::runtime_error {
 public:
  explicit PsdError(GramReport report);
  const GramReport& report() const { return report_; }

 private:
  GramReport report_;
};

/// Gram matrix [phi(g_j^{-1} g_i)] over the element list, Hermitian
/// symmetrized as (A + A*)/2 to absorb floating-point asymmetry.
/// mul(a, b) = a*b and inv(a) = a^{-1} supply the group structure.
template <class G, class Phi, class Mul, class Inv>
Eigen::MatrixXcd gram_matrix(Phi&& phi, const std::vector<G>& elements, Mul&& mul, Inv&& inv) {
  if (elements.empty()) throw std::domain_error("gram_matrix: element list is empty");
  const Eigen::Index m = static_cast<Eigen::Index>(elements.size());
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const G gj_inv = inv(elements[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < m; ++i)
      a(i, j) = phi(mul(gj_inv, elements[static_cast<std::size_t>(i)]));
  }
  return 0.5 * (a + a.adjoint()).eval();
}

/// Permutation-group convenience overload.
Eigen::MatrixXcd gram_matrix(const PdFunction<FinitaryPermutation>& phi,
                             const std::vector<FinitaryPermutation>& elements);

/// Certifies positive semidefiniteness by a dense Hermitian eigensolve:
/// psd iff min eigenvalue >= -tol * max(1, spectral norm). The input must be
/// Hermitian within tol (std::invalid_argument otherwise).
GramReport psd_check(const Eigen::MatrixXcd& a, double tol = 1e-9);

/// Finite-scale GNS vectors from a PSD Gram matrix: eigenpairs above
/// tol * spectral_norm are kept (rank r), and row i of V sqrt(Lambda) is the
/// vector for element i, so inner products reproduce Gram entries. Throws
/// PsdError when the certification fails.
std::vector<Eigen::VectorXcd> gns_vectors(const Eigen::MatrixXcd& gram, double tol = 1e-9);

/// gns_vectors applied to gram_matrix(phi, elements).
std::vector<Eigen::VectorXcd> gns_vectors(const PdFunction<FinitaryPermutation>& phi,
                                          const std::vector<FinitaryPermutation>& elements,
                                          double tol = 1e-9);

}  // namespace irpdf
