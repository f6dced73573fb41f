#include "irpdf/pd.hpp"

#include <string>

namespace irpdf {

PsdError::PsdError(GramReport report)
    : std::runtime_error("matrix is not positive semidefinite: min eigenvalue " +
                         std::to_string(report.min_eigenvalue) + " below -tol * max(1, |A|) = " +
                         std::to_string(-report.tolerance *
                                        std::max(1.0, report.spectral_norm))),
      report_(std::move(report)) {}

Eigen::MatrixXcd gram_matrix(const PdFunction<FinitaryPermutation>& phi,
                             const std::vector<FinitaryPermutation>& elements) {
  return gram_matrix(
      phi, elements,
      [](const FinitaryPermutation& a, const FinitaryPermutation& b) { return compose(a, b); },
      [](const FinitaryPermutation& a) { return a.inverse(); });
}

GramReport psd_check(const Eigen::MatrixXcd& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("psd_check: matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol * scale)
    throw std::invalid_argument("psd_check: matrix is not Hermitian (max asymmetry " +
                                std::to_string(asym) + ")");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (a + a.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  GramReport report;
  report.matrix = 0.5 * (a + a.adjoint());
  report.tolerance = tol;
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.spectral_norm = solver.eigenvalues().cwiseAbs().maxCoeff();
  report.psd = report.min_eigenvalue >= -tol * std::max(1.0, report.spectral_norm);
  return report;
}

std::vector<Eigen::VectorXcd> gns_vectors(const Eigen::MatrixXcd& gram, double tol) {
  GramReport report = psd_check(gram, tol);
  if (!report.psd) throw PsdError(std::move(report));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(report.matrix);
  const auto& values = solver.eigenvalues();
  const double cutoff = tol * report.spectral_norm;

  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = 0; k < values.size(); ++k)
    if (values(k) > cutoff) kept.push_back(k);

  const Eigen::Index m = gram.rows();
  const Eigen::Index r = static_cast<Eigen::Index>(kept.size());
  Eigen::MatrixXcd w(m, r);
  for (Eigen::Index c = 0; c < r; ++c)
    w.col(c) = solver.eigenvectors().col(kept[static_cast<std::size_t>(c)]) *
               std::sqrt(values(kept[static_cast<std::size_t>(c)]));

  std::vector<Eigen::VectorXcd> vectors;
  vectors.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) vectors.push_back(w.row(i).transpose());
  return vectors;
}

std::vector<Eigen::VectorXcd> gns_vectors(const PdFunction<FinitaryPermutation>& phi,
                                          const std::vector<FinitaryPermutation>& elements,
                                          double tol) {
  return gns_vectors(gram_matrix(phi, elements), tol);
}

}  // namespace irpdf
