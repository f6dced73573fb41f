#pragma once

#include <vector>

#include "irpdf/perm.hpp"

namespace irpdf {

/// Thoma parameters: finite non-increasing sequences alpha, beta of entries
/// in (0, 1] with sum(alpha) + sum(beta) <= 1. Zero entries are stripped on
/// validation, so stored sequences are strictly positive. delta = 1 - sum is
/// always recomputed from alpha and beta.
///
/// Finite support is enough here: every quantity in the library (s_k,
/// sampling weights, tau) is then an exact finite expression.
class ThomaParams {
 public:
  /// Validates and normalizes. Throws std::invalid_argument naming the
  /// violated constraint: negative entry, increasing subsequence, or
  /// sum(alpha) + sum(beta) > 1 beyond tolerance 1e-12.
  static ThomaParams validated(std::vector<double> alpha, std::vector<double> beta);

  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  double delta() const { return delta_; }

  /// s_k = sum_i alpha_i^k + (-1)^{k+1} sum_i beta_i^k, for k >= 2
  /// (std::domain_error below that). Empty sums are 0.
  double s_k(int k) const;

  /// The extremal character: tau(g) = prod_{k>=2} s_k^{r_k(g)} over the
  /// cycle counts of g, with s_k^0 = 1 (so tau(e) = 1 even when every s_k
  /// vanishes, which is the regular character alpha = beta = 0).
  double tau(const FinitaryPermutation& g) const;

  /// Probability that a product-sampled configuration is fixed by g:
  /// cycles occupy disjoint coordinates, hence are independent, and a
  /// k-cycle is fixed exactly when its k coordinates carry one common
  /// atomic label, so P = prod_{k>=2} (sum alpha_i^k + sum beta_i^k)^{r_k}.
  double fixing_probability(const FinitaryPermutation& g) const;

  // Cumulative sampling thresholds: alpha entries first, then beta.
  const std::vector<double>& atom_cumulative() const { return atom_cum_; }
  double atom_total() const { return atom_cum_.empty() ? 0.0 : atom_cum_.back(); }

  bool operator==(const ThomaParams&) const = default;

 private:
  ThomaParams(std::vector<double> alpha, std::vector<double> beta);

  std::vector<double> alpha_;
  std::vector<double> beta_;
  double delta_ = 1.0;
  std::vector<double> atom_cum_;
};

}  // namespace irpdf
