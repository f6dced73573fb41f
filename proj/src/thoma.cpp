#include "irpdf/thoma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irpdf {

namespace {

constexpr double kSimplexTolerance = 1e-12;

void check_sequence(const std::vector<double>& seq, const char* name) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0.0)
      throw std::invalid_argument(std::string(name) + "[" + std::to_string(i) +
                                  "] = " + std::to_string(seq[i]) + " is negative");
    if (i > 0 && seq[i] > seq[i - 1])
      throw std::invalid_argument(std::string(name) + " is not non-increasing at index " +
                                  std::to_string(i));
  }
}

std::vector<double> strip_zeros(std::vector<double> seq) {
  while (!seq.empty() && seq.back() == 0.0) seq.pop_back();
  return seq;
}

double int_pow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

ThomaParams ThomaParams::validated(std::vector<double> alpha, std::vector<double> beta) {
  check_sequence(alpha, "alpha");
  check_sequence(beta, "beta");
  alpha = strip_zeros(std::move(alpha));
  beta = strip_zeros(std::move(beta));
  double sum = 0.0;
  for (double a : alpha) sum += a;
  for (double b : beta) sum += b;
  if (sum > 1.0 + kSimplexTolerance)
    throw std::invalid_argument("sum(alpha) + sum(beta) = " + std::to_string(sum) +
                                " exceeds 1");
  return ThomaParams(std::move(alpha), std::move(beta));
}

ThomaParams::ThomaParams(std::vector<double> alpha, std::vector<double> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  double cum = 0.0;
  atom_cum_.reserve(alpha_.size() + beta_.size());
  for (double a : alpha_) atom_cum_.push_back(cum += a);
  for (double b : beta_) atom_cum_.push_back(cum += b);
  delta_ = std::max(0.0, 1.0 - cum);
}

double ThomaParams::s_k(int k) const {
  if (k < 2) throw std::domain_error("s_k is defined for k >= 2 only (got k = " +
                                     std::to_string(k) + ")");
  double s = 0.0;
  for (double a : alpha_) s += int_pow(a, k);
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
  for (double b : beta_) s += sign * int_pow(b, k);
  return s;
}

double ThomaParams::tau(const FinitaryPermutation& g) const {
  double value = 1.0;
  for (const auto& [k, r] : g.cycle_counts()) {
    const double sk = s_k(k);
    for (int i = 0; i < r; ++i) value *= sk;
  }
  return value;
}

double ThomaParams::fixing_probability(const FinitaryPermutation& g) const {
  double value = 1.0;
  for (const auto& [k, r] : g.cycle_counts()) {
    double pk = 0.0;
    for (double a : alpha_) pk += int_pow(a, k);
    for (double b : beta_) pk += int_pow(b, k);
    for (int i = 0; i < r; ++i) value *= pk;
  }
  return value;
}

}  // namespace irpdf
