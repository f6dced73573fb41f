#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "irpdf/perm.hpp"
#include "irpdf/rng.hpp"
#include "irpdf/thoma.hpp"

namespace irpdf {

/// One coordinate of a sampled configuration: an atomic label Plus(i) or
/// Minus(i) (1-based index into alpha / beta), or a continuum value in
/// [0, delta). Atoms compare by variant and index; continuum labels compare
/// by exact double equality — two independently sampled values collide with
/// probability < n^2 * 2^-52, a null event for every property stated here.
struct Label {
  enum class Kind : unsigned char { Plus, Minus, Continuum };

  Kind kind = Kind::Continuum;
  int index = 0;        // atoms only
  double value = 0.0;   // continuum only

  static Label plus(int i) { return {Kind::Plus, i, 0.0}; }
  static Label minus(int i) { return {Kind::Minus, i, 0.0}; }
  static Label continuum(double u) { return {Kind::Continuum, 0, u}; }

  bool operator==(const Label& other) const {
    if (kind != other.kind) return false;
    return kind == Kind::Continuum ? value == other.value : index == other.index;
  }

  std::string to_string() const;
};

/// A finite prefix of the product space: n i.i.d. labels drawn from the
/// measure attached to its ThomaParams. Only permutations with
/// max_support <= size() may act on it.
class Configuration {
 public:
  Configuration(std::vector<Label> labels, ThomaParams params);

  int size() const { return static_cast<int>(labels_.size()); }

  /// 1-based coordinate access, matching the group acting on {1, 2, ...}.
  const Label& label(int i) const { return labels_.at(static_cast<std::size_t>(i - 1)); }

  const ThomaParams& params() const { return params_; }

  bool operator==(const Configuration& other) const { return labels_ == other.labels_; }

 private:
  std::vector<Label> labels_;
  ThomaParams params_;
};

/// n i.i.d. labels: Plus(i) with probability alpha_i, Minus(i) with
/// probability beta_i, otherwise a uniform continuum value. One uniform draw
/// per coordinate; the result is a pure function of (params, n, stream).
Configuration sample_config(const ThomaParams& params, int n, SplitMix64& rng);

/// Coordinate permutation action: (h.w)_i = w_{h^{-1}(i)}.
/// Throws std::domain_error if max_support(h) > w.size().
Configuration act(const FinitaryPermutation& h, const Configuration& w);

/// True iff w_{g(i)} = w_i for every i in supp(g); equivalent to
/// act(g, w) == w.
bool is_fixed(const FinitaryPermutation& g, const Configuration& w);

/// Sign of the product of (g(j) - g(i)) over pairs i < j whose labels are
/// both Minus. The product ranges over all of N in principle; only pairs
/// inside [1, max_support(g)] can contribute a negative factor, because for
/// i <= M < j we have g(i) <= M < j = g(j), and pairs beyond M are untouched.
/// So the value reduces to the restricted inversion parity of g on the
/// Minus-labelled positions up to max_support(g). Defined for every (g, w),
/// fixed or not.
int cocycle_sign(const FinitaryPermutation& g, const Configuration& w);

/// The sampled positive definite function: cocycle_sign(g, w) if g fixes w,
/// else 0. phi(e, w) = 1.
int phi(const FinitaryPermutation& g, const Configuration& w);

/// An invariant random positive definite function built from the coordinate
/// action and an arbitrary unit-modulus cocycle c:
///   evaluate(g, w) = c(g, w) if g.w = w, else 0.
/// The constant cocycle 1 gives the stabilizer indicator (the IRS); the sign
/// cocycle reproduces phi. The cocycle identity
/// c(gh, w) = c(h, w) * c(g, h.w) is not assumed at construction; violations
/// surface in the property suite.
class CocycleIrpdf {
 public:
  using Cocycle =
      std::function<std::complex<double>(const FinitaryPermutation&, const Configuration&)>;

  CocycleIrpdf(ThomaParams params, int n, Cocycle cocycle);

  Configuration sample(SplitMix64& rng) const { return sample_config(params_, n_, rng); }

  std::complex<double> evaluate(const FinitaryPermutation& g, const Configuration& w) const;

  const ThomaParams& params() const { return params_; }
  int prefix_length() const { return n_; }

 private:
  ThomaParams params_;
  int n_;
  Cocycle cocycle_;
};

CocycleIrpdf make_cocycle_irpdf(ThomaParams params, int n, CocycleIrpdf::Cocycle cocycle);

CocycleIrpdf::Cocycle constant_cocycle();
CocycleIrpdf::Cocycle sign_cocycle();

}  // namespace irpdf
