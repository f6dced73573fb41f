#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irpdf/rng.hpp"

namespace irpdf {

/// A bijection of the positive integers moving only finitely many points.
///
/// Stored as the sorted list of (point, image) pairs over the support; fixed
/// points are never stored, so structural equality coincides with equality as
/// group elements. Values are immutable after construction.
class FinitaryPermutation {
 public:
  /// The identity.
  FinitaryPermutation() = default;

  /// Product of disjoint cycles. Throws std::invalid_argument if a point
  /// repeats within or across cycles, or if an entry is not positive.
  static FinitaryPermutation from_cycles(const std::vector<std::vector<int>>& cycles);

  /// Parses disjoint-cycle notation, e.g. "(1 2)(3 4 5)"; "e", "()" and ""
  /// denote the identity. Entries may be separated by spaces or commas.
  static FinitaryPermutation parse(std::string_view text);

  /// Image of a point (identity off the support).
  int operator()(int point) const;

  bool is_identity() const { return images_.empty(); }

  /// Largest moved point; 0 for the identity.
  int max_support() const { return images_.empty() ? 0 : images_.back().first; }

  /// Moved points, sorted ascending.
  std::vector<int> support() const;

  FinitaryPermutation inverse() const;

  /// h * this * h^{-1}.
  FinitaryPermutation conjugated_by(const FinitaryPermutation& h) const;

  /// Disjoint cycles, each starting at its smallest point, sorted by that
  /// point. Fixed points are omitted.
  std::vector<std::vector<int>> cycles() const;

  /// k -> number of k-cycles, for k >= 2 only.
  std::map<int, int> cycle_counts() const;

  /// Order as a group element (lcm of cycle lengths).
  long long order() const;

  /// Permutation sign: product over cycles of (-1)^{k+1}.
  int sign() const;

  std::string to_string() const;

  bool operator==(const FinitaryPermutation&) const = default;

 private:
  explicit FinitaryPermutation(std::vector<std::pair<int, int>> images)
      : images_(std::move(images)) {}

  // Sorted by point; bijective on its own key set; no i -> i entries.
  std::vector<std::pair<int, int>> images_;

  friend FinitaryPermutation compose(const FinitaryPermutation&, const FinitaryPermutation&);
};

/// (p ∘ q)(i) = p(q(i)). This convention is fixed project-wide.
FinitaryPermutation compose(const FinitaryPermutation& p, const FinitaryPermutation& q);

/// (-1)^m where m = #{(a, b) : a < b in positions, p(a) > p(b)}; equals the
/// sign of the product of p(b) - p(a) over position pairs a < b.
/// Positions must be sorted strictly increasing (std::invalid_argument).
int restricted_inversion_parity(const FinitaryPermutation& p, std::span<const int> positions);

/// Uniform permutation of [1..window] (Fisher–Yates), fixed points stripped.
FinitaryPermutation random_permutation(int window, SplitMix64& rng);

}  // namespace irpdf
