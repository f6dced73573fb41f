#pragma once

#include <Eigen/Dense>
#include <vector>

#include "irpdf/perm.hpp"

namespace irpdf {

/// A finite group presented by its multiplication table. Elements are the
/// indices 0..order-1; the identity and inverses are derived from the table,
/// and the group axioms are verified on construction.
class FiniteGroup {
 public:
  /// table[a][b] = a * b. Throws std::invalid_argument when the table is not
  /// a group (non-square, not a Latin square, no identity, missing inverses,
  /// or associativity failure).
  static FiniteGroup from_mult_table(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conjugate(int g, int h) const { return mul(mul(h, g), inv(h)); }  // h g h^{-1}

  const std::vector<std::vector<int>>& mult_table() const { return table_; }

  /// True iff the closure of the given elements under multiplication is the
  /// whole group.
  bool generates(const std::vector<int>& generators) const;

 private:
  FiniteGroup() = default;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// A unitary representation of a FiniteGroup, validated on construction:
/// square matrices of equal dimension, each unitary within tol, and the
/// homomorphism property pi(ab) = pi(a) pi(b) — checked exhaustively when
/// order^2 <= 10^6, on random pairs otherwise.
class UnitaryRep {
 public:
  UnitaryRep(FiniteGroup group, std::vector<Eigen::MatrixXcd> matrices, double tol = 1e-9);

  int dim() const { return static_cast<int>(matrices_.front().rows()); }
  const Eigen::MatrixXcd& mat(int g) const { return matrices_[static_cast<std::size_t>(g)]; }
  const FiniteGroup& group() const { return group_; }

  /// sum_g |chi(g)|^2 / |G|; equals 1 exactly when the representation is
  /// irreducible.
  double irreducibility_index() const;

 private:
  FiniteGroup group_;
  std::vector<Eigen::MatrixXcd> matrices_;
};

bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-9);

/// The symmetric group S_n as a FiniteGroup together with its elements as
/// finitary permutations (index order is the enumeration order).
struct SymmetricGroupModel {
  FiniteGroup group;
  std::vector<FinitaryPermutation> elements;

  int index_of(const FinitaryPermutation& p) const;
};

SymmetricGroupModel symmetric_group(int n);

/// The (n-1)-dimensional standard irreducible representation of S_n:
/// permutation matrices restricted to the orthogonal complement of
/// (1, ..., 1), expressed in an orthonormal basis (real orthogonal output).
UnitaryRep standard_rep(const SymmetricGroupModel& sn);

}  // namespace irpdf
