#include "irpdf/fingroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "irpdf/rng.hpp"

namespace irpdf {

FiniteGroup FiniteGroup::from_mult_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("multiplication table is empty");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("multiplication table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");

  // Latin square: every row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row_seen[table[a][b]]++) throw std::invalid_argument("row " + std::to_string(a) +
                                                               " repeats an element");
      if (col_seen[table[b][a]]++) throw std::invalid_argument("column " + std::to_string(a) +
                                                               " repeats an element");
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) { identity = e; break; }
  }
  if (identity < 0) throw std::invalid_argument("table has no identity element");

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) { inverse[a] = b; break; }
    if (inverse[a] < 0)
      throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("table is not associative at (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ", " + std::to_string(c) + ")");

  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.identity_ = identity;
  return g;
}

bool FiniteGroup::generates(const std::vector<int>& generators) const {
  std::vector<char> reached(static_cast<std::size_t>(order()), 0);
  std::vector<int> frontier{identity_};
  reached[static_cast<std::size_t>(identity_)] = 1;
  while (!frontier.empty()) {
    const int a = frontier.back();
    frontier.pop_back();
    for (int s : generators) {
      if (s < 0 || s >= order()) throw std::invalid_argument("generator index out of range");
      const int b = mul(a, s);
      if (!reached[static_cast<std::size_t>(b)]) {
        reached[static_cast<std::size_t>(b)] = 1;
        frontier.push_back(b);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd residual =
      u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return residual.norm() <= tol * std::max<double>(1.0, static_cast<double>(u.rows()));
}

UnitaryRep::UnitaryRep(FiniteGroup group, std::vector<Eigen::MatrixXcd> matrices, double tol)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  const int n = group_.order();
  if (static_cast<int>(matrices_.size()) != n)
    throw std::invalid_argument("representation must provide one matrix per group element");
  const Eigen::Index d = matrices_.front().rows();
  if (d < 1) throw std::invalid_argument("representation dimension must be >= 1");
  for (const auto& m : matrices_) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("representation matrices have mismatched dimensions");
    if (!is_unitary(m, tol)) throw std::invalid_argument("representation matrix is not unitary");
  }
  if (!matrices_[static_cast<std::size_t>(group_.identity())].isApprox(
          Eigen::MatrixXcd::Identity(d, d), tol))
    throw std::invalid_argument("representation does not map the identity to I");

  auto check_pair = [&](int a, int b) {
    const Eigen::MatrixXcd lhs = matrices_[static_cast<std::size_t>(group_.mul(a, b))];
    const Eigen::MatrixXcd rhs =
        matrices_[static_cast<std::size_t>(a)] * matrices_[static_cast<std::size_t>(b)];
    if ((lhs - rhs).norm() > tol * static_cast<double>(d))
      throw std::invalid_argument("not a homomorphism: pi(" + std::to_string(a) + " * " +
                                  std::to_string(b) + ") != pi(" + std::to_string(a) + ") pi(" +
                                  std::to_string(b) + ")");
  };
  if (static_cast<long long>(n) * n <= 1'000'000) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) check_pair(a, b);
  } else {
    SplitMix64 rng(0x7265702d63686b);
    for (int trial = 0; trial < 256; ++trial)
      check_pair(static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n)),
                 static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n)));
  }
}

double UnitaryRep::irreducibility_index() const {
  double sum = 0.0;
  for (const auto& m : matrices_) sum += std::norm(m.trace());
  return sum / group_.order();
}

int SymmetricGroupModel::index_of(const FinitaryPermutation& p) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == p) return static_cast<int>(i);
  throw std::invalid_argument("permutation " + p.to_string() + " is not an element of this S_n");
}

SymmetricGroupModel symmetric_group(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric_group supports 1 <= n <= 8");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<FinitaryPermutation> elements;
  do {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
    for (int start = 1; start <= n; ++start) {
      if (seen[static_cast<std::size_t>(start)] || image[static_cast<std::size_t>(start - 1)] == start)
        continue;
      std::vector<int> cycle;
      int point = start;
      while (!seen[static_cast<std::size_t>(point)]) {
        seen[static_cast<std::size_t>(point)] = 1;
        cycle.push_back(point);
        point = image[static_cast<std::size_t>(point - 1)];
      }
      cycles.push_back(std::move(cycle));
    }
    elements.push_back(FinitaryPermutation::from_cycles(cycles));
  } while (std::next_permutation(image.begin(), image.end()));

  const int order = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order),
                                      std::vector<int>(static_cast<std::size_t>(order)));
  SymmetricGroupModel model;
  model.elements = elements;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const FinitaryPermutation ab =
          compose(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]);
      const auto it = std::find(elements.begin(), elements.end(), ab);
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>(it - elements.begin());
    }
  model.group = FiniteGroup::from_mult_table(std::move(table));
  return model;
}

UnitaryRep standard_rep(const SymmetricGroupModel& sn) {
  int n = 1;
  for (const auto& p : sn.elements) n = std::max(n, p.max_support());
  if (n < 2) throw std::invalid_argument("standard_rep needs n >= 2");

  // Orthonormal basis of the complement of (1, ..., 1) in R^n.
  Eigen::MatrixXd basis(n, n - 1);
  for (int k = 1; k < n; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < k; ++i) v(i) = 1.0;
    v(k) = -static_cast<double>(k);
    basis.col(k - 1) = v / v.norm();
  }

  std::vector<Eigen::MatrixXcd> mats;
  mats.reserve(sn.elements.size());
  for (const auto& p : sn.elements) {
    Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i <= n; ++i) perm(p(i) - 1, i - 1) = 1.0;
    mats.emplace_back((basis.transpose() * perm * basis).cast<Complex>());
  }
  return UnitaryRep(sn.group, std::move(mats));
}

}  // namespace irpdf
