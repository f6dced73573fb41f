#include "irpdf/vk.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace irpdf {

std::string Label::to_string() const {
  switch (kind) {
    case Kind::Plus:
      return "+" + std::to_string(index);
    case Kind::Minus:
      return "-" + std::to_string(index);
    case Kind::Continuum: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "u(%.12g)", value);
      return buf;
    }
  }
  return {};
}

Configuration::Configuration(std::vector<Label> labels, ThomaParams params)
    : labels_(std::move(labels)), params_(std::move(params)) {
  for (const Label& l : labels_) {
    if (l.kind == Label::Kind::Plus &&
        (l.index < 1 || l.index > static_cast<int>(params_.alpha().size())))
      throw std::invalid_argument("Plus label index out of range of alpha");
    if (l.kind == Label::Kind::Minus &&
        (l.index < 1 || l.index > static_cast<int>(params_.beta().size())))
      throw std::invalid_argument("Minus label index out of range of beta");
  }
}

Configuration sample_config(const ThomaParams& params, int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("configuration length must be >= 1");
  const auto& cum = params.atom_cumulative();
  const int na = static_cast<int>(params.alpha().size());
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_double();
    std::size_t k = 0;
    while (k < cum.size() && u >= cum[k]) ++k;
    if (k < cum.size()) {
      labels.push_back(k < static_cast<std::size_t>(na)
                           ? Label::plus(static_cast<int>(k) + 1)
                           : Label::minus(static_cast<int>(k) - na + 1));
    } else {
      // Leftover mass [atom_total, 1) maps onto the continuum part [0, delta).
      labels.push_back(Label::continuum(u - params.atom_total()));
    }
  }
  return Configuration(std::move(labels), params);
}

namespace {

void check_support(const FinitaryPermutation& g, const Configuration& w, const char* op) {
  if (g.max_support() > w.size())
    throw std::domain_error(std::string(op) + ": permutation moves point " +
                            std::to_string(g.max_support()) + " but the configuration has only " +
                            std::to_string(w.size()) +
                            " coordinates; sample a longer configuration");
}

}  // namespace

Configuration act(const FinitaryPermutation& h, const Configuration& w) {
  check_support(h, w, "act");
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) labels.push_back(w.label(i));
  const FinitaryPermutation hinv = h.inverse();
  for (int i : h.support()) labels[static_cast<std::size_t>(i - 1)] = w.label(hinv(i));
  return Configuration(std::move(labels), w.params());
}

bool is_fixed(const FinitaryPermutation& g, const Configuration& w) {
  check_support(g, w, "is_fixed");
  for (int i : g.support())
    if (!(w.label(g(i)) == w.label(i))) return false;
  return true;
}

int cocycle_sign(const FinitaryPermutation& g, const Configuration& w) {
  check_support(g, w, "cocycle_sign");
  std::vector<int> minus_positions;
  const int m = g.max_support();
  for (int i = 1; i <= m; ++i)
    if (w.label(i).kind == Label::Kind::Minus) minus_positions.push_back(i);
  return restricted_inversion_parity(g, minus_positions);
}

int phi(const FinitaryPermutation& g, const Configuration& w) {
  return is_fixed(g, w) ? cocycle_sign(g, w) : 0;
}

CocycleIrpdf::CocycleIrpdf(ThomaParams params, int n, Cocycle cocycle)
    : params_(std::move(params)), n_(n), cocycle_(std::move(cocycle)) {
  if (n_ < 1) throw std::invalid_argument("prefix length must be >= 1");
  if (!cocycle_) throw std::invalid_argument("cocycle must be callable");
}

std::complex<double> CocycleIrpdf::evaluate(const FinitaryPermutation& g,
                                            const Configuration& w) const {
  if (!is_fixed(g, w)) return 0.0;
  return cocycle_(g, w);
}

CocycleIrpdf make_cocycle_irpdf(ThomaParams params, int n, CocycleIrpdf::Cocycle cocycle) {
  return CocycleIrpdf(std::move(params), n, std::move(cocycle));
}

CocycleIrpdf::Cocycle constant_cocycle() {
  return [](const FinitaryPermutation&, const Configuration&) {
    return std::complex<double>(1.0, 0.0);
  };
}

CocycleIrpdf::Cocycle sign_cocycle() {
  return [](const FinitaryPermutation& g, const Configuration& w) {
    return std::complex<double>(cocycle_sign(g, w), 0.0);
  };
}

}  // namespace irpdf
