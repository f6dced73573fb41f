#include "irpdf/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace irpdf {

namespace {

std::vector<std::pair<int, int>> canonicalize(std::vector<std::pair<int, int>> images) {
  std::erase_if(images, [](const auto& e) { return e.first == e.second; });
  std::sort(images.begin(), images.end());
  return images;
}

}  // namespace

FinitaryPermutation FinitaryPermutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::set<int> seen;
  std::vector<std::pair<int, int>> images;
  for (const auto& cycle : cycles) {
    for (int point : cycle) {
      if (point <= 0)
        throw std::invalid_argument("cycle entry " + std::to_string(point) +
                                    " is not a positive integer");
      if (!seen.insert(point).second)
        throw std::invalid_argument("point " + std::to_string(point) +
                                    " appears more than once in the cycle list");
    }
    if (cycle.size() < 2) continue;  // singleton cycles are fixed points
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return FinitaryPermutation(canonicalize(std::move(images)));
}

FinitaryPermutation FinitaryPermutation::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return FinitaryPermutation();
  if (text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing characters after 'e'");
    return FinitaryPermutation();
  }
  std::vector<std::vector<int>> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' at position " + std::to_string(pos) +
                                  " of permutation string");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      while (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
      if (pos == text.size()) throw std::invalid_argument("unterminated cycle (missing ')')");
      if (text[pos] == ')') { ++pos; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) +
                                    "' inside cycle");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      cycle.push_back(value);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(cycles);
}

int FinitaryPermutation::operator()(int point) const {
  auto it = std::lower_bound(images_.begin(), images_.end(), std::pair<int, int>{point, 0});
  if (it != images_.end() && it->first == point) return it->second;
  return point;
}

std::vector<int> FinitaryPermutation::support() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (const auto& [point, image] : images_) out.push_back(point);
  return out;
}

FinitaryPermutation FinitaryPermutation::inverse() const {
  std::vector<std::pair<int, int>> inv;
  inv.reserve(images_.size());
  for (const auto& [point, image] : images_) inv.emplace_back(image, point);
  return FinitaryPermutation(canonicalize(std::move(inv)));
}

FinitaryPermutation compose(const FinitaryPermutation& p, const FinitaryPermutation& q) {
  std::set<int> domain;
  for (const auto& [point, image] : p.images_) domain.insert(point);
  for (const auto& [point, image] : q.images_) domain.insert(point);
  std::vector<std::pair<int, int>> images;
  images.reserve(domain.size());
  for (int point : domain) images.emplace_back(point, p(q(point)));
  return FinitaryPermutation(canonicalize(std::move(images)));
}

FinitaryPermutation FinitaryPermutation::conjugated_by(const FinitaryPermutation& h) const {
  // (h g h^{-1})(h(i)) = h(g(i)) for every i in supp(g).
  std::vector<std::pair<int, int>> images;
  images.reserve(images_.size());
  for (const auto& [point, image] : images_) images.emplace_back(h(point), h(image));
  return FinitaryPermutation(canonicalize(std::move(images)));
}

std::vector<std::vector<int>> FinitaryPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::set<int> visited;
  for (const auto& [start, unused] : images_) {
    if (visited.count(start)) continue;
    std::vector<int> cycle;
    int point = start;
    do {
      cycle.push_back(point);
      visited.insert(point);
      point = (*this)(point);
    } while (point != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::map<int, int> FinitaryPermutation::cycle_counts() const {
  std::map<int, int> counts;
  for (const auto& cycle : cycles()) ++counts[static_cast<int>(cycle.size())];
  return counts;
}

long long FinitaryPermutation::order() const {
  long long result = 1;
  for (const auto& [length, count] : cycle_counts())
    result = std::lcm(result, static_cast<long long>(length));
  return result;
}

int FinitaryPermutation::sign() const {
  int s = 1;
  for (const auto& [length, count] : cycle_counts())
    if (length % 2 == 0 && count % 2 == 1) s = -s;  // (-1)^{(k+1) r_k}
  return s;
}

std::string FinitaryPermutation::to_string() const {
  if (is_identity()) return "e";
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

int restricted_inversion_parity(const FinitaryPermutation& p, std::span<const int> positions) {
  for (std::size_t i = 0; i + 1 < positions.size(); ++i)
    if (positions[i] >= positions[i + 1])
      throw std::invalid_argument("positions must be sorted strictly increasing (offender: " +
                                  std::to_string(positions[i + 1]) + ")");
  if (!positions.empty() && positions.front() <= 0)
    throw std::invalid_argument("positions must be positive integers");
  int inversions = 0;
  for (std::size_t a = 0; a < positions.size(); ++a)
    for (std::size_t b = a + 1; b < positions.size(); ++b)
      if (p(positions[a]) > p(positions[b])) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

FinitaryPermutation random_permutation(int window, SplitMix64& rng) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  std::vector<int> image(window);
  std::iota(image.begin(), image.end(), 1);
  for (int i = window - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(image[i], image[j]);
  }
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(window + 1, 0);
  for (int start = 1; start <= window; ++start) {
    if (seen[start] || image[start - 1] == start) continue;
    std::vector<int> cycle;
    int point = start;
    while (!seen[point]) {
      seen[point] = 1;
      cycle.push_back(point);
      point = image[point - 1];
    }
    cycles.push_back(std::move(cycle));
  }
  return FinitaryPermutation::from_cycles(cycles);
}

}  // namespace irpdf
