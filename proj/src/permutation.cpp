#include "fsmaps/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "fsmaps/error.hpp"
#include "fsmaps/partition.hpp"

namespace fsmaps {

Permutation::Permutation(std::size_t n) : images_(n) {
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<int>(i);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[x])
      throw InvalidInput("images do not form a bijection");
    seen[x] = 1;
  }
  return Permutation(std::move(images), true);
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero(images.begin(), images.end());
  for (int& x : zero) --x;
  return from_images(std::move(zero));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i);
  std::vector<char> used(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || static_cast<std::size_t>(from) >= n || used[from])
        throw InvalidInput("cycles are not disjoint points of the ground set");
      used[from] = 1;
      images[from] = to;
    }
  }
  return from_images(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, int a, int b) {
  Permutation p(n);
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
    throw InvalidInput("transposition point outside the ground set");
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int& x : out) ++x;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv), true);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_fixed_point_free_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    int j = images_[i];
    if (j == static_cast<int>(i) || images_[j] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(i); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::cycle_count() const { return count_cycles(images_); }

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidInput("mismatched ground sizes");
  std::vector<int> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[i] = p(q(static_cast<int>(i)));
  return Permutation::from_images(std::move(images));
}

std::size_t count_cycles(std::span<const int> images) {
  std::vector<char> seen(images.size(), 0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int x = static_cast<int>(i); !seen[x]; x = images[x]) seen[x] = 1;
  }
  return count;
}

}  // namespace fsmaps

std::size_t std::hash<fsmaps::Permutation>::operator()(const fsmaps::Permutation& p) const noexcept {
  std::size_t h = p.size();
  for (int x : p.images()) h = h * 1000003u ^ static_cast<std::size_t>(x);
  return h;
}
