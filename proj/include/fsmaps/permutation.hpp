#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fsmaps {

class Partition;

/// A bijection of a finite ground set.
///
/// Points are stored 0-based; every text or JSON rendering is 1-based.
/// Composition is right-to-left: `compose(p, q)(x) == p(q(x))`, and
/// `p * q` is shorthand for `compose(p, q)`.
class Permutation {
 public:
  Permutation() = default;
  /// Identity on `n` points.
  explicit Permutation(std::size_t n);

  /// Throws InvalidInput unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<int> images);
  static Permutation from_one_based(std::span<const int> images);
  /// Cycles are given 1-based, e.g. {{1, 2, 3}} for (1 2 3).
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);
  /// 0-based points.
  static Permutation transposition(std::size_t n, int a, int b);

  std::size_t size() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;
  bool is_fixed_point_free_involution() const;

  /// Disjoint cycles, each starting at its smallest point, ordered by that point.
  /// Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;
  std::size_t cycle_count() const;
  Partition cycle_type() const;

  /// 1-based cycle notation without fixed points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images, bool /*trusted*/) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// (p∘q)(x) = p(q(x)). Throws InvalidInput on mismatched ground sizes.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Number of cycles of the permutation given as an image array (fixed points included).
std::size_t count_cycles(std::span<const int> images);

}  // namespace fsmaps

template <>
struct std::hash<fsmaps::Permutation> {
  std::size_t operator()(const fsmaps::Permutation& p) const noexcept;
};
