#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fsmaps {

/// Integer partition: a weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; they are sorted into weakly decreasing order.
  /// Throws InvalidInput on a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Comma-separated positive integers, e.g. "2,1,1". Any order is accepted.
  static Partition parse(std::string_view text);
  /// (1^d)
  static Partition ones(int d);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const;  ///< |λ|
  int length() const { return static_cast<int>(parts_.size()); }  ///< ℓ(λ)
  bool empty() const { return parts_.empty(); }
  int multiplicity(int j) const;  ///< m_j(λ)

  /// Contents j - i of the boxes (i, j) of the Young diagram, row by row.
  std::vector<int> contents() const;

  /// "(2,1,1)"
  std::string to_string() const;
  /// "2,1,1"
  std::string to_csv() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of d in reverse lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of(int d);

/// z(λ) = Π λ_i · Π_j m_j(λ)!. Throws InvalidInput for the empty partition.
std::uint64_t z_factor(const Partition& lambda);
/// d!/z(λ), the number of permutations of cycle type λ.
std::uint64_t class_size(const Partition& lambda);
std::uint64_t factorial(int n);

}  // namespace fsmaps
