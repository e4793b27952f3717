#pragma once

#include <functional>
#include <map>
#include <vector>

#include "fsmaps/partition.hpp"
#include "fsmaps/permutation.hpp"
#include "fsmaps/series.hpp"

namespace fsmaps {

/// Irreducible character χ_ρ evaluated on the class of cycle type λ.
/// Murnaghan–Nakayama rule on beta-sets, memoized on (ρ, λ).
long character(const Partition& rho, const Partition& lambda);

/// Visits every permutation of S_d with cycle type λ exactly once, in
/// lexicographic order of image sequences.
void for_each_in_class(const Partition& lambda, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_class(const Partition& lambda);

/// All (n-1)!! fixed-point-free involutions of n points, lexicographic on images.
/// Throws InvalidInput for odd n.
std::vector<Permutation> enumerate_fpf_involutions(int n);

/// Element of the centre Z Q[S_d], written in the class-sum basis C_λ.
struct CentralElement {
  int degree = 0;
  std::map<Partition, Rational> coeffs;  ///< zero coefficients are not stored

  static CentralElement class_sum(const Partition& lambda);
  static CentralElement identity(int d) { return class_sum(Partition::ones(d)); }

  Rational operator[](const Partition& lambda) const;
  /// Coefficient of the identity permutation.
  Rational identity_coefficient() const { return (*this)[Partition::ones(degree)]; }

  CentralElement& operator+=(const CentralElement& other);
  CentralElement& operator*=(const Rational& scalar);

  friend bool operator==(const CentralElement&, const CentralElement&) = default;
};

/// Product in the group algebra re-expressed in class sums, using structure
/// constants obtained by direct convolution over S_d.
/// Throws InvalidInput when the degrees differ.
CentralElement central_multiply(const CentralElement& a, const CentralElement& b);

/// Coefficients of h^0..h^order in Π_{m=2}^d (1 + h J_m) (`weak == false`)
/// or Π_{m=2}^d 1/(1 - h J_m) (`weak == true`), J_m = Σ_{l<m} (l m).
/// The products are expanded in the full group algebra and then rewritten
/// in the class basis; a non-central intermediate result is a logic error.
std::vector<CentralElement> jucys_murphy_expansion(int d, int order, bool weak);

}  // namespace fsmaps
