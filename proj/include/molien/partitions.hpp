#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace molien {

/// A partition alpha_1 <= ... <= alpha_l of n.
class Partition {
 public:
  /// Parts are sorted ascending; every part must be positive.
  explicit Partition(std::vector<int> parts);

  /// theta[i-1] = number of parts equal to i, for 1 <= i <= theta.size().
  static Partition from_multiplicities(const std::vector<int>& theta);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int j) const { return parts_[j]; }

  /// theta_i for 1 <= i <= n.
  int multiplicity(int i) const;
  /// theta_1..theta_n.
  std::vector<int> multiplicities() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Every partition of n once, lexicographic on the ascending part sequence.
/// Throws ValidationError for n <= 0.
std::vector<Partition> partitions_of(int n);

/// Number of permutations of S_n with cycle type alpha.
mpz_class class_size(const Partition& alpha);

mpz_class factorial(unsigned n);

}  // namespace molien
