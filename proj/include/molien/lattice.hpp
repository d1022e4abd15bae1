#pragma once

// Vectors and subgroups of (Z/NZ)^m, S_m-stability, orthogonals, and the
// built-in H of each group family G = H x| S_n.

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include <gmpxx.h>

#include "molien/errors.hpp"

namespace molien {

class Partition;

/// An element of (Z/NZ)^m, components reduced to [0, N-1].
class ZModVec {
 public:
  ZModVec(int modulus, std::vector<int> components);

  static ZModVec zero(int modulus, std::size_t dim);

  int modulus() const { return modulus_; }
  std::size_t size() const { return components_.size(); }
  int operator[](std::size_t i) const { return components_[i]; }
  const std::vector<int>& components() const { return components_; }

  ZModVec operator+(const ZModVec& other) const;
  ZModVec operator-() const;
  ZModVec scaled(int factor) const;
  /// Dot product reduced mod N.
  int dot(const ZModVec& other) const;

  std::string to_string() const;

  friend bool operator==(const ZModVec&, const ZModVec&) = default;
  friend auto operator<=>(const ZModVec&, const ZModVec&) = default;

 private:
  int modulus_;
  std::vector<int> components_;
};

/// A subgroup of (Z/NZ)^m with its element set materialized.
///
/// Elements are kept sorted lexicographically; membership goes through a hash
/// set of base-N codes (first component most significant).
class ZModSubgroup {
 public:
  int modulus() const { return modulus_; }
  std::size_t dim() const { return dim_; }
  const std::vector<ZModVec>& generators() const { return generators_; }
  const std::vector<ZModVec>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }

  bool contains(const ZModVec& v) const;
  bool contains(const std::vector<int>& residues) const;

  /// Same modulus, dimension and element set.
  friend bool operator==(const ZModSubgroup& a, const ZModSubgroup& b) {
    return a.modulus_ == b.modulus_ && a.dim_ == b.dim_ &&
           a.elements_ == b.elements_;
  }
  /// Element-set inclusion.
  bool is_subgroup_of(const ZModSubgroup& other) const;

 private:
  friend struct SubgroupAccess;

  int modulus_ = 2;
  std::size_t dim_ = 0;
  std::vector<ZModVec> generators_;
  std::vector<ZModVec> elements_;
  std::unordered_set<std::uint64_t> codes_;
};

/// Smallest subgroup of (Z/NZ)^m containing the generators.
/// Throws CapacityError when N^m exceeds limits.enumeration_cap.
ZModSubgroup enumerate_subgroup(int modulus, std::size_t dim,
                                const std::vector<ZModVec>& generators,
                                const Limits& limits = {});

/// True iff every adjacent transposition of coordinates maps H into H.
bool is_sn_stable(const ZModSubgroup& h);

/// {v : v.g = 0 mod N for every generator g of H}.
ZModSubgroup orthogonal(const ZModSubgroup& h, const Limits& limits = {});

/// The residue tuples (k_1..k_l) whose expansion, k_j repeated alpha_j times,
/// lies in hperp. alpha must partition hperp.dim().
ZModSubgroup orthogonal_alpha(const ZModSubgroup& hperp, const Partition& alpha,
                              const Limits& limits = {});

enum class Family {
  symmetric,
  hyperoctahedral,
  demihyperoctahedral,
  dihedral,
  g_de_e_n,
  custom,
};

std::string family_name(Family f);

/// A problem instance G = H x| S_n acting on (C^n)^k.
struct GroupSpec {
  int modulus = 2;  // N
  int n = 1;
  ZModSubgroup h;
  Family family = Family::custom;
  /// Human label, e.g. "B_3" or "G(6,3,2)".
  std::string label;
  mpz_class order_h;
  mpz_class order_g;  // |H| * n!
};

/// Parameters for family_subgroup. Unused fields are ignored per family.
struct FamilyRequest {
  enum class Kind {
    symmetric,
    hyperoctahedral,
    demihyperoctahedral,
    dihedral,
    g_de_e_n,
    g2_example,
    custom,
  };
  Kind kind = Kind::symmetric;
  int n = 0;
  int modulus = 0;
  int d = 0;
  int e = 0;
  std::vector<std::vector<int>> generators;  // custom only
};

GroupSpec family_subgroup(const FamilyRequest& request,
                          const Limits& limits = {});

namespace families {
GroupSpec symmetric(int n, const Limits& limits = {});
GroupSpec hyperoctahedral(int n, const Limits& limits = {});
GroupSpec demihyperoctahedral(int n, const Limits& limits = {});
GroupSpec dihedral(int modulus, const Limits& limits = {});
GroupSpec g_de_e_n(int d, int e, int n, const Limits& limits = {});
/// N = 2, n = 3, H = <(1,1,1)>: the G_2 counterexample.
GroupSpec g2_example(const Limits& limits = {});
GroupSpec custom(int modulus, int n,
                 const std::vector<std::vector<int>>& generators,
                 const Limits& limits = {});
}  // namespace families

}  // namespace molien
