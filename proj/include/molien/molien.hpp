#pragma once

// Multigraded Hilbert series of diagonal invariants (C[V^k])^G for
// G = H x| S_n, summed over cycle types of S_n.

#include <optional>
#include <vector>

#include "molien/lattice.hpp"
#include "molien/partitions.hpp"
#include "molien/polyring.hpp"

namespace molien {

/// Sum over k x l residue matrices a_{i,j} in [0, N-1] whose column sums
/// reduce into H_alpha^perp of prod_i h_i^(sum_j alpha_j a_{i,j}).
MultiPoly compute_P_alpha(const GroupSpec& spec, const Partition& alpha, int k,
                          const Limits& limits = {});

/// P_alpha / prod_{i,j} (1 - h_i^(N alpha_j)): the series of monomials fixed
/// by a permutation of cycle type alpha.
RationalSeries chi_series(const GroupSpec& spec, const Partition& alpha, int k,
                          const Limits& limits = {});

/// R_k^G, normalized.
RationalSeries compute_R_k(const GroupSpec& spec, int k,
                           const Limits& limits = {});

struct QResult {
  GroupSpec group;
  int k = 1;
  RationalSeries r_k;
  RationalSeries r_1;
  /// R_k / (R_1(h_1) ... R_1(h_k)), normalized.
  RationalSeries q;
  bool is_polynomial = false;
  /// Q(1,...,1); set only when Q is a polynomial.
  std::optional<Rational> rank;
  /// |G|^(k-1).
  mpz_class expected_rank;
  /// Set only when Q is a polynomial.
  std::optional<bool> is_separable;
  /// Per variable, a factor of the denominator of Q that has no binomial
  /// form (R_1's numerator is not a product of cyclotomics). {1} otherwise.
  std::vector<dense::Poly> residual_denominators;
  /// Per variable, the denominator of Q in lowest terms, constant term 1.
  /// All equal to {1} when Q is a polynomial.
  std::vector<dense::Poly> reduced_denominators;
};

QResult compute_Q(const GroupSpec& spec, int k, const Limits& limits = {});

/// True iff Q = q(h_1) ... q(h_k) where q(h) = Q(h, 0, ..., 0).
/// Throws ValidationError unless Q(0,...,0) = 1.
bool separability_test(const MultiPoly& q);

/// lim_{h -> 1} prod_i (1 - h_i)^n R_k^G(h), computed term by term.
Rational scaled_limit(const GroupSpec& spec, int k, const Limits& limits = {});

/// Smallest M with p | (1 - h^M), or nullopt when p is not a product of
/// cyclotomic polynomials. p must have a nonzero constant term.
std::optional<std::uint32_t> binomial_multiple(const dense::Poly& p);

/// The denominator of r in variable `var` after cancelling its gcd with the
/// numerator, scaled to constant term 1.
dense::Poly reduced_denominator(const RationalSeries& r, std::size_t var);

}  // namespace molien
