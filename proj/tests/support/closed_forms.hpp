#pragma once

// Closed forms of P_alpha for the named families, evaluated directly from
// their product / root-of-unity expressions.

#include <vector>

#include "molien/partitions.hpp"
#include "reference.hpp"

namespace closed {

using molien::MultiPoly;
using molien::Partition;
using molien::Rational;

// prod_i (1 + s * h_i^a)
inline MultiPoly row_product(std::size_t k, std::uint32_t a, int s) {
  MultiPoly out = ref::one(k);
  for (std::size_t i = 0; i < k; ++i) out = out * (ref::one(k) + Rational(s) * ref::h(k, i, a));
  return out;
}

// Trivial H, N = 2: prod_{i,j} (1 + h_i^alpha_j).
inline MultiPoly symmetric(std::size_t k, const Partition& alpha) {
  MultiPoly out = ref::one(k);
  for (int a : alpha.parts()) out = out * row_product(k, a, 1);
  return out;
}

inline MultiPoly even_half(std::size_t k, int a) {
  return Rational(1, 2) * (row_product(k, a, 1) + row_product(k, a, -1));
}

inline MultiPoly odd_half(std::size_t k, int a) {
  return Rational(1, 2) * (row_product(k, a, 1) - row_product(k, a, -1));
}

// Full H, N = 2.
inline MultiPoly hyperoctahedral(std::size_t k, const Partition& alpha) {
  MultiPoly out = ref::one(k);
  for (int a : alpha.parts()) out = out * even_half(k, a);
  return out;
}

// Even-weight H, N = 2.
inline MultiPoly demihyperoctahedral(std::size_t k, const Partition& alpha) {
  MultiPoly even = ref::one(k), odd = ref::one(k);
  for (int a : alpha.parts()) {
    even = even * even_half(k, a);
    odd = odd * odd_half(k, a);
  }
  return even + odd;
}

// Dihedral, alpha = (2): prod_i (1 + h_i^2 + ... + h_i^(2(N-1))).
inline MultiPoly dihedral_two(int modulus, std::size_t k) {
  MultiPoly out = ref::one(k);
  for (std::size_t i = 0; i < k; ++i) {
    MultiPoly row(k);
    for (int t = 0; t < modulus; ++t) row += ref::h(k, i, 2 * t);
    out = out * row;
  }
  return out;
}

// Dihedral, alpha = (1,1):
//   sum_a ( (1/N) sum_b xi^(ab) prod_i (1 + xi^b h_i + ... + xi^(b(N-1)) h_i^(N-1)) )^2
// with xi a primitive N-th root of unity; N prime.
inline MultiPoly dihedral_one_one(int modulus, std::size_t k) {
  using ref::CyclotomicPoly;
  CyclotomicPoly total(modulus, k);
  for (int a = 0; a < modulus; ++a) {
    CyclotomicPoly inner(modulus, k);
    for (int b = 0; b < modulus; ++b) {
      CyclotomicPoly term = CyclotomicPoly::scalar(modulus, ref::one(k), a * b);
      for (std::size_t i = 0; i < k; ++i) {
        CyclotomicPoly row(modulus, k);
        for (int t = 0; t < modulus; ++t)
          row = row + CyclotomicPoly::scalar(modulus, ref::h(k, i, t), b * t);
        term = term * row;
      }
      inner = inner + term;
    }
    inner = inner.scaled(Rational(1, modulus));
    total = total + inner * inner;
  }
  return total.rational_value();
}

// G(de,e,n):
//   sum_lambda prod_j ( (1/e) sum_a xi^(a lambda) prod_i (1 + xi^a h_i^alpha_j) )
// with xi a primitive e-th root of unity; e prime or 1.
inline MultiPoly g_de_e_n(int e, std::size_t k, const Partition& alpha) {
  using ref::CyclotomicPoly;
  CyclotomicPoly total(e, k);
  for (int lambda = 0; lambda < e; ++lambda) {
    CyclotomicPoly product = CyclotomicPoly::scalar(e, ref::one(k));
    for (int part : alpha.parts()) {
      CyclotomicPoly column(e, k);
      for (int a = 0; a < e; ++a) {
        CyclotomicPoly term = CyclotomicPoly::scalar(e, ref::one(k), a * lambda);
        for (std::size_t i = 0; i < k; ++i)
          term = term * (CyclotomicPoly::scalar(e, ref::one(k)) +
                         CyclotomicPoly::scalar(e, ref::h(k, i, part), a));
        column = column + term;
      }
      product = product * column.scaled(Rational(1, e));
    }
    total = total + product;
  }
  return total.rational_value();
}

// N = 2, n = 3, H = <(1,1,1)>.
inline MultiPoly g2_example(std::size_t k, const Partition& alpha) {
  if (alpha == Partition({3})) return even_half(k, 3);
  if (alpha == Partition({1, 2})) return even_half(k, 1) * row_product(k, 2, 1);
  const auto even = even_half(k, 1), odd = odd_half(k, 1);
  return ref::power(even, 3) + Rational(3) * even * ref::power(odd, 2);
}

}  // namespace closed
