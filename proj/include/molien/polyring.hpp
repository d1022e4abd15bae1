#pragma once

// Exact sparse polynomials in h_1..h_k over Q, and rational series whose
// denominators are products of binomials (1 - h_i^m).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace molien {

using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;

/// Canonical fraction text: "3", "-1/2". Never a decimal.
std::string to_fraction_string(const Rational& q);
/// Parses "p/q" or "p"; throws ValidationError on anything else.
Rational parse_fraction(const std::string& text);

/// Graded lexicographic: lower total degree first, ties broken so that
/// h1 comes before h2 (1 + h1*h2 + h1*h3 + h2*h3).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct Term {
  Exponents exponents;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial in a fixed number of variables. Terms are stored sorted by
/// GradedLexLess with no zero coefficients, so equality is structural.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 1);

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly monomial(std::size_t nvars, Exponents exponents,
                            const Rational& c = 1);
  /// h_{var+1}^power, zero-based var.
  static MultiPoly variable(std::size_t nvars, std::size_t var,
                            std::uint32_t power = 1);
  /// Sums duplicate exponents and drops zeros.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);
  /// sum_e coeffs[e] * h_var^e.
  static MultiPoly univariate(std::size_t nvars, std::size_t var,
                              const std::vector<Rational>& coeffs);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool is_constant() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// "1 + h1*h2 + 2*h1^2*h2^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_scale(const MultiPoly& p, const Rational& c);

/// Sum of all coefficients.
Rational eval_at_ones(const MultiPoly& p);

/// Renames h_i to h_{perm[i]}.
MultiPoly permute_variables(const MultiPoly& p,
                            const std::vector<std::size_t>& perm);

/// Sets every variable except `var` to zero; returns dense coefficients in
/// h_var.
std::vector<Rational> restrict_to_variable(const MultiPoly& p, std::size_t var);

/// The factor (1 - h_{var+1}^m), m >= 1.
struct BinomialFactor {
  std::size_t var = 0;
  std::uint32_t m = 1;

  MultiPoly expand(std::size_t nvars) const;
  std::string to_string() const;

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
  friend auto operator<=>(const BinomialFactor&,
                          const BinomialFactor&) = default;
};

/// numerator / prod(denominator). The denominator is a sorted multiset; an
/// empty denominator means the series is the polynomial `numerator`.
struct RationalSeries {
  MultiPoly numerator;
  std::vector<BinomialFactor> denominator;

  RationalSeries() = default;
  explicit RationalSeries(MultiPoly num, std::vector<BinomialFactor> den = {});

  std::size_t nvars() const { return numerator.nvars(); }
  bool is_polynomial() const { return denominator.empty(); }
  std::string to_string() const;

  friend bool operator==(const RationalSeries&,
                         const RationalSeries&) = default;
};

/// Places both terms over the per-factor maximum multiset; not normalized.
RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_scale(const RationalSeries& r, const Rational& c);

MultiPoly multiply_binomial(const MultiPoly& p, const BinomialFactor& f);

/// The exact quotient p / (1 - h_i^m), treating the other variables as
/// coefficients, or nullopt when the binomial does not divide p.
std::optional<MultiPoly> try_divide_binomial(const MultiPoly& p,
                                             const BinomialFactor& f);

/// Exact division by a univariate polynomial in h_var with nonzero constant
/// term; nullopt when it does not divide.
std::optional<MultiPoly> try_divide_univariate(
    const MultiPoly& p, std::size_t var, const std::vector<Rational>& divisor);
MultiPoly multiply_univariate(const MultiPoly& p, std::size_t var,
                              const std::vector<Rational>& factor);

/// Cancels every denominator factor dividing the numerator. A factor
/// (1 - h^m) whose cofactor (1 - h^m)/(1 - h^d) divides the numerator, d | m,
/// is lowered to (1 - h^d) with the smallest such d. The result has an empty
/// denominator iff r is a polynomial.
RationalSeries normalize(const RationalSeries& r);

/// Power-series expansion of r keeping only terms with every variable degree
/// <= depth.
MultiPoly truncate(const RationalSeries& r, std::uint32_t depth);
MultiPoly truncate(const MultiPoly& p, std::uint32_t depth);

/// Dense univariate helpers, coefficient of h^e at index e.
namespace dense {
using Poly = std::vector<Rational>;
void trim(Poly& p);
Poly multiply(const Poly& a, const Poly& b);
/// Exact quotient or nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
/// Monic gcd.
Poly gcd(Poly a, Poly b);
std::string to_string(const Poly& p, const std::string& var);
}  // namespace dense

}  // namespace molien
