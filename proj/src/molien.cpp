#include "molien/molien.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "molien/errors.hpp"

namespace molien {

namespace {

Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_k(int k) {
  if (k < 1) throw ValidationError("k must be at least 1");
}

MultiPoly shifted(const MultiPoly& p, std::size_t var, std::uint32_t by) {
  if (by == 0) return p;
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) t.exponents[var] += by;
  return MultiPoly::from_terms(p.nvars(), std::move(terms));
}

// column[r] = sum over (a_1..a_k) in [0,N-1]^k with sum = r mod N of
// prod_i h_i^(part * a_i).
std::vector<MultiPoly> column_by_residue(int modulus, int part, int k) {
  const auto nvars = static_cast<std::size_t>(k);
  std::vector<MultiPoly> state(modulus, MultiPoly(nvars));
  state[0] = MultiPoly::constant(nvars, 1);
  for (int row = 0; row < k; ++row) {
    std::vector<MultiPoly> next(modulus, MultiPoly(nvars));
    for (int r = 0; r < modulus; ++r) {
      if (state[r].is_zero()) continue;
      for (int a = 0; a < modulus; ++a)
        next[(r + a) % modulus] +=
            shifted(state[r], static_cast<std::size_t>(row),
                    static_cast<std::uint32_t>(part * a));
    }
    state = std::move(next);
  }
  return state;
}

// Adds, for each element of `elems` in [lo, hi) sharing the first `depth`
// components, partial * prod_{j >= depth} columns[j][element_j].
void accumulate(const std::vector<ZModVec>& elems, std::size_t lo,
                std::size_t hi, std::size_t depth,
                const std::vector<const std::vector<MultiPoly>*>& columns,
                const MultiPoly& partial, MultiPoly& out) {
  if (depth == columns.size()) {
    out += partial;
    return;
  }
  std::size_t i = lo;
  while (i < hi) {
    const int r = elems[i][depth];
    std::size_t j = i;
    while (j < hi && elems[j][depth] == r) ++j;
    const MultiPoly& column = (*columns[depth])[r];
    if (!column.is_zero())
      accumulate(elems, i, j, depth + 1, columns, partial * column, out);
    i = j;
  }
}

void check_P_size(const GroupSpec& spec, const Partition& alpha, int k,
                  const Limits& limits) {
  // each h_i-degree is at most n (N - 1); bound the dense term count
  const std::uint64_t per_var =
      static_cast<std::uint64_t>(alpha.n()) * (spec.modulus - 1) + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > limits.enumeration_cap / per_var) {
      std::ostringstream msg;
      msg << "P_alpha for " << alpha.to_string() << " with k=" << k
          << " may reach " << per_var << "^" << k
          << " terms, beyond the enumeration cap " << limits.enumeration_cap;
      throw CapacityError(msg.str());
    }
    total *= per_var;
  }
}

MultiPoly P_alpha_from_hperp(const GroupSpec& spec, const ZModSubgroup& hperp,
                             const Partition& alpha, int k,
                             const Limits& limits) {
  check_P_size(spec, alpha, k, limits);
  const ZModSubgroup h_alpha = orthogonal_alpha(hperp, alpha, limits);

  std::map<int, std::vector<MultiPoly>> by_part;
  for (int part : alpha.parts())
    if (!by_part.contains(part))
      by_part.emplace(part, column_by_residue(spec.modulus, part, k));
  std::vector<const std::vector<MultiPoly>*> columns;
  for (int part : alpha.parts()) columns.push_back(&by_part.at(part));

  const auto nvars = static_cast<std::size_t>(k);
  MultiPoly out(nvars);
  accumulate(h_alpha.elements(), 0, h_alpha.elements().size(), 0, columns,
             MultiPoly::constant(nvars, 1), out);
  return out;
}

// Coefficient polynomials of p viewed in h_var over the other variables.
std::vector<dense::Poly> slices_in(const MultiPoly& p, std::size_t var) {
  std::map<Exponents, dense::Poly> slices;
  for (const auto& t : p.terms()) {
    Exponents rest = t.exponents;
    const auto e = rest[var];
    rest[var] = 0;
    auto& s = slices[rest];
    if (s.size() <= e) s.resize(e + 1);
    s[e] = t.coeff;
  }
  std::vector<dense::Poly> out;
  for (auto& [rest, s] : slices) out.push_back(std::move(s));
  return out;
}

RationalSeries chi_from_P(const GroupSpec& spec, const Partition& alpha, int k,
                          MultiPoly p) {
  std::vector<BinomialFactor> den;
  for (int i = 0; i < k; ++i)
    for (int part : alpha.parts())
      den.push_back(BinomialFactor{static_cast<std::size_t>(i),
                                   static_cast<std::uint32_t>(spec.modulus * part)});
  return RationalSeries(std::move(p), std::move(den));
}

}  // namespace

MultiPoly compute_P_alpha(const GroupSpec& spec, const Partition& alpha, int k,
                          const Limits& limits) {
  require_k(k);
  if (alpha.n() != spec.n)
    throw ValidationError("partition " + alpha.to_string() +
                          " does not partition n=" + std::to_string(spec.n));
  return P_alpha_from_hperp(spec, orthogonal(spec.h, limits), alpha, k, limits);
}

RationalSeries chi_series(const GroupSpec& spec, const Partition& alpha, int k,
                          const Limits& limits) {
  return chi_from_P(spec, alpha, k, compute_P_alpha(spec, alpha, k, limits));
}

RationalSeries compute_R_k(const GroupSpec& spec, int k, const Limits& limits) {
  require_k(k);
  const ZModSubgroup hperp = orthogonal(spec.h, limits);
  const mpz_class n_factorial = factorial(spec.n);
  RationalSeries sum(MultiPoly(static_cast<std::size_t>(k)));
  for (const Partition& alpha : partitions_of(spec.n)) {
    RationalSeries term = chi_from_P(
        spec, alpha, k, P_alpha_from_hperp(spec, hperp, alpha, k, limits));
    const Rational weight = ratio(class_size(alpha), n_factorial);
    sum = series_add(sum, series_scale(term, weight));
  }
  return normalize(sum);
}

std::optional<std::uint32_t> binomial_multiple(const dense::Poly& p) {
  dense::Poly rest = p;
  dense::trim(rest);
  if (rest.empty() || rest[0] == 0)
    throw ValidationError("binomial_multiple needs a nonzero constant term");
  const std::size_t degree = rest.size() - 1;
  if (degree == 0) return 1;

  // psi[d] = (1 - h^d) / prod_{e | d, e < d} psi[e], the d-th cyclotomic
  // polynomial normalized to constant term 1. Its degree phi(d) satisfies
  // phi(d) >= sqrt(d / 2), so d <= 2 deg^2 covers every candidate factor.
  const std::size_t bound = 2 * degree * degree + 2;
  std::vector<dense::Poly> psi(bound + 1);
  std::uint32_t lcm = 1;
  for (std::size_t d = 1; d <= bound && rest.size() > 1; ++d) {
    dense::Poly binomial(d + 1);
    binomial[0] = 1;
    binomial[d] = -1;
    for (std::size_t e = 1; e < d; ++e)
      if (d % e == 0) binomial = *dense::divide_exact(binomial, psi[e]);
    psi[d] = binomial;
    if (psi[d].size() > rest.size()) continue;
    while (auto q = dense::divide_exact(rest, psi[d])) {
      rest = std::move(*q);
      lcm = std::lcm(lcm, static_cast<std::uint32_t>(d));
    }
  }
  if (rest.size() > 1) return std::nullopt;
  return lcm;
}

dense::Poly reduced_denominator(const RationalSeries& r, std::size_t var) {
  dense::Poly den{1};
  for (const auto& f : r.denominator) {
    if (f.var != var) continue;
    dense::Poly binomial(f.m + 1);
    binomial[0] = 1;
    binomial[f.m] = -1;
    den = dense::multiply(den, binomial);
  }
  dense::Poly g = den;
  for (const auto& s : slices_in(r.numerator, var)) {
    if (g.size() <= 1) break;
    g = dense::gcd(g, s);
  }
  dense::Poly reduced = *dense::divide_exact(den, g);
  const Rational constant = reduced.front();
  for (auto& c : reduced) c /= constant;
  return reduced;
}

QResult compute_Q(const GroupSpec& spec, int k, const Limits& limits) {
  require_k(k);
  QResult result;
  result.group = spec;
  result.k = k;
  result.r_1 = compute_R_k(spec, 1, limits);
  result.r_k = k == 1 ? result.r_1 : compute_R_k(spec, k, limits);

  const dense::Poly r1_num = restrict_to_variable(result.r_1.numerator, 0);
  MultiPoly num = result.r_k.numerator;
  std::vector<BinomialFactor> den = result.r_k.denominator;
  std::vector<dense::Poly> residual(static_cast<std::size_t>(k), dense::Poly{1});

  for (int i = 0; i < k; ++i) {
    const auto var = static_cast<std::size_t>(i);
    // multiply by the denominator of R_1(h_i)
    for (const auto& f : result.r_1.denominator) {
      const BinomialFactor g{var, f.m};
      auto it = std::find(den.begin(), den.end(), g);
      if (it != den.end()) {
        den.erase(it);
      } else {
        num = multiply_binomial(num, g);
      }
    }
    // divide by the numerator of R_1(h_i)
    if (r1_num.size() == 1) {
      num *= 1 / r1_num[0];
    } else if (auto q = try_divide_univariate(num, var, r1_num)) {
      num = std::move(*q);
    } else if (const auto big_m = binomial_multiple(r1_num)) {
      // 1/a = c/(1 - h^M) with c = (1 - h^M)/a
      dense::Poly binomial(*big_m + 1);
      binomial[0] = 1;
      binomial[*big_m] = -1;
      num = multiply_univariate(num, var,
                                *dense::divide_exact(binomial, r1_num));
      den.push_back(BinomialFactor{var, *big_m});
    } else {
      // cancel what the numerator shares with a, keep the rest aside
      dense::Poly g = r1_num;
      for (const auto& slice : slices_in(num, var)) {
        if (g.size() <= 1) break;
        g = dense::gcd(g, slice);
      }
      dense::Poly rest = *dense::divide_exact(r1_num, g);
      num = *try_divide_univariate(num, var, g);
      num *= 1 / rest.front();
      const Rational constant = rest.front();
      for (auto& c : rest) c /= constant;
      residual[var] = std::move(rest);
    }
  }

  result.q = normalize(RationalSeries(std::move(num), std::move(den)));
  result.is_polynomial =
      result.q.is_polynomial() &&
      std::all_of(residual.begin(), residual.end(),
                  [](const dense::Poly& p) { return p.size() == 1; });
  mpz_pow_ui(result.expected_rank.get_mpz_t(), spec.order_g.get_mpz_t(),
             static_cast<unsigned long>(k - 1));
  for (std::size_t i = 0; i < residual.size(); ++i)
    result.reduced_denominators.push_back(
        result.is_polynomial
            ? dense::Poly{1}
            : dense::multiply(reduced_denominator(result.q, i), residual[i]));
  result.residual_denominators = std::move(residual);
  if (result.is_polynomial) {
    result.rank = eval_at_ones(result.q.numerator);
    result.is_separable = separability_test(result.q.numerator);
  }
  return result;
}

bool separability_test(const MultiPoly& q) {
  if (q.constant_term() != 1)
    throw ValidationError("separability_test needs Q(0,...,0) = 1");
  const dense::Poly candidate = restrict_to_variable(q, 0);
  MultiPoly product = MultiPoly::constant(q.nvars(), 1);
  for (std::size_t i = 0; i < q.nvars(); ++i)
    product *= MultiPoly::univariate(q.nvars(), i, candidate);
  return product == q;
}

Rational scaled_limit(const GroupSpec& spec, int k, const Limits& limits) {
  require_k(k);
  const ZModSubgroup hperp = orthogonal(spec.h, limits);
  const mpz_class n_factorial = factorial(spec.n);
  Rational limit = 0;
  for (const Partition& alpha : partitions_of(spec.n)) {
    // (1 - h)^(n - l) survives unless every cycle is a fixed point
    if (alpha.length() != spec.n) continue;
    const MultiPoly p = P_alpha_from_hperp(spec, hperp, alpha, k, limits);
    // 1 - h^m = (1 - h) [m]_h and [m]_1 = m
    mpz_class bracket_product = 1;
    for (int i = 0; i < k; ++i)
      for (int part : alpha.parts()) bracket_product *= spec.modulus * part;
    limit += ratio(class_size(alpha), n_factorial) * eval_at_ones(p) /
             Rational(bracket_product);
  }
  return limit;
}

}  // namespace molien
