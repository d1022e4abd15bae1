#include "molien/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "molien/errors.hpp"

namespace molien {

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

Rational parse_fraction(const std::string& text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? digits(body)
                      : digits(body.substr(0, slash)) &&
                            digits(body.substr(slash + 1));
  if (!ok) throw ValidationError("malformed fraction '" + text + "'");
  Rational q;
  q.set_str(text, 10);
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return b < a;
}

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : e) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

using Accumulator = std::unordered_map<Exponents, Rational, ExponentsHash>;

std::vector<Term> collect(Accumulator&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back(Term{e, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return GradedLexLess{}(a.exponents, b.exponents);
  });
  return out;
}

void require_same_nvars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    throw ValidationError("polynomials have different variable counts (" +
                          std::to_string(a.nvars()) + " vs " +
                          std::to_string(b.nvars()) + ")");
}

// Dense coefficient vectors in h_var keyed by the remaining exponents.
using Slices = std::map<Exponents, std::vector<Rational>>;

Slices slice(const MultiPoly& p, std::size_t var) {
  Slices out;
  for (const auto& t : p.terms()) {
    Exponents rest = t.exponents;
    const auto e = rest[var];
    rest[var] = 0;
    auto& dense = out[rest];
    if (dense.size() <= e) dense.resize(e + 1);
    dense[e] = t.coeff;
  }
  return out;
}

MultiPoly assemble(std::size_t nvars, std::size_t var, const Slices& slices) {
  std::vector<Term> terms;
  for (const auto& [rest, dense] : slices) {
    for (std::size_t e = 0; e < dense.size(); ++e) {
      if (dense[e] == 0) continue;
      Exponents exps = rest;
      exps[var] = static_cast<std::uint32_t>(e);
      terms.push_back(Term{std::move(exps), dense[e]});
    }
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "h" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars_ == 0) throw ValidationError("polynomials need at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, Exponents(nvars, 0), c);
}

MultiPoly MultiPoly::monomial(std::size_t nvars, Exponents exponents,
                              const Rational& c) {
  if (exponents.size() != nvars)
    throw ValidationError("exponent vector length does not match nvars");
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back(Term{std::move(exponents), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var,
                              std::uint32_t power) {
  Exponents e(nvars, 0);
  e.at(var) = power;
  return monomial(nvars, std::move(e));
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) {
    if (t.exponents.size() != nvars)
      throw ValidationError("exponent vector length does not match nvars");
    acc[std::move(t.exponents)] += t.coeff;
  }
  MultiPoly p(nvars);
  p.terms_ = collect(std::move(acc));
  return p;
}

MultiPoly MultiPoly::univariate(std::size_t nvars, std::size_t var,
                                const std::vector<Rational>& coeffs) {
  if (var >= nvars) throw ValidationError("variable index out of range");
  Slices s;
  s[Exponents(nvars, 0)] = coeffs;
  return assemble(nvars, var, s);
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e, [](const Term& t, const Exponents& x) {
        return GradedLexLess{}(t.exponents, x);
      });
  if (it != terms_.end() && it->exponents == e) return it->coeff;
  return 0;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() &&
      std::all_of(terms_.front().exponents.begin(),
                  terms_.front().exponents.end(),
                  [](auto x) { return x == 0; }))
    return terms_.front().coeff;
  return 0;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents.at(var));
  return d;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && constant_term() != 0);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_nvars(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  const GradedLexLess less;
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && less(a->exponents, b->exponents))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || less(b->exponents, a->exponents)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(Term{std::move(a->exponents), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  return *this += -other;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_nvars(a, b);
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  Exponents e(a.nvars());
  Rational product;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ta.exponents[i] + tb.exponents[i];
      mpq_mul(product.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      acc[e] += product;
    }
  }
  MultiPoly out(a.nvars());
  out.terms_ = collect(std::move(acc));
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    const std::string mono = monomial_string(t.exponents);
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly poly_scale(const MultiPoly& p, const Rational& c) { return p * c; }

Rational eval_at_ones(const MultiPoly& p) {
  Rational sum = 0;
  for (const auto& t : p.terms()) sum += t.coeff;
  return sum;
}

MultiPoly permute_variables(const MultiPoly& p,
                            const std::vector<std::size_t>& perm) {
  if (perm.size() != p.nvars())
    throw ValidationError("permutation length does not match nvars");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Exponents e(p.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = t.exponents[i];
    terms.push_back(Term{std::move(e), t.coeff});
  }
  return MultiPoly::from_terms(p.nvars(), std::move(terms));
}

std::vector<Rational> restrict_to_variable(const MultiPoly& p,
                                           std::size_t var) {
  std::vector<Rational> out;
  for (const auto& t : p.terms()) {
    bool only_var = true;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (i != var && t.exponents[i] != 0) only_var = false;
    if (!only_var) continue;
    const auto e = t.exponents[var];
    if (out.size() <= e) out.resize(e + 1);
    out[e] = t.coeff;
  }
  return out;
}

MultiPoly BinomialFactor::expand(std::size_t nvars) const {
  return MultiPoly::constant(nvars, 1) - MultiPoly::variable(nvars, var, m);
}

std::string BinomialFactor::to_string() const {
  std::string out = "(1 - h" + std::to_string(var + 1);
  if (m > 1) out += "^" + std::to_string(m);
  return out + ")";
}

RationalSeries::RationalSeries(MultiPoly num, std::vector<BinomialFactor> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  for (const auto& f : denominator) {
    if (f.m < 1) throw ValidationError("binomial exponent must be >= 1");
    if (f.var >= numerator.nvars())
      throw ValidationError("binomial variable index out of range");
  }
  std::sort(denominator.begin(), denominator.end());
}

std::string RationalSeries::to_string() const {
  if (denominator.empty()) return numerator.to_string();
  std::string den;
  for (std::size_t i = 0; i < denominator.size();) {
    std::size_t j = i;
    while (j < denominator.size() && denominator[j] == denominator[i]) ++j;
    if (!den.empty()) den += "*";
    den += denominator[i].to_string();
    if (j - i > 1) den += "^" + std::to_string(j - i);
    i = j;
  }
  return "(" + numerator.to_string() + ") / (" + den + ")";
}

namespace {

// Factors of `common` left over after removing `part` (both sorted).
std::vector<BinomialFactor> multiset_difference(
    const std::vector<BinomialFactor>& common,
    const std::vector<BinomialFactor>& part) {
  std::vector<BinomialFactor> out;
  std::set_difference(common.begin(), common.end(), part.begin(), part.end(),
                      std::back_inserter(out));
  return out;
}

MultiPoly multiply_all(MultiPoly p, const std::vector<BinomialFactor>& fs) {
  for (const auto& f : fs) p = multiply_binomial(p, f);
  return p;
}

}  // namespace

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  require_same_nvars(a.numerator, b.numerator);
  std::vector<BinomialFactor> common;
  std::set_union(a.denominator.begin(), a.denominator.end(),
                 b.denominator.begin(), b.denominator.end(),
                 std::back_inserter(common));
  MultiPoly num =
      multiply_all(a.numerator, multiset_difference(common, a.denominator)) +
      multiply_all(b.numerator, multiset_difference(common, b.denominator));
  return RationalSeries(std::move(num), std::move(common));
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  std::vector<BinomialFactor> den = a.denominator;
  den.insert(den.end(), b.denominator.begin(), b.denominator.end());
  return RationalSeries(a.numerator * b.numerator, std::move(den));
}

RationalSeries series_scale(const RationalSeries& r, const Rational& c) {
  return RationalSeries(r.numerator * c, r.denominator);
}

MultiPoly multiply_binomial(const MultiPoly& p, const BinomialFactor& f) {
  std::vector<Term> terms;
  terms.reserve(2 * p.size());
  for (const auto& t : p.terms()) {
    terms.push_back(t);
    Exponents shifted = t.exponents;
    shifted.at(f.var) += f.m;
    terms.push_back(Term{std::move(shifted), -t.coeff});
  }
  return MultiPoly::from_terms(p.nvars(), std::move(terms));
}

std::optional<MultiPoly> try_divide_univariate(
    const MultiPoly& p, std::size_t var, const std::vector<Rational>& divisor) {
  std::vector<Rational> d = divisor;
  dense::trim(d);
  if (d.empty() || d[0] == 0)
    throw ValidationError("divisor must have a nonzero constant term");
  if (var >= p.nvars()) throw ValidationError("variable index out of range");
  const std::size_t deg = d.size() - 1;
  std::vector<std::pair<std::size_t, Rational>> tail;
  for (std::size_t j = 1; j <= deg; ++j)
    if (d[j] != 0) tail.emplace_back(j, d[j]);
  const Rational lead_inverse = 1 / d[0];

  Slices slices = slice(p, var);
  Rational acc;
  for (auto& [rest, v] : slices) {
    if (v.size() <= deg) return std::nullopt;
    const std::size_t qlen = v.size() - deg;
    std::vector<Rational> q(qlen);
    for (std::size_t e = 0; e < v.size(); ++e) {
      acc = v[e];
      for (const auto& [j, c] : tail)
        if (j <= e && e - j < qlen) acc -= c * q[e - j];
      if (e < qlen) {
        q[e] = acc * lead_inverse;
      } else if (acc != 0) {
        return std::nullopt;
      }
    }
    v = std::move(q);
  }
  return assemble(p.nvars(), var, slices);
}

std::optional<MultiPoly> try_divide_binomial(const MultiPoly& p,
                                             const BinomialFactor& f) {
  std::vector<Rational> d(f.m + 1);
  d[0] = 1;
  d[f.m] = -1;
  return try_divide_univariate(p, f.var, d);
}

MultiPoly multiply_univariate(const MultiPoly& p, std::size_t var,
                              const std::vector<Rational>& factor) {
  return p * MultiPoly::univariate(p.nvars(), var, factor);
}

RationalSeries normalize(const RationalSeries& r) {
  MultiPoly num = r.numerator;
  std::vector<BinomialFactor> den = r.denominator;
  if (num.is_zero()) return RationalSeries(std::move(num));

  bool changed = true;
  while (changed && !den.empty()) {
    changed = false;
    for (std::size_t i = 0; i < den.size(); ++i) {
      if (i > 0 && den[i] == den[i - 1]) continue;
      if (auto q = try_divide_binomial(num, den[i])) {
        num = std::move(*q);
        den.erase(den.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i < den.size() && !changed; ++i) {
      if (i > 0 && den[i] == den[i - 1]) continue;
      const auto m = den[i].m;
      for (std::uint32_t d = 1; d < m && !changed; ++d) {
        if (m % d != 0) continue;
        // (1 - h^m) / (1 - h^d) = 1 + h^d + ... + h^(m-d)
        std::vector<Rational> cofactor(m - d + 1);
        for (std::uint32_t e = 0; e <= m - d; e += d) cofactor[e] = 1;
        if (auto q = try_divide_univariate(num, den[i].var, cofactor)) {
          num = std::move(*q);
          den[i].m = d;
          changed = true;
        }
      }
    }
    std::sort(den.begin(), den.end());
  }
  return RationalSeries(std::move(num), std::move(den));
}

MultiPoly truncate(const MultiPoly& p, std::uint32_t depth) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (std::all_of(t.exponents.begin(), t.exponents.end(),
                    [depth](auto e) { return e <= depth; }))
      kept.push_back(t);
  return MultiPoly::from_terms(p.nvars(), std::move(kept));
}

MultiPoly truncate(const RationalSeries& r, std::uint32_t depth) {
  MultiPoly p = truncate(r.numerator, depth);
  for (const auto& f : r.denominator) {
    if (p.is_zero()) break;
    Slices slices = slice(p, f.var);
    for (auto& [rest, v] : slices) {
      v.resize(depth + 1);
      // multiply by 1/(1 - h^m) = sum_t h^(m t)
      for (std::size_t e = f.m; e <= depth; ++e) v[e] += v[e - f.m];
    }
    p = assemble(p.nvars(), f.var, slices);
  }
  return p;
}

namespace dense {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

namespace {
// Remainder of a by b (b trimmed, nonzero), leading-coefficient division.
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    trim(a);
  }
  return a;
}
}  // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  Poly num = a;
  Poly den = b;
  trim(num);
  trim(den);
  if (den.empty()) throw ValidationError("division by the zero polynomial");
  if (num.empty()) return Poly{};
  if (num.size() < den.size()) return std::nullopt;
  Poly q(num.size() - den.size() + 1);
  while (num.size() >= den.size()) {
    const Rational factor = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    q[shift] = factor;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= factor * den[j];
    trim(num);
    if (!num.empty() && num.size() < den.size()) return std::nullopt;
  }
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::string to_string(const Poly& p, const std::string& var) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < p.size(); ++e)
    terms.push_back(Term{{static_cast<std::uint32_t>(e)}, p[e]});
  std::string s = MultiPoly::from_terms(1, std::move(terms)).to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "h1") == 0) {
      out += var;
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace dense

}  // namespace molien
